#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "monotile/coloured_graph.hpp"
#include "monotile/family.hpp"

namespace monotile {

// One monochromatic copy of F_m: map[i] is the host image of pattern vertex i, m = map.size().
struct Piece {
    Colour colour = 1;
    VertexList map;

    std::size_t size() const noexcept { return map.size(); }
};

struct Tiling {
    std::vector<Piece> pieces;

    std::size_t size() const noexcept { return pieces.size(); }
    VertexList covered() const;  // sorted
    void append(const Tiling& other);
};

enum class TilingFault {
    none,
    bad_colour,
    invalid_vertex,
    not_injective,
    overlap,
    miscoloured_edge,
    outside_universe,
    uncovered_vertex,
};

const char* to_string(TilingFault fault);

struct TilingVerdict {
    TilingFault fault = TilingFault::none;
    std::size_t piece = 0;     // offending piece, when applicable
    VertexList witness;        // overlapping vertex, edge endpoints or uncovered vertex
    std::string detail;

    bool ok() const noexcept { return fault == TilingFault::none; }
    explicit operator bool() const noexcept { return ok(); }
};

// Accepts iff the pieces are disjoint, each maps F_m edge-for-edge onto host pairs of its
// colour, and their union is exactly `universe`. Reports the first violation found.
TilingVerdict verify_tiling(const ColouredCompleteGraph& g, const FamilySpec& family,
                            const Tiling& tiling, std::span<const Vertex> universe);

struct CoverVerdict {
    bool ok = false;
    std::size_t covered_first = 0;   // |V(H) ∩ V_1|
    std::size_t violating_part = 0;  // index i >= 1 with too many covered, or 0
    VertexList uncovered;            // vertices of V_1 not covered
    std::string detail;

    explicit operator bool() const noexcept { return ok; }
};

// V_1 ⊆ V(H) and |V(H) ∩ V_i| <= |V(H) ∩ V_1| for every other part.
CoverVerdict canonical_cover_check(const Tiling& tiling, std::span<const VertexList> parts);

} // namespace monotile
