#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "monotile/coloured_graph.hpp"
#include "monotile/family.hpp"

namespace monotile {

struct Embedding {
    Colour colour = 1;
    VertexList map;  // map[i] = host image of pattern vertex i
};

struct EmbedOptions {
    std::optional<Colour> colour;      // try only this colour
    std::uint64_t node_budget = 0;     // 0 = unlimited
    const Bitset* required = nullptr;  // the image must contain every vertex of this set
    // Optional per-part capacities: part_of[v] indexes `capacity`, or is no_part.
    const std::vector<std::uint32_t>* part_of = nullptr;
    std::vector<std::size_t> capacity;

    static constexpr std::uint32_t no_part = UINT32_MAX;
};

struct EmbedResult {
    std::optional<Embedding> embedding;
    bool exhausted = true;  // false when the node budget stopped the search
    std::uint64_t nodes = 0;

    explicit operator bool() const noexcept { return embedding.has_value(); }
};

// Backtracking search for an injective image of `pattern` inside `allowed` whose edges all map
// to edges of one colour of `adj`. Edgeless patterns accept any colour.
EmbedResult find_mono_copy(const ColourAdjacency& adj, const Graph& pattern, const Bitset& allowed,
                           const EmbedOptions& options = {});

std::optional<Embedding> find_mono_copy(const ColouredCompleteGraph& g, const Graph& pattern,
                                        std::optional<Colour> colour,
                                        std::span<const Vertex> allowed);

// Search order: repeatedly the unplaced vertex with most placed neighbours, ties to higher degree.
std::vector<Vertex> pattern_order(const Graph& pattern);

} // namespace monotile
