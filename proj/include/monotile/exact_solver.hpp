#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "monotile/coloured_graph.hpp"
#include "monotile/family.hpp"
#include "monotile/tiling.hpp"

namespace monotile {

// For each colour c and vertex set S (as a bitmask over [0, n)), whether F_|S| embeds onto S in
// colour c. Sets of size 1 are pieces whenever the family has F_1.
class PieceTable {
public:
    static constexpr std::size_t max_order = 20;

    PieceTable(const ColouredCompleteGraph& g, const FamilySpec& family);
    // Same, from per-colour adjacency masks adj[c - 1][v] (cycles, paths and stars only).
    PieceTable(std::size_t n, Colour r, const std::vector<std::vector<std::uint32_t>>& adj,
               const FamilySpec& family);

    std::size_t n() const noexcept { return n_; }
    Colour r() const noexcept { return r_; }
    bool piece(Colour c, std::uint32_t set) const { return table_[c - 1][set] != 0; }
    // Smallest colour making `set` a piece, or 0.
    Colour any_colour(std::uint32_t set) const { return any_[set]; }

private:
    void fill_fast(const std::vector<std::vector<std::uint32_t>>& adj, const FamilySpec& family);
    void finish();

    std::size_t n_;
    Colour r_;
    std::vector<std::vector<std::uint8_t>> table_;
    std::vector<Colour> any_;
};

struct MaskCover {
    std::vector<std::pair<std::uint32_t, Colour>> pieces;
    bool feasible = false;
    bool optimal = true;
    std::uint64_t nodes = 0;
};

// Minimum exact cover of [0, n) by pieces of the table, branch and bound on the lowest
// uncovered vertex with the bound ceil(uncovered / largest piece).
MaskCover min_mask_cover(const PieceTable& table, std::uint64_t node_budget = 0);

struct MinTilingOptions {
    std::size_t cap = 12;
    std::uint64_t node_budget = 0;  // 0 = unlimited
};

struct MinTilingResult {
    Tiling tiling;
    std::size_t size = 0;
    bool feasible = false;  // false only for families without F_1 and no exact cover
    bool optimal = false;   // false when the node budget stopped the search
    std::uint64_t nodes = 0;
};

MinTilingResult min_tiling(const ColouredCompleteGraph& g, const FamilySpec& family,
                           const MinTilingOptions& options = {});

// Vertex sets S with S a piece in colour c1 and the complement a piece in colour c2 != c1;
// empty sides allowed. Returns the tiling (one or two pieces) when it exists.
std::optional<Tiling> two_colour_partition(const ColouredCompleteGraph& g, const FamilySpec& family);

struct TilingNumberOptions {
    std::optional<bool> symmetry;  // default: on for n >= 6
    std::uint64_t max_colourings = std::uint64_t{1} << 22;
    unsigned workers = 1;
    MinTilingOptions solver;
};

struct TilingNumberResult {
    std::size_t value = 0;
    std::optional<ColouredCompleteGraph> extremal;
    bool complete = false;  // every colouring (or orbit representative) was solved
    bool optimal = true;    // every solve finished within its node budget
    std::uint64_t colourings = 0;
};

// max over r-colourings of K_n of min_tiling. With symmetry on, only colourings whose row of
// vertex 0 is nondecreasing and uses colours 1..j are enumerated; permuting the other vertices
// and the colours reaches every colouring from one of these.
TilingNumberResult tiling_number(std::size_t n, Colour r, const FamilySpec& family,
                                 const TilingNumberOptions& options = {});

struct LehelReport {
    std::size_t n = 0;
    std::uint64_t colourings = 0;
    std::uint64_t min_above_two = 0;        // colourings whose minimum cycle tiling exceeds 2
    std::uint64_t no_two_colour_split = 0;  // colourings with no red cycle + blue cycle partition
    std::size_t worst = 0;                  // largest minimum seen
    std::optional<ColouredCompleteGraph> counterexample;
    bool ok() const noexcept { return colourings > 0 && min_above_two == 0 && no_two_colour_split == 0; }
};

// Every 2-colouring of K_n, no symmetry reduction.
LehelReport lehel_check(std::size_t n, unsigned workers = 1);

} // namespace monotile
