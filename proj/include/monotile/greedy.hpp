#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "monotile/coloured_graph.hpp"
#include "monotile/family.hpp"
#include "monotile/rational.hpp"
#include "monotile/tiling.hpp"

namespace monotile {

struct GreedyStep {
    std::size_t uncovered_before = 0;
    std::size_t target = 0;    // floor(t * uncovered), or 1 in the singleton phase
    std::size_t embedded = 0;  // size of the piece actually placed
    bool singleton_phase = false;
};

struct GreedyOptions {
    std::optional<Colour> colour;            // restrict every piece to this colour
    std::uint64_t node_budget = 200000;      // per embedding attempt, 0 = unlimited
};

struct GreedyResult {
    Tiling tiling;
    VertexList leftover;  // sorted
    std::vector<GreedyStep> steps;
    bool singleton_fallback = false;  // some step above the singleton phase placed only F_1

    std::size_t piece_count() const noexcept { return tiling.size(); }
};

// Covers all but at most gamma * |universe| vertices of `universe` by monochromatic copies of
// family members, each step aiming at F_{floor(t |U|)} and falling back to smaller sizes.
GreedyResult greedy_cover(const ColouredCompleteGraph& g, const FamilySpec& family,
                          std::span<const Vertex> universe, const Rational& gamma, const Rational& t,
                          const GreedyOptions& options = {});

} // namespace monotile
