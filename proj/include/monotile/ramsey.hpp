#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "monotile/coloured_graph.hpp"
#include "monotile/family.hpp"

namespace monotile {

struct RamseyVerdict {
    bool holds = false;
    std::optional<ColouredCompleteGraph> counterexample;
    std::uint64_t colourings = 0;  // colourings examined
    std::uint64_t searches = 0;    // embedding searches actually run (the rest reused a witness)
};

// Whether every colouring of K_n with r = patterns.size() colours contains patterns[i - 1] in
// colour i for some i. Throws BudgetExceeded when more than max_colourings would be needed.
RamseyVerdict check_all_colourings(std::size_t n, std::span<const Graph> patterns,
                                   std::uint64_t max_colourings = 0);

} // namespace monotile
