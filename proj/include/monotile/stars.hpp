#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "monotile/coloured_graph.hpp"
#include "monotile/rational.hpp"
#include "monotile/tiling.hpp"

namespace monotile {

using Real = boost::multiprecision::cpp_bin_float_100;

struct StarCoverOptions {
    std::size_t cap = 20;
    std::uint64_t node_budget = 0;  // 0 = unlimited
};

struct StarCoverResult {
    std::size_t size = 0;
    bool optimal = false;
    std::size_t lower_bound = 0;  // ceil(n / (1 + max monochromatic degree))
    std::vector<std::pair<Vertex, Colour>> centres;
    Tiling tiling;  // one star per centre, pattern vertex 0 at the centre
    std::uint64_t nodes = 0;
};

// Fewest vertex-disjoint monochromatic stars covering K_n. A set of centres with colours works
// iff their closed colour neighbourhoods cover [n]; overlaps are then trimmed.
StarCoverResult min_star_cover(const ColouredCompleteGraph& g, const StarCoverOptions& options = {});

struct ChainLink {
    std::string name;
    Real lhs;
    Real rhs;
    bool holds = false;
};

struct StarsBound {
    std::size_t n = 0;
    std::size_t r = 0;
    std::size_t tau = 0;
    Rational per_choice;  // (1 - (1 - 1/r)^tau)^(n - tau)
    BigInt choices;       // n (n-1) ... (n-tau+1) r^tau
    Rational union_bound;
    bool certifies = false;  // union_bound < 1
    std::vector<ChainLink> links;
    Real printed_reading;    // (rn)^(-tau) e^(-sqrt n)
    Real corrected_reading;  // (rn)^(+tau) e^(-sqrt n)
};

StarsBound stars_union_bound(std::size_t n, std::size_t r, std::size_t tau);

// ceil(r ln(n / 8)) clamped at 0.
std::size_t stars_tau(std::size_t n, std::size_t r);

struct CertificationScan {
    std::vector<StarsBound> rows;
    std::optional<std::size_t> first_certified;  // smallest n with tau >= 1 and union bound < 1
    std::optional<std::size_t> last_certified;
};

// Evaluates the union bound at tau = stars_tau(n, r) for n in [from, to].
CertificationScan scan_certification(std::size_t r, std::size_t from, std::size_t to);

} // namespace monotile
