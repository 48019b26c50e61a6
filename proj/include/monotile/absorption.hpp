#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monotile/coloured_graph.hpp"
#include "monotile/family.hpp"
#include "monotile/rational.hpp"
#include "monotile/regularity.hpp"
#include "monotile/tiling.hpp"
#include "monotile/weak_partition.hpp"

namespace monotile {

// d_i = (1 - gamma^i) / (1 - gamma^k) d' for i = 1..k. gamma = 0 gives the constant chain.
std::vector<Rational> density_ladder(const Rational& d_prime, const Rational& gamma, std::size_t k);

struct LeftoverSplit {
    VertexList s1;
    std::vector<VertexList> t;        // t[i] = T_{i+2}
    std::vector<VertexList> t_prime;  // T_i minus S_1 and the earlier T_j
    std::vector<Rational> ladder;     // d_1 .. d_k
};

// S_1 = {v in R : dd(v, U_2..U_k) >= d_1} and, for i >= 2,
// T_i = {v in R : dd(v, V_2..V_{i-1}, V_i \ U_i, U_{i+1}..U_k) > d' + 2 eta}, in `colour`.
// Each v in S_i \ S_{i-1} is checked against the inequality chain placing it in T_i; a vertex
// escaping every set raises ClaimViolation naming it.
LeftoverSplit split_leftover(const ColouredCompleteGraph& g, std::span<const Vertex> r,
                             std::span<const VertexList> full, std::span<const VertexList> cylinder,
                             const Rational& d_prime, const Rational& gamma, const Rational& eta,
                             Colour colour);

enum class TileMode { partition, cover_first_part };

struct CylinderTileOptions {
    std::uint64_t node_budget = 200000;  // per embedding attempt
    std::uint64_t attempt_budget = 2000; // embedding attempts in partition mode
};

struct CylinderTiling {
    bool found = false;
    bool exhausted = false;  // false: some attempt stopped on a budget
    Tiling tiling;
    std::uint64_t nodes = 0;
};

// Partition mode: at most Delta + 3 pieces exactly covering V(Z). Cover mode: one piece covering
// W_1 and at most |W_1| vertices of each other part. Pieces use cross edges of Z's colour only
// (any colour per piece when Z has none).
CylinderTiling cylinder_tile(const ColouredCompleteGraph& g, const Cylinder& z, const FamilySpec& family,
                             TileMode mode, const CylinderTileOptions& options = {});

struct AbsorptionConfig {
    Rational d = ratio(1, 2);
    Rational eps = ratio(3, 10);
    Rational gamma = ratio(1, 4);
    std::optional<Rational> eta;  // default d gamma^k / 2
    std::size_t max_depth = 6;
    Rational t = ratio(1, 2);
    std::uint64_t seed = 1;
    std::uint64_t node_budget = 200000;
    WeakPartitionOptions partition;

    Rational eta_for(std::size_t k) const;
    // 0 < eta <= d gamma^k / 2, 0 < gamma < 1, max_depth >= 1.
    bool consistent(std::size_t k) const;
};

struct TraceRecord {
    std::string stage;
    std::size_t depth = 0;
    std::vector<std::size_t> part_sizes;
    Rational density = 0;
    std::size_t pieces = 0;
    std::string note;
};

struct AbsorptionResult {
    bool ok = false;
    std::string failed_stage;
    std::string message;
    Tiling tiling;
    std::vector<TraceRecord> trace;
    std::size_t max_depth_reached = 0;
};

// Canonically covers V_1 in K(V_1) u K(V_1..V_k) restricted to `colour` across parts.
// Requires |V_i| >= 2 |V_1| and dd_colour(v, V_2..V_k) >= cfg.d for v in V_1 (PreconditionError
// naming the vertex otherwise). Stage failures come back in the result; successes are verified.
AbsorptionResult absorption_cover_one_colour(const ColouredCompleteGraph& g, std::span<const VertexList> parts,
                                             Colour colour, const FamilySpec& family,
                                             const AbsorptionConfig& cfg);

// All colours: requires |V_i| >= 4 |V_1| and dd_[r](v, V_2..V_k) >= cfg.d on V_1.
AbsorptionResult absorption_cover(const ColouredCompleteGraph& g, std::span<const VertexList> parts,
                                  const FamilySpec& family, const AbsorptionConfig& cfg);

// Writes one line per trace record.
std::string format_trace(const std::vector<TraceRecord>& trace);

struct Hypergraph {
    std::size_t k = 0;
    std::vector<VertexList> edges;  // each sorted, size k
};

struct TransversalHypothesis {
    bool holds = false;
    Rational max_ratio = 0;  // max deg / threshold over all (v, i_1 < ... < i_k)
    Rational union_bound = 0;  // sum over transversal hyperedges of prod 1/|B_ij|
};

TransversalHypothesis transversal_hypothesis(const Hypergraph& h, std::span<const VertexList> blocks);

struct TransversalResult {
    bool found = false;
    VertexList transversal;
    std::uint64_t tries = 0;
    std::uint64_t failed_draws = 0;
    double hit_rate = 0;  // independent draws / tries
    TransversalHypothesis hypothesis;
};

class Rng;

TransversalResult independent_transversal(const Hypergraph& h, std::span<const VertexList> blocks,
                                          std::uint64_t max_tries, Rng& rng);

} // namespace monotile
