#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "monotile/coloured_graph.hpp"
#include "monotile/rational.hpp"
#include "monotile/regularity.hpp"

namespace monotile {

struct WeakPartitionOptions {
    std::size_t exact_cap = 16;        // class pairs with a larger smaller side go unverified
    std::size_t max_rounds = 10;
    std::size_t max_cylinders = 1 << 16;
    std::vector<Colour> colours;       // colours that must be regular; empty = all
};

// Cylindrical partition of (V_1 \ R_1) x ... x (V_k \ R_k). Every part V_i is split into
// 2^rounds classes of common size floor(|V_i| / 2^rounds); cylinders are all class tuples.
struct CylindricalPartition {
    std::vector<VertexList> ground;                 // V_1, ..., V_k
    std::vector<std::vector<VertexList>> classes;   // classes[i][a]
    std::vector<VertexList> exceptional;            // R_1, ..., R_k
    std::vector<Cylinder> cylinders;
    std::vector<bool> cylinder_regular;             // verified regular in every required colour
    std::size_t rounds = 0;
    Rational gamma = 1;                             // class size is floor(gamma |V_i|)
    std::uint64_t irregular_tuples = 0;             // tuples in cylinders not verified regular
    Rational irregular_mass = 0;                    // irregular_tuples / prod |V_i|
    std::size_t unverified_pairs = 0;               // class pairs too large for the exact checker
    bool uncertain = false;                         // stopped with irregular_mass > eps
};

// Refines until the tuple mass in cylinders with an irregular (or unverifiable) pair is at most
// eps * prod |V_i|. Each round halves every class, ordering its vertices so that an irregularity
// witness (or, for unverifiable pairs, the high-degree side) lands in one half.
CylindricalPartition weak_regular_partition(const ColouredCompleteGraph& g,
                                            std::span<const VertexList> parts, const Rational& eps,
                                            const WeakPartitionOptions& options = {});

// sum over cylinders of prod |W_i| == prod (|V_i| - |R_i|), and the cylinders' products are
// disjoint: checked by direct tuple bookkeeping.
bool product_partition_identity(const CylindricalPartition& partition);

// One line per cylinder, "cylinder j: a b c | d e | ...", then "exceptional: ... | ...".
std::string format_partition(const CylindricalPartition& partition);

// log10 of eps^(r k^2 eps^-5).
double paper_beta_log10(const Rational& eps, std::size_t k, std::size_t r);

} // namespace monotile
