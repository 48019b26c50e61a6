#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monotile/coloured_graph.hpp"
#include "monotile/rational.hpp"
#include "monotile/regularity.hpp"
#include "monotile/weak_partition.hpp"

namespace monotile {

struct CylinderSearchOptions {
    std::size_t part_cap = 4;  // k~ = min(part_cap, r^(rk))
    WeakPartitionOptions partition;
};

struct SuperRegularCylinder {
    bool found = false;
    std::string failure;           // set when !found
    Colour colour = 1;
    Cylinder cylinder;             // tagged with the achieved parameters
    std::size_t split_parts = 0;   // k~
    bool via_everywhere_regular = false;  // false: class-graph clique search fallback
    CylindricalPartition partition;
};

// Splits `vertices` into k~ equal parts, partitions them weakly at eps/2, picks k classes that are
// pairwise regular with density >= 1/r in one colour, and trims them at eps/2.
SuperRegularCylinder find_super_regular_cylinder(const ColouredCompleteGraph& g,
                                                 std::span<const Vertex> vertices, std::size_t k,
                                                 const Rational& eps,
                                                 const CylinderSearchOptions& options = {});

struct DenseCylinder {
    bool found = false;
    std::string failure;
    Cylinder cylinder;            // tagged with achieved parameters
    SuperRegularParams claimed;   // (eps, d/2)
    bool meets_claim = false;     // achieved tag implies the claimed one
    // Counting dichotomy bookkeeping.
    std::uint64_t total_cliques = 0;
    std::uint64_t cliques_touching_exceptional = 0;
    std::uint64_t cliques_in_irregular = 0;
    std::uint64_t regular_tuples = 0;
    bool counting_forces_dense = false;
    Rational selected_density = 0;  // clique density of the selected cylinder before trimming
    Rational selected_threshold = 0;  // d - 2 eps/4
    CylindricalPartition partition;
};

// Requires d >= 2 k eps and at least d prod |V_i| transversal cliques in `colour` (else
// PreconditionError carrying the count).
DenseCylinder find_cylinder_in_dense_kpartite(const ColouredCompleteGraph& g,
                                              std::span<const VertexList> parts, Colour colour,
                                              const Rational& eps, const Rational& d,
                                              const WeakPartitionOptions& options = {});

} // namespace monotile
