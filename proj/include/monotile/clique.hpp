#pragma once

#include <cstdint>
#include <span>

#include "monotile/coloured_graph.hpp"
#include "monotile/rational.hpp"

namespace monotile {

// Number of tuples (v_2, ..., v_k) in V_2 x ... x V_k such that {v, v_2, ..., v_k} is a
// clique in a single colour c, summed over c in `colours`.
// Throws InvalidInput if the parts overlap, v lies in a part, or no part is given.
std::uint64_t clique_degree(const ColouredCompleteGraph& g, Vertex v,
                            std::span<const VertexList> parts, std::span<const Colour> colours);

std::uint64_t clique_degree(const ColouredCompleteGraph& g, Vertex v,
                            std::span<const VertexList> parts, Colour colour);

// clique_degree / (|V_2| ... |V_k|). Throws DivisionUndefined on an empty part.
Rational clique_density(const ColouredCompleteGraph& g, Vertex v,
                        std::span<const VertexList> parts, std::span<const Colour> colours);

Rational clique_density(const ColouredCompleteGraph& g, Vertex v,
                        std::span<const VertexList> parts, Colour colour);

// Transversal k-cliques (one vertex per part) all of whose edges have `colour`.
std::uint64_t transversal_clique_count(const ColouredCompleteGraph& g,
                                       std::span<const VertexList> parts, Colour colour);

// Product of part sizes.
std::uint64_t tuple_count(std::span<const VertexList> parts);

// All colours 1..r.
std::vector<Colour> all_colours(Colour r);

} // namespace monotile
