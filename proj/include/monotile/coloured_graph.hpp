#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "monotile/bitset.hpp"

namespace monotile {

class Rng;

using Vertex = std::uint32_t;
using Colour = std::uint16_t;  // 1-based, in [1, r]
using VertexList = std::vector<Vertex>;

// Per-colour adjacency bitsets. This is the structure the search kernels read; it may describe
// the whole complete graph or only the cross edges of a cylinder.
class ColourAdjacency {
public:
    ColourAdjacency() = default;
    ColourAdjacency(std::size_t n, Colour r);

    std::size_t n() const noexcept { return n_; }
    Colour r() const noexcept { return r_; }

    const Bitset& neighbours(Colour c, Vertex v) const { return adj_[index(c, v)]; }
    bool has_edge(Colour c, Vertex u, Vertex v) const { return adj_[index(c, u)].test(v); }

    void add_edge(Colour c, Vertex u, Vertex v);
    void remove_edge(Colour c, Vertex u, Vertex v);

private:
    std::size_t index(Colour c, Vertex v) const noexcept {
        return static_cast<std::size_t>(c - 1) * n_ + v;
    }

    std::size_t n_ = 0;
    Colour r_ = 0;
    std::vector<Bitset> adj_;
};

// An r-edge-coloured complete graph on vertices [0, n). Immutable once built.
class ColouredCompleteGraph {
public:
    // Every pair gets colour `fill`.
    ColouredCompleteGraph(std::size_t n, Colour r, Colour fill = 1);

    // `upper` lists the colours of pairs {i, j}, i < j, row by row.
    ColouredCompleteGraph(std::size_t n, Colour r, std::span<const Colour> upper);

    template <typename Fn>
    static ColouredCompleteGraph from_function(std::size_t n, Colour r, Fn&& colour_of) {
        std::vector<Colour> upper;
        upper.reserve(n * (n > 0 ? n - 1 : 0) / 2);
        for (Vertex i = 0; i < n; ++i) {
            for (Vertex j = i + 1; j < n; ++j) {
                upper.push_back(static_cast<Colour>(colour_of(i, j)));
            }
        }
        return ColouredCompleteGraph(n, r, upper);
    }

    // Uniformly random colouring.
    static ColouredCompleteGraph random(std::size_t n, Colour r, Rng& rng);

    std::size_t n() const noexcept { return n_; }
    Colour r() const noexcept { return r_; }

    Colour colour(Vertex u, Vertex v) const { return colours_[u * n_ + v]; }
    const Bitset& neighbours(Colour c, Vertex v) const { return adj_.neighbours(c, v); }
    std::size_t colour_degree(Colour c, Vertex v) const { return adj_.neighbours(c, v).count(); }
    const ColourAdjacency& adjacency() const noexcept { return adj_; }

    std::vector<Colour> upper_triangle() const;

    ColouredCompleteGraph with_colour(Vertex u, Vertex v, Colour c) const;

    // Induced colouring on `vertices` (relabelled 0..|vertices|-1 in the given order).
    ColouredCompleteGraph induced(std::span<const Vertex> vertices) const;

    // Only the edges running between two different parts.
    ColourAdjacency cylinder_adjacency(std::span<const VertexList> parts) const;

    friend bool operator==(const ColouredCompleteGraph& a, const ColouredCompleteGraph& b) {
        return a.n_ == b.n_ && a.r_ == b.r_ && a.colours_ == b.colours_;
    }

private:
    std::size_t n_;
    Colour r_;
    std::vector<Colour> colours_;
    ColourAdjacency adj_;
};

VertexList all_vertices(std::size_t n);

Bitset to_bitset(std::size_t n, std::span<const Vertex> vertices);

// Throws InvalidInput when a vertex is out of range or repeated within the list.
void check_vertex_list(std::size_t n, std::span<const Vertex> vertices, const char* what);

// Throws InvalidInput when two parts share a vertex (or a part repeats one).
void check_disjoint_parts(std::size_t n, std::span<const VertexList> parts);

VertexList set_union(std::span<const VertexList> parts);
VertexList set_difference(std::span<const Vertex> a, std::span<const Vertex> b);
VertexList set_intersection(std::span<const Vertex> a, std::span<const Vertex> b);

} // namespace monotile
