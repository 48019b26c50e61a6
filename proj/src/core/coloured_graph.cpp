#include "monotile/coloured_graph.hpp"

#include <algorithm>
#include <string>

#include "monotile/error.hpp"
#include "monotile/rng.hpp"

namespace monotile {

ColourAdjacency::ColourAdjacency(std::size_t n, Colour r)
    : n_(n), r_(r), adj_(static_cast<std::size_t>(r) * n, Bitset(n)) {}

void ColourAdjacency::add_edge(Colour c, Vertex u, Vertex v) {
    adj_[index(c, u)].set(v);
    adj_[index(c, v)].set(u);
}

void ColourAdjacency::remove_edge(Colour c, Vertex u, Vertex v) {
    adj_[index(c, u)].reset(v);
    adj_[index(c, v)].reset(u);
}

namespace {

void check_shape(std::size_t n, Colour r) {
    if (n < 1) {
        throw InvalidInput("colouring needs at least one vertex");
    }
    if (r < 1) {
        throw InvalidInput("colouring needs at least one colour");
    }
}

void check_colour(Colour c, Colour r) {
    if (c < 1 || c > r) {
        throw InvalidInput("colour " + std::to_string(c) + " outside [1, " + std::to_string(r) + "]");
    }
}

} // namespace

ColouredCompleteGraph::ColouredCompleteGraph(std::size_t n, Colour r, Colour fill)
    : n_(n), r_(r), colours_(n * n, 0), adj_(n, r) {
    check_shape(n, r);
    check_colour(fill, r);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            colours_[i * n + j] = fill;
            colours_[j * n + i] = fill;
            adj_.add_edge(fill, i, j);
        }
    }
}

ColouredCompleteGraph::ColouredCompleteGraph(std::size_t n, Colour r, std::span<const Colour> upper)
    : n_(n), r_(r), colours_(n * n, 0), adj_(n, r) {
    check_shape(n, r);
    if (upper.size() != n * (n - 1) / 2) {
        throw InvalidInput("expected " + std::to_string(n * (n - 1) / 2) + " pair colours, got " +
                           std::to_string(upper.size()));
    }
    std::size_t slot = 0;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            Colour c = upper[slot++];
            check_colour(c, r);
            colours_[i * n + j] = c;
            colours_[j * n + i] = c;
            adj_.add_edge(c, i, j);
        }
    }
}

ColouredCompleteGraph ColouredCompleteGraph::random(std::size_t n, Colour r, Rng& rng) {
    return from_function(n, r, [&](Vertex, Vertex) { return 1 + rng.below(r); });
}

std::vector<Colour> ColouredCompleteGraph::upper_triangle() const {
    std::vector<Colour> upper;
    upper.reserve(n_ * (n_ - 1) / 2);
    for (Vertex i = 0; i < n_; ++i) {
        for (Vertex j = i + 1; j < n_; ++j) {
            upper.push_back(colours_[i * n_ + j]);
        }
    }
    return upper;
}

ColouredCompleteGraph ColouredCompleteGraph::with_colour(Vertex u, Vertex v, Colour c) const {
    if (u >= n_ || v >= n_ || u == v) {
        throw InvalidInput("with_colour: invalid pair");
    }
    check_colour(c, r_);
    ColouredCompleteGraph out = *this;
    out.adj_.remove_edge(colour(u, v), u, v);
    out.colours_[u * n_ + v] = c;
    out.colours_[v * n_ + u] = c;
    out.adj_.add_edge(c, u, v);
    return out;
}

ColouredCompleteGraph ColouredCompleteGraph::induced(std::span<const Vertex> vertices) const {
    check_vertex_list(n_, vertices, "induced");
    return from_function(vertices.size(), r_,
                         [&](Vertex i, Vertex j) { return colour(vertices[i], vertices[j]); });
}

ColourAdjacency ColouredCompleteGraph::cylinder_adjacency(std::span<const VertexList> parts) const {
    check_disjoint_parts(n_, parts);
    ColourAdjacency out(n_, r_);
    for (std::size_t a = 0; a < parts.size(); ++a) {
        for (std::size_t b = a + 1; b < parts.size(); ++b) {
            for (Vertex u : parts[a]) {
                for (Vertex v : parts[b]) {
                    out.add_edge(colour(u, v), u, v);
                }
            }
        }
    }
    return out;
}

VertexList all_vertices(std::size_t n) {
    VertexList out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = static_cast<Vertex>(i);
    }
    return out;
}

Bitset to_bitset(std::size_t n, std::span<const Vertex> vertices) {
    Bitset out(n);
    for (Vertex v : vertices) {
        out.set(v);
    }
    return out;
}

void check_vertex_list(std::size_t n, std::span<const Vertex> vertices, const char* what) {
    Bitset seen(n);
    for (Vertex v : vertices) {
        if (v >= n) {
            throw InvalidInput(std::string(what) + ": vertex " + std::to_string(v) +
                               " out of range");
        }
        if (seen.test(v)) {
            throw InvalidInput(std::string(what) + ": vertex " + std::to_string(v) + " repeated");
        }
        seen.set(v);
    }
}

void check_disjoint_parts(std::size_t n, std::span<const VertexList> parts) {
    Bitset seen(n);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (Vertex v : parts[i]) {
            if (v >= n) {
                throw InvalidInput("part " + std::to_string(i + 1) + ": vertex " +
                                   std::to_string(v) + " out of range");
            }
            if (seen.test(v)) {
                throw InvalidInput("parts overlap at vertex " + std::to_string(v));
            }
            seen.set(v);
        }
    }
}

VertexList set_union(std::span<const VertexList> parts) {
    VertexList out;
    for (const auto& p : parts) {
        out.insert(out.end(), p.begin(), p.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VertexList set_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexList sa(a.begin(), a.end());
    VertexList sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    VertexList out;
    std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
    return out;
}

VertexList set_intersection(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexList sa(a.begin(), a.end());
    VertexList sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    VertexList out;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
    return out;
}

} // namespace monotile
