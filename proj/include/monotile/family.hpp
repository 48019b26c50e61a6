#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monotile/coloured_graph.hpp"

namespace monotile {

// A small simple graph used as an embedding pattern.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t order) : adjacency_(order) {}
    Graph(std::size_t order, std::span<const std::pair<Vertex, Vertex>> edges);

    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }
    const std::vector<Vertex>& neighbours(Vertex v) const { return adjacency_[v]; }
    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
    std::size_t max_degree() const noexcept;
    bool has_edge(Vertex u, Vertex v) const;

    void add_edge(Vertex u, Vertex v);

    // Vertex-disjoint union, `other` relabelled after this graph's vertices.
    Graph disjoint_union(const Graph& other) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::pair<Vertex, Vertex>> edges_;  // u < v, insertion order
    std::vector<std::vector<Vertex>> adjacency_;
};

Graph complete_graph(std::size_t m);

enum class FamilyKind { cycles, paths, stars, cycle_power, custom };

// A sequence F_1, F_2, ... with v(F_m) = m.
class FamilySpec {
public:
    static FamilySpec cycles();
    static FamilySpec paths();
    static FamilySpec stars();
    static FamilySpec cycle_power(std::size_t k);
    // Every `*.txt` family file in `dir`, keyed by the order on its first line.
    static FamilySpec custom_directory(const std::filesystem::path& dir);
    static FamilySpec custom(std::map<std::size_t, Graph> members, std::string name = "custom");

    // Parses "cycles", "paths", "stars", "cycle-power:K" or "custom:DIR".
    static FamilySpec parse(const std::string& text);

    FamilySpec& with_max_degree_cap(std::size_t cap);

    FamilyKind kind() const noexcept { return kind_; }
    std::size_t power() const noexcept { return power_; }
    std::optional<std::size_t> max_degree_cap() const noexcept { return cap_; }
    std::string name() const;

    // The bound on Delta(F_m) over all m, when the family has one.
    std::optional<std::size_t> max_degree() const;

    Graph member(std::size_t m) const;
    bool has_member(std::size_t m) const;

private:
    FamilySpec(FamilyKind kind, std::size_t power) : kind_(kind), power_(power) {}

    FamilyKind kind_;
    std::size_t power_ = 0;
    std::optional<std::size_t> cap_;
    std::map<std::size_t, Graph> custom_;
    std::string custom_name_;
};

// F_m. Throws UnavailableMember for a custom family lacking size m and InvalidInput for m = 0
// or for a member violating the family's degree cap.
Graph family_member(const FamilySpec& family, std::size_t m);

} // namespace monotile
