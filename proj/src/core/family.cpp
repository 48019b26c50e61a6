#include "monotile/family.hpp"

#include <algorithm>
#include <fstream>

#include "monotile/error.hpp"
#include "monotile/io.hpp"

namespace monotile {

Graph::Graph(std::size_t order, std::span<const std::pair<Vertex, Vertex>> edges) : adjacency_(order) {
    for (auto [u, v] : edges) {
        add_edge(u, v);
    }
}

std::size_t Graph::max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& nb : adjacency_) {
        best = std::max(best, nb.size());
    }
    return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u >= order() || v >= order()) {
        return false;
    }
    const auto& nb = adjacency_[u];
    return std::find(nb.begin(), nb.end(), v) != nb.end();
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (u >= order() || v >= order()) {
        throw InvalidInput("edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
    }
    if (u == v) {
        throw InvalidInput("self-loop at " + std::to_string(u));
    }
    if (has_edge(u, v)) {
        throw InvalidInput("repeated edge " + std::to_string(u) + " " + std::to_string(v));
    }
    edges_.emplace_back(std::min(u, v), std::max(u, v));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
}

Graph Graph::disjoint_union(const Graph& other) const {
    Graph out(order() + other.order());
    for (auto [u, v] : edges_) {
        out.add_edge(u, v);
    }
    const auto shift = static_cast<Vertex>(order());
    for (auto [u, v] : other.edges_) {
        out.add_edge(u + shift, v + shift);
    }
    return out;
}

Graph complete_graph(std::size_t m) {
    Graph g(m);
    for (Vertex i = 0; i < m; ++i) {
        for (Vertex j = i + 1; j < m; ++j) {
            g.add_edge(i, j);
        }
    }
    return g;
}

FamilySpec FamilySpec::cycles() { return FamilySpec(FamilyKind::cycles, 1); }
FamilySpec FamilySpec::paths() { return FamilySpec(FamilyKind::paths, 0); }
FamilySpec FamilySpec::stars() { return FamilySpec(FamilyKind::stars, 0); }

FamilySpec FamilySpec::cycle_power(std::size_t k) {
    if (k < 1) {
        throw InvalidInput("cycle power needs k >= 1");
    }
    return FamilySpec(FamilyKind::cycle_power, k);
}

FamilySpec FamilySpec::custom(std::map<std::size_t, Graph> members, std::string name) {
    for (const auto& [m, g] : members) {
        if (m != g.order()) {
            throw InvalidInput("custom member keyed " + std::to_string(m) + " has " +
                               std::to_string(g.order()) + " vertices");
        }
    }
    FamilySpec spec(FamilyKind::custom, 0);
    spec.custom_ = std::move(members);
    spec.custom_name_ = std::move(name);
    return spec;
}

FamilySpec FamilySpec::custom_directory(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) {
        throw InvalidInput("family directory not found: " + dir.string());
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".txt") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::map<std::size_t, Graph> members;
    for (const auto& file : files) {
        std::ifstream in(file);
        Graph g = read_family_graph(in);
        auto m = g.order();
        if (!members.emplace(m, std::move(g)).second) {
            throw InvalidInput("two family files of order " + std::to_string(m) + " in " +
                               dir.string());
        }
    }
    return custom(std::move(members), dir.string());
}

FamilySpec FamilySpec::parse(const std::string& text) {
    if (text == "cycles") {
        return cycles();
    }
    if (text == "paths") {
        return paths();
    }
    if (text == "stars") {
        return stars();
    }
    const std::string power = "cycle-power:";
    if (text.rfind(power, 0) == 0) {
        const std::string digits = text.substr(power.size());
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
            throw InvalidInput("bad cycle power: " + text);
        }
        return cycle_power(std::stoul(digits));
    }
    const std::string custom_prefix = "custom:";
    if (text.rfind(custom_prefix, 0) == 0) {
        return custom_directory(text.substr(custom_prefix.size()));
    }
    throw InvalidInput("unknown family: " + text);
}

FamilySpec& FamilySpec::with_max_degree_cap(std::size_t cap) {
    cap_ = cap;
    return *this;
}

std::string FamilySpec::name() const {
    switch (kind_) {
    case FamilyKind::cycles:
        return "cycles";
    case FamilyKind::paths:
        return "paths";
    case FamilyKind::stars:
        return "stars";
    case FamilyKind::cycle_power:
        return "cycle-power:" + std::to_string(power_);
    case FamilyKind::custom:
        return "custom:" + custom_name_;
    }
    return "?";
}

std::optional<std::size_t> FamilySpec::max_degree() const {
    std::optional<std::size_t> intrinsic;
    switch (kind_) {
    case FamilyKind::cycles:
    case FamilyKind::paths:
        intrinsic = 2;
        break;
    case FamilyKind::stars:
        break;
    case FamilyKind::cycle_power:
        intrinsic = 2 * power_;
        break;
    case FamilyKind::custom: {
        std::size_t best = 0;
        for (const auto& [m, g] : custom_) {
            best = std::max(best, g.max_degree());
        }
        intrinsic = best;
        break;
    }
    }
    if (cap_ && (!intrinsic || *cap_ < *intrinsic)) {
        return cap_;
    }
    return intrinsic;
}

bool FamilySpec::has_member(std::size_t m) const {
    if (m == 0) {
        return false;
    }
    return kind_ != FamilyKind::custom || custom_.count(m) > 0;
}

namespace {

Graph cycle_power_graph(std::size_t m, std::size_t k) {
    if (m <= 2 * k + 1) {
        return complete_graph(m);
    }
    Graph g(m);
    for (Vertex i = 0; i < m; ++i) {
        for (std::size_t d = 1; d <= k; ++d) {
            auto j = static_cast<Vertex>((i + d) % m);
            if (!g.has_edge(i, j)) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

} // namespace

Graph FamilySpec::member(std::size_t m) const {
    if (m == 0) {
        throw InvalidInput("family members start at m = 1");
    }
    Graph g(m);
    switch (kind_) {
    case FamilyKind::cycles:
        g = cycle_power_graph(m, 1);
        break;
    case FamilyKind::paths:
        for (Vertex i = 0; i + 1 < m; ++i) {
            g.add_edge(i, i + 1);
        }
        break;
    case FamilyKind::stars:
        for (Vertex i = 1; i < m; ++i) {
            g.add_edge(0, i);
        }
        break;
    case FamilyKind::cycle_power:
        g = cycle_power_graph(m, power_);
        break;
    case FamilyKind::custom: {
        auto it = custom_.find(m);
        if (it == custom_.end()) {
            throw UnavailableMember(name() + " has no member on " + std::to_string(m) +
                                    " vertices");
        }
        g = it->second;
        break;
    }
    }
    if (cap_ && g.max_degree() > *cap_) {
        throw InvalidInput(name() + " member on " + std::to_string(m) +
                           " vertices exceeds degree cap " + std::to_string(*cap_));
    }
    return g;
}

Graph family_member(const FamilySpec& family, std::size_t m) {
    return family.member(m);
}

} // namespace monotile
