#include "monotile/cylinders.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "monotile/clique.hpp"
#include "monotile/error.hpp"

namespace monotile {

namespace {

std::size_t capped_power(std::size_t base, std::size_t exponent, std::size_t cap) {
    std::size_t value = 1;
    for (std::size_t i = 0; i < exponent && value < cap; ++i) {
        value *= base;
    }
    return std::min(value, cap);
}

// k indices out of `count` with every pair accepted; lexicographically first.
std::optional<std::vector<std::size_t>> find_clique(
    std::size_t count, std::size_t k, const std::function<bool(std::size_t, std::size_t)>& edge) {
    std::vector<std::size_t> chosen;
    std::function<bool(std::size_t)> extend = [&](std::size_t from) {
        if (chosen.size() == k) {
            return true;
        }
        for (std::size_t v = from; v < count; ++v) {
            bool ok = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t u) { return edge(u, v); });
            if (ok) {
                chosen.push_back(v);
                if (extend(v + 1)) {
                    return true;
                }
                chosen.pop_back();
            }
        }
        return false;
    };
    if (extend(0)) {
        return chosen;
    }
    return std::nullopt;
}

Rational min_pair_density(const ColourAdjacency& adj, Colour c, const Cylinder& z) {
    Rational best = 1;
    for (std::size_t i = 0; i < z.k(); ++i) {
        for (std::size_t j = i + 1; j < z.k(); ++j) {
            best = std::min(best, pair_density(adj, c, z.parts[i], z.parts[j]));
        }
    }
    return best;
}

Rational min_degree_ratio(const ColourAdjacency& adj, Colour c, const Cylinder& z) {
    Rational best = 1;
    for (std::size_t i = 0; i < z.k(); ++i) {
        for (std::size_t j = 0; j < z.k(); ++j) {
            if (i == j || z.parts[j].empty()) {
                continue;
            }
            const Bitset other = to_bitset(adj.n(), z.parts[j]);
            for (Vertex v : z.parts[i]) {
                best = std::min(best, Rational(adj.neighbours(c, v).intersection_count(other),
                                               z.parts[j].size()));
            }
        }
    }
    return best;
}

} // namespace

SuperRegularCylinder find_super_regular_cylinder(const ColouredCompleteGraph& g,
                                                 std::span<const Vertex> vertices, std::size_t k,
                                                 const Rational& eps,
                                                 const CylinderSearchOptions& options) {
    if (k < 2) {
        throw InvalidInput("cylinder search needs k >= 2");
    }
    check_vertex_list(g.n(), vertices, "vertices");
    const Colour r = g.r();
    const Rational eps_half = eps / 2;
    SuperRegularCylinder out;
    const std::size_t split =
        std::max(k, std::min(options.part_cap, capped_power(r, r * k, options.part_cap + 1)));
    out.split_parts = split;
    const std::size_t size = vertices.size() / split;
    if (size == 0) {
        out.failure = "too few vertices for " + std::to_string(split) + " nonempty parts";
        return out;
    }
    std::vector<VertexList> parts(split);
    for (std::size_t i = 0; i < split; ++i) {
        parts[i].assign(vertices.begin() + i * size, vertices.begin() + (i + 1) * size);
    }
    WeakPartitionOptions wopt = options.partition;
    wopt.colours.clear();
    out.partition = weak_regular_partition(g, parts, eps_half, wopt);
    const ColourAdjacency& adj = g.adjacency();
    const Rational majority(1, r);
    RegularityOptions exact;
    exact.exact_cap = wopt.exact_cap;

    std::optional<std::pair<Colour, std::vector<VertexList>>> pick;
    // Everywhere-regular cylinder, majority colouring of its parts, monochromatic K_k.
    for (std::size_t zi = 0; zi < out.partition.cylinders.size() && !pick; ++zi) {
        if (!out.partition.cylinder_regular[zi]) {
            continue;
        }
        const auto& z = out.partition.cylinders[zi];
        std::vector<std::vector<Colour>> aux(split, std::vector<Colour>(split, 0));
        for (std::size_t i = 0; i < split; ++i) {
            for (std::size_t j = i + 1; j < split; ++j) {
                for (Colour c = 1; c <= r; ++c) {
                    if (pair_density(adj, c, z.parts[i], z.parts[j]) >= majority) {
                        aux[i][j] = aux[j][i] = c;
                        break;
                    }
                }
            }
        }
        for (Colour c = 1; c <= r && !pick; ++c) {
            auto clique = find_clique(split, k, [&](std::size_t a, std::size_t b) { return aux[a][b] == c; });
            if (clique) {
                std::vector<VertexList> chosen;
                for (std::size_t i : *clique) {
                    chosen.push_back(z.parts[i]);
                }
                pick = std::make_pair(c, std::move(chosen));
                out.via_everywhere_regular = true;
            }
        }
    }
    // Fallback: classes from distinct parts, pairwise regular and dense in one colour.
    if (!pick) {
        std::vector<std::pair<std::size_t, std::size_t>> nodes;
        for (std::size_t i = 0; i < split; ++i) {
            for (std::size_t a = 0; a < out.partition.classes[i].size(); ++a) {
                nodes.emplace_back(i, a);
            }
        }
        for (Colour c = 1; c <= r && !pick; ++c) {
            std::map<std::pair<std::size_t, std::size_t>, bool> memo;
            auto edge = [&](std::size_t x, std::size_t y) {
                auto [i, a] = nodes[x];
                auto [j, b] = nodes[y];
                if (i == j) {
                    return false;
                }
                auto key = std::make_pair(x, y);
                if (auto it = memo.find(key); it != memo.end()) {
                    return it->second;
                }
                const auto& u = out.partition.classes[i][a];
                const auto& w = out.partition.classes[j][b];
                bool ok = !u.empty() && !w.empty() && std::min(u.size(), w.size()) <= exact.exact_cap &&
                          pair_density(adj, c, u, w) >= majority &&
                          is_regular(adj, c, u, w, eps_half, exact).regular;
                memo[key] = ok;
                return ok;
            };
            auto clique = find_clique(nodes.size(), k, edge);
            if (clique) {
                std::vector<VertexList> chosen;
                for (std::size_t x : *clique) {
                    chosen.push_back(out.partition.classes[nodes[x].first][nodes[x].second]);
                }
                pick = std::make_pair(c, std::move(chosen));
            }
        }
    }
    if (!pick) {
        out.failure = "no k classes pairwise regular with density 1/r in a common colour";
        return out;
    }
    Cylinder z;
    z.parts = std::move(pick->second);
    z.colour = pick->first;
    try {
        auto trimmed = trim_to_super_regular(adj, z, eps_half, majority);
        out.cylinder = std::move(trimmed.cylinder);
    } catch (const PreconditionError& e) {
        out.failure = std::string("trim failed: ") + e.what();
        return out;
    }
    out.colour = pick->first;
    out.found = true;
    return out;
}

DenseCylinder find_cylinder_in_dense_kpartite(const ColouredCompleteGraph& g,
                                              std::span<const VertexList> parts, Colour colour,
                                              const Rational& eps, const Rational& d,
                                              const WeakPartitionOptions& options) {
    const std::size_t k = parts.size();
    if (k < 2) {
        throw InvalidInput("dense cylinder search needs k >= 2");
    }
    if (eps <= 0 || eps >= Rational(1, 2)) {
        throw PreconditionError("dense cylinder search needs 0 < eps < 1/2, got " + to_string(eps));
    }
    if (d > 1 || d < 2 * eps * k) {
        throw PreconditionError("dense cylinder search needs 2 k eps <= d <= 1, got d = " +
                                to_string(d) + ", 2 k eps = " + to_string(2 * eps * k));
    }
    check_disjoint_parts(g.n(), parts);
    DenseCylinder out;
    out.claimed = {eps, d / 2, d / 2};
    out.total_cliques = transversal_clique_count(g, parts, colour);
    const std::uint64_t tuples = tuple_count(parts);
    if (Rational(out.total_cliques) < d * tuples) {
        throw PreconditionError("only " + std::to_string(out.total_cliques) +
                                " transversal cliques, below d prod |V_i| = " + to_string(d * tuples));
    }
    const Rational eps_t = eps / 4;
    WeakPartitionOptions wopt = options;
    wopt.colours = {colour};
    out.partition = weak_regular_partition(g, parts, eps_t, wopt);
    out.selected_threshold = d - 2 * eps_t;

    std::uint64_t in_cylinders = 0;
    std::optional<std::size_t> best;
    Rational best_density = -1;
    for (std::size_t zi = 0; zi < out.partition.cylinders.size(); ++zi) {
        const auto& z = out.partition.cylinders[zi];
        const std::uint64_t cliques = transversal_clique_count(g, z.parts, colour);
        in_cylinders += cliques;
        const std::uint64_t size = tuple_count(z.parts);
        if (!out.partition.cylinder_regular[zi]) {
            out.cliques_in_irregular += cliques;
            continue;
        }
        out.regular_tuples += size;
        if (size == 0) {
            continue;
        }
        Rational density(cliques, size);
        if (density > best_density) {
            best_density = density;
            best = zi;
        }
    }
    out.cliques_touching_exceptional = out.total_cliques - in_cylinders;
    const Rational dense_side = out.selected_threshold * out.regular_tuples;
    out.counting_forces_dense =
        out.regular_tuples > 0 &&
        Rational(out.total_cliques) >=
            Rational(out.cliques_touching_exceptional + out.cliques_in_irregular) + dense_side;
    if (!best || best_density < out.selected_threshold) {
        if (out.counting_forces_dense) {
            throw ClaimViolation("clique counting forces a dense regular cylinder but none was found");
        }
        out.failure = "no verified-regular cylinder with clique density >= d - 2 eps/4 (best " +
                      (best ? to_string(best_density) : std::string("none")) + ")";
        return out;
    }
    out.selected_density = best_density;

    const ColourAdjacency& adj = g.adjacency();
    Cylinder selected = out.partition.cylinders[*best];
    selected.colour = colour;
    const Rational d_min = min_pair_density(adj, colour, selected);
    TrimResult trimmed;
    try {
        trimmed = trim_to_super_regular(adj, selected, eps_t, d_min);
    } catch (const PreconditionError& e) {
        out.failure = std::string("trim failed: ") + e.what();
        return out;
    }
    // Restore relative balance: |U_i| = floor(gamma' |V_i|).
    Cylinder z = trimmed.cylinder;
    Rational gamma_prime = 2;
    for (std::size_t i = 0; i < k; ++i) {
        gamma_prime = std::min(gamma_prime, Rational(z.parts[i].size(), parts[i].size()));
    }
    Rational beta = 1;
    for (std::size_t i = 0; i < k; ++i) {
        const auto target = static_cast<std::size_t>(floor(gamma_prime * parts[i].size()));
        auto& part = z.parts[i];
        while (part.size() > target) {
            // Drop the vertex of least minimum degree ratio into the other parts.
            std::size_t worst = 0;
            Rational worst_ratio = 2;
            for (std::size_t idx = 0; idx < part.size(); ++idx) {
                Rational ratio_v = 1;
                for (std::size_t j = 0; j < k; ++j) {
                    if (j == i || z.parts[j].empty()) {
                        continue;
                    }
                    const Bitset other = to_bitset(adj.n(), z.parts[j]);
                    ratio_v = std::min(ratio_v, Rational(adj.neighbours(colour, part[idx]).intersection_count(other),
                                                         z.parts[j].size()));
                }
                if (ratio_v < worst_ratio) {
                    worst_ratio = ratio_v;
                    worst = idx;
                }
            }
            part.erase(part.begin() + static_cast<std::ptrdiff_t>(worst));
        }
        if (part.empty()) {
            out.failure = "trimmed cylinder has an empty part";
            return out;
        }
        beta = std::min(beta, Rational(part.size(), selected.parts[i].size()));
    }
    if (beta <= eps_t) {
        out.failure = "trimmed cylinder is too small a slice of its class";
        return out;
    }
    const Rational eps_slice = slice_parameters(eps_t, d_min, beta).first;
    z.tag = SuperRegularParams{eps_slice, min_pair_density(adj, colour, z), min_degree_ratio(adj, colour, z)};
    out.meets_claim = eps_slice <= eps && z.tag->d >= d / 2 && z.tag->delta >= d / 2;
    out.cylinder = std::move(z);
    out.found = true;
    return out;
}

} // namespace monotile
