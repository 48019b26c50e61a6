#include "monotile/regularity.hpp"

#include <algorithm>

#include "monotile/error.hpp"

namespace monotile {

std::pair<Rational, Rational> slice_parameters(const Rational& eps, const Rational& d,
                                               const Rational& beta) {
    if (eps <= 0) {
        throw PreconditionError("slicing needs eps > 0, got " + to_string(eps));
    }
    if (beta <= eps) {
        throw PreconditionError("slicing needs beta > eps, got beta = " + to_string(beta) +
                                ", eps = " + to_string(eps));
    }
    Rational scaled = eps / beta;
    Rational doubled = 2 * eps;
    return {scaled > doubled ? scaled : doubled, d - eps};
}

RobustResult robust_update(const ColourAdjacency& adj, Colour c, std::span<const Vertex> v1,
                           std::span<const Vertex> v2, std::span<const Vertex> x1,
                           std::span<const Vertex> x2, std::span<const Vertex> y1,
                           std::span<const Vertex> y2, const Rational& eps, const Rational& d,
                           const Rational& delta) {
    if (eps <= 0 || eps >= Rational(1, 2)) {
        throw PreconditionError("robust update needs 0 < eps < 1/2, got " + to_string(eps));
    }
    if (delta < 4 * eps) {
        throw PreconditionError("robust update needs delta >= 4 eps, got delta = " +
                                to_string(delta) + ", 4 eps = " + to_string(4 * eps));
    }
    std::vector<VertexList> all{VertexList(v1.begin(), v1.end()), VertexList(v2.begin(), v2.end()),
                                VertexList(y1.begin(), y1.end()), VertexList(y2.begin(), y2.end())};
    check_disjoint_parts(adj.n(), all);
    const Bitset b1 = to_bitset(adj.n(), v1);
    const Bitset b2 = to_bitset(adj.n(), v2);
    auto check_subset = [&](std::span<const Vertex> x, const Bitset& of, const char* name) {
        check_vertex_list(adj.n(), x, name);
        for (Vertex v : x) {
            if (!of.test(v)) {
                throw PreconditionError(std::string(name) + " contains " + std::to_string(v) +
                                        " outside its part");
            }
        }
    };
    check_subset(x1, b1, "X_1");
    check_subset(x2, b2, "X_2");
    const Rational eps2 = eps * eps;
    auto check_size = [&](std::size_t size, std::size_t part, const char* name) {
        if (Rational(size) > eps2 * part) {
            throw PreconditionError(std::string(name) + " has " + std::to_string(size) +
                                    " vertices, above eps^2 |V_i| = " + to_string(eps2 * part));
        }
    };
    check_size(x1.size(), v1.size(), "X_1");
    check_size(x2.size(), v2.size(), "X_2");
    check_size(y1.size(), v1.size(), "Y_1");
    check_size(y2.size(), v2.size(), "Y_2");
    auto check_degree = [&](std::span<const Vertex> y, const Bitset& into, std::size_t size,
                            const char* name) {
        for (Vertex v : y) {
            const auto deg = adj.neighbours(c, v).intersection_count(into);
            if (Rational(deg) < delta * size) {
                throw PreconditionError(std::string(name) + " vertex " + std::to_string(v) +
                                        " has degree " + std::to_string(deg) + " below delta |V_i| = " +
                                        to_string(delta * size));
            }
        }
    };
    check_degree(y1, b2, v2.size(), "Y_1");
    check_degree(y2, b1, v1.size(), "Y_2");

    auto rebuild = [&](std::span<const Vertex> v, std::span<const Vertex> x, std::span<const Vertex> y) {
        const Bitset drop = to_bitset(adj.n(), x);
        VertexList out;
        for (Vertex u : v) {
            if (!drop.test(u)) {
                out.push_back(u);
            }
        }
        out.insert(out.end(), y.begin(), y.end());
        return out;
    };
    RobustResult result;
    result.first = rebuild(v1, x1, y1);
    result.second = rebuild(v2, x2, y2);
    result.params = {8 * eps, d - 8 * eps, delta / 2};
    return result;
}

std::size_t Cylinder::vertex_count() const noexcept {
    std::size_t total = 0;
    for (const auto& p : parts) {
        total += p.size();
    }
    return total;
}

VertexList Cylinder::vertices() const { return set_union(parts); }

bool Cylinder::is_balanced(const Rational& eps) const {
    if (parts.empty()) {
        return true;
    }
    std::size_t lo = parts[0].size();
    std::size_t hi = lo;
    for (const auto& p : parts) {
        lo = std::min(lo, p.size());
        hi = std::max(hi, p.size());
    }
    return Rational(hi) <= (1 + eps) * lo;
}

bool cylinder_is_super_regular(const ColourAdjacency& adj, Colour c, const Cylinder& z,
                               const SuperRegularParams& params, const RegularityOptions& options) {
    for (std::size_t i = 0; i < z.k(); ++i) {
        for (std::size_t j = i + 1; j < z.k(); ++j) {
            if (!is_super_regular(adj, c, z.parts[i], z.parts[j], params.eps, params.d,
                                  params.delta, options)) {
                return false;
            }
        }
    }
    return true;
}

TrimResult trim_to_super_regular(const ColourAdjacency& adj, const Cylinder& z, const Rational& eps,
                                 const Rational& d) {
    if (!z.colour) {
        throw InvalidInput("trim needs the cylinder's colour");
    }
    const std::size_t k = z.k();
    if (eps <= 0 || (k > 0 && eps * (2 * k) > 1)) {
        throw PreconditionError("trim needs 0 < eps <= 1/(2k), got eps = " + to_string(eps) +
                                " with k = " + std::to_string(k));
    }
    check_disjoint_parts(adj.n(), z.parts);
    const Colour c = *z.colour;
    std::vector<Bitset> bits;
    for (const auto& p : z.parts) {
        bits.push_back(to_bitset(adj.n(), p));
    }

    TrimResult result;
    result.cylinder.colour = z.colour;
    result.removed.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        const VertexList& part = z.parts[i];
        Bitset low(adj.n());
        // weakest[v]: min over j of deg(v, V_j) / |V_j|, for padding order
        std::vector<Rational> weakest(part.size(), Rational(2));
        for (std::size_t j = 0; j < k; ++j) {
            if (j == i) {
                continue;
            }
            const Rational threshold = (d - eps) * z.parts[j].size();
            VertexList a_ij;
            for (std::size_t idx = 0; idx < part.size(); ++idx) {
                const auto deg = adj.neighbours(c, part[idx]).intersection_count(bits[j]);
                if (Rational(deg) < threshold) {
                    a_ij.push_back(part[idx]);
                    low.set(part[idx]);
                }
                if (!z.parts[j].empty()) {
                    weakest[idx] = std::min(weakest[idx], Rational(deg, z.parts[j].size()));
                }
            }
            if (Rational(a_ij.size()) >= eps * part.size() && !a_ij.empty()) {
                throw TrimContradiction("part " + std::to_string(i + 1) + " has " +
                                            std::to_string(a_ij.size()) +
                                            " vertices of low degree into part " +
                                            std::to_string(j + 1) + ", not below eps |V_i|",
                                        i, j, std::move(a_ij));
            }
        }
        const auto target = static_cast<std::size_t>(floor(eps * (k - 1) * part.size()));
        VertexList removed = low.to_vector();
        if (removed.size() > target) {
            throw TrimContradiction("part " + std::to_string(i + 1) + " has " +
                                        std::to_string(removed.size()) +
                                        " low-degree vertices, above floor((k-1) eps |V_i|)",
                                    i, i, removed);
        }
        std::vector<std::size_t> order(part.size());
        for (std::size_t idx = 0; idx < part.size(); ++idx) {
            order[idx] = idx;
        }
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t x, std::size_t y) { return weakest[x] < weakest[y]; });
        for (std::size_t idx : order) {
            if (removed.size() >= target) {
                break;
            }
            if (!low.test(part[idx])) {
                low.set(part[idx]);
                removed.push_back(part[idx]);
            }
        }
        VertexList kept;
        for (Vertex v : part) {
            if (!low.test(v)) {
                kept.push_back(v);
            }
        }
        std::sort(removed.begin(), removed.end());
        result.removed[i] = std::move(removed);
        result.cylinder.parts.push_back(std::move(kept));
    }
    const Rational floor_d = d - eps * k;
    result.cylinder.tag = SuperRegularParams{2 * eps, floor_d, floor_d};
    return result;
}

} // namespace monotile
