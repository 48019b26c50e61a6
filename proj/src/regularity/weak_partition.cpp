#include "monotile/weak_partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "monotile/clique.hpp"
#include "monotile/error.hpp"

namespace monotile {

namespace {

enum class PairState : std::uint8_t { regular, irregular, unverified };

struct PairTable {
    // state[{i, j}][a * classes_j + b] for i < j
    std::map<std::pair<std::size_t, std::size_t>, std::vector<PairState>> state;
};

// Per-class split hints gathered while checking pairs.
struct Hint {
    VertexList witness;      // vertices to keep together in the first half
    VertexList partner;   // class to sort degrees against
};

} // namespace

CylindricalPartition weak_regular_partition(const ColouredCompleteGraph& g,
                                            std::span<const VertexList> parts, const Rational& eps,
                                            const WeakPartitionOptions& options) {
    if (eps <= 0 || eps >= Rational(1, 2)) {
        throw PreconditionError("weak regular partition needs 0 < eps < 1/2, got " + to_string(eps));
    }
    check_disjoint_parts(g.n(), parts);
    std::vector<Colour> colours = options.colours.empty() ? all_colours(g.r()) : options.colours;
    for (Colour c : colours) {
        if (c < 1 || c > g.r()) {
            throw InvalidInput("colour " + std::to_string(c) + " out of range");
        }
    }
    const std::size_t k = parts.size();
    const ColourAdjacency& adj = g.adjacency();
    RegularityOptions exact;
    exact.exact_cap = options.exact_cap;

    CylindricalPartition out;
    out.ground.assign(parts.begin(), parts.end());
    out.exceptional.assign(k, {});
    for (std::size_t i = 0; i < k; ++i) {
        out.classes.push_back({parts[i]});
    }
    BigInt ground_tuples = 1;
    for (const auto& p : parts) {
        ground_tuples *= p.size();
    }

    while (true) {
        // Check every class pair in every required colour.
        PairTable table;
        std::vector<std::vector<Hint>> hints(k);
        for (std::size_t i = 0; i < k; ++i) {
            hints[i].resize(out.classes[i].size());
        }
        out.unverified_pairs = 0;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) {
                auto& cells = table.state[{i, j}];
                const auto& ci = out.classes[i];
                const auto& cj = out.classes[j];
                cells.assign(ci.size() * cj.size(), PairState::regular);
                for (std::size_t a = 0; a < ci.size(); ++a) {
                    for (std::size_t b = 0; b < cj.size(); ++b) {
                        auto& cell = cells[a * cj.size() + b];
                        if (ci[a].empty() || cj[b].empty()) {
                            continue;
                        }
                        if (std::min(ci[a].size(), cj[b].size()) > options.exact_cap) {
                            cell = PairState::unverified;
                            ++out.unverified_pairs;
                            if (hints[i][a].partner.empty()) {
                                hints[i][a].partner = cj[b];
                            }
                            if (hints[j][b].partner.empty()) {
                                hints[j][b].partner = ci[a];
                            }
                            continue;
                        }
                        for (Colour c : colours) {
                            auto verdict = is_regular(adj, c, ci[a], cj[b], eps, exact);
                            if (!verdict.regular) {
                                cell = PairState::irregular;
                                if (hints[i][a].witness.empty()) {
                                    hints[i][a].witness = verdict.witness->first;
                                }
                                if (hints[j][b].witness.empty()) {
                                    hints[j][b].witness = verdict.witness->second;
                                }
                                break;
                            }
                        }
                    }
                }
            }
        }

        // Enumerate class tuples as cylinders.
        out.cylinders.clear();
        out.cylinder_regular.clear();
        std::uint64_t irregular_cylinders = 0;
        std::vector<std::size_t> idx(k, 0);
        bool any_empty_part = k == 0;
        for (std::size_t i = 0; i < k; ++i) {
            any_empty_part = any_empty_part || out.classes[i].empty();
        }
        while (!any_empty_part) {
            Cylinder z;
            bool regular = true;
            for (std::size_t i = 0; i < k; ++i) {
                z.parts.push_back(out.classes[i][idx[i]]);
                for (std::size_t j = i + 1; j < k && regular; ++j) {
                    const auto& cells = table.state.at({i, j});
                    regular = cells[idx[i] * out.classes[j].size() + idx[j]] == PairState::regular;
                }
            }
            irregular_cylinders += regular ? 0 : 1;
            out.cylinders.push_back(std::move(z));
            out.cylinder_regular.push_back(regular);
            std::size_t i = 0;
            while (i < k && ++idx[i] == out.classes[i].size()) {
                idx[i] = 0;
                ++i;
            }
            if (i == k) {
                break;
            }
        }
        BigInt class_tuples = 1;
        for (std::size_t i = 0; i < k; ++i) {
            class_tuples *= out.classes[i].empty() ? 0 : out.classes[i][0].size();
        }
        const BigInt bad = class_tuples * irregular_cylinders;
        out.irregular_tuples = bad.convert_to<std::uint64_t>();
        out.irregular_mass = ground_tuples == 0 ? Rational(0) : Rational(bad, ground_tuples);
        if (out.irregular_mass <= eps) {
            out.uncertain = false;
            return out;
        }

        // Stop when another halving is impossible or over budget.
        bool can_split = out.rounds < options.max_rounds;
        std::uint64_t next_cylinders = 1;
        for (std::size_t i = 0; i < k && can_split; ++i) {
            can_split = out.classes[i][0].size() >= 2;
            next_cylinders *= 2 * out.classes[i].size();
            can_split = can_split && next_cylinders <= options.max_cylinders;
        }
        if (!can_split) {
            out.uncertain = true;
            return out;
        }

        for (std::size_t i = 0; i < k; ++i) {
            std::vector<VertexList> next;
            for (std::size_t a = 0; a < out.classes[i].size(); ++a) {
                VertexList order = out.classes[i][a];
                const Hint& hint = hints[i][a];
                if (!hint.witness.empty()) {
                    const Bitset w = to_bitset(g.n(), hint.witness);
                    std::stable_partition(order.begin(), order.end(),
                                          [&](Vertex v) { return w.test(v); });
                } else if (!hint.partner.empty()) {
                    const Bitset p = to_bitset(g.n(), hint.partner);
                    const Colour c = colours.front();
                    std::vector<std::pair<std::size_t, Vertex>> keyed;
                    for (Vertex v : order) {
                        keyed.emplace_back(adj.neighbours(c, v).intersection_count(p), v);
                    }
                    std::stable_sort(keyed.begin(), keyed.end(),
                                     [](auto x, auto y) { return x.first > y.first; });
                    for (std::size_t t = 0; t < keyed.size(); ++t) {
                        order[t] = keyed[t].second;
                    }
                }
                const std::size_t half = order.size() / 2;
                next.emplace_back(order.begin(), order.begin() + half);
                next.emplace_back(order.begin() + half, order.begin() + 2 * half);
                if (order.size() % 2 == 1) {
                    out.exceptional[i].push_back(order.back());
                }
            }
            out.classes[i] = std::move(next);
            std::sort(out.exceptional[i].begin(), out.exceptional[i].end());
        }
        ++out.rounds;
        out.gamma /= 2;
    }
}

bool product_partition_identity(const CylindricalPartition& partition) {
    const std::size_t k = partition.ground.size();
    if (partition.exceptional.size() != k) {
        return false;
    }
    BigInt expected = 1;
    std::vector<Bitset> allowed;
    std::size_t n = 0;
    for (const auto& part : partition.ground) {
        for (Vertex v : part) {
            n = std::max<std::size_t>(n, v + 1);
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        Bitset b = to_bitset(n, partition.ground[i]);
        for (Vertex v : partition.exceptional[i]) {
            if (v >= n || !b.test(v)) {
                return false;
            }
            b.reset(v);
        }
        expected *= partition.ground[i].size() - partition.exceptional[i].size();
        allowed.push_back(std::move(b));
    }
    BigInt total = 0;
    std::vector<std::vector<Bitset>> sets;
    for (const auto& z : partition.cylinders) {
        if (z.k() != k) {
            return false;
        }
        BigInt product = 1;
        std::vector<Bitset> zs;
        for (std::size_t i = 0; i < k; ++i) {
            Bitset w(n);
            for (Vertex v : z.parts[i]) {
                if (v >= n || !allowed[i].test(v) || w.test(v)) {
                    return false;
                }
                w.set(v);
            }
            product *= z.parts[i].size();
            zs.push_back(std::move(w));
        }
        total += product;
        sets.push_back(std::move(zs));
    }
    if (total != expected) {
        return false;
    }
    // Two products meet iff they meet in every coordinate.
    for (std::size_t x = 0; x < sets.size(); ++x) {
        for (std::size_t y = x + 1; y < sets.size(); ++y) {
            bool meet = true;
            for (std::size_t i = 0; i < k && meet; ++i) {
                meet = sets[x][i].intersects(sets[y][i]);
            }
            if (meet && k > 0) {
                return false;
            }
        }
    }
    return true;
}

std::string format_partition(const CylindricalPartition& partition) {
    std::ostringstream out;
    auto write_parts = [&](const std::vector<VertexList>& parts) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i > 0) {
                out << " |";
            }
            for (Vertex v : parts[i]) {
                out << ' ' << v;
            }
        }
        out << '\n';
    };
    for (std::size_t j = 0; j < partition.cylinders.size(); ++j) {
        out << "cylinder " << j << ':';
        write_parts(partition.cylinders[j].parts);
    }
    out << "exceptional:";
    write_parts(partition.exceptional);
    return out.str();
}

double paper_beta_log10(const Rational& eps, std::size_t k, std::size_t r) {
    const double e = to_double(eps);
    return static_cast<double>(r * k * k) * std::pow(e, -5.0) * std::log10(e);
}

} // namespace monotile
