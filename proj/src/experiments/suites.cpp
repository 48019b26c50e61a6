#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "json.hpp"

#include "monotile/absorption.hpp"
#include "monotile/clique.hpp"
#include "monotile/error.hpp"
#include "monotile/experiments.hpp"
#include "monotile/io.hpp"
#include "monotile/rng.hpp"
#include "monotile/weak_partition.hpp"

namespace monotile {

namespace {

using json = nlohmann::json;

constexpr std::size_t max_attempts = 400;

json to_json(const VertexList& vs) { return json(vs); }

json to_json(std::span<const VertexList> parts) {
    json out = json::array();
    for (const auto& p : parts) {
        out.push_back(to_json(p));
    }
    return out;
}

std::vector<VertexList> parts_from(const json& j) {
    std::vector<VertexList> out;
    for (const auto& p : j) {
        out.push_back(p.get<VertexList>());
    }
    return out;
}

Rational rational_from(const json& j) { return parse_rational(j.get<std::string>()); }

ColouredCompleteGraph graph_from(const json& j) {
    std::istringstream in(j.at("colouring").get<std::string>());
    return read_colouring(in);
}

VertexList range(Vertex from, std::size_t count) {
    VertexList out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(static_cast<Vertex>(from + i));
    }
    return out;
}

VertexList random_subset(Rng& rng, const VertexList& of, std::size_t size) {
    VertexList v = of;
    rng.shuffle(v);
    v.resize(size);
    std::sort(v.begin(), v.end());
    return v;
}

Rational floor_to_grid(const Rational& x, std::int64_t den) { return Rational(BigInt(floor(x * den)), den); }

// Colour 1 on the listed pairs, colour 2 elsewhere.
ColouredCompleteGraph from_edges(std::size_t n, const std::vector<std::vector<bool>>& edge) {
    return ColouredCompleteGraph::from_function(n, 2, [&](Vertex u, Vertex v) -> Colour { return edge[u][v] ? 1 : 2; });
}

std::vector<std::vector<bool>> no_edges(std::size_t n) { return std::vector<std::vector<bool>>(n, std::vector<bool>(n, false)); }

void join(std::vector<std::vector<bool>>& e, Vertex u, Vertex v) {
    e[u][v] = true;
    e[v][u] = true;
}

// Super-regularity of every pair of `parts` in colour 1; empty string when all pass.
std::string super_regular_fault(const ColouredCompleteGraph& g, std::span<const VertexList> parts,
                                const SuperRegularParams& p, json* witness) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            auto v = is_super_regular(g.adjacency(), 1, parts[i], parts[j], p.eps, p.d, p.delta);
            if (v.ok()) {
                continue;
            }
            std::string fault = std::string(to_string(v.fault)) + " on pair (" + std::to_string(i + 1) + ", " +
                                std::to_string(j + 1) + ")";
            if (witness) {
                if (v.regularity.witness) {
                    *witness = json::array({to_json(v.regularity.witness->first), to_json(v.regularity.witness->second)});
                } else if (v.low_degree_vertex) {
                    *witness = json::array({*v.low_degree_vertex});
                }
            }
            return fault;
        }
    }
    return {};
}

json super_regular_instance(const ColouredCompleteGraph& g, std::span<const VertexList> parts,
                            const SuperRegularParams& p) {
    return json{{"check", "super_regular"},
                {"colour", 1},
                {"parts", to_json(parts)},
                {"eps", to_string(p.eps)},
                {"d", to_string(p.d)},
                {"delta", to_string(p.delta)},
                {"colouring", format_colouring(g)}};
}

class Runner {
public:
    Runner(std::uint64_t seed, const SuiteOptions& options) : seed_(seed), options_(options), deadline_(options.budget_ms) {}

    SuiteResult run(const std::string& name, std::size_t count) {
        SuiteResult res;
        res.name = name;
        const auto start = std::chrono::steady_clock::now();
        const std::uint64_t salt = std::hash<std::string>{}(name) & 0xffff;
        for (std::size_t i = 0; i < count; ++i) {
            if (deadline_.expired()) {
                res.skipped += count - i;
                res.note = "time budget exhausted";
                break;
            }
            Rng rng(derive_seed(seed_, salt, i));
            current_ = &res;
            index_ = i;
            if (name == "slicing") {
                slicing(rng);
            } else if (name == "robust") {
                robust(rng);
            } else if (name == "trim") {
                trim(rng);
            } else if (name == "ladder") {
                ladder(i);
            } else if (name == "split") {
                split(rng);
            } else if (name == "transversal") {
                transversal(rng);
            } else if (name == "weakreg") {
                weakreg(rng);
            } else {
                throw InvalidInput("unknown suite '" + name + "'");
            }
        }
        if (name == "transversal" && draws_ > 0) {
            transversal_summary(res);
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return res;
    }

private:
    void skip() { ++current_->skipped; }

    void pass() { ++current_->instances; }

    void violation(const std::string& fault, json instance) {
        ++current_->instances;
        ++current_->violations;
        if (current_->note.empty()) {
            current_->note = "instance " + std::to_string(index_) + ": " + fault;
        }
        if (options_.out_dir.empty()) {
            return;
        }
        instance["suite"] = current_->name;
        instance["seed"] = seed_;
        instance["instance"] = index_;
        instance["fault"] = fault;
        std::filesystem::create_directories(options_.out_dir);
        const auto path = options_.out_dir / (current_->name + "-" + std::to_string(seed_) + "-" +
                                              std::to_string(index_) + ".json");
        std::ofstream(path) << instance.dump(2) << "\n";
        current_->witness_files.push_back(path.string());
    }

    // (eps, d, 0)-super-regular pairs with parts of 6 to 14 vertices, sliced at relative size >= beta.
    void slicing(Rng& rng) {
        static const Rational eps_choices[] = {ratio(3, 10), ratio(7, 20), ratio(2, 5), ratio(9, 20)};
        static const std::pair<int, int> p_choices[] = {{1, 2}, {2, 3}, {3, 4}, {9, 10}};
        for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
            const std::size_t a = 6 + rng.below(9);
            const std::size_t b = 6 + rng.below(9);
            const Rational eps = eps_choices[rng.below(4)];
            const auto [num, den] = p_choices[rng.below(4)];
            auto e = no_edges(a + b);
            const VertexList v1 = range(0, a);
            const VertexList v2 = range(static_cast<Vertex>(a), b);
            for (Vertex u : v1) {
                for (Vertex w : v2) {
                    if (rng.chance(num, den)) {
                        join(e, u, w);
                    }
                }
            }
            const auto g = from_edges(a + b, e);
            const Rational d = floor_to_grid(pair_density(g.adjacency(), 1, v1, v2), 20);
            if (d <= eps || !is_super_regular(g.adjacency(), 1, v1, v2, eps, d, 0)) {
                continue;
            }
            // beta on the 1/20 grid in (eps, 1].
            const std::int64_t lo = static_cast<std::int64_t>(floor(eps * 20)) + 1;
            const Rational beta(lo + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(21 - lo))), 20);
            const std::size_t s1 = min_qualifying_size(beta, a);
            const std::size_t s2 = min_qualifying_size(beta, b);
            const std::vector<VertexList> sliced{random_subset(rng, v1, s1 + rng.below(a - s1 + 1)),
                                                 random_subset(rng, v2, s2 + rng.below(b - s2 + 1))};
            auto [eps2, d2] = slice_parameters(eps, d, beta);
            if (options_.corrupt_slicing) {
                eps2 /= 2;
            }
            const SuperRegularParams claimed{eps2, d2, 0};
            json witness;
            const std::string fault = super_regular_fault(g, sliced, claimed, &witness);
            if (fault.empty()) {
                pass();
            } else {
                json inst = super_regular_instance(g, sliced, claimed);
                inst["source"] = {{"parts", to_json(std::vector<VertexList>{v1, v2})},
                                  {"eps", to_string(eps)},
                                  {"d", to_string(d)},
                                  {"beta", to_string(beta)}};
                inst["witness"] = witness;
                violation(fault, inst);
            }
            return;
        }
        skip();
    }

    // (eps, d, 4 eps)-super-regular pairs, 8..14 against 16..40 vertices, with X and Y sets of size
    // at most eps^2 |V_i| and Y vertices of degree >= delta |V_i| into the opposite part.
    void robust(Rng& rng) {
        static const Rational eps_choices[] = {ratio(1, 8), ratio(1, 6), ratio(1, 5), ratio(1, 4)};
        for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
            const std::size_t a = 8 + rng.below(7);
            const std::size_t b = 16 + rng.below(25);
            const Rational eps = eps_choices[rng.below(4)];
            const Rational delta = 4 * eps;
            std::pair<int, int> p{1, 1};
            if (delta < 1) {
                static const std::pair<int, int> p_choices[] = {{9, 10}, {19, 20}, {1, 1}};
                p = p_choices[rng.below(3)];
            }
            const auto cap = [&](std::size_t size) {
                return static_cast<std::size_t>(floor(eps * eps * static_cast<long>(size)));
            };
            const std::size_t y1 = rng.below(cap(a) + 1);
            const std::size_t y2 = rng.below(cap(b) + 1);
            const std::size_t n = a + b + y1 + y2;
            const VertexList v1 = range(0, a);
            const VertexList v2 = range(static_cast<Vertex>(a), b);
            const VertexList yy1 = range(static_cast<Vertex>(a + b), y1);
            const VertexList yy2 = range(static_cast<Vertex>(a + b + y1), y2);
            auto e = no_edges(n);
            for (Vertex u : v1) {
                for (Vertex w : v2) {
                    if (rng.chance(p.first, p.second)) {
                        join(e, u, w);
                    }
                }
            }
            auto attach = [&](const VertexList& ys, const VertexList& side, const VertexList& other_ys) {
                const std::size_t need = min_qualifying_size(delta, side.size());
                for (Vertex y : ys) {
                    for (Vertex w : random_subset(rng, side, need + rng.below(side.size() - need + 1))) {
                        join(e, y, w);
                    }
                    for (Vertex w : other_ys) {
                        if (rng.chance(p.first, p.second)) {
                            join(e, y, w);
                        }
                    }
                }
            };
            attach(yy1, v2, yy2);
            attach(yy2, v1, {});
            const auto g = from_edges(n, e);
            const Rational d = floor_to_grid(pair_density(g.adjacency(), 1, v1, v2), 20);
            if (!is_super_regular(g.adjacency(), 1, v1, v2, eps, d, delta)) {
                continue;
            }
            const VertexList x1 = random_subset(rng, v1, rng.below(cap(a) + 1));
            const VertexList x2 = random_subset(rng, v2, rng.below(cap(b) + 1));
            const auto res = robust_update(g.adjacency(), 1, v1, v2, x1, x2, yy1, yy2, eps, d, delta);
            const std::vector<VertexList> out{res.first, res.second};
            json witness;
            const std::string fault = super_regular_fault(g, out, res.params, &witness);
            if (fault.empty()) {
                pass();
            } else {
                json inst = super_regular_instance(g, out, res.params);
                inst["source"] = {{"parts", to_json(std::vector<VertexList>{v1, v2})},
                                  {"x", to_json(std::vector<VertexList>{x1, x2})},
                                  {"y", to_json(std::vector<VertexList>{yy1, yy2})},
                                  {"eps", to_string(eps)},
                                  {"d", to_string(d)},
                                  {"delta", to_string(delta)}};
                inst["witness"] = witness;
                violation(fault, inst);
            }
            return;
        }
        skip();
    }

    // Dense k-cylinders, k in {2, 3}, parts of 6..14, every pair eps-regular at eps = 1/(2k).
    void trim(Rng& rng) {
        for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
            const std::size_t k = 2 + rng.below(2);
            const std::size_t size = 6 + rng.below(9);
            Cylinder z;
            z.colour = 1;
            for (std::size_t i = 0; i < k; ++i) {
                z.parts.push_back(range(static_cast<Vertex>(i * size), size));
            }
            auto e = no_edges(k * size);
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = i + 1; j < k; ++j) {
                    for (Vertex u : z.parts[i]) {
                        for (Vertex w : z.parts[j]) {
                            if (rng.chance(24, 25)) {
                                join(e, u, w);
                            }
                        }
                    }
                }
            }
            const auto g = from_edges(k * size, e);
            const Rational eps(1, static_cast<long>(2 * k));
            Rational d = 1;
            bool regular = true;
            for (std::size_t i = 0; i < k && regular; ++i) {
                for (std::size_t j = i + 1; j < k && regular; ++j) {
                    regular = is_regular(g.adjacency(), 1, z.parts[i], z.parts[j], eps).regular;
                    d = std::min<Rational>(d, pair_density(g.adjacency(), 1, z.parts[i], z.parts[j]));
                }
            }
            if (!regular) {
                continue;
            }
            try {
                const auto t = trim_to_super_regular(g.adjacency(), z, eps, d);
                json witness;
                const std::string fault = super_regular_fault(g, t.cylinder.parts, *t.cylinder.tag, &witness);
                if (fault.empty()) {
                    pass();
                } else {
                    json inst = super_regular_instance(g, t.cylinder.parts, *t.cylinder.tag);
                    inst["source"] = {{"parts", to_json(z.parts)}, {"eps", to_string(eps)}, {"d", to_string(d)}};
                    inst["witness"] = witness;
                    violation(fault, inst);
                }
            } catch (const TrimContradiction& c) {
                json inst = super_regular_instance(g, z.parts, {eps, d, 0});
                violation(std::string("trim contradiction: ") + c.what(), inst);
            }
            return;
        }
        skip();
    }

    // Grid point i of gamma in {1/11, ..., 10/11} x k in {2, ..., 11} x d' in {1/10, ..., 1}.
    void ladder(std::size_t i) {
        const Rational gamma(static_cast<long>(i % 10 + 1), 11);
        const std::size_t k = (i / 10) % 10 + 2;
        const Rational d(static_cast<long>((i / 100) % 10 + 1), 10);
        const auto l = density_ladder(d, gamma, k);
        std::string fault;
        Rational gk = 1;
        for (std::size_t j = 0; j < k; ++j) {
            gk *= gamma;
        }
        Rational gp = 1;
        for (std::size_t j = 1; j <= k && fault.empty(); ++j) {
            gp *= gamma;
            if (l[j - 1] != d * (1 - gp) / (1 - gk)) {
                fault = "d_" + std::to_string(j) + " differs from d'(1 - gamma^i)/(1 - gamma^k)";
            } else if (j > 1 && l[j - 2] > l[j - 1]) {
                fault = "chain decreases at d_" + std::to_string(j);
            }
        }
        if (fault.empty() && l.back() != d) {
            fault = "d_k != d'";
        }
        if (fault.empty() && l.front() < (1 - gamma) * d) {
            fault = "d_1 < (1 - gamma) d'";
        }
        if (fault.empty()) {
            pass();
        } else {
            violation(fault, json{{"check", "ladder"}, {"d", to_string(d)}, {"gamma", to_string(gamma)}, {"k", k}});
        }
    }

    // R of 4 vertices against V_2, V_3 of 5..8 vertices with random cylinder parts U_i.
    void split(Rng& rng) {
        for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
            const std::size_t a = 5 + rng.below(4);
            const std::size_t b = 5 + rng.below(4);
            const VertexList r = range(0, 4);
            const std::vector<VertexList> full{range(4, a), range(static_cast<Vertex>(4 + a), b)};
            const std::uint64_t num = 5 + rng.below(5);
            const Colour inner = static_cast<Colour>(1 + rng.below(2));
            std::vector<std::size_t> part_of(4 + a + b, 0);
            for (Vertex v : full[0]) {
                part_of[v] = 1;
            }
            for (Vertex v : full[1]) {
                part_of[v] = 2;
            }
            const auto g = ColouredCompleteGraph::from_function(4 + a + b, 2, [&](Vertex u, Vertex v) -> Colour {
                if (part_of[u] == part_of[v]) {
                    return inner;
                }
                return rng.chance(num, 10) ? 1 : 2;
            });
            std::vector<VertexList> cyl;
            for (const auto& part : full) {
                cyl.push_back(random_subset(rng, part, 1 + rng.below(part.size() - 1)));
            }
            Rational d = 1;
            for (Vertex v : r) {
                d = std::min<Rational>(d, clique_density(g, v, full, 1));
            }
            if (d == 0) {
                continue;
            }
            Rational gamma = 1;
            for (std::size_t i = 0; i < 2; ++i) {
                gamma = std::min<Rational>(gamma, Rational(cyl[i].size()) / Rational(full[i].size()));
            }
            const Rational eta = d * gamma * gamma * gamma / 2;
            json inst{{"check", "split"},
                      {"r", to_json(r)},
                      {"full", to_json(full)},
                      {"cylinder", to_json(cyl)},
                      {"d", to_string(d)},
                      {"gamma", to_string(gamma)},
                      {"eta", to_string(eta)},
                      {"colouring", format_colouring(g)}};
            const std::string fault = split_fault(g, r, full, cyl, d, gamma, eta);
            if (fault.empty()) {
                pass();
            } else {
                violation(fault, inst);
            }
            return;
        }
        skip();
    }

    // N = 6 blocks of 8; for every triple of blocks and every v in the lowest one, one hyperedge
    // through v and random vertices of the other two. Degrees are then at most 1 = threshold / 3.2.
    void transversal(Rng& rng) {
        const std::size_t n_blocks = 6;
        const std::size_t block = 8;
        std::vector<VertexList> blocks;
        for (std::size_t i = 0; i < n_blocks; ++i) {
            blocks.push_back(range(static_cast<Vertex>(i * block), block));
        }
        Hypergraph h{3, {}};
        for (std::size_t a = 0; a < n_blocks; ++a) {
            for (std::size_t b = a + 1; b < n_blocks; ++b) {
                for (std::size_t c = b + 1; c < n_blocks; ++c) {
                    for (Vertex v : blocks[a]) {
                        VertexList e{v, blocks[b][rng.below(block)], blocks[c][rng.below(block)]};
                        std::sort(e.begin(), e.end());
                        h.edges.push_back(e);
                    }
                }
            }
        }
        const auto res = independent_transversal(h, blocks, 100, rng);
        bound_ = res.hypothesis.union_bound;
        draws_ += res.tries;
        failed_ += res.failed_draws;
        std::string fault;
        if (!res.hypothesis.holds || res.hypothesis.max_ratio > ratio(1, 2)) {
            fault = "degree hypothesis with slack 1/2 fails (max ratio " + to_string(res.hypothesis.max_ratio) + ")";
        } else if (res.hypothesis.union_bound > ratio(1, 2)) {
            fault = "union bound " + to_string(res.hypothesis.union_bound) + " above 1 - s";
        } else if (!res.found) {
            fault = "no independent transversal within 100 draws";
        }
        if (fault.empty()) {
            pass();
        } else {
            json edges = json::array();
            for (const auto& e : h.edges) {
                edges.push_back(to_json(e));
            }
            violation(fault, json{{"check", "transversal"}, {"blocks", to_json(blocks)}, {"edges", edges}});
        }
    }

    void transversal_summary(SuiteResult& res) {
        const double p = to_double(bound_);
        const double rate = static_cast<double>(failed_) / static_cast<double>(draws_);
        const double se = std::sqrt(p * (1 - p) / static_cast<double>(draws_));
        std::ostringstream note;
        note << "single-draw failure rate " << rate << " over " << draws_ << " draws, union bound "
             << to_string(bound_) << " = " << p << ", 3 se = " << 3 * se;
        if (rate > p + 3 * se) {
            ++res.violations;
            note << " (rate above bound + 3 se)";
        }
        res.note = res.note.empty() ? note.str() : res.note + "; " + note.str();
    }

    // Random 2-coloured K_60 split 30 + 30, eps = 0.35.
    void weakreg(Rng& rng) {
        const auto g = ColouredCompleteGraph::random(60, 2, rng);
        const std::vector<VertexList> parts{range(0, 30), range(30, 30)};
        const Rational eps = ratio(7, 20);
        const std::string fault = weakreg_fault(g, parts, eps);
        if (fault.empty()) {
            pass();
        } else {
            violation(fault, json{{"check", "weakreg"},
                                  {"parts", to_json(parts)},
                                  {"eps", to_string(eps)},
                                  {"colouring", format_colouring(g)}});
        }
    }

public:
    static std::string split_fault(const ColouredCompleteGraph& g, const VertexList& r,
                                   const std::vector<VertexList>& full, const std::vector<VertexList>& cyl,
                                   const Rational& d, const Rational& gamma, const Rational& eta) {
        LeftoverSplit s;
        try {
            s = split_leftover(g, r, full, cyl, d, gamma, eta, 1);
        } catch (const Error& e) {
            return std::string("split_leftover threw: ") + e.what();
        }
        VertexList all = s.s1;
        for (const auto& t : s.t_prime) {
            all.insert(all.end(), t.begin(), t.end());
        }
        std::sort(all.begin(), all.end());
        if (all != r) {
            return "S_1 and the T'_i do not partition R";
        }
        for (const auto& t : s.t) {
            if (!std::includes(r.begin(), r.end(), t.begin(), t.end())) {
                return "some T_i leaves R";
            }
        }
        return {};
    }

    static std::string weakreg_fault(const ColouredCompleteGraph& g, const std::vector<VertexList>& parts,
                                     const Rational& eps) {
        const auto p = weak_regular_partition(g, parts, eps);
        if (!product_partition_identity(p)) {
            return "product partition identity fails";
        }
        if (p.uncertain || p.unverified_pairs > 0) {
            return "partition not fully verified";
        }
        std::uint64_t bad = 0;
        for (const auto& z : p.cylinders) {
            bool regular = true;
            for (Colour c = 1; c <= g.r() && regular; ++c) {
                regular = is_regular(g.adjacency(), c, z.parts[0], z.parts[1], eps).regular;
            }
            if (!regular) {
                bad += z.parts[0].size() * z.parts[1].size();
            }
        }
        if (bad != p.irregular_tuples) {
            return "recounted irregular mass " + std::to_string(bad) + " differs from reported " +
                   std::to_string(p.irregular_tuples);
        }
        if (Rational(bad) > eps * Rational(tuple_count(parts))) {
            return "irregular mass " + to_string(Rational(bad) / Rational(tuple_count(parts))) + " above eps";
        }
        return {};
    }

private:
    std::uint64_t seed_;
    const SuiteOptions& options_;
    Deadline deadline_;
    SuiteResult* current_ = nullptr;
    std::size_t index_ = 0;
    Rational bound_ = 0;
    std::uint64_t draws_ = 0;
    std::uint64_t failed_ = 0;
};

} // namespace

SuiteSizes default_suite_sizes() {
    return {{"slicing", 500}, {"robust", 500}, {"trim", 500}, {"ladder", 1000},
            {"split", 200},   {"transversal", 1000}, {"weakreg", 20}};
}

std::vector<std::string> known_suites() {
    std::vector<std::string> out;
    for (const auto& [name, count] : default_suite_sizes()) {
        out.push_back(name);
    }
    return out;
}

SuiteReport run_lemma_suites(std::uint64_t seed, const SuiteSizes& sizes, const SuiteOptions& options) {
    const auto known = known_suites();
    for (const auto& [name, count] : sizes) {
        if (std::find(known.begin(), known.end(), name) == known.end()) {
            throw InvalidInput("unknown suite '" + name + "'");
        }
    }
    SuiteReport report;
    report.seed = seed;
    for (const auto& [name, count] : sizes) {
        Runner runner(seed, options);
        report.suites.push_back(runner.run(name, count));
    }
    return report;
}

bool SuiteReport::passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

std::string SuiteReport::to_json(const std::string& header) const {
    json out;
    out["schema_version"] = Config::schema_version;
    out["seed"] = seed;
    if (!header.empty()) {
        out["config"] = header;
    }
    out["suites"] = json::array();
    for (const auto& s : suites) {
        out["suites"].push_back({{"name", s.name},
                                 {"instances", s.instances},
                                 {"violations", s.violations},
                                 {"skipped", s.skipped},
                                 {"passed", s.passed()},
                                 {"seconds", s.seconds},
                                 {"note", s.note},
                                 {"witness_files", s.witness_files}});
    }
    out["passed"] = passed();
    return out.dump(2);
}

ReplayVerdict replay_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open instance " + path.string());
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw InvalidInput(path.string() + ": " + e.what());
    }
    const std::string check = j.value("check", "");
    ReplayVerdict v;
    try {
        if (check == "super_regular") {
            const auto g = graph_from(j);
            const SuperRegularParams p{rational_from(j.at("eps")), rational_from(j.at("d")), rational_from(j.at("delta"))};
            v.detail = super_regular_fault(g, parts_from(j.at("parts")), p, nullptr);
        } else if (check == "ladder") {
            const auto l = density_ladder(rational_from(j.at("d")), rational_from(j.at("gamma")), j.at("k").get<std::size_t>());
            bool chain = l.back() == rational_from(j.at("d"));
            for (std::size_t i = 1; i < l.size(); ++i) {
                chain = chain && l[i - 1] <= l[i];
            }
            v.detail = chain ? "" : "ladder chain fails";
        } else if (check == "split") {
            const auto g = graph_from(j);
            v.detail = Runner::split_fault(g, j.at("r").get<VertexList>(), parts_from(j.at("full")),
                                           parts_from(j.at("cylinder")), rational_from(j.at("d")),
                                           rational_from(j.at("gamma")), rational_from(j.at("eta")));
        } else if (check == "weakreg") {
            v.detail = Runner::weakreg_fault(graph_from(j), parts_from(j.at("parts")), rational_from(j.at("eps")));
        } else if (check == "transversal") {
            Hypergraph h{3, {}};
            for (const auto& e : j.at("edges")) {
                h.edges.push_back(e.get<VertexList>());
            }
            Rng rng(j.value("seed", std::uint64_t{1}));
            const auto res = independent_transversal(h, parts_from(j.at("blocks")), 100, rng);
            v.detail = res.found ? "" : "no independent transversal within 100 draws";
        } else {
            throw InvalidInput(path.string() + ": unknown check '" + check + "'");
        }
    } catch (const json::exception& e) {
        throw InvalidInput(path.string() + ": " + e.what());
    }
    v.passes = v.detail.empty();
    if (v.passes) {
        v.detail = "passes";
    }
    return v;
}

} // namespace monotile
