#include <algorithm>
#include <sstream>

#include "monotile/clique.hpp"
#include "monotile/cylinders.hpp"
#include "monotile/error.hpp"
#include "monotile/experiments.hpp"
#include "monotile/greedy.hpp"

namespace monotile {

namespace {

struct Failure {
    std::string stage;
    std::string message;
};

std::string sizes(const Cylinder& z) {
    std::string out;
    for (std::size_t i = 0; i < z.parts.size(); ++i) {
        out += (i ? "x" : "") + std::to_string(z.parts[i].size());
    }
    return out;
}

std::string indices(const std::vector<std::size_t>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? "," : "") + std::to_string(xs[i] + 1);
    }
    return out + "}";
}

// Lexicographic (size)-subsets of [0, m).
std::vector<std::vector<std::size_t>> subsets(std::size_t m, std::size_t size) {
    std::vector<std::vector<std::size_t>> out;
    if (size > m) {
        return out;
    }
    std::vector<std::size_t> cur(size);
    for (std::size_t i = 0; i < size; ++i) {
        cur[i] = i;
    }
    while (true) {
        out.push_back(cur);
        std::size_t i = size;
        while (i > 0 && cur[i - 1] == m - size + i - 1) {
            --i;
        }
        if (i == 0) {
            return out;
        }
        ++cur[i - 1];
        for (std::size_t j = i; j < size; ++j) {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

VertexList unused(const VertexList& a, const std::vector<bool>& used) {
    VertexList out;
    for (Vertex v : a) {
        if (!used[v]) {
            out.push_back(v);
        }
    }
    return out;
}

class Pipeline {
public:
    Pipeline(const ColouredCompleteGraph& g, const FamilySpec& family, const PipelineConfig& cfg, PipelineReport& rep)
        : g_(g), family_(family), cfg_(cfg), rep_(rep), deadline_(cfg.budget_ms) {
        greedy_.node_budget = cfg.node_budget;
    }

    void run() {
        VertexList current = all_vertices(g_.n());
        try {
            build_framework(current);
        } catch (const Failure&) {
            rep_.unrouted = current;
            throw;
        } catch (const Error& e) {
            rep_.unrouted = current;
            throw Failure{stage_, e.what()};
        }
        try {
            absorb();
            finish_cylinders();
        } catch (const Error& e) {
            throw Failure{stage_, e.what()};
        }
    }

private:
    void event(const std::string& stage, const std::string& detail) {
        rep_.events.push_back({stage, rep_.iterations, detail});
    }

    void check_budget() {
        if (deadline_.expired()) {
            throw Failure{"budget", "time budget of " + std::to_string(cfg_.budget_ms) + " ms exhausted"};
        }
    }

    void cover_greedily(VertexList& current, const Rational& gamma, const std::string& stage) {
        stage_ = stage;
        auto res = greedy_cover(g_, family_, current, gamma, cfg_.t, greedy_);
        rep_.tiling.append(res.tiling);
        rep_.greedy.push_back(set_difference(current, res.leftover));
        event(stage, std::to_string(rep_.greedy.back().size()) + " vertices by " +
                         std::to_string(res.piece_count()) + " pieces, leftover " +
                         std::to_string(res.leftover.size()));
        current = res.leftover;
    }

    bool extract(VertexList& current) {
        stage_ = "regcyl";
        auto found = find_super_regular_cylinder(g_, current, rep_.k, cfg_.eps);
        if (!found.found) {
            throw Failure{"regcyl", found.failure};
        }
        const Cylinder& z = found.cylinder;
        rep_.cylinders.push_back(z);
        current = set_difference(current, z.vertices());
        event("regcyl", "Z_" + std::to_string(rep_.cylinders.size()) + " colour " +
                            std::to_string(z.colour.value_or(0)) + " parts " + sizes(z));
        return true;
    }

    void build_framework(VertexList& current) {
        const std::size_t k = rep_.k;
        while (!current.empty()) {
            ++rep_.iterations;
            if (rep_.iterations > cfg_.max_iterations) {
                --rep_.iterations;
                throw Failure{"termination", std::to_string(current.size()) + " vertices still unrouted after " +
                                                 std::to_string(cfg_.max_iterations) + " iterations"};
            }
            check_budget();
            if (current.size() < cfg_.small_threshold) {
                // Any gamma below 1/|V_i| leaves nothing uncovered.
                cover_greedily(current, Rational(1, static_cast<long>(2 * current.size())), "greedy-small");
                if (!current.empty()) {
                    throw Failure{"greedy-small", "greedy left " + std::to_string(current.size()) + " vertices"};
                }
                break;
            }
            // The first round extracts k - 1 cylinders, later rounds one each.
            const std::size_t wanted = rep_.cylinders.empty() ? std::max<std::size_t>(k - 1, 1) : 1;
            for (std::size_t j = 0; j < wanted && current.size() >= cfg_.small_threshold; ++j) {
                extract(current);
            }
            if (current.empty()) {
                break;
            }
            cover_greedily(current, cfg_.alpha, "greedy");
            route(current);
        }
    }

    void route(VertexList& leftover) {
        stage_ = "route";
        const std::size_t k = rep_.k;
        const auto colours = all_colours(g_.r());
        const auto choices = subsets(rep_.cylinders.size(), k - 1);
        std::vector<std::vector<VertexList>> cylinder_sets;
        for (const auto& choice : choices) {
            std::vector<VertexList> sets;
            for (std::size_t j : choice) {
                sets.push_back(rep_.cylinders[j].vertices());
            }
            cylinder_sets.push_back(std::move(sets));
        }
        std::vector<VertexList> groups(choices.size());
        VertexList next;
        // Every cylinder lends at most a quarter of its vertices to absorption, which keeps
        // |Z_j \ A| >= 4 |R'_{i,I}| when each group is absorbed.
        load_.resize(rep_.cylinders.size(), 0);
        for (Vertex u : leftover) {
            bool routed = false;
            for (std::size_t c = 0; c < choices.size() && !routed; ++c) {
                const bool room = std::all_of(choices[c].begin(), choices[c].end(), [&](std::size_t j) {
                    return 4 * (load_[j] + 1) <= rep_.cylinders[j].vertex_count();
                });
                if (room && clique_density(g_, u, cylinder_sets[c], colours) >= cfg_.delta) {
                    groups[c].push_back(u);
                    for (std::size_t j : choices[c]) {
                        ++load_[j];
                    }
                    routed = true;
                }
            }
            if (!routed) {
                next.push_back(u);
            }
        }
        std::size_t total = 0;
        for (std::size_t c = 0; c < choices.size(); ++c) {
            if (!groups[c].empty()) {
                rep_.routed.push_back({rep_.iterations, choices[c], groups[c]});
                total += groups[c].size();
            }
        }
        event("route", std::to_string(total) + " routed, " + std::to_string(next.size()) + " carried to V_" +
                           std::to_string(rep_.iterations + 1));
        leftover = next;
    }

    void absorb() {
        stage_ = "absorb";
        used_.assign(g_.n(), false);
        for (Vertex v : rep_.tiling.covered()) {
            used_[v] = true;
        }
        AbsorptionConfig acfg = cfg_.absorption;
        acfg.d = cfg_.delta;
        for (const auto& group : rep_.routed) {
            check_budget();
            std::vector<VertexList> parts{group.vertices};
            for (std::size_t j : group.cylinders) {
                parts.push_back(unused(rep_.cylinders[j].vertices(), used_));
            }
            auto res = absorption_cover(g_, parts, family_, acfg);
            if (!res.ok) {
                throw Failure{"absorb", "R'_{" + std::to_string(group.round + 1) + "," + indices(group.cylinders) +
                                            "}: " + res.failed_stage + ": " + res.message};
            }
            for (Vertex v : res.tiling.covered()) {
                used_[v] = true;
            }
            rep_.tiling.append(res.tiling);
            event("absorb", std::to_string(group.vertices.size()) + " vertices into " + indices(group.cylinders) +
                                " by " + std::to_string(res.tiling.size()) + " pieces");
        }
    }

    void finish_cylinders() {
        stage_ = "blowup";
        CylinderTileOptions opts;
        opts.node_budget = cfg_.node_budget;
        for (std::size_t j = 0; j < rep_.cylinders.size(); ++j) {
            check_budget();
            const Cylinder& z = rep_.cylinders[j];
            Cylinder rest{{}, z.colour, std::nullopt};
            for (const auto& p : z.parts) {
                VertexList left = unused(p, used_);
                if (!left.empty()) {
                    rest.parts.push_back(std::move(left));
                }
            }
            if (rest.parts.empty()) {
                continue;
            }
            auto tiled = cylinder_tile(g_, rest, family_, TileMode::partition, opts);
            if (!tiled.found) {
                throw Failure{"blowup", "Z_" + std::to_string(j + 1) + " remainder " + sizes(rest) +
                                            (tiled.exhausted ? " has no partition" : " search budget exhausted")};
            }
            rep_.tiling.append(tiled.tiling);
            event("blowup", "Z_" + std::to_string(j + 1) + " remainder " + sizes(rest) + " by " +
                                std::to_string(tiled.tiling.size()) + " pieces");
        }
    }

    const ColouredCompleteGraph& g_;
    const FamilySpec& family_;
    const PipelineConfig& cfg_;
    PipelineReport& rep_;
    Deadline deadline_;
    GreedyOptions greedy_;
    std::string stage_ = "setup";
    std::vector<bool> used_;
    std::vector<std::size_t> load_;
};

bool framework_partition(std::size_t n, const PipelineReport& rep) {
    std::vector<std::size_t> count(n, 0);
    auto mark = [&](const VertexList& vs) {
        for (Vertex v : vs) {
            ++count[v];
        }
    };
    for (const auto& z : rep.cylinders) {
        mark(z.vertices());
    }
    for (const auto& s : rep.greedy) {
        mark(s);
    }
    for (const auto& r : rep.routed) {
        mark(r.vertices);
    }
    mark(rep.unrouted);
    return std::all_of(count.begin(), count.end(), [](std::size_t c) { return c == 1; });
}

} // namespace

PipelineReport run_pipeline_demo(const ColouredCompleteGraph& g, const FamilySpec& family,
                                 const PipelineConfig& config) {
    PipelineReport rep;
    rep.k = config.k ? config.k : family.max_degree().value_or(1) + 2;
    if (rep.k < 2) {
        throw PreconditionError("pipeline needs cylinder width k >= 2");
    }
    BigInt bound = 1;
    for (std::size_t i = 0; i < g.r() * rep.k; ++i) {
        bound *= g.r();
    }
    rep.ramsey_bound = bound.str();
    try {
        Pipeline(g, family, config, rep).run();
    } catch (const Failure& f) {
        rep.failed_stage = f.stage;
        rep.message = f.message;
        rep.events.push_back({f.stage, rep.iterations, "failed: " + f.message});
    }
    const VertexList all = all_vertices(g.n());
    const VertexList covered = rep.tiling.covered();
    rep.uncovered = set_difference(all, covered);
    const auto disjoint = verify_tiling(g, family, rep.tiling, covered);
    rep.cover_identity = disjoint.ok() && covered.size() + rep.uncovered.size() == g.n();
    rep.partition_identity = framework_partition(g.n(), rep);
    const auto verdict = verify_tiling(g, family, rep.tiling, all);
    rep.final_verdict = verdict.ok() ? "accepted" : std::string(to_string(verdict.fault)) + " " + verdict.detail;
    rep.success = rep.failed_stage.empty() && verdict.ok();
    if (rep.failed_stage.empty() && !verdict.ok()) {
        rep.failed_stage = "verify";
        rep.message = rep.final_verdict;
    }
    return rep;
}

std::string PipelineReport::format() const {
    std::ostringstream out;
    out << "status: " << (success ? "success" : "partial (" + failed_stage + ")") << "\n";
    if (!message.empty()) {
        out << "message: " << message << "\n";
    }
    out << "k: " << k << "\n";
    out << "iterations: " << iterations << " (termination bound N = r^(rk) = " << ramsey_bound << ")\n";
    out << "cylinders: " << cylinders.size() << "\n";
    out << "pieces: " << tiling.size() << "\n";
    out << "uncovered: " << uncovered.size() << "\n";
    out << "partition identity: " << (partition_identity ? "holds" : "FAILS") << "\n";
    out << "cover identity: " << (cover_identity ? "holds" : "FAILS") << "\n";
    out << "verify_tiling on V(G): " << final_verdict << "\n";
    for (const auto& e : events) {
        out << "  [" << e.iteration << "] " << e.stage << ": " << e.detail << "\n";
    }
    return out.str();
}

} // namespace monotile
