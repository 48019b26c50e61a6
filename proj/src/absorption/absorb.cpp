#include <algorithm>
#include <sstream>

#include "monotile/absorption.hpp"
#include "monotile/clique.hpp"
#include "monotile/cylinders.hpp"
#include "monotile/error.hpp"
#include "monotile/greedy.hpp"

namespace monotile {

Rational AbsorptionConfig::eta_for(std::size_t k) const {
    return eta.value_or(d * pow(gamma, static_cast<unsigned>(k)) / 2);
}

bool AbsorptionConfig::consistent(std::size_t k) const {
    const Rational e = eta_for(k);
    return e > 0 && e <= d * pow(gamma, static_cast<unsigned>(k)) / 2 && gamma > 0 && gamma < 1 && max_depth >= 1;
}

namespace {

struct StageFailure {
    std::string stage;
    std::string message;
};

std::vector<std::size_t> sizes_of(std::span<const VertexList> parts) {
    std::vector<std::size_t> out;
    for (const auto& p : parts) {
        out.push_back(p.size());
    }
    return out;
}

Rational min_density(const ColouredCompleteGraph& g, std::span<const VertexList> parts, Colour colour) {
    Rational lo = 1;
    const std::vector<VertexList> rest(parts.begin() + 1, parts.end());
    for (Vertex v : parts[0]) {
        lo = std::min<Rational>(lo, clique_density(g, v, rest, colour));
    }
    return lo;
}

VertexList without(const VertexList& a, const std::vector<bool>& used) {
    VertexList out;
    for (Vertex v : a) {
        if (!used[v]) {
            out.push_back(v);
        }
    }
    return out;
}

class OneColour {
public:
    OneColour(const ColouredCompleteGraph& g, Colour colour, const FamilySpec& family, const AbsorptionConfig& cfg,
              std::vector<TraceRecord>& trace, std::size_t& deepest)
        : g_(g), colour_(colour), family_(family), cfg_(cfg), trace_(trace), deepest_(deepest) {}

    Tiling cover(const std::vector<VertexList>& parts, const Rational& floor, std::size_t depth) {
        deepest_ = std::max(deepest_, depth);
        const std::size_t k = parts.size();
        Tiling out;
        if (parts[0].empty()) {
            return out;
        }
        if (depth > cfg_.max_depth) {
            throw StageFailure{"depth", "recursion depth cap " + std::to_string(cfg_.max_depth) + " reached"};
        }
        if (floor > 1) {
            throw StageFailure{"cover-T", "density floor " + to_string(floor) + " exceeds 1 with vertices left"};
        }
        const std::vector<VertexList> rest(parts.begin() + 1, parts.end());

        // Cylinder extraction.
        const Rational eps = std::min<Rational>(cfg_.eps, floor / (2 * static_cast<long>(k)));
        DenseCylinder dense;
        try {
            dense = find_cylinder_in_dense_kpartite(g_, parts, colour_, eps, floor, cfg_.partition);
        } catch (const PreconditionError& e) {
            throw StageFailure{"extract", e.what()};
        }
        if (!dense.found) {
            throw StageFailure{"extract", dense.failure};
        }
        const Cylinder& z = dense.cylinder;
        trace_.push_back({"extract", depth, sizes_of(z.parts), dense.selected_density, 0,
                          "eps " + to_string(eps) + ", floor " + to_string(floor)});

        // Greedy cover of V_1 \ U_1 down to R.
        Rational ratio_min = cfg_.gamma;
        for (std::size_t i = 1; i < k; ++i) {
            ratio_min = std::min<Rational>(ratio_min, Rational(z.parts[i].size()) / Rational(parts[i].size()));
        }
        const Rational eta = std::min<Rational>(cfg_.eta_for(k), floor * pow(ratio_min, static_cast<unsigned>(k)) / 2);
        const VertexList outside = set_difference(parts[0], z.parts[0]);
        VertexList r;
        if (!outside.empty()) {
            const Rational bound = std::min<Rational>(eta * eta * parts[0].size(), eps * eps * z.parts[0].size());
            const BigInt allowance = monotile::floor(bound);
            const Rational gamma = allowance > 0 ? Rational(allowance) / outside.size()
                                                 : Rational(1, 2 * static_cast<long>(outside.size()));
            GreedyOptions gopt;
            gopt.node_budget = cfg_.node_budget;
            auto greedy = greedy_cover(g_, family_, outside, gamma, cfg_.t, gopt);
            out.append(greedy.tiling);
            r = greedy.leftover;
            trace_.push_back({"greedy", depth, {outside.size(), r.size()}, 0, greedy.piece_count(), ""});
        }

        // Split R and recurse on each T'_i.
        std::vector<bool> used(g_.n(), false);
        VertexList s1;
        if (!r.empty()) {
            if (eta <= 0) {
                throw StageFailure{"split", "eta collapsed to 0 with a nonempty leftover"};
            }
            const std::vector<VertexList> cyl_rest(z.parts.begin() + 1, z.parts.end());
            LeftoverSplit split;
            try {
                split = split_leftover(g_, r, rest, cyl_rest, floor, ratio_min, eta, colour_);
            } catch (const PreconditionError& e) {
                throw StageFailure{"split", e.what()};
            }
            s1 = split.s1;
            for (std::size_t i = 2; i <= k; ++i) {
                const VertexList& ti = split.t_prime[i - 2];
                if (ti.empty()) {
                    continue;
                }
                std::vector<VertexList> sub{ti};
                for (std::size_t s = 2; s <= k; ++s) {
                    if (s < i) {
                        sub.push_back(without(parts[s - 1], used));
                    } else if (s == i) {
                        sub.push_back(without(set_difference(parts[s - 1], z.parts[s - 1]), used));
                    } else {
                        sub.push_back(without(z.parts[s - 1], used));
                    }
                }
                for (std::size_t s = 1; s < k; ++s) {
                    if (sub[s].size() < 2 * ti.size()) {
                        throw StageFailure{"cover-T", "part " + std::to_string(s + 1) + " too small for T'_" +
                                                          std::to_string(i)};
                    }
                }
                const Rational achieved = min_density(g_, sub, colour_);
                if (achieved < floor + eta) {
                    throw StageFailure{"cover-T", "recomputed floor " + to_string(achieved) + " below d' + eta = " +
                                                      to_string(floor + eta)};
                }
                Tiling part_cover = cover(sub, floor + eta, depth + 1);
                for (Vertex v : part_cover.covered()) {
                    used[v] = true;
                }
                trace_.push_back({"cover-T", depth + 1, sizes_of(sub), achieved, part_cover.size(),
                                  "T'_" + std::to_string(i)});
                out.append(part_cover);
            }
        }

        // Absorb S_1 into the cylinder and cover U_1 u S_1.
        Cylinder zs;
        zs.colour = colour_;
        zs.parts.push_back(set_union(std::vector<VertexList>{z.parts[0], s1}));
        for (std::size_t i = 1; i < k; ++i) {
            zs.parts.push_back(without(z.parts[i], used));
        }
        std::string note;
        if ((!s1.empty() || zs.vertex_count() != z.vertex_count() + s1.size()) && z.tag) {
            try {
                for (std::size_t j = 1; j < k; ++j) {
                    const VertexList x = set_difference(z.parts[j], zs.parts[j]);
                    robust_update(g_.adjacency(), colour_, z.parts[0], z.parts[j], {}, x, s1, {}, z.tag->eps,
                                  z.tag->d, z.tag->delta);
                }
                note = "robust tag (" + to_string(8 * z.tag->eps) + ", " + to_string(z.tag->d - 8 * z.tag->eps) + ")";
            } catch (const PreconditionError& e) {
                note = std::string("robust tag unavailable: ") + e.what();
            }
        }
        if (!zs.parts[0].empty()) {
            CylinderTileOptions topt;
            topt.node_budget = cfg_.node_budget;
            auto tile = cylinder_tile(g_, zs, family_, TileMode::cover_first_part, topt);
            if (!tile.found) {
                throw StageFailure{"cover-S", tile.exhausted ? "no covering piece exists in the cylinder"
                                                             : "covering piece search hit its budget"};
            }
            out.append(tile.tiling);
            trace_.push_back({"cover-S", depth, sizes_of(zs.parts), 0, tile.tiling.size(), note});
        }
        return out;
    }

private:
    const ColouredCompleteGraph& g_;
    Colour colour_;
    const FamilySpec& family_;
    const AbsorptionConfig& cfg_;
    std::vector<TraceRecord>& trace_;
    std::size_t& deepest_;
};

void check_parts(const ColouredCompleteGraph& g, std::span<const VertexList> parts, std::size_t factor) {
    if (parts.size() < 2) {
        throw PreconditionError("absorption needs k >= 2 parts");
    }
    check_disjoint_parts(g.n(), parts);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i].size() < factor * parts[0].size()) {
            throw PreconditionError("absorption needs |V_" + std::to_string(i + 1) + "| >= " + std::to_string(factor) +
                                    " |V_1|");
        }
    }
}

void verify(const ColouredCompleteGraph& g, std::span<const VertexList> parts, const FamilySpec& family,
            AbsorptionResult& res) {
    const VertexList covered = res.tiling.covered();
    const auto tv = verify_tiling(g, family, res.tiling, covered);
    const auto cv = canonical_cover_check(res.tiling, parts);
    const VertexList all = set_union(std::vector<VertexList>(parts.begin(), parts.end()));
    const bool inside = std::includes(all.begin(), all.end(), covered.begin(), covered.end());
    if (!tv || !cv || !inside) {
        res.ok = false;
        res.failed_stage = "verify";
        res.message = !tv ? std::string("tiling rejected: ") + to_string(tv.fault) + " " + tv.detail
                          : (!cv ? "canonical cover rejected: " + cv.detail : "piece leaves the parts");
        return;
    }
    res.ok = true;
}

} // namespace

AbsorptionResult absorption_cover_one_colour(const ColouredCompleteGraph& g, std::span<const VertexList> parts,
                                             Colour colour, const FamilySpec& family,
                                             const AbsorptionConfig& cfg) {
    check_parts(g, parts, 2);
    if (colour < 1 || colour > g.r()) {
        throw InvalidInput("colour out of range");
    }
    const std::vector<VertexList> rest(parts.begin() + 1, parts.end());
    for (Vertex v : parts[0]) {
        if (clique_density(g, v, rest, colour) < cfg.d) {
            throw PreconditionError("vertex " + std::to_string(v) + " has colour-" + std::to_string(colour) +
                                    " clique density below " + to_string(cfg.d));
        }
    }
    AbsorptionResult res;
    OneColour engine(g, colour, family, cfg, res.trace, res.max_depth_reached);
    try {
        res.tiling = engine.cover(std::vector<VertexList>(parts.begin(), parts.end()), cfg.d, 0);
    } catch (const StageFailure& f) {
        res.failed_stage = f.stage;
        res.message = f.message;
        return res;
    }
    verify(g, parts, family, res);
    return res;
}

AbsorptionResult absorption_cover(const ColouredCompleteGraph& g, std::span<const VertexList> parts,
                                  const FamilySpec& family, const AbsorptionConfig& cfg) {
    check_parts(g, parts, 4);
    const std::size_t k = parts.size();
    const Colour r = g.r();
    const std::vector<VertexList> rest(parts.begin() + 1, parts.end());
    const auto colours = all_colours(r);
    std::vector<VertexList> by_colour(r);
    for (Vertex v : parts[0]) {
        if (clique_density(g, v, rest, colours) < cfg.d) {
            throw PreconditionError("vertex " + std::to_string(v) + " has clique density below " + to_string(cfg.d));
        }
        for (Colour c = 1; c <= r; ++c) {
            if (clique_density(g, v, rest, c) >= cfg.d / r) {
                by_colour[c - 1].push_back(v);
                break;
            }
        }
    }
    const Rational d_prime = cfg.d / (2 * r);
    const Rational gamma = d_prime / (static_cast<long>(k) * r);
    AbsorptionConfig sub = cfg;
    sub.d = d_prime;

    AbsorptionResult res;
    std::vector<bool> used(g.n(), false);
    for (Colour c = 1; c <= r; ++c) {
        const VertexList& uj = by_colour[c - 1];
        if (uj.empty()) {
            continue;
        }
        GreedyOptions gopt;
        gopt.node_budget = cfg.node_budget;
        auto greedy = greedy_cover(g, family, uj, gamma, cfg.t, gopt);
        res.tiling.append(greedy.tiling);
        std::vector<VertexList> local{greedy.leftover};
        for (std::size_t i = 1; i < k; ++i) {
            local.push_back(without(parts[i], used));
        }
        res.trace.push_back({"colour " + std::to_string(c), 0, sizes_of(local), 0, greedy.piece_count(),
                             "U_j " + std::to_string(uj.size())});
        if (local[0].empty()) {
            continue;
        }
        for (std::size_t i = 1; i < k; ++i) {
            if (local[i].size() < 2 * local[0].size()) {
                res.failed_stage = "colour " + std::to_string(c);
                res.message = "bookkeeping |V'_i| >= 2 |V'_1| fails for part " + std::to_string(i + 1);
                return res;
            }
        }
        const Rational achieved = min_density(g, local, c);
        if (achieved < d_prime) {
            res.failed_stage = "colour " + std::to_string(c);
            res.message = "density " + to_string(achieved) + " below d' = " + to_string(d_prime);
            return res;
        }
        OneColour engine(g, c, family, sub, res.trace, res.max_depth_reached);
        try {
            Tiling part = engine.cover(local, d_prime, 0);
            for (Vertex v : part.covered()) {
                used[v] = true;
            }
            res.tiling.append(part);
        } catch (const StageFailure& f) {
            res.failed_stage = "colour " + std::to_string(c) + " " + f.stage;
            res.message = f.message;
            return res;
        }
    }
    verify(g, parts, family, res);
    return res;
}

std::string format_trace(const std::vector<TraceRecord>& trace) {
    std::ostringstream out;
    for (const auto& t : trace) {
        out << "stage=" << t.stage << " depth=" << t.depth << " parts=";
        for (std::size_t i = 0; i < t.part_sizes.size(); ++i) {
            out << (i ? "," : "") << t.part_sizes[i];
        }
        out << " density=" << to_string(t.density) << " pieces=" << t.pieces;
        if (!t.note.empty()) {
            out << " note=\"" << t.note << "\"";
        }
        out << "\n";
    }
    return out.str();
}

} // namespace monotile
