#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "monotile/absorption.hpp"
#include "monotile/clique.hpp"
#include "monotile/error.hpp"
#include "monotile/exact_solver.hpp"
#include "monotile/rng.hpp"

using namespace monotile;

namespace {

std::vector<VertexList> consecutive_parts(const std::vector<std::size_t>& sizes) {
    std::vector<VertexList> parts;
    Vertex next = 0;
    for (std::size_t s : sizes) {
        VertexList p;
        for (std::size_t i = 0; i < s; ++i) {
            p.push_back(next++);
        }
        parts.push_back(p);
    }
    return parts;
}

std::vector<std::uint32_t> part_index(std::size_t n, const std::vector<VertexList>& parts) {
    std::vector<std::uint32_t> idx(n, UINT32_MAX);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (Vertex v : parts[i]) {
            idx[v] = static_cast<std::uint32_t>(i);
        }
    }
    return idx;
}

// Cross pairs get `colour` with probability num/den (else another colour); pairs inside a part get `inner`.
ColouredCompleteGraph planted(const std::vector<VertexList>& parts, Colour r, Colour colour, std::uint64_t num,
                              std::uint64_t den, Colour inner, Rng& rng) {
    std::size_t n = 0;
    for (const auto& p : parts) {
        n += p.size();
    }
    const auto idx = part_index(n, parts);
    return ColouredCompleteGraph::from_function(n, r, [&](Vertex u, Vertex v) -> Colour {
        if (idx[u] == idx[v]) {
            return inner;
        }
        if (rng.chance(num, den)) {
            return colour;
        }
        return r == 1 ? colour : static_cast<Colour>(colour % r + 1);
    });
}

// dd by explicit tuple loops over two further parts (k = 3).
Rational tuple_density(const ColouredCompleteGraph& g, Vertex v, const VertexList& a, const VertexList& b, Colour c) {
    std::uint64_t hits = 0;
    for (Vertex x : a) {
        for (Vertex y : b) {
            if (g.colour(v, x) == c && g.colour(v, y) == c && g.colour(x, y) == c) {
                ++hits;
            }
        }
    }
    return Rational(hits) / Rational(a.size() * b.size());
}

} // namespace

TEST_CASE("density ladder") {
    auto l = density_ladder(ratio(7, 8), ratio(1, 2), 3);
    REQUIRE(l.size() == 3);
    CHECK(l[0] == ratio(1, 2));
    CHECK(l[1] == ratio(3, 4));
    CHECK(l[2] == ratio(7, 8));
    auto flat = density_ladder(ratio(2, 3), 0, 4);
    for (const auto& x : flat) {
        CHECK(x == ratio(2, 3));
    }
    CHECK_THROWS_AS(density_ladder(ratio(1, 2), 1, 3), PreconditionError);
    CHECK_THROWS_AS(density_ladder(0, ratio(1, 2), 3), PreconditionError);

    for (int gi = 1; gi < 10; ++gi) {
        for (std::size_t k = 2; k <= 6; ++k) {
            for (int di = 1; di <= 5; ++di) {
                const Rational gamma(gi, 10);
                const Rational d(di, 5);
                auto ladder = density_ladder(d, gamma, k);
                // Independent evaluation: powers by repeated multiplication.
                Rational gp = 1;
                Rational gk = 1;
                for (std::size_t i = 0; i < k; ++i) {
                    gk *= gamma;
                }
                for (std::size_t i = 1; i <= k; ++i) {
                    gp *= gamma;
                    CHECK(ladder[i - 1] == (1 - gp) / (1 - gk) * d);
                    if (i > 1) {
                        CHECK(ladder[i - 2] <= ladder[i - 1]);
                    }
                }
                CHECK(ladder.back() == d);
                CHECK(ladder.front() >= (1 - gamma) * d);
            }
        }
    }
}

TEST_CASE("split_leftover trivial cases") {
    Rng rng(1);
    auto parts = consecutive_parts({3, 6, 6});
    auto g = planted(parts, 2, 1, 1, 1, 2, rng);
    std::vector<VertexList> full{parts[1], parts[2]};
    std::vector<VertexList> cyl{{3, 4}, {9, 10}};
    auto empty = split_leftover(g, VertexList{}, full, cyl, ratio(1, 2), ratio(1, 3), ratio(1, 100), 1);
    CHECK(empty.s1.empty());
    CHECK(empty.t_prime[0].empty());
    // Complete in colour 1: dd against the cylinder is 1 >= d_1.
    auto all = split_leftover(g, parts[0], full, cyl, ratio(1, 2), ratio(1, 3), ratio(1, 100), 1);
    CHECK(all.s1 == parts[0]);
    CHECK(all.t_prime[0].empty());
    CHECK(all.t_prime[1].empty());
    CHECK_THROWS_AS(split_leftover(g, parts[0], full, full, ratio(1, 2), ratio(1, 3), ratio(1, 100), 1),
                    PreconditionError);
}

TEST_CASE("split_leftover covers R on random planted instances") {
    Rng rng(2);
    int instances = 0;
    int nontrivial = 0;
    while (instances < 200) {
        const std::size_t a = 5 + rng.below(4);
        const std::size_t b = 5 + rng.below(4);
        auto parts = consecutive_parts({4, a, b});
        auto g = planted(parts, 2, 1, 5 + rng.below(5), 10, static_cast<Colour>(1 + rng.below(2)), rng);
        std::vector<VertexList> full{parts[1], parts[2]};
        std::vector<VertexList> cyl(2);
        for (std::size_t i = 0; i < 2; ++i) {
            VertexList shuffled = full[i];
            rng.shuffle(shuffled);
            shuffled.resize(1 + rng.below(full[i].size() - 1));
            std::sort(shuffled.begin(), shuffled.end());
            cyl[i] = shuffled;
        }
        Rational d = 1;
        for (Vertex v : parts[0]) {
            d = std::min<Rational>(d, clique_density(g, v, full, 1));
        }
        if (d == 0) {
            continue;
        }
        ++instances;
        Rational gamma = 1;
        for (std::size_t i = 0; i < 2; ++i) {
            gamma = std::min<Rational>(gamma, Rational(cyl[i].size()) / Rational(full[i].size()));
        }
        const Rational eta = d * gamma * gamma * gamma / 2;
        auto split = split_leftover(g, parts[0], full, cyl, d, gamma, eta, 1);
        const auto ladder = density_ladder(d, gamma, 3);
        VertexList unioned;
        for (Vertex v : parts[0]) {
            const bool s1 = tuple_density(g, v, cyl[0], cyl[1], 1) >= ladder[0];
            const bool t2 = tuple_density(g, v, set_difference(full[0], cyl[0]), cyl[1], 1) > d + 2 * eta;
            const bool t3 = tuple_density(g, v, full[0], set_difference(full[1], cyl[1]), 1) > d + 2 * eta;
            CHECK(s1 == std::binary_search(split.s1.begin(), split.s1.end(), v));
            CHECK(t2 == std::binary_search(split.t[0].begin(), split.t[0].end(), v));
            CHECK(t3 == std::binary_search(split.t[1].begin(), split.t[1].end(), v));
            if (s1 || t2 || t3) {
                unioned.push_back(v);
            }
            nontrivial += !s1;
        }
        CHECK(unioned == parts[0]);
        std::size_t total = split.s1.size();
        for (const auto& t : split.t_prime) {
            total += t.size();
        }
        CHECK(total == parts[0].size());
    }
    CHECK(nontrivial > 0);
}

TEST_CASE("cylinder_tile") {
    auto parts2 = consecutive_parts({2, 2});
    Rng rng(3);
    auto g2 = planted(parts2, 2, 1, 1, 1, 2, rng);
    Cylinder z2{parts2, Colour{1}, std::nullopt};
    auto t2 = cylinder_tile(g2, z2, FamilySpec::cycles(), TileMode::partition);
    REQUIRE(t2.found);
    CHECK(t2.tiling.size() == 1);
    CHECK(t2.tiling.pieces[0].size() == 4);
    CHECK(verify_tiling(g2, FamilySpec::cycles(), t2.tiling, all_vertices(4)));

    auto parts4 = consecutive_parts({3, 3, 3, 3});
    auto g4 = planted(parts4, 2, 1, 1, 1, 2, rng);
    Cylinder z4{parts4, Colour{1}, std::nullopt};
    auto t4 = cylinder_tile(g4, z4, FamilySpec::paths(), TileMode::partition);
    REQUIRE(t4.found);
    CHECK(t4.tiling.size() <= 4);
    CHECK(t4.tiling.size() >= min_tiling(g4, FamilySpec::paths()).size);
    CHECK(verify_tiling(g4, FamilySpec::paths(), t4.tiling, all_vertices(12)));

    auto cover_parts = consecutive_parts({2, 4, 4, 4});
    auto gc = planted(cover_parts, 2, 1, 1, 1, 2, rng);
    Cylinder zc{cover_parts, Colour{1}, std::nullopt};
    auto tc = cylinder_tile(gc, zc, FamilySpec::cycles(), TileMode::cover_first_part);
    REQUIRE(tc.found);
    REQUIRE(tc.tiling.size() == 1);
    CHECK(tc.tiling.pieces[0].size() == 8);
    CHECK(canonical_cover_check(tc.tiling, cover_parts));
    CHECK(verify_tiling(gc, FamilySpec::cycles(), tc.tiling, tc.tiling.covered()));

    // No colour-1 cross edges at all: cover mode must report a full search.
    auto gn = planted(cover_parts, 2, 2, 1, 1, 2, rng);
    auto none = cylinder_tile(gn, zc, FamilySpec::cycles(), TileMode::cover_first_part);
    CHECK_FALSE(none.found);
    CHECK(none.exhausted);
}

TEST_CASE("absorption_cover_one_colour") {
    Rng rng(4);
    auto parts = consecutive_parts({3, 6, 6, 6});
    auto g = planted(parts, 2, 1, 1, 1, 2, rng);
    AbsorptionConfig cfg;
    auto res = absorption_cover_one_colour(g, parts, 1, FamilySpec::cycles(), cfg);
    REQUIRE(res.ok);
    CHECK(res.tiling.size() <= 3);
    CHECK(res.max_depth_reached == 0);
    CHECK(canonical_cover_check(res.tiling, parts));

    // Vertex 0 sees no colour-1 cross edges.
    auto broken = ColouredCompleteGraph::from_function(g.n(), 2, [&](Vertex u, Vertex v) -> Colour {
        return u == 0 ? 2 : g.colour(u, v);
    });
    try {
        absorption_cover_one_colour(broken, parts, 1, FamilySpec::cycles(), cfg);
        FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("vertex 0") != std::string::npos);
    }

    auto big = consecutive_parts({6, 14, 14, 14});
    int ok = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Rng prng(seed);
        auto gp = planted(big, 2, 1, 19, 20, static_cast<Colour>(1 + prng.below(2)), prng);
        AbsorptionConfig pc;
        pc.d = 1;
        for (Vertex v : big[0]) {
            pc.d = std::min<Rational>(pc.d, clique_density(gp, v, std::vector<VertexList>(big.begin() + 1, big.end()), 1));
        }
        auto pr = absorption_cover_one_colour(gp, big, 1, FamilySpec::cycles(), pc);
        if (pr.ok) {
            ++ok;
            CHECK(verify_tiling(gp, FamilySpec::cycles(), pr.tiling, pr.tiling.covered()));
            CHECK(canonical_cover_check(pr.tiling, big));
        } else {
            MESSAGE("stage " << pr.failed_stage << ": " << pr.message);
        }
        CHECK_FALSE(format_trace(pr.trace).empty());
    }
    CHECK(ok >= 4);
}

TEST_CASE("absorption_cover") {
    Rng rng(5);
    auto parts = consecutive_parts({3, 12, 12});
    auto mono = planted(parts, 1, 1, 1, 1, 1, rng);
    AbsorptionConfig cfg;
    cfg.d = ratio(1, 2);
    auto r1 = absorption_cover(mono, parts, FamilySpec::cycles(), cfg);
    CHECK(r1.ok);

    auto two = planted(parts, 3, 2, 1, 1, 1, rng);
    auto r2 = absorption_cover(two, parts, FamilySpec::cycles(), cfg);
    REQUIRE(r2.ok);
    for (const auto& t : r2.trace) {
        if (t.stage.rfind("colour", 0) == 0) {
            CHECK(t.stage == "colour 2");
        }
    }

    int ok = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Rng prng(seed);
        auto parts2 = consecutive_parts({4, 16, 16, 16});
        auto g = planted(parts2, 2, 1, 9, 10, 2, prng);
        AbsorptionConfig c2;
        c2.d = ratio(2, 5);
        auto res = absorption_cover(g, parts2, FamilySpec::cycles(), c2);
        if (res.ok) {
            ++ok;
            CHECK(canonical_cover_check(res.tiling, parts2));
            CHECK(verify_tiling(g, FamilySpec::cycles(), res.tiling, res.tiling.covered()));
        } else {
            MESSAGE("stage " << res.failed_stage << ": " << res.message);
        }
    }
    CHECK(ok >= 4);
    CHECK_THROWS_AS(absorption_cover(mono, consecutive_parts({3, 6, 12}), FamilySpec::cycles(), cfg),
                    PreconditionError);
}

TEST_CASE("independent transversal") {
    Rng rng(6);
    std::vector<VertexList> blocks = consecutive_parts({3, 3, 3, 3});
    Hypergraph empty{3, {}};
    auto first = independent_transversal(empty, blocks, 10, rng);
    CHECK(first.found);
    CHECK(first.tries == 1);

    Hypergraph dense{5, {{0, 3, 6, 9, 10}}};
    auto vacuous = independent_transversal(dense, blocks, 10, rng);
    CHECK(vacuous.found);
    CHECK(vacuous.tries == 1);

    // N = 6, k = 3, |B_i| = 8: one hyperedge per (v, i_1 < i_2 < i_3) with v in B_{i_1}.
    auto big = consecutive_parts({8, 8, 8, 8, 8, 8});
    double draws = 0;
    double failures = 0;
    Rational bound;
    for (std::uint64_t run = 0; run < 200; ++run) {
        Rng r(run + 100);
        Hypergraph h{3, {}};
        for (std::size_t a = 0; a < 6; ++a) {
            for (std::size_t b = a + 1; b < 6; ++b) {
                for (std::size_t c = b + 1; c < 6; ++c) {
                    for (Vertex v : big[a]) {
                        VertexList e{v, big[b][r.below(8)], big[c][r.below(8)]};
                        std::sort(e.begin(), e.end());
                        h.edges.push_back(e);
                    }
                }
            }
        }
        auto res = independent_transversal(h, big, 100, r);
        REQUIRE(res.hypothesis.holds);
        CHECK(res.hypothesis.max_ratio <= ratio(1, 2));
        bound = res.hypothesis.union_bound;
        CHECK(res.found);
        draws += static_cast<double>(res.tries);
        failures += static_cast<double>(res.failed_draws);
    }
    CHECK(bound == ratio(160, 512));
    const double rate = failures / draws;
    const double se = std::sqrt(to_double(bound) * (1 - to_double(bound)) / draws);
    CHECK(rate <= to_double(bound) + 3 * se);
}
