#include "doctest.h"

#include <algorithm>
#include <bit>
#include <numeric>

#include "monotile/error.hpp"
#include "monotile/exact_solver.hpp"
#include "monotile/greedy.hpp"
#include "monotile/rng.hpp"
#include "monotile/stars.hpp"

using namespace monotile;

namespace {

ColouredCompleteGraph from_code(std::size_t n, Colour r, std::uint64_t code) {
    std::vector<Colour> upper(n * (n - 1) / 2);
    for (auto& c : upper) {
        c = static_cast<Colour>(1 + code % r);
        code /= r;
    }
    return ColouredCompleteGraph(n, r, upper);
}

// Whether some bijection of `block` onto the pattern vertices maps every edge to colour c.
bool brute_piece(const ColouredCompleteGraph& g, const Graph& pattern, VertexList block, Colour c) {
    std::sort(block.begin(), block.end());
    do {
        bool ok = true;
        for (const auto& [a, b] : pattern.edges()) {
            if (g.colour(block[a], block[b]) != c) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return true;
        }
    } while (std::next_permutation(block.begin(), block.end()));
    return false;
}

// Minimum over all set partitions of [0, n) whose blocks are pieces.
std::size_t brute_min_tiling(const ColouredCompleteGraph& g, const FamilySpec& family) {
    const std::size_t n = g.n();
    std::size_t best = n + 1;
    std::vector<std::size_t> label(n, 0);
    auto rec = [&](auto&& self, std::size_t v, std::size_t blocks) -> void {
        if (blocks >= best) {
            return;
        }
        if (v == n) {
            for (std::size_t b = 0; b < blocks; ++b) {
                VertexList block;
                for (Vertex u = 0; u < n; ++u) {
                    if (label[u] == b) {
                        block.push_back(u);
                    }
                }
                bool piece = false;
                for (Colour c = 1; c <= g.r() && !piece; ++c) {
                    piece = brute_piece(g, family.member(block.size()), block, c);
                }
                if (!piece) {
                    return;
                }
            }
            best = blocks;
            return;
        }
        for (std::size_t b = 0; b <= blocks; ++b) {
            label[v] = b;
            self(self, v + 1, std::max(blocks, b + 1));
        }
    };
    rec(rec, 0, 0);
    return best;
}

ColouredCompleteGraph relabel(const ColouredCompleteGraph& g, const std::vector<Vertex>& perm,
                              const std::vector<Colour>& colour_perm) {
    return ColouredCompleteGraph::from_function(g.n(), g.r(), [&](Vertex u, Vertex v) {
        return colour_perm[g.colour(perm[u], perm[v]) - 1];
    });
}

} // namespace

TEST_CASE("min_tiling examples") {
    auto cycles = FamilySpec::cycles();
    auto k4 = ColouredCompleteGraph(4, 2, 1);
    auto res = min_tiling(k4, cycles);
    CHECK(res.size == 1);
    CHECK(res.optimal);
    CHECK(verify_tiling(k4, cycles, res.tiling, all_vertices(4)));

    auto k2 = ColouredCompleteGraph(2, 2, 2);
    CHECK(min_tiling(k2, cycles).size == 1);
    CHECK(min_tiling(ColouredCompleteGraph(1, 3, 1), cycles).size == 1);

    MinTilingOptions small;
    small.cap = 3;
    CHECK_THROWS_AS(min_tiling(k4, cycles, small), PreconditionError);
}

TEST_CASE("every 2-colouring of K_6 splits into a red and a blue cycle") {
    auto cycles = FamilySpec::cycles();
    for (std::uint64_t code = 0; code < (1u << 15); code += 97) {
        auto g = from_code(6, 2, code);
        auto split = two_colour_partition(g, cycles);
        REQUIRE(split);
        CHECK(split->size() <= 2);
        if (split->size() == 2) {
            CHECK(split->pieces[0].colour != split->pieces[1].colour);
        }
        CHECK(verify_tiling(g, cycles, *split, all_vertices(6)));
        auto res = min_tiling(g, cycles);
        CHECK(res.size <= 2);
        CHECK(verify_tiling(g, cycles, res.tiling, all_vertices(6)));
    }
    auto report = lehel_check(6);
    CHECK(report.colourings == (1u << 15));
    CHECK(report.ok());
    CHECK(report.worst == 2);
}

TEST_CASE("min_tiling matches set-partition enumeration") {
    Rng rng(11);
    const std::vector<FamilySpec> families{FamilySpec::cycles(), FamilySpec::paths(), FamilySpec::stars(),
                                           FamilySpec::cycle_power(2)};
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 1 + rng.below(6);
        const auto r = static_cast<Colour>(1 + rng.below(3));
        const auto& family = families[trial % families.size()];
        auto g = ColouredCompleteGraph::random(n, r, rng);
        auto res = min_tiling(g, family);
        CHECK(res.size == brute_min_tiling(g, family));
        CHECK(verify_tiling(g, family, res.tiling, all_vertices(n)));
    }
}

TEST_CASE("verify_tiling agrees with the piece table on all 2-colourings of K_4") {
    auto cycles = FamilySpec::cycles();
    for (std::uint64_t code = 0; code < 64; ++code) {
        auto g = from_code(4, 2, code);
        PieceTable table(g, cycles);
        for (std::uint32_t set = 1; set < 16; ++set) {
            VertexList block;
            for (Vertex v = 0; v < 4; ++v) {
                if ((set >> v) & 1U) {
                    block.push_back(v);
                }
            }
            for (Colour c = 1; c <= 2; ++c) {
                bool accepted = false;
                VertexList map = block;
                do {
                    Tiling t;
                    t.pieces.push_back(Piece{c, map});
                    accepted = accepted || verify_tiling(g, cycles, t, block).ok();
                } while (std::next_permutation(map.begin(), map.end()));
                CHECK(accepted == table.piece(c, set));
            }
        }
    }
}

TEST_CASE("min_tiling is invariant under relabelling and colour permutation") {
    Rng rng(12);
    auto cycles = FamilySpec::cycles();
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 4 + rng.below(6);
        auto g = ColouredCompleteGraph::random(n, 3, rng);
        std::vector<Vertex> perm = all_vertices(n);
        rng.shuffle(perm);
        std::vector<Colour> cperm{1, 2, 3};
        rng.shuffle(cperm);
        CHECK(min_tiling(g, cycles).size == min_tiling(relabel(g, perm, cperm), cycles).size);
    }
}

TEST_CASE("min_tiling never exceeds the greedy cover") {
    Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 3 + rng.below(8);
        auto g = ColouredCompleteGraph::random(n, 2, rng);
        auto family = trial % 2 ? FamilySpec::cycles() : FamilySpec::paths();
        auto greedy = greedy_cover(g, family, all_vertices(n), Rational(1, 2 * static_cast<long>(n)), ratio(1, 2));
        REQUIRE(greedy.leftover.empty());
        CHECK(min_tiling(g, family).size <= greedy.piece_count());
    }
}

TEST_CASE("node budget reports non-optimal results") {
    Rng rng(14);
    auto g = ColouredCompleteGraph::random(12, 3, rng);
    MinTilingOptions opts;
    opts.node_budget = 1;
    auto res = min_tiling(g, FamilySpec::cycles(), opts);
    CHECK_FALSE(res.optimal);
}

TEST_CASE("tiling_number small cases") {
    auto cycles = FamilySpec::cycles();
    for (Colour r = 1; r <= 3; ++r) {
        CHECK(tiling_number(1, r, cycles).value == 1);
    }
    auto t3 = tiling_number(3, 2, cycles);
    CHECK(t3.value == 2);
    CHECK(t3.complete);
    CHECK(t3.colourings == 8);
    for (std::size_t n = 2; n <= 7; ++n) {
        auto t = tiling_number(n, 2, cycles);
        CHECK(t.complete);
        CHECK(t.value <= 2);
        REQUIRE(t.extremal);
        CHECK(min_tiling(*t.extremal, cycles).size == t.value);
    }
}

TEST_CASE("tiling_number symmetry reduction agrees with raw enumeration") {
    const std::vector<FamilySpec> families{FamilySpec::cycles(), FamilySpec::paths(), FamilySpec::stars()};
    for (const auto& family : families) {
        for (std::size_t n = 2; n <= 5; ++n) {
            TilingNumberOptions on;
            on.symmetry = true;
            TilingNumberOptions off;
            off.symmetry = false;
            off.workers = 2;
            CHECK(tiling_number(n, 2, family, on).value == tiling_number(n, 2, family, off).value);
        }
        TilingNumberOptions on;
        on.symmetry = true;
        TilingNumberOptions off;
        off.symmetry = false;
        CHECK(tiling_number(4, 3, family, on).value == tiling_number(4, 3, family, off).value);
    }
}

TEST_CASE("tiling_number dominates 100 independently solved colourings") {
    Rng rng(15);
    auto stars = FamilySpec::stars();
    auto t = tiling_number(6, 2, stars);
    REQUIRE(t.complete);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = ColouredCompleteGraph::random(6, 2, rng);
        CHECK(brute_min_tiling(g, stars) <= t.value);
    }
    TilingNumberOptions tiny;
    tiny.max_colourings = 10;
    auto partial = tiling_number(6, 2, stars, tiny);
    CHECK_FALSE(partial.complete);
    CHECK(partial.colourings == 10);
}

TEST_CASE("min_star_cover") {
    for (std::size_t n : {1, 5, 12}) {
        auto mono = ColouredCompleteGraph(n, 2, 2);
        auto res = min_star_cover(mono);
        CHECK(res.size == 1);
        CHECK(res.optimal);
        CHECK(verify_tiling(mono, FamilySpec::stars(), res.tiling, all_vertices(n)));
    }
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        Rng rng(seed);
        auto g = ColouredCompleteGraph::random(10, 2, rng);
        auto res = min_star_cover(g);
        REQUIRE(res.optimal);
        CHECK(res.size >= res.lower_bound);
        CHECK(verify_tiling(g, FamilySpec::stars(), res.tiling, all_vertices(10)));
        // Every multiset of at most three (centre, colour) choices, in increasing size.
        std::size_t oracle = 0;
        std::vector<std::pair<Vertex, Colour>> options;
        for (Vertex v = 0; v < 10; ++v) {
            options.push_back({v, 1});
            options.push_back({v, 2});
        }
        auto covers = [&](const std::vector<std::size_t>& pick) {
            for (Vertex w = 0; w < 10; ++w) {
                bool hit = false;
                for (std::size_t i : pick) {
                    const auto [v, c] = options[i];
                    hit = hit || v == w || g.colour(v, w) == c;
                }
                if (!hit) {
                    return false;
                }
            }
            std::vector<Vertex> centres;
            for (std::size_t i : pick) {
                centres.push_back(options[i].first);
            }
            std::sort(centres.begin(), centres.end());
            return std::adjacent_find(centres.begin(), centres.end()) == centres.end();
        };
        for (std::size_t a = 0; a < options.size() && !oracle; ++a) {
            if (covers({a})) {
                oracle = 1;
            }
        }
        for (std::size_t a = 0; a < options.size() && !oracle; ++a) {
            for (std::size_t b = a; b < options.size() && !oracle; ++b) {
                if (covers({a, b})) {
                    oracle = 2;
                }
            }
        }
        for (std::size_t a = 0; a < options.size() && !oracle; ++a) {
            for (std::size_t b = a; b < options.size() && !oracle; ++b) {
                for (std::size_t c = b; c < options.size() && !oracle; ++c) {
                    if (covers({a, b, c})) {
                        oracle = 3;
                    }
                }
            }
        }
        if (oracle) {
            CHECK(res.size == oracle);
        } else {
            CHECK(res.size > 3);
        }
    }
    Rng rng(20);
    auto big = ColouredCompleteGraph::random(30, 2, rng);
    auto heuristic = min_star_cover(big);
    CHECK_FALSE(heuristic.optimal);
    CHECK(verify_tiling(big, FamilySpec::stars(), heuristic.tiling, all_vertices(30)));
    StarCoverOptions wide;
    wide.cap = 30;
    auto exact = min_star_cover(big, wide);
    CHECK(exact.optimal);
    CHECK(exact.size <= heuristic.size);
}

TEST_CASE("stars_union_bound") {
    auto zero = stars_union_bound(5, 2, 0);
    CHECK(zero.per_choice == 0);
    auto small = stars_union_bound(4, 2, 1);
    CHECK(small.per_choice == ratio(1, 8));
    CHECK(small.choices == 8);
    CHECK(small.union_bound == 1);
    CHECK_FALSE(small.certifies);
    CHECK_THROWS_AS(stars_union_bound(3, 2, 3), PreconditionError);
    for (std::size_t n = 10; n < 60; n += 7) {
        for (std::size_t tau = 1; tau < 6; ++tau) {
            auto b = stars_union_bound(n, 2, tau);
            REQUIRE(b.links.size() == 4);
            CHECK(b.links[0].holds);
            CHECK(b.links[1].holds == (2 * tau <= n));
            CHECK(b.printed_reading < b.corrected_reading);
        }
    }

    // Independent evaluation by repeated multiplication.
    auto certifies = [](std::size_t n, std::size_t tau) {
        Rational miss = 1;
        for (std::size_t i = 0; i < tau; ++i) {
            miss *= ratio(1, 2);
        }
        Rational p = 1;
        for (std::size_t i = tau; i < n; ++i) {
            p *= 1 - miss;
        }
        Rational choices = 1;
        for (std::size_t i = 0; i < tau; ++i) {
            choices *= Rational(2 * (n - i));
        }
        return choices * p < 1;
    };
    auto scan = scan_certification(2, 1, 200);
    std::optional<std::size_t> first;
    for (std::size_t n = 9; n <= 200 && !first; ++n) {
        if (certifies(n, stars_tau(n, 2))) {
            first = n;
        }
    }
    CHECK(scan.first_certified == first);
    CHECK(stars_tau(8, 2) == 0);
    CHECK(stars_tau(9, 2) == 1);
    CHECK(stars_tau(128, 2) == 6);
}
