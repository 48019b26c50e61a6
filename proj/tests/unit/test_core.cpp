#include "doctest.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "monotile/bitset.hpp"
#include "monotile/clique.hpp"
#include "monotile/coloured_graph.hpp"
#include "monotile/error.hpp"
#include "monotile/family.hpp"
#include "monotile/io.hpp"
#include "monotile/rational.hpp"
#include "monotile/rng.hpp"
#include "monotile/tiling.hpp"

using namespace monotile;

namespace {

// Tuple-by-tuple count, written without any bitset machinery.
std::uint64_t brute_clique_degree(const ColouredCompleteGraph& g, Vertex v,
                                  const std::vector<VertexList>& parts, Colour c) {
    std::uint64_t total = 0;
    std::vector<std::size_t> idx(parts.size(), 0);
    for (const auto& p : parts) {
        if (p.empty()) {
            return 0;
        }
    }
    while (true) {
        std::vector<Vertex> clique{v};
        for (std::size_t i = 0; i < parts.size(); ++i) {
            clique.push_back(parts[i][idx[i]]);
        }
        bool mono = true;
        for (std::size_t a = 0; a < clique.size() && mono; ++a) {
            for (std::size_t b = a + 1; b < clique.size(); ++b) {
                if (g.colour(clique[a], clique[b]) != c) {
                    mono = false;
                    break;
                }
            }
        }
        total += mono ? 1 : 0;
        std::size_t i = 0;
        while (i < parts.size() && ++idx[i] == parts[i].size()) {
            idx[i] = 0;
            ++i;
        }
        if (i == parts.size()) {
            return total;
        }
    }
}

std::vector<VertexList> random_parts(Rng& rng, std::size_t n, std::size_t k, std::size_t max_size,
                                     Vertex skip) {
    VertexList pool;
    for (Vertex v = 0; v < n; ++v) {
        if (v != skip) {
            pool.push_back(v);
        }
    }
    rng.shuffle(pool);
    std::vector<VertexList> parts(k);
    std::size_t at = 0;
    for (auto& p : parts) {
        std::size_t size = 1 + rng.below(max_size);
        for (std::size_t i = 0; i < size && at < pool.size(); ++i) {
            p.push_back(pool[at++]);
        }
    }
    return parts;
}

} // namespace

TEST_CASE("bitset algebra and iteration") {
    Bitset a(130);
    a.set(0);
    a.set(64);
    a.set(129);
    CHECK(a.count() == 3);
    CHECK(a.next(1) == 64);
    CHECK(a.next(65) == 129);
    CHECK(a.next(130) == 130);
    Bitset b(130);
    b.set(64);
    b.set(5);
    CHECK(a.intersection_count(b) == 1);
    CHECK(a.intersects(b));
    Bitset c = a;
    c.subtract(b);
    CHECK(c.to_vector() == std::vector<std::uint32_t>{0, 129});
    CHECK(c.is_subset_of(a));
    CHECK_FALSE(a.is_subset_of(c));
}

TEST_CASE("rational parsing is exact") {
    CHECK(parse_rational("0.35") == ratio(7, 20));
    CHECK(parse_rational("7/8") == ratio(7, 8));
    CHECK(parse_rational("-2") == Rational(-2));
    CHECK(parse_rational(" 1.0 ") == Rational(1));
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
    CHECK_THROWS_AS(parse_rational("abc"), InvalidInput);
    CHECK(ceil(ratio(7, 2)) == 4);
    CHECK(floor(ratio(-7, 2)) == -4);
    CHECK(min_qualifying_size(ratio(3, 10), 14) == 5);
    CHECK(min_qualifying_size(ratio(1, 2), 14) == 7);
}

TEST_CASE("coloured complete graph is symmetric and validated") {
    Rng rng(7);
    auto g = ColouredCompleteGraph::random(9, 3, rng);
    for (Vertex u = 0; u < 9; ++u) {
        for (Vertex v = 0; v < 9; ++v) {
            if (u != v) {
                CHECK(g.colour(u, v) == g.colour(v, u));
                CHECK(g.colour(u, v) >= 1);
                CHECK(g.colour(u, v) <= 3);
                CHECK(g.neighbours(g.colour(u, v), u).test(v));
            }
        }
    }
    CHECK_THROWS_AS(ColouredCompleteGraph(0, 1), InvalidInput);
    std::vector<Colour> bad{1, 3, 1};
    CHECK_THROWS_AS(ColouredCompleteGraph(3, 2, bad), InvalidInput);
    auto h = g.with_colour(0, 1, 2);
    CHECK(h.colour(1, 0) == 2);
    CHECK(h.neighbours(2, 0).test(1));
    auto sub = g.induced(VertexList{4, 2, 7});
    CHECK(sub.n() == 3);
    CHECK(sub.colour(0, 2) == g.colour(4, 7));
}

TEST_CASE("clique degree examples") {
    // v = 0, x = 1, y = 2
    auto g = ColouredCompleteGraph(3, 2, 1);
    std::vector<VertexList> parts{{1}, {2}};
    CHECK(clique_degree(g, 0, parts, Colour{1}) == 1);
    auto mixed = g.with_colour(1, 2, 2);
    CHECK(clique_degree(mixed, 0, parts, Colour{1}) == 0);
    CHECK(clique_degree(mixed, 0, parts, Colour{2}) == 0);

    std::vector<VertexList> overlapping{{1, 2}, {2}};
    CHECK_THROWS_AS(clique_degree(g, 0, overlapping, Colour{1}), InvalidInput);
    std::vector<VertexList> containing{{0}, {2}};
    CHECK_THROWS_AS(clique_degree(g, 0, containing, Colour{1}), InvalidInput);
}

TEST_CASE("clique degree matches tuple enumeration on random instances") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = ColouredCompleteGraph::random(14, 2, rng);
        std::vector<VertexList> parts{{1, 2, 3, 4}, {5, 6, 7, 8}};
        for (Vertex v : {0u, 9u, 13u}) {
            for (Colour c : {1, 2}) {
                CHECK(clique_degree(g, v, parts, c) == brute_clique_degree(g, v, parts, c));
            }
        }
    }
}

TEST_CASE("clique degree: additivity and the tuple bound") {
    Rng rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        const Colour r = static_cast<Colour>(1 + rng.below(3));
        auto g = ColouredCompleteGraph::random(16, r, rng);
        const std::size_t k = 1 + rng.below(3);
        auto parts = random_parts(rng, 16, k, 4, 0);
        std::uint64_t sum = 0;
        for (Colour c = 1; c <= r; ++c) {
            sum += clique_degree(g, 0, parts, c);
        }
        auto colours = all_colours(r);
        CHECK(clique_degree(g, 0, parts, colours) == sum);
        CHECK(sum <= tuple_count(parts));

        // Equality iff every transversal tuple through v is monochromatic.
        std::uint64_t mono_tuples = 0;
        for (Colour c = 1; c <= r; ++c) {
            mono_tuples += brute_clique_degree(g, 0, parts, c);
        }
        const bool all_mono = mono_tuples == tuple_count(parts);
        CHECK((sum == tuple_count(parts)) == all_mono);
    }
    auto mono = ColouredCompleteGraph(10, 3, 2);
    std::vector<VertexList> parts{{1, 2}, {3, 4, 5}, {6}};
    CHECK(clique_degree(mono, 0, parts, all_colours(3)) == tuple_count(parts));
}

TEST_CASE("clique density examples") {
    auto g = ColouredCompleteGraph(7, 2, 1);
    std::vector<VertexList> parts{{1, 2, 3}, {4, 5, 6}};
    CHECK(clique_density(g, 0, parts, Colour{1}) == 1);
    CHECK(clique_density(g, 0, parts, Colour{2}) == 0);

    // Planted: v = 0 sees part {1, 2} in colour 1 and part {3, 4}; pairs (x, 3) are colour 1 and
    // (x, 4) colour 2, so exactly half the tuples are monochromatic.
    auto h = ColouredCompleteGraph::from_function(5, 2, [](Vertex i, Vertex j) {
        return (j == 4 && i != 0) ? 2 : 1;
    });
    std::vector<VertexList> half{{1, 2}, {3, 4}};
    CHECK(brute_clique_degree(h, 0, half, 1) == 2);
    CHECK(clique_density(h, 0, half, Colour{1}) == ratio(1, 2));

    std::vector<VertexList> with_empty{{1, 2}, {}};
    CHECK_THROWS_AS(clique_density(g, 0, with_empty, Colour{1}), DivisionUndefined);
}

TEST_CASE("transversal clique count agrees with per-vertex degrees") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = ColouredCompleteGraph::random(15, 2, rng);
        std::vector<VertexList> parts{{0, 1, 2, 3}, {4, 5, 6, 7, 8}, {9, 10, 11}};
        std::vector<VertexList> rest{parts[1], parts[2]};
        for (Colour c : {1, 2}) {
            std::uint64_t expected = 0;
            for (Vertex v : parts[0]) {
                expected += brute_clique_degree(g, v, rest, c);
            }
            CHECK(transversal_clique_count(g, parts, c) == expected);
        }
    }
}

TEST_CASE("family members") {
    auto c5 = family_member(FamilySpec::cycles(), 5);
    CHECK(c5.order() == 5);
    CHECK(c5.edge_count() == 5);
    CHECK(c5.max_degree() == 2);
    for (std::size_t m = 1; m <= 12; ++m) {
        auto g = family_member(FamilySpec::cycles(), m);
        CHECK(g.order() == m);
        CHECK(g.edge_count() == (m >= 3 ? m : m - 1));
    }
    auto s1 = family_member(FamilySpec::stars(), 1);
    CHECK(s1.order() == 1);
    CHECK(s1.edge_count() == 0);
    CHECK(family_member(FamilySpec::stars(), 6).max_degree() == 5);
    CHECK(family_member(FamilySpec::paths(), 6).edge_count() == 5);
    CHECK_THROWS_AS(family_member(FamilySpec::cycles(), 0), InvalidInput);
    CHECK_FALSE(FamilySpec::stars().max_degree().has_value());
    CHECK(FamilySpec::cycle_power(3).max_degree() == 6u);

    auto capped = FamilySpec::stars();
    capped.with_max_degree_cap(3);
    CHECK(family_member(capped, 4).max_degree() == 3);
    CHECK_THROWS_AS(family_member(capped, 5), InvalidInput);
}

TEST_CASE("cycle power agrees with explicit chord enumeration") {
    for (std::size_t k = 1; k <= 3; ++k) {
        for (std::size_t m = 1; m <= 14; ++m) {
            auto g = family_member(FamilySpec::cycle_power(k), m);
            std::set<std::pair<Vertex, Vertex>> chords;
            for (Vertex a = 0; a < m; ++a) {
                for (Vertex b = a + 1; b < m; ++b) {
                    std::size_t dist = std::min<std::size_t>(b - a, m - (b - a));
                    if (dist <= k) {
                        chords.emplace(a, b);
                    }
                }
            }
            std::set<std::pair<Vertex, Vertex>> got(g.edges().begin(), g.edges().end());
            CHECK(got == chords);
        }
    }
    auto g = family_member(FamilySpec::cycle_power(2), 7);
    CHECK(g.edge_count() == 14);
    for (Vertex v = 0; v < 7; ++v) {
        CHECK(g.degree(v) == 4);
    }
}

TEST_CASE("family parsing and custom directories") {
    CHECK(FamilySpec::parse("cycle-power:2").power() == 2);
    CHECK(FamilySpec::parse("paths").kind() == FamilyKind::paths);
    CHECK_THROWS_AS(FamilySpec::parse("trees"), InvalidInput);
    auto custom = FamilySpec::parse(std::string("custom:") + MONOTILE_TEST_DATA + "/family_small");
    CHECK(custom.kind() == FamilyKind::custom);
    CHECK(custom.has_member(4));
    CHECK_FALSE(custom.has_member(3));
    CHECK(family_member(custom, 4).max_degree() == 3);
    CHECK_THROWS_AS(family_member(custom, 3), UnavailableMember);
    CHECK(custom.max_degree() == 3u);
}

TEST_CASE("verify_tiling examples") {
    auto g = ColouredCompleteGraph(4, 2, 1);
    auto cycles = FamilySpec::cycles();
    Tiling one{{Piece{1, {0, 1, 2, 3}}}};
    CHECK(verify_tiling(g, cycles, one, all_vertices(4)).ok());

    Tiling overlap{{Piece{1, {0, 1}}, Piece{1, {1, 2, 3}}}};
    auto v = verify_tiling(g, cycles, overlap, all_vertices(4));
    CHECK(v.fault == TilingFault::overlap);
    CHECK(v.witness == VertexList{1});

    auto h = g.with_colour(2, 3, 2);
    auto bad = verify_tiling(h, cycles, one, all_vertices(4));
    CHECK(bad.fault == TilingFault::miscoloured_edge);
    CHECK(bad.witness == VertexList{2, 3});

    Tiling partial{{Piece{1, {0, 1, 2}}}};
    auto missing = verify_tiling(g, cycles, partial, all_vertices(4));
    CHECK(missing.fault == TilingFault::uncovered_vertex);
    CHECK(missing.witness == VertexList{3});

    Tiling wrong_colour{{Piece{3, {0}}}};
    CHECK(verify_tiling(g, cycles, wrong_colour, VertexList{0}).fault == TilingFault::bad_colour);
    Tiling twice{{Piece{1, {0, 0}}}};
    CHECK(verify_tiling(g, cycles, twice, VertexList{0}).fault == TilingFault::not_injective);
    CHECK(verify_tiling(g, cycles, partial, VertexList{0, 1}).fault ==
          TilingFault::outside_universe);
}

TEST_CASE("verify_tiling is monotone under removing a piece") {
    Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = ColouredCompleteGraph(10, 1, 1);
        VertexList order = all_vertices(10);
        rng.shuffle(order);
        Tiling tiling;
        std::size_t at = 0;
        while (at < order.size()) {
            std::size_t size = 1 + rng.below(std::min<std::size_t>(4, order.size() - at));
            tiling.pieces.push_back(Piece{1, VertexList(order.begin() + at, order.begin() + at + size)});
            at += size;
        }
        auto family = FamilySpec::cycles();
        REQUIRE(verify_tiling(g, family, tiling, all_vertices(10)).ok());
        std::size_t drop = rng.below(tiling.size());
        auto removed = tiling.pieces[drop].map;
        Tiling smaller = tiling;
        smaller.pieces.erase(smaller.pieces.begin() + drop);
        auto universe = set_difference(all_vertices(10), removed);
        CHECK(verify_tiling(g, family, smaller, universe).ok());
    }
}

TEST_CASE("canonical cover examples and cross-check") {
    std::vector<VertexList> parts{{0, 1}, {2, 3, 4}, {5, 6, 7}};
    Tiling good{{Piece{1, {0, 2, 5}}, Piece{1, {1, 3, 6}}}};
    CHECK(canonical_cover_check(good, parts).ok);
    Tiling heavy{{Piece{1, {0, 2, 3}}, Piece{1, {1, 4}}}};
    auto verdict = canonical_cover_check(heavy, parts);
    CHECK_FALSE(verdict.ok);
    CHECK(verdict.violating_part == 1);
    Tiling short_cover{{Piece{1, {0, 2}}}};
    auto miss = canonical_cover_check(short_cover, parts);
    CHECK_FALSE(miss.ok);
    CHECK(miss.uncovered == VertexList{1});

    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        auto ps = random_parts(rng, 20, 1 + rng.below(4), 5, 99);
        Tiling t;
        for (Vertex v = 0; v < 20; ++v) {
            if (rng.chance(1, 2)) {
                t.pieces.push_back(Piece{1, {v}});
            }
        }
        auto covered = t.covered();
        auto count = [&](const VertexList& part) {
            return std::count_if(part.begin(), part.end(), [&](Vertex v) {
                return std::binary_search(covered.begin(), covered.end(), v);
            });
        };
        bool expected = count(ps[0]) == static_cast<long>(ps[0].size());
        for (std::size_t i = 1; i < ps.size(); ++i) {
            expected = expected && count(ps[i]) <= count(ps[0]);
        }
        CHECK(canonical_cover_check(t, ps).ok == expected);
    }
}

TEST_CASE("colouring files round-trip bit-exactly") {
    Rng rng(99);
    for (std::size_t n : {1u, 2u, 5u, 12u}) {
        auto g = ColouredCompleteGraph::random(n, 3, rng);
        auto text = format_colouring(g);
        std::istringstream in(text);
        auto back = read_colouring(in);
        CHECK(back == g);
        CHECK(format_colouring(back) == text);
    }
    CHECK(format_colouring(ColouredCompleteGraph(3, 2, 2)) == "3 2\n2 2\n2\n");
    std::istringstream bad("3 2\n1 3\n1\n");
    CHECK_THROWS_AS(read_colouring(bad), InvalidInput);
    std::istringstream short_file("4 2\n1 1 1\n");
    CHECK_THROWS_AS(read_colouring(short_file), InvalidInput);
}

TEST_CASE("family files round-trip bit-exactly") {
    auto g = family_member(FamilySpec::cycle_power(2), 9);
    auto text = format_family_graph(g);
    std::istringstream in(text);
    auto back = read_family_graph(in);
    CHECK(back == g);
    CHECK(format_family_graph(back) == text);
    std::istringstream loop("3\n1 1\n");
    CHECK_THROWS_AS(read_family_graph(loop), InvalidInput);
}
