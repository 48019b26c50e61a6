#include "doctest.h"

#include "monotile/embedder.hpp"
#include "monotile/error.hpp"
#include "monotile/greedy.hpp"
#include "monotile/ramsey.hpp"
#include "monotile/rng.hpp"
#include "monotile/tiling.hpp"

using namespace monotile;

namespace {

bool is_mono_copy(const ColouredCompleteGraph& g, const Graph& pattern, const Embedding& e,
                  const VertexList& allowed) {
    std::vector<bool> ok(g.n(), false);
    for (Vertex v : allowed) {
        ok[v] = true;
    }
    std::vector<bool> seen(g.n(), false);
    for (Vertex v : e.map) {
        if (!ok[v] || seen[v]) {
            return false;
        }
        seen[v] = true;
    }
    for (auto [a, b] : pattern.edges()) {
        if (g.colour(e.map[a], e.map[b]) != e.colour) {
            return false;
        }
    }
    return e.map.size() == pattern.order();
}

// Does colour c contain a triangle? Plain triple loop.
bool has_triangle(const ColouredCompleteGraph& g, Colour c) {
    for (Vertex a = 0; a < g.n(); ++a) {
        for (Vertex b = a + 1; b < g.n(); ++b) {
            for (Vertex d = b + 1; d < g.n(); ++d) {
                if (g.colour(a, b) == c && g.colour(a, d) == c && g.colour(b, d) == c) {
                    return true;
                }
            }
        }
    }
    return false;
}

} // namespace

TEST_CASE("find_mono_copy examples") {
    auto k5 = ColouredCompleteGraph(5, 2, 1);
    auto c5 = family_member(FamilySpec::cycles(), 5);
    auto found = find_mono_copy(k5, c5, std::nullopt, all_vertices(5));
    REQUIRE(found);
    CHECK(is_mono_copy(k5, c5, *found, all_vertices(5)));

    CHECK_FALSE(find_mono_copy(k5, complete_graph(2), Colour{2}, all_vertices(5)));
    CHECK_FALSE(find_mono_copy(k5, c5, std::nullopt, VertexList{0, 1, 2}));
    auto edgeless = find_mono_copy(k5, Graph(3), Colour{2}, VertexList{1, 3, 4});
    REQUIRE(edgeless);
    CHECK(edgeless->colour == 2);
}

TEST_CASE("find_mono_copy finds a triangle in every 2-colouring of K_6") {
    auto k3 = complete_graph(3);
    std::uint64_t agree = 0;
    for (std::uint32_t mask = 0; mask < (1u << 15); ++mask) {
        auto g = ColouredCompleteGraph::from_function(6, 2, [&, slot = 0](Vertex, Vertex) mutable {
            return 1 + ((mask >> slot++) & 1);
        });
        auto found = find_mono_copy(g, k3, std::nullopt, all_vertices(6));
        REQUIRE(found);
        CHECK(is_mono_copy(g, k3, *found, all_vertices(6)));
        for (Colour c : {1, 2}) {
            agree += find_mono_copy(g, k3, c, all_vertices(6)).has_value() == has_triangle(g, c);
        }
    }
    CHECK(agree == 2u * (1u << 15));
}

TEST_CASE("find_mono_copy honours required vertices and capacities") {
    auto mono = ColouredCompleteGraph(12, 1, 1);
    Bitset allowed(12);
    for (Vertex v = 0; v < 12; ++v) {
        allowed.set(v);
    }
    Bitset required(12);
    required.set(10);
    required.set(11);
    std::vector<std::uint32_t> part_of(12);
    for (Vertex v = 0; v < 12; ++v) {
        part_of[v] = v / 4;
    }
    EmbedOptions options;
    options.required = &required;
    options.part_of = &part_of;
    options.capacity = {1, 1, 2};
    auto res = find_mono_copy(mono.adjacency(), family_member(FamilySpec::cycles(), 4), allowed, options);
    REQUIRE(res.embedding);
    std::vector<std::size_t> counts(3, 0);
    bool has10 = false;
    bool has11 = false;
    for (Vertex v : res.embedding->map) {
        ++counts[v / 4];
        has10 = has10 || v == 10;
        has11 = has11 || v == 11;
    }
    CHECK(has10);
    CHECK(has11);
    CHECK(counts[0] <= 1);
    CHECK(counts[1] <= 1);
    options.capacity = {1, 1, 1};
    CHECK_FALSE(find_mono_copy(mono.adjacency(), family_member(FamilySpec::cycles(), 4), allowed, options).embedding);
}

TEST_CASE("find_mono_copy respects its node budget") {
    Rng rng(8);
    auto g = ColouredCompleteGraph::random(40, 2, rng);
    EmbedOptions options;
    options.node_budget = 10;
    Bitset allowed(40);
    for (Vertex v = 0; v < 40; ++v) {
        allowed.set(v);
    }
    auto res = find_mono_copy(g.adjacency(), complete_graph(9), allowed, options);
    CHECK_FALSE(res.embedding);
    CHECK_FALSE(res.exhausted);
    CHECK(res.nodes <= 10);
}

TEST_CASE("greedy cover examples") {
    auto cycles = FamilySpec::cycles();
    auto mono = ColouredCompleteGraph(9, 2, 2);
    auto full = greedy_cover(mono, cycles, all_vertices(9), ratio(1, 10), Rational(1));
    CHECK(full.piece_count() == 1);
    CHECK(full.leftover.empty());
    CHECK(full.tiling.pieces[0].colour == 2);

    auto single = greedy_cover(mono, cycles, VertexList{4}, ratio(1, 2), ratio(1, 8));
    CHECK(single.piece_count() == 1);
    CHECK(single.tiling.pieces[0].map == VertexList{4});
    CHECK(single.leftover.empty());

    CHECK_THROWS_AS(greedy_cover(mono, cycles, all_vertices(9), Rational(0), ratio(1, 2)),
                    PreconditionError);
}

TEST_CASE("greedy cover on random K_40 contracts and leaves at most 4") {
    auto cycles = FamilySpec::cycles();
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Rng rng(seed);
        auto g = ColouredCompleteGraph::random(40, 2, rng);
        const Rational t = ratio(1, 8);
        auto res = greedy_cover(g, cycles, all_vertices(40), ratio(1, 10), t);
        CHECK(res.leftover.size() <= 4);
        auto universe = set_difference(all_vertices(40), res.leftover);
        CHECK(verify_tiling(g, cycles, res.tiling, universe).ok());
        for (const auto& step : res.steps) {
            if (!step.singleton_phase && step.embedded == step.target) {
                const std::size_t next = step.uncovered_before - step.embedded;
                CHECK(Rational(next) <= (1 - t / 2) * step.uncovered_before);
            }
        }
    }
}

TEST_CASE("check_all_colourings examples") {
    std::vector<Graph> triangles{complete_graph(3), complete_graph(3)};
    auto six = check_all_colourings(6, triangles);
    CHECK(six.holds);
    CHECK(six.colourings == (1u << 15));
    CHECK(six.searches < six.colourings);

    auto five = check_all_colourings(5, triangles);
    CHECK_FALSE(five.holds);
    REQUIRE(five.counterexample);
    const auto& w = *five.counterexample;
    CHECK_FALSE(has_triangle(w, 1));
    CHECK_FALSE(has_triangle(w, 2));
    for (Vertex v = 0; v < 5; ++v) {
        CHECK(w.colour_degree(1, v) == 2);
        CHECK(w.colour_degree(2, v) == 2);
    }

    std::vector<Graph> edge{complete_graph(2)};
    CHECK(check_all_colourings(2, edge).holds);
    CHECK_THROWS_AS(check_all_colourings(6, triangles, 100), BudgetExceeded);
}
