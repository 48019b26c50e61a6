#include "monotile/ramsey.hpp"

#include <vector>

#include "monotile/embedder.hpp"
#include "monotile/error.hpp"

namespace monotile {

namespace {

bool uses_pair(const Graph& pattern, const VertexList& map, Vertex u, Vertex v) {
    for (auto [a, b] : pattern.edges()) {
        Vertex x = map[a];
        Vertex y = map[b];
        if ((x == u && y == v) || (x == v && y == u)) {
            return true;
        }
    }
    return false;
}

} // namespace

RamseyVerdict check_all_colourings(std::size_t n, std::span<const Graph> patterns,
                                   std::uint64_t max_colourings) {
    if (n < 1) {
        throw InvalidInput("check_all_colourings needs n >= 1");
    }
    if (patterns.empty() || patterns.size() > 65535) {
        throw InvalidInput("check_all_colourings needs one pattern per colour");
    }
    const auto r = static_cast<Colour>(patterns.size());
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            slots.emplace_back(i, j);
        }
    }
    const std::size_t m = slots.size();

    ColourAdjacency adj(n, r);
    for (auto [u, v] : slots) {
        adj.add_edge(1, u, v);
    }
    Bitset allowed(n);
    for (Vertex v = 0; v < n; ++v) {
        allowed.set(v);
    }
    std::vector<std::optional<VertexList>> witness(r);
    std::vector<int> digit(m, 0);

    RamseyVerdict verdict;
    auto current_has_copy = [&]() {
        for (Colour c = 1; c <= r; ++c) {
            if (witness[c - 1]) {
                return true;
            }
        }
        for (Colour c = 1; c <= r; ++c) {
            EmbedOptions options;
            options.colour = c;
            ++verdict.searches;
            auto found = find_mono_copy(adj, patterns[c - 1], allowed, options);
            if (found.embedding) {
                witness[c - 1] = std::move(found.embedding->map);
                return true;
            }
        }
        return false;
    };
    auto counterexample = [&]() {
        std::vector<Colour> upper(m);
        for (std::size_t j = 0; j < m; ++j) {
            upper[j] = static_cast<Colour>(digit[j] + 1);
        }
        return ColouredCompleteGraph(n, r, upper);
    };
    auto recolour = [&](std::size_t j, int from, int to) {
        auto [u, v] = slots[j];
        adj.remove_edge(static_cast<Colour>(from + 1), u, v);
        adj.add_edge(static_cast<Colour>(to + 1), u, v);
        auto& w = witness[from];
        if (w && uses_pair(patterns[from], *w, u, v)) {
            w.reset();
        }
    };

    // Reflected mixed-radix Gray code: each step recolours exactly one pair.
    std::vector<std::size_t> focus(m + 1);
    std::vector<int> direction(m, 1);
    for (std::size_t j = 0; j <= m; ++j) {
        focus[j] = j;
    }
    while (true) {
        if (max_colourings && verdict.colourings >= max_colourings) {
            throw BudgetExceeded("colouring budget of " + std::to_string(max_colourings) +
                                     " exhausted without a counterexample",
                                 verdict.colourings);
        }
        ++verdict.colourings;
        if (!current_has_copy()) {
            verdict.holds = false;
            verdict.counterexample = counterexample();
            return verdict;
        }
        if (r == 1) {
            break;
        }
        std::size_t j = focus[0];
        focus[0] = 0;
        if (j == m) {
            break;
        }
        int before = digit[j];
        digit[j] += direction[j];
        recolour(j, before, digit[j]);
        if (digit[j] == 0 || digit[j] == r - 1) {
            direction[j] = -direction[j];
            focus[j] = focus[j + 1];
            focus[j + 1] = j + 1;
        }
    }
    verdict.holds = true;
    return verdict;
}

} // namespace monotile
