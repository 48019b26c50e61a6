#include <algorithm>
#include <map>

#include "monotile/absorption.hpp"
#include "monotile/error.hpp"
#include "monotile/rng.hpp"

namespace monotile {

namespace {

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0;
    }
    BigInt out = 1;
    for (std::size_t i = 0; i < k; ++i) {
        out = out * (n - i) / (i + 1);
    }
    return out;
}

std::vector<std::uint32_t> block_index(const Hypergraph& h, std::span<const VertexList> blocks) {
    Vertex top = 0;
    for (const auto& b : blocks) {
        if (b.empty()) {
            throw PreconditionError("independent_transversal needs nonempty blocks");
        }
        top = std::max(top, *std::max_element(b.begin(), b.end()));
    }
    for (const auto& e : h.edges) {
        if (e.size() != h.k) {
            throw InvalidInput("hyperedge size differs from k");
        }
        if (!std::is_sorted(e.begin(), e.end())) {
            throw InvalidInput("hyperedges must list their vertices in increasing order");
        }
        top = std::max(top, *std::max_element(e.begin(), e.end()));
    }
    std::vector<std::uint32_t> index(static_cast<std::size_t>(top) + 1, UINT32_MAX);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (Vertex v : blocks[i]) {
            if (index[v] != UINT32_MAX) {
                throw InvalidInput("independent_transversal needs disjoint blocks");
            }
            index[v] = static_cast<std::uint32_t>(i);
        }
    }
    return index;
}

} // namespace

TransversalHypothesis transversal_hypothesis(const Hypergraph& h, std::span<const VertexList> blocks) {
    const auto index = block_index(h, blocks);
    const std::size_t n = blocks.size();
    TransversalHypothesis out;
    out.holds = true;
    if (n < h.k || h.k == 0) {
        return out;
    }
    const Rational inv = Rational(1) / Rational(binomial(n, h.k));
    // (vertex in B_{i_1}, i_2..i_k) -> count
    std::map<std::pair<Vertex, std::vector<std::uint32_t>>, std::uint64_t> degree;
    for (const auto& e : h.edges) {
        std::vector<std::pair<std::uint32_t, Vertex>> placed;
        for (Vertex v : e) {
            if (index[v] == UINT32_MAX) {
                break;
            }
            placed.emplace_back(index[v], v);
        }
        if (placed.size() != h.k) {
            continue;
        }
        std::sort(placed.begin(), placed.end());
        bool distinct = true;
        for (std::size_t i = 1; i < placed.size(); ++i) {
            distinct = distinct && placed[i].first != placed[i - 1].first;
        }
        if (!distinct) {
            continue;
        }
        std::vector<std::uint32_t> rest;
        Rational weight = 1;
        for (std::size_t i = 0; i < placed.size(); ++i) {
            weight /= blocks[placed[i].first].size();
            if (i > 0) {
                rest.push_back(placed[i].first);
            }
        }
        out.union_bound += weight;
        ++degree[{placed[0].second, rest}];
    }
    for (const auto& [key, count] : degree) {
        Rational product = 1;
        for (auto i : key.second) {
            product *= blocks[i].size();
        }
        const Rational ratio_here = Rational(count) / (inv * product);
        out.max_ratio = std::max(out.max_ratio, ratio_here);
    }
    out.holds = out.max_ratio < 1;
    return out;
}

TransversalResult independent_transversal(const Hypergraph& h, std::span<const VertexList> blocks,
                                          std::uint64_t max_tries, Rng& rng) {
    TransversalResult out;
    out.hypothesis = transversal_hypothesis(h, blocks);
    VertexList pick(blocks.size());
    while (out.tries < max_tries) {
        ++out.tries;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            pick[i] = blocks[i][rng.below(blocks[i].size())];
        }
        bool independent = true;
        if (blocks.size() >= h.k && h.k > 0) {
            VertexList chosen = pick;
            std::sort(chosen.begin(), chosen.end());
            for (const auto& e : h.edges) {
                if (std::includes(chosen.begin(), chosen.end(), e.begin(), e.end())) {
                    independent = false;
                    break;
                }
            }
        }
        if (independent) {
            out.found = true;
            out.transversal = pick;
            break;
        }
        ++out.failed_draws;
    }
    out.hit_rate = out.tries ? static_cast<double>(out.tries - out.failed_draws) / static_cast<double>(out.tries) : 0.0;
    return out;
}

} // namespace monotile
