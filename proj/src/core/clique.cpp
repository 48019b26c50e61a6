#include "monotile/clique.hpp"

#include "monotile/error.hpp"

namespace monotile {

namespace {

// Cliques through the running common neighbourhood, one vertex per remaining part.
std::uint64_t count_from(const ColouredCompleteGraph& g, Colour c, const std::vector<Bitset>& parts,
                         std::size_t level, const Bitset& running, std::vector<Bitset>& scratch) {
    if (level + 1 == parts.size()) {
        return running.intersection_count(parts[level]);
    }
    Bitset& candidates = scratch[2 * level];
    Bitset& next = scratch[2 * level + 1];
    intersect_into(candidates, running, parts[level]);
    std::uint64_t total = 0;
    candidates.for_each([&](std::size_t u) {
        intersect_into(next, running, g.neighbours(c, static_cast<Vertex>(u)));
        for (std::size_t j = level + 1; j < parts.size(); ++j) {
            if (!next.intersects(parts[j])) {
                return;
            }
        }
        total += count_from(g, c, parts, level + 1, next, scratch);
    });
    return total;
}

std::vector<Bitset> part_bitsets(const ColouredCompleteGraph& g, std::span<const VertexList> parts) {
    check_disjoint_parts(g.n(), parts);
    std::vector<Bitset> out;
    out.reserve(parts.size());
    for (const auto& p : parts) {
        out.push_back(to_bitset(g.n(), p));
    }
    return out;
}

std::uint64_t count_cliques(const ColouredCompleteGraph& g, Colour c, const std::vector<Bitset>& bits,
                            const Bitset& start) {
    std::vector<Bitset> scratch(2 * bits.size(), Bitset(g.n()));
    return count_from(g, c, bits, 0, start, scratch);
}

void check_colour_list(const ColouredCompleteGraph& g, std::span<const Colour> colours) {
    for (Colour c : colours) {
        if (c < 1 || c > g.r()) {
            throw InvalidInput("colour " + std::to_string(c) + " out of range");
        }
    }
}

} // namespace

std::uint64_t clique_degree(const ColouredCompleteGraph& g, Vertex v,
                            std::span<const VertexList> parts, std::span<const Colour> colours) {
    if (parts.empty()) {
        throw InvalidInput("clique degree needs at least one part");
    }
    if (v >= g.n()) {
        throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    }
    check_colour_list(g, colours);
    auto bits = part_bitsets(g, parts);
    for (const auto& b : bits) {
        if (b.test(v)) {
            throw InvalidInput("vertex " + std::to_string(v) + " lies inside a part");
        }
    }
    std::uint64_t total = 0;
    for (Colour c : colours) {
        total += count_cliques(g, c, bits, g.neighbours(c, v));
    }
    return total;
}

std::uint64_t clique_degree(const ColouredCompleteGraph& g, Vertex v,
                            std::span<const VertexList> parts, Colour colour) {
    return clique_degree(g, v, parts, std::span<const Colour>(&colour, 1));
}

Rational clique_density(const ColouredCompleteGraph& g, Vertex v,
                        std::span<const VertexList> parts, std::span<const Colour> colours) {
    for (const auto& p : parts) {
        if (p.empty()) {
            throw DivisionUndefined("clique density with an empty part");
        }
    }
    std::uint64_t deg = clique_degree(g, v, parts, colours);
    BigInt denom = 1;
    for (const auto& p : parts) {
        denom *= p.size();
    }
    return Rational(BigInt(deg), denom);
}

Rational clique_density(const ColouredCompleteGraph& g, Vertex v,
                        std::span<const VertexList> parts, Colour colour) {
    return clique_density(g, v, parts, std::span<const Colour>(&colour, 1));
}

std::uint64_t transversal_clique_count(const ColouredCompleteGraph& g,
                                       std::span<const VertexList> parts, Colour colour) {
    check_colour_list(g, std::span<const Colour>(&colour, 1));
    if (parts.empty()) {
        return 0;
    }
    auto bits = part_bitsets(g, parts);
    Bitset everything(g.n());
    for (Vertex u = 0; u < g.n(); ++u) {
        everything.set(u);
    }
    return count_cliques(g, colour, bits, everything);
}

std::uint64_t tuple_count(std::span<const VertexList> parts) {
    std::uint64_t total = 1;
    for (const auto& p : parts) {
        total *= p.size();
    }
    return total;
}

std::vector<Colour> all_colours(Colour r) {
    std::vector<Colour> out;
    for (Colour c = 1; c <= r; ++c) {
        out.push_back(c);
    }
    return out;
}

} // namespace monotile
