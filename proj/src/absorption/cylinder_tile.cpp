#include <algorithm>

#include "monotile/absorption.hpp"
#include "monotile/embedder.hpp"
#include "monotile/error.hpp"

namespace monotile {

namespace {

// Partitions of `total` into exactly `count` positive parts, nonincreasing, largest first.
void partitions(std::size_t total, std::size_t count, std::size_t max_part, std::vector<std::size_t>& prefix,
                std::vector<std::vector<std::size_t>>& out) {
    if (count == 0) {
        if (total == 0) {
            out.push_back(prefix);
        }
        return;
    }
    const std::size_t hi = std::min(max_part, total - (count - 1));
    for (std::size_t m = hi; m >= 1 && m * count >= total; --m) {
        prefix.push_back(m);
        partitions(total - m, count - 1, m, prefix, out);
        prefix.pop_back();
    }
}

std::optional<Graph> try_member(const FamilySpec& family, std::size_t m) {
    try {
        return family.member(m);
    } catch (const Error&) {
        return std::nullopt;
    }
}

} // namespace

CylinderTiling cylinder_tile(const ColouredCompleteGraph& g, const Cylinder& z, const FamilySpec& family,
                             TileMode mode, const CylinderTileOptions& options) {
    check_disjoint_parts(g.n(), z.parts);
    const ColourAdjacency adj = g.cylinder_adjacency(z.parts);
    const VertexList vertices = z.vertices();
    CylinderTiling out;
    out.exhausted = true;
    EmbedOptions base;
    base.colour = z.colour;
    base.node_budget = options.node_budget;

    if (mode == TileMode::partition) {
        if (vertices.empty()) {
            out.found = true;
            return out;
        }
        const std::size_t n = vertices.size();
        const std::size_t max_pieces = family.max_degree().has_value() ? *family.max_degree() + 3 : n;
        const Bitset allowed = to_bitset(g.n(), vertices);
        std::uint64_t attempts = 0;
        for (std::size_t count = 1; count <= std::min(max_pieces, n); ++count) {
            std::vector<std::vector<std::size_t>> splits;
            std::vector<std::size_t> prefix;
            partitions(n, count, n, prefix, splits);
            for (const auto& sizes : splits) {
                if (options.attempt_budget && attempts >= options.attempt_budget) {
                    out.exhausted = false;
                    return out;
                }
                Graph pattern;
                bool available = true;
                for (std::size_t m : sizes) {
                    auto member = try_member(family, m);
                    if (!member) {
                        available = false;
                        break;
                    }
                    pattern = pattern.disjoint_union(*member);
                }
                if (!available) {
                    continue;
                }
                ++attempts;
                auto res = find_mono_copy(adj, pattern, allowed, base);
                out.nodes += res.nodes;
                out.exhausted = out.exhausted && res.exhausted;
                if (res.embedding) {
                    std::size_t offset = 0;
                    for (std::size_t m : sizes) {
                        Piece piece{res.embedding->colour,
                                    VertexList(res.embedding->map.begin() + static_cast<std::ptrdiff_t>(offset),
                                               res.embedding->map.begin() + static_cast<std::ptrdiff_t>(offset + m))};
                        out.tiling.pieces.push_back(std::move(piece));
                        offset += m;
                    }
                    out.found = true;
                    return out;
                }
            }
        }
        return out;
    }

    if (z.parts.empty() || z.parts[0].empty()) {
        out.found = true;
        return out;
    }
    const std::size_t w1 = z.parts[0].size();
    std::vector<std::uint32_t> part_of(g.n(), EmbedOptions::no_part);
    std::size_t largest = 0;
    for (std::size_t i = 0; i < z.parts.size(); ++i) {
        for (Vertex v : z.parts[i]) {
            part_of[v] = static_cast<std::uint32_t>(i);
        }
        largest += std::min(w1, z.parts[i].size());
    }
    const Bitset allowed = to_bitset(g.n(), vertices);
    const Bitset required = to_bitset(g.n(), z.parts[0]);
    EmbedOptions opts = base;
    opts.required = &required;
    opts.part_of = &part_of;
    opts.capacity.assign(z.parts.size(), w1);
    for (std::size_t m = largest; m >= w1; --m) {
        auto member = try_member(family, m);
        if (!member) {
            continue;
        }
        auto res = find_mono_copy(adj, *member, allowed, opts);
        out.nodes += res.nodes;
        out.exhausted = out.exhausted && res.exhausted;
        if (res.embedding) {
            out.tiling.pieces.push_back(Piece{res.embedding->colour, res.embedding->map});
            out.found = true;
            return out;
        }
    }
    return out;
}

} // namespace monotile
