#include "monotile/tiling.hpp"

#include <algorithm>
#include <map>

#include "monotile/error.hpp"

namespace monotile {

VertexList Tiling::covered() const {
    VertexList out;
    for (const auto& p : pieces) {
        out.insert(out.end(), p.map.begin(), p.map.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

void Tiling::append(const Tiling& other) {
    pieces.insert(pieces.end(), other.pieces.begin(), other.pieces.end());
}

const char* to_string(TilingFault fault) {
    switch (fault) {
    case TilingFault::none:
        return "none";
    case TilingFault::bad_colour:
        return "bad-colour";
    case TilingFault::invalid_vertex:
        return "invalid-vertex";
    case TilingFault::not_injective:
        return "not-injective";
    case TilingFault::overlap:
        return "overlap";
    case TilingFault::miscoloured_edge:
        return "miscoloured-edge";
    case TilingFault::outside_universe:
        return "outside-universe";
    case TilingFault::uncovered_vertex:
        return "uncovered-vertex";
    }
    return "?";
}

namespace {

TilingVerdict fault(TilingFault kind, std::size_t piece, VertexList witness, std::string detail) {
    TilingVerdict v;
    v.fault = kind;
    v.piece = piece;
    v.witness = std::move(witness);
    v.detail = std::move(detail);
    return v;
}

} // namespace

TilingVerdict verify_tiling(const ColouredCompleteGraph& g, const FamilySpec& family,
                            const Tiling& tiling, std::span<const Vertex> universe) {
    check_vertex_list(g.n(), universe, "universe");
    const std::size_t n = g.n();
    std::vector<std::size_t> owner(n, SIZE_MAX);
    std::map<std::size_t, Graph> patterns;

    for (std::size_t p = 0; p < tiling.pieces.size(); ++p) {
        const Piece& piece = tiling.pieces[p];
        const std::string where = "piece " + std::to_string(p);
        if (piece.colour < 1 || piece.colour > g.r()) {
            return fault(TilingFault::bad_colour, p, {},
                         where + " has colour " + std::to_string(piece.colour));
        }
        if (piece.map.empty()) {
            return fault(TilingFault::invalid_vertex, p, {}, where + " is empty");
        }
        for (std::size_t i = 0; i < piece.map.size(); ++i) {
            Vertex v = piece.map[i];
            if (v >= n) {
                return fault(TilingFault::invalid_vertex, p, {v},
                             where + " maps to vertex " + std::to_string(v));
            }
            if (owner[v] == p) {
                return fault(TilingFault::not_injective, p, {v},
                             where + " uses vertex " + std::to_string(v) + " twice");
            }
            if (owner[v] != SIZE_MAX) {
                return fault(TilingFault::overlap, p, {v},
                             where + " shares vertex " + std::to_string(v) + " with piece " +
                                 std::to_string(owner[v]));
            }
            owner[v] = p;
        }
        const std::size_t m = piece.size();
        auto it = patterns.find(m);
        if (it == patterns.end()) {
            it = patterns.emplace(m, family.member(m)).first;
        }
        for (auto [a, b] : it->second.edges()) {
            Vertex u = piece.map[a];
            Vertex w = piece.map[b];
            if (g.colour(u, w) != piece.colour) {
                return fault(TilingFault::miscoloured_edge, p, {u, w},
                             where + " edge " + std::to_string(u) + "-" + std::to_string(w) +
                                 " has colour " + std::to_string(g.colour(u, w)));
            }
        }
    }

    Bitset in_universe = to_bitset(n, universe);
    for (Vertex v = 0; v < n; ++v) {
        if (owner[v] != SIZE_MAX && !in_universe.test(v)) {
            return fault(TilingFault::outside_universe, owner[v], {v},
                         "vertex " + std::to_string(v) + " covered outside the universe");
        }
    }
    for (Vertex v : universe) {
        if (owner[v] == SIZE_MAX) {
            return fault(TilingFault::uncovered_vertex, 0, {v},
                         "vertex " + std::to_string(v) + " uncovered");
        }
    }
    return {};
}

CoverVerdict canonical_cover_check(const Tiling& tiling, std::span<const VertexList> parts) {
    std::size_t n = 0;
    for (const auto& part : parts) {
        for (Vertex v : part) {
            n = std::max<std::size_t>(n, v + 1);
        }
    }
    for (const auto& piece : tiling.pieces) {
        for (Vertex v : piece.map) {
            n = std::max<std::size_t>(n, v + 1);
        }
    }
    check_disjoint_parts(n, parts);

    CoverVerdict verdict;
    if (parts.empty()) {
        verdict.ok = true;
        return verdict;
    }
    Bitset covered(n);
    for (const auto& piece : tiling.pieces) {
        for (Vertex v : piece.map) {
            covered.set(v);
        }
    }
    auto count_in = [&](const VertexList& part) {
        std::size_t c = 0;
        for (Vertex v : part) {
            c += covered.test(v) ? 1 : 0;
        }
        return c;
    };
    for (Vertex v : parts[0]) {
        if (!covered.test(v)) {
            verdict.uncovered.push_back(v);
        }
    }
    verdict.covered_first = count_in(parts[0]);
    if (!verdict.uncovered.empty()) {
        verdict.detail = std::to_string(verdict.uncovered.size()) + " vertices of the first part uncovered";
        return verdict;
    }
    for (std::size_t i = 1; i < parts.size(); ++i) {
        std::size_t c = count_in(parts[i]);
        if (c > verdict.covered_first) {
            verdict.violating_part = i;
            verdict.detail = "part " + std::to_string(i + 1) + " has " + std::to_string(c) +
                             " covered vertices, first part " +
                             std::to_string(verdict.covered_first);
            return verdict;
        }
    }
    verdict.ok = true;
    return verdict;
}

} // namespace monotile
