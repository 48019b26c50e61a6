#include "monotile/greedy.hpp"

#include <algorithm>

#include "monotile/embedder.hpp"
#include "monotile/error.hpp"

namespace monotile {

GreedyResult greedy_cover(const ColouredCompleteGraph& g, const FamilySpec& family,
                          std::span<const Vertex> universe, const Rational& gamma, const Rational& t,
                          const GreedyOptions& options) {
    if (gamma <= 0 || gamma > 1) {
        throw PreconditionError("greedy cover needs 0 < gamma <= 1, got " + to_string(gamma));
    }
    if (t <= 0 || t > 1) {
        throw PreconditionError("greedy cover needs 0 < t <= 1, got " + to_string(t));
    }
    check_vertex_list(g.n(), universe, "universe");

    GreedyResult result;
    Bitset uncovered = to_bitset(g.n(), universe);
    std::size_t left = universe.size();
    const Rational stop = gamma * universe.size();

    EmbedOptions embed;
    embed.colour = options.colour;
    embed.node_budget = options.node_budget;

    while (Rational(left) > stop) {
        GreedyStep step;
        step.uncovered_before = left;
        Piece piece;
        if (t * left <= 2) {
            if (!family.has_member(1)) {
                throw UnavailableMember(family.name() + " has no single-vertex member");
            }
            step.singleton_phase = true;
            step.target = 1;
            piece.colour = options.colour.value_or(1);
            piece.map = {static_cast<Vertex>(uncovered.first())};
        } else {
            step.target = static_cast<std::size_t>(floor(t * left));
            for (std::size_t size = step.target; size >= 1; --size) {
                if (!family.has_member(size)) {
                    continue;
                }
                auto found = find_mono_copy(g.adjacency(), family.member(size), uncovered, embed);
                if (found.embedding) {
                    piece.colour = found.embedding->colour;
                    piece.map = std::move(found.embedding->map);
                    break;
                }
            }
            if (piece.map.empty()) {
                throw UnavailableMember(family.name() + " offers no member small enough to place");
            }
            if (piece.map.size() == 1) {
                result.singleton_fallback = true;
            }
        }
        step.embedded = piece.map.size();
        for (Vertex v : piece.map) {
            uncovered.reset(v);
        }
        left -= piece.map.size();
        result.tiling.pieces.push_back(std::move(piece));
        result.steps.push_back(step);
    }
    result.leftover = uncovered.to_vector();
    return result;
}

} // namespace monotile
