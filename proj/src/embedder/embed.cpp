#include "monotile/embedder.hpp"

#include <algorithm>

#include "monotile/error.hpp"

namespace monotile {

namespace {

constexpr Vertex unplaced = UINT32_MAX;

class Search {
public:
    Search(const ColourAdjacency& adj, const Graph& pattern, const Bitset& allowed,
           const EmbedOptions& options, const std::vector<Vertex>& order, std::uint64_t& nodes)
        : adj_(adj), pattern_(pattern), allowed_(allowed), options_(options), order_(order),
          nodes_(nodes), image_(pattern.order(), unplaced), used_(adj.n()), temp_(adj.n()),
          scratch_(pattern.order(), Bitset(adj.n())), host_degree_(adj.n(), 0) {
        std::vector<std::size_t> position(pattern.order());
        for (std::size_t i = 0; i < order.size(); ++i) {
            position[order[i]] = i;
        }
        back_.resize(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            for (Vertex q : pattern.neighbours(order[i])) {
                if (position[q] < i) {
                    back_[i].push_back(q);
                }
            }
        }
        if (options.required) {
            required_left_ = options.required->count();
        }
        if (options.part_of) {
            part_count_.assign(options.capacity.size(), 0);
        }
    }

    // Returns true with image() filled, or false; budget_hit() tells why.
    bool run(Colour c) {
        colour_ = c;
        allowed_.for_each([&](std::size_t v) {
            host_degree_[v] = adj_.neighbours(c, static_cast<Vertex>(v)).intersection_count(allowed_);
        });
        return place(0);
    }

    const VertexList& image() const noexcept { return image_; }
    bool budget_hit() const noexcept { return budget_hit_; }

private:
    bool place(std::size_t depth) {
        if (depth == order_.size()) {
            return required_left_ == 0;
        }
        const Vertex p = order_[depth];
        const std::size_t remaining = order_.size() - depth;
        Bitset& domain = scratch_[depth];
        domain = allowed_;
        domain.subtract(used_);
        for (Vertex q : back_[depth]) {
            domain &= adj_.neighbours(colour_, image_[q]);
        }
        if (options_.required && required_left_ == remaining) {
            domain &= *options_.required;
        }
        const std::size_t need = pattern_.degree(p);
        std::vector<Vertex> candidates;
        domain.for_each([&](std::size_t h) {
            if (host_degree_[h] < need) {
                return;
            }
            if (options_.part_of) {
                auto part = (*options_.part_of)[h];
                if (part != EmbedOptions::no_part && part_count_[part] >= options_.capacity[part]) {
                    return;
                }
            }
            candidates.push_back(static_cast<Vertex>(h));
        });
        std::stable_sort(candidates.begin(), candidates.end(),
                         [&](Vertex a, Vertex b) { return host_degree_[a] < host_degree_[b]; });

        for (Vertex h : candidates) {
            if (options_.node_budget && nodes_ >= options_.node_budget) {
                budget_hit_ = true;
                return false;
            }
            ++nodes_;
            assign(p, h);
            if (forward_ok(p) && place(depth + 1)) {
                return true;
            }
            unassign(p, h);
            if (budget_hit_) {
                return false;
            }
        }
        return false;
    }

    void assign(Vertex p, Vertex h) {
        image_[p] = h;
        used_.set(h);
        if (options_.required && options_.required->test(h)) {
            --required_left_;
        }
        if (options_.part_of) {
            auto part = (*options_.part_of)[h];
            if (part != EmbedOptions::no_part) {
                ++part_count_[part];
            }
        }
    }

    void unassign(Vertex p, Vertex h) {
        image_[p] = unplaced;
        used_.reset(h);
        if (options_.required && options_.required->test(h)) {
            ++required_left_;
        }
        if (options_.part_of) {
            auto part = (*options_.part_of)[h];
            if (part != EmbedOptions::no_part) {
                --part_count_[part];
            }
        }
    }

    // Every unplaced neighbour of p still has a free common neighbour of its placed neighbours.
    bool forward_ok(Vertex p) {
        for (Vertex q : pattern_.neighbours(p)) {
            if (image_[q] != unplaced) {
                continue;
            }
            temp_ = allowed_;
            temp_.subtract(used_);
            for (Vertex w : pattern_.neighbours(q)) {
                if (image_[w] != unplaced) {
                    temp_ &= adj_.neighbours(colour_, image_[w]);
                }
            }
            if (temp_.none()) {
                return false;
            }
        }
        return true;
    }

    const ColourAdjacency& adj_;
    const Graph& pattern_;
    const Bitset& allowed_;
    const EmbedOptions& options_;
    const std::vector<Vertex>& order_;
    std::uint64_t& nodes_;
    Colour colour_ = 1;
    VertexList image_;
    Bitset used_;
    Bitset temp_;
    std::vector<Bitset> scratch_;
    std::vector<std::size_t> host_degree_;
    std::vector<std::vector<Vertex>> back_;
    std::vector<std::size_t> part_count_;
    std::size_t required_left_ = 0;
    bool budget_hit_ = false;
};

} // namespace

std::vector<Vertex> pattern_order(const Graph& pattern) {
    const std::size_t m = pattern.order();
    std::vector<Vertex> order;
    std::vector<bool> placed(m, false);
    std::vector<std::size_t> placed_neighbours(m, 0);
    order.reserve(m);
    for (std::size_t step = 0; step < m; ++step) {
        Vertex best = 0;
        bool found = false;
        for (Vertex v = 0; v < m; ++v) {
            if (placed[v]) {
                continue;
            }
            if (!found || placed_neighbours[v] > placed_neighbours[best] ||
                (placed_neighbours[v] == placed_neighbours[best] &&
                 pattern.degree(v) > pattern.degree(best))) {
                best = v;
                found = true;
            }
        }
        placed[best] = true;
        order.push_back(best);
        for (Vertex w : pattern.neighbours(best)) {
            ++placed_neighbours[w];
        }
    }
    return order;
}

EmbedResult find_mono_copy(const ColourAdjacency& adj, const Graph& pattern, const Bitset& allowed,
                           const EmbedOptions& options) {
    if (allowed.size() != adj.n()) {
        throw InvalidInput("allowed set sized for a different host");
    }
    if (options.colour && (*options.colour < 1 || *options.colour > adj.r())) {
        throw InvalidInput("colour out of range");
    }
    if (options.part_of && options.part_of->size() != adj.n()) {
        throw InvalidInput("part map sized for a different host");
    }
    EmbedResult result;
    if (pattern.order() > allowed.count()) {
        return result;
    }
    if (options.required) {
        if (!options.required->is_subset_of(allowed) || options.required->count() > pattern.order()) {
            return result;
        }
    }

    std::vector<Colour> colours;
    if (options.colour) {
        colours.push_back(*options.colour);
    } else if (pattern.edge_count() == 0) {
        colours.push_back(1);
    } else {
        for (Colour c = 1; c <= adj.r(); ++c) {
            colours.push_back(c);
        }
    }

    const auto order = pattern_order(pattern);
    for (Colour c : colours) {
        Search search(adj, pattern, allowed, options, order, result.nodes);
        if (search.run(c)) {
            result.embedding = Embedding{c, search.image()};
            return result;
        }
        if (search.budget_hit()) {
            result.exhausted = false;
            return result;
        }
    }
    return result;
}

std::optional<Embedding> find_mono_copy(const ColouredCompleteGraph& g, const Graph& pattern,
                                        std::optional<Colour> colour,
                                        std::span<const Vertex> allowed) {
    check_vertex_list(g.n(), allowed, "allowed");
    EmbedOptions options;
    options.colour = colour;
    return find_mono_copy(g.adjacency(), pattern, to_bitset(g.n(), allowed), options).embedding;
}

} // namespace monotile
