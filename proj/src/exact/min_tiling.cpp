#include <algorithm>
#include <bit>

#include "monotile/embedder.hpp"
#include "monotile/error.hpp"
#include "monotile/exact_solver.hpp"

namespace monotile {

namespace {

std::vector<bool> available_sizes(const FamilySpec& family, std::size_t n) {
    std::vector<bool> ok(n + 1, false);
    for (std::size_t m = 1; m <= n; ++m) {
        try {
            (void)family.member(m);
            ok[m] = true;
        } catch (const Error&) {
        }
    }
    return ok;
}

std::vector<std::vector<std::uint32_t>> adjacency_masks(const ColouredCompleteGraph& g) {
    std::vector<std::vector<std::uint32_t>> adj(g.r(), std::vector<std::uint32_t>(g.n(), 0));
    for (Vertex u = 0; u < g.n(); ++u) {
        for (Vertex v = 0; v < g.n(); ++v) {
            if (u != v) {
                adj[g.colour(u, v) - 1][u] |= std::uint32_t{1} << v;
            }
        }
    }
    return adj;
}

bool has_fast_path(const FamilySpec& family) {
    const auto kind = family.kind();
    return kind == FamilyKind::cycles || kind == FamilyKind::paths || kind == FamilyKind::stars;
}

Bitset mask_to_bitset(std::size_t n, std::uint32_t set) {
    Bitset b(n);
    for (std::size_t v = 0; v < n; ++v) {
        if ((set >> v) & 1U) {
            b.set(v);
        }
    }
    return b;
}

Tiling tiling_from_masks(const ColouredCompleteGraph& g, const FamilySpec& family,
                         const std::vector<std::pair<std::uint32_t, Colour>>& pieces) {
    Tiling out;
    for (const auto& [set, colour] : pieces) {
        EmbedOptions opts;
        opts.colour = colour;
        auto res = find_mono_copy(g.adjacency(), family.member(std::popcount(set)), mask_to_bitset(g.n(), set), opts);
        if (!res.embedding) {
            throw Error("piece table and embedder disagree on a vertex set");
        }
        out.pieces.push_back(Piece{res.embedding->colour, res.embedding->map});
    }
    return out;
}

} // namespace

PieceTable::PieceTable(const ColouredCompleteGraph& g, const FamilySpec& family) : n_(g.n()), r_(g.r()) {
    if (n_ > max_order) {
        throw InvalidInput("piece table supports at most " + std::to_string(max_order) + " vertices");
    }
    if (has_fast_path(family)) {
        fill_fast(adjacency_masks(g), family);
        return;
    }
    const std::uint32_t sets = std::uint32_t{1} << n_;
    table_.assign(r_, std::vector<std::uint8_t>(sets, 0));
    const auto ok = available_sizes(family, n_);
    std::vector<Graph> members(n_ + 1);
    for (std::size_t m = 1; m <= n_; ++m) {
        if (ok[m]) {
            members[m] = family.member(m);
        }
    }
    for (std::uint32_t set = 1; set < sets; ++set) {
        const auto m = static_cast<std::size_t>(std::popcount(set));
        if (!ok[m]) {
            continue;
        }
        const Bitset allowed = mask_to_bitset(n_, set);
        for (Colour c = 1; c <= r_; ++c) {
            EmbedOptions opts;
            opts.colour = c;
            table_[c - 1][set] = find_mono_copy(g.adjacency(), members[m], allowed, opts).embedding ? 1 : 0;
        }
    }
    finish();
}

PieceTable::PieceTable(std::size_t n, Colour r, const std::vector<std::vector<std::uint32_t>>& adj,
                       const FamilySpec& family)
    : n_(n), r_(r) {
    if (n_ > max_order) {
        throw InvalidInput("piece table supports at most " + std::to_string(max_order) + " vertices");
    }
    if (!has_fast_path(family)) {
        throw InvalidInput("adjacency-mask piece tables cover cycles, paths and stars only");
    }
    fill_fast(adj, family);
}

void PieceTable::fill_fast(const std::vector<std::vector<std::uint32_t>>& adj, const FamilySpec& family) {
    const std::uint32_t sets = std::uint32_t{1} << n_;
    table_.assign(r_, std::vector<std::uint8_t>(sets, 0));
    std::vector<std::uint32_t> ends(sets);
    for (Colour c = 1; c <= r_; ++c) {
        const auto& a = adj[c - 1];
        auto& t = table_[c - 1];
        switch (family.kind()) {
        case FamilyKind::cycles: {
            // ends[S]: endpoints of Hamiltonian paths of S starting at the lowest vertex of S.
            std::fill(ends.begin(), ends.end(), 0);
            for (std::size_t v = 0; v < n_; ++v) {
                ends[std::uint32_t{1} << v] = std::uint32_t{1} << v;
            }
            for (std::uint32_t set = 1; set < sets; ++set) {
                const std::uint32_t e = ends[set];
                if (!e) {
                    continue;
                }
                const auto low = std::countr_zero(set);
                std::uint32_t reach = 0;
                for (std::uint32_t bits = e; bits; bits &= bits - 1) {
                    reach |= a[std::countr_zero(bits)];
                }
                std::uint32_t next = reach & ~set & ~((std::uint32_t{2} << low) - 1);
                for (; next; next &= next - 1) {
                    const std::uint32_t w = next & (~next + 1);
                    ends[set | w] |= w;
                }
                const int size = std::popcount(set);
                if (size <= 2) {
                    t[set] = 1;
                } else {
                    t[set] = (e & a[low]) ? 1 : 0;
                }
            }
            // Two vertices are a piece only when joined in this colour.
            for (std::size_t u = 0; u < n_; ++u) {
                for (std::size_t v = u + 1; v < n_; ++v) {
                    const std::uint32_t set = (std::uint32_t{1} << u) | (std::uint32_t{1} << v);
                    t[set] = ((a[u] >> v) & 1U) ? 1 : 0;
                }
            }
            break;
        }
        case FamilyKind::paths: {
            std::fill(ends.begin(), ends.end(), 0);
            for (std::size_t v = 0; v < n_; ++v) {
                ends[std::uint32_t{1} << v] = std::uint32_t{1} << v;
            }
            for (std::uint32_t set = 1; set < sets; ++set) {
                const std::uint32_t e = ends[set];
                if (!e) {
                    continue;
                }
                t[set] = 1;
                std::uint32_t reach = 0;
                for (std::uint32_t bits = e; bits; bits &= bits - 1) {
                    reach |= a[std::countr_zero(bits)];
                }
                for (std::uint32_t next = reach & ~set; next; next &= next - 1) {
                    const std::uint32_t w = next & (~next + 1);
                    ends[set | w] |= w;
                }
            }
            break;
        }
        case FamilyKind::stars:
            for (std::uint32_t set = 1; set < sets; ++set) {
                for (std::uint32_t bits = set; bits; bits &= bits - 1) {
                    const auto v = std::countr_zero(bits);
                    if (((set & ~(std::uint32_t{1} << v)) & ~a[v]) == 0) {
                        t[set] = 1;
                        break;
                    }
                }
            }
            break;
        default:
            break;
        }
    }
    const auto ok = available_sizes(family, n_);
    for (auto& t : table_) {
        for (std::uint32_t set = 1; set < sets; ++set) {
            if (!ok[static_cast<std::size_t>(std::popcount(set))]) {
                t[set] = 0;
            }
        }
    }
    finish();
}

void PieceTable::finish() {
    const std::uint32_t sets = std::uint32_t{1} << n_;
    any_.assign(sets, 0);
    for (std::uint32_t set = 1; set < sets; ++set) {
        for (Colour c = 1; c <= r_; ++c) {
            if (table_[c - 1][set]) {
                any_[set] = c;
                break;
            }
        }
    }
}

namespace {

class CoverSearch {
public:
    CoverSearch(const PieceTable& table, std::uint64_t budget) : table_(table), budget_(budget) {
        const std::uint32_t sets = std::uint32_t{1} << table.n();
        for (std::uint32_t set = 1; set < sets; ++set) {
            if (table.any_colour(set)) {
                largest_ = std::max<std::size_t>(largest_, std::popcount(set));
            }
        }
        best_size_ = table.n() + 1;
    }

    MaskCover run() {
        MaskCover out;
        const std::uint32_t full = table_.n() >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << table_.n()) - 1;
        if (largest_ > 0) {
            floor_ = (table_.n() + largest_ - 1) / largest_;
            dfs(full);
        }
        out.feasible = best_size_ <= table_.n();
        out.pieces = best_;
        out.optimal = !stopped_;
        out.nodes = nodes_;
        return out;
    }

private:
    void dfs(std::uint32_t uncovered) {
        if (stopped_ || done_) {
            return;
        }
        if (budget_ && nodes_ >= budget_) {
            stopped_ = true;
            return;
        }
        ++nodes_;
        if (!uncovered) {
            if (current_.size() < best_size_) {
                best_size_ = current_.size();
                best_ = current_;
                done_ = best_size_ <= floor_;
            }
            return;
        }
        const std::size_t left = static_cast<std::size_t>(std::popcount(uncovered));
        if (current_.size() + (left + largest_ - 1) / largest_ >= best_size_) {
            return;
        }
        const std::uint32_t low = uncovered & (~uncovered + 1);
        const std::uint32_t rest = uncovered & ~low;
        std::vector<std::uint32_t> options;
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            if (table_.any_colour(sub | low)) {
                options.push_back(sub | low);
            }
            if (sub == 0) {
                break;
            }
        }
        std::stable_sort(options.begin(), options.end(), [](std::uint32_t a, std::uint32_t b) {
            return std::popcount(a) > std::popcount(b);
        });
        for (std::uint32_t piece : options) {
            current_.emplace_back(piece, table_.any_colour(piece));
            dfs(uncovered & ~piece);
            current_.pop_back();
            if (stopped_ || done_) {
                return;
            }
        }
    }

    const PieceTable& table_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::size_t largest_ = 0;
    std::size_t floor_ = 0;
    std::size_t best_size_ = 0;
    bool stopped_ = false;
    bool done_ = false;
    std::vector<std::pair<std::uint32_t, Colour>> current_;
    std::vector<std::pair<std::uint32_t, Colour>> best_;
};

} // namespace

MaskCover min_mask_cover(const PieceTable& table, std::uint64_t node_budget) {
    return CoverSearch(table, node_budget).run();
}

MinTilingResult min_tiling(const ColouredCompleteGraph& g, const FamilySpec& family,
                           const MinTilingOptions& options) {
    const std::size_t cap = std::min(options.cap, PieceTable::max_order);
    if (g.n() > cap) {
        throw PreconditionError("min_tiling supports n <= " + std::to_string(cap) + ", got " +
                                std::to_string(g.n()));
    }
    const PieceTable table(g, family);
    const auto cover = min_mask_cover(table, options.node_budget);
    MinTilingResult out;
    out.feasible = cover.feasible;
    out.optimal = cover.optimal;
    out.nodes = cover.nodes;
    if (cover.feasible) {
        out.tiling = tiling_from_masks(g, family, cover.pieces);
        out.size = out.tiling.size();
    }
    return out;
}

std::optional<Tiling> two_colour_partition(const ColouredCompleteGraph& g, const FamilySpec& family) {
    const PieceTable table(g, family);
    const std::uint32_t full = (std::uint32_t{1} << g.n()) - 1;
    for (std::uint32_t set = 0; set <= full; ++set) {
        const std::uint32_t other = full & ~set;
        for (Colour c1 = 1; c1 <= g.r(); ++c1) {
            if (set && !table.piece(c1, set)) {
                continue;
            }
            for (Colour c2 = 1; c2 <= g.r(); ++c2) {
                if (set && other && c2 == c1) {
                    continue;
                }
                if (other && !table.piece(c2, other)) {
                    continue;
                }
                std::vector<std::pair<std::uint32_t, Colour>> pieces;
                if (set) {
                    pieces.emplace_back(set, c1);
                }
                if (other) {
                    pieces.emplace_back(other, c2);
                }
                return tiling_from_masks(g, family, pieces);
            }
        }
    }
    return std::nullopt;
}

} // namespace monotile
