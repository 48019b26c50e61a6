#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>

#include "monotile/error.hpp"
#include "monotile/exact_solver.hpp"

namespace monotile {

namespace {

// Row 0 patterns: all r^(n-1) sequences, or only nondecreasing ones that start at colour 1
// and step by at most one.
std::vector<std::vector<Colour>> first_rows(std::size_t n, Colour r, bool symmetry) {
    std::vector<std::vector<Colour>> rows;
    if (n < 2) {
        rows.emplace_back();
        return rows;
    }
    std::vector<Colour> row(n - 1, 1);
    if (symmetry) {
        auto extend = [&](auto&& self, std::size_t pos) -> void {
            if (pos == row.size()) {
                rows.push_back(row);
                return;
            }
            const Colour prev = pos == 0 ? Colour{0} : row[pos - 1];
            for (Colour c = pos == 0 ? Colour{1} : prev; c <= std::min<Colour>(r, static_cast<Colour>(prev + 1)); ++c) {
                row[pos] = c;
                self(self, pos + 1);
            }
        };
        extend(extend, 0);
        return rows;
    }
    while (true) {
        rows.push_back(row);
        std::size_t i = 0;
        while (i < row.size() && row[i] == r) {
            row[i++] = 1;
        }
        if (i == row.size()) {
            break;
        }
        ++row[i];
    }
    return rows;
}

struct Cell {
    std::size_t value = 0;
    std::uint64_t index = 0;
    bool seen = false;
    bool optimal = true;
};

} // namespace

TilingNumberResult tiling_number(std::size_t n, Colour r, const FamilySpec& family,
                                 const TilingNumberOptions& options) {
    if (n == 0 || r == 0) {
        throw InvalidInput("tiling_number needs n >= 1 and r >= 1");
    }
    if (n > std::min(options.solver.cap, PieceTable::max_order)) {
        throw PreconditionError("tiling_number: n exceeds the solver cap");
    }
    const bool symmetry = options.symmetry.value_or(n >= 6);
    const auto rows = first_rows(n, r, symmetry);
    const std::size_t pairs = n * (n - 1) / 2;
    const std::size_t tail = pairs - (n - 1 < pairs ? n - 1 : pairs);
    if (static_cast<double>(tail) * std::log2(static_cast<double>(r)) > 60.0) {
        throw PreconditionError("tiling_number: colouring space too large to index");
    }
    std::uint64_t rest = 1;
    for (std::size_t i = 0; i < tail; ++i) {
        rest *= r;
    }
    const bool complete = rest <= options.max_colourings / rows.size();
    const std::uint64_t total = complete ? rows.size() * rest : options.max_colourings;

    auto decode = [&](std::uint64_t index) {
        std::vector<Colour> upper(pairs);
        const auto& row = rows[index / rest];
        std::copy(row.begin(), row.end(), upper.begin());
        std::uint64_t x = index % rest;
        for (std::size_t i = n - 1; i < pairs; ++i) {
            upper[i] = static_cast<Colour>(1 + x % r);
            x /= r;
        }
        return upper;
    };
    const bool fast = family.kind() == FamilyKind::cycles || family.kind() == FamilyKind::paths ||
                      family.kind() == FamilyKind::stars;
    auto solve = [&](const std::vector<Colour>& upper, bool& optimal) {
        std::size_t value;
        if (fast) {
            std::vector<std::vector<std::uint32_t>> adj(r, std::vector<std::uint32_t>(n, 0));
            std::size_t k = 0;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j, ++k) {
                    adj[upper[k] - 1][i] |= std::uint32_t{1} << j;
                    adj[upper[k] - 1][j] |= std::uint32_t{1} << i;
                }
            }
            const auto cover = min_mask_cover(PieceTable(n, r, adj, family), options.solver.node_budget);
            optimal = cover.optimal;
            value = cover.feasible ? cover.pieces.size() : 0;
        } else {
            const auto res = min_tiling(ColouredCompleteGraph(n, r, upper), family, options.solver);
            optimal = res.optimal;
            value = res.feasible ? res.size : 0;
        }
        return value;
    };

    const unsigned workers = std::max(1u, options.workers);
    std::vector<Cell> cells(workers);
    auto work = [&](unsigned w) {
        const std::uint64_t chunk = (total + workers - 1) / workers;
        const std::uint64_t begin = std::min<std::uint64_t>(total, chunk * w);
        const std::uint64_t end = std::min<std::uint64_t>(total, begin + chunk);
        Cell& cell = cells[w];
        for (std::uint64_t index = begin; index < end; ++index) {
            bool optimal = true;
            const std::size_t value = solve(decode(index), optimal);
            cell.optimal = cell.optimal && optimal;
            if (!cell.seen || value > cell.value) {
                cell.value = value;
                cell.index = index;
                cell.seen = true;
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back(work, w);
        }
        for (auto& t : threads) {
            t.join();
        }
    }

    TilingNumberResult out;
    out.colourings = total;
    out.complete = complete;
    const Cell* best = nullptr;
    for (const auto& cell : cells) {
        out.optimal = out.optimal && cell.optimal;
        if (cell.seen && (!best || cell.value > best->value)) {
            best = &cell;
        }
    }
    if (best) {
        out.value = best->value;
        out.extremal = ColouredCompleteGraph(n, r, decode(best->index));
    }
    return out;
}

LehelReport lehel_check(std::size_t n, unsigned workers) {
    if (n == 0 || n > 8) {
        throw PreconditionError("lehel_check enumerates 2^(n choose 2) colourings; needs 1 <= n <= 8");
    }
    const std::size_t pairs = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << pairs;
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    const FamilySpec cycles = FamilySpec::cycles();

    struct Tally {
        std::uint64_t above = 0;
        std::uint64_t no_split = 0;
        std::size_t worst = 0;
        std::optional<std::uint64_t> first_bad;
    };
    workers = std::max(1u, workers);
    std::vector<Tally> tallies(workers);
    auto work = [&](unsigned w) {
        const std::uint64_t chunk = (total + workers - 1) / workers;
        const std::uint64_t begin = std::min<std::uint64_t>(total, chunk * w);
        const std::uint64_t end = std::min<std::uint64_t>(total, begin + chunk);
        std::vector<std::vector<std::uint32_t>> adj(2, std::vector<std::uint32_t>(n));
        Tally& tally = tallies[w];
        for (std::uint64_t code = begin; code < end; ++code) {
            for (auto& a : adj) {
                std::fill(a.begin(), a.end(), 0);
            }
            std::size_t k = 0;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j, ++k) {
                    const auto c = (code >> k) & 1U;
                    adj[c][i] |= std::uint32_t{1} << j;
                    adj[c][j] |= std::uint32_t{1} << i;
                }
            }
            const PieceTable table(n, 2, adj, cycles);
            const auto cover = min_mask_cover(table);
            const std::size_t value = cover.pieces.size();
            tally.worst = std::max(tally.worst, value);
            bool split = false;
            for (std::uint32_t set = 0; set <= full && !split; ++set) {
                const std::uint32_t other = full & ~set;
                split = (set == 0 || table.piece(1, set)) && (other == 0 || table.piece(2, other));
            }
            const bool bad = value > 2 || !split;
            tally.above += value > 2;
            tally.no_split += !split;
            if (bad && !tally.first_bad) {
                tally.first_bad = code;
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back(work, w);
        }
        for (auto& t : threads) {
            t.join();
        }
    }
    LehelReport out;
    out.n = n;
    out.colourings = total;
    for (const auto& t : tallies) {
        out.min_above_two += t.above;
        out.no_two_colour_split += t.no_split;
        out.worst = std::max(out.worst, t.worst);
        if (t.first_bad && !out.counterexample) {
            std::vector<Colour> upper(pairs);
            for (std::size_t k = 0; k < pairs; ++k) {
                upper[k] = static_cast<Colour>(1 + ((*t.first_bad >> k) & 1U));
            }
            out.counterexample = ColouredCompleteGraph(n, 2, upper);
        }
    }
    return out;
}

} // namespace monotile
