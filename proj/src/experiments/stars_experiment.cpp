#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "monotile/experiments.hpp"
#include "monotile/rng.hpp"
#include "monotile/stars.hpp"

namespace monotile {

namespace {

struct Cell {
    std::size_t row = 0;
    std::size_t sample = 0;
    std::size_t value = 0;
    bool done = false;
    bool optimal = true;
};

std::string fixed(double x, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

} // namespace

StarsExperiment run_stars_experiment(Colour r, std::span<const std::size_t> ns, std::size_t samples,
                                     std::uint64_t seed, const StarsOptions& options) {
    StarsExperiment out;
    out.r = r;
    out.seed = seed;
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        StarsRow row;
        row.n = ns[i];
        row.samples = samples;
        row.reference = row.n >= 1 ? r * std::log(static_cast<double>(row.n) / 8.0) : 0.0;
        out.rows.push_back(row);
        for (std::size_t s = 0; s < std::max<std::size_t>(samples, 1); ++s) {
            cells.push_back({i, s});
        }
    }

    const Deadline deadline(options.budget_ms);
    StarCoverOptions cover;
    cover.cap = options.cap;
    cover.node_budget = options.node_budget;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t c = next++; c < cells.size(); c = next++) {
            if (deadline.expired()) {
                continue;
            }
            Cell& cell = cells[c];
            const std::size_t n = out.rows[cell.row].n;
            Rng rng(derive_seed(seed, n, cell.sample));
            const auto g = samples == 0 ? ColouredCompleteGraph(n, r, 1) : ColouredCompleteGraph::random(n, r, rng);
            const auto res = min_star_cover(g, cover);
            cell.value = res.size;
            cell.optimal = res.optimal;
            cell.done = true;
        }
    };
    const unsigned workers = std::max(1u, options.workers);
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }

    for (std::size_t i = 0; i < out.rows.size(); ++i) {
        StarsRow& row = out.rows[i];
        std::vector<std::size_t> values;
        for (const Cell& cell : cells) {
            if (cell.row != i) {
                continue;
            }
            if (!cell.done || !cell.optimal) {
                row.partial = true;
            }
            if (cell.done) {
                values.push_back(cell.value);
            }
        }
        row.completed = values.size();
        if (values.empty()) {
            continue;
        }
        std::sort(values.begin(), values.end());
        row.min = values.front();
        row.max = values.back();
        const std::size_t m = values.size();
        row.median = m % 2 ? static_cast<double>(values[m / 2])
                           : (static_cast<double>(values[m / 2 - 1]) + static_cast<double>(values[m / 2])) / 2.0;
    }

    if (options.scan_limit > 0) {
        const auto scan = scan_certification(r, 1, options.scan_limit);
        out.first_certified = scan.first_certified;
        out.last_certified = scan.last_certified;
        out.scan_limit = options.scan_limit;
    }
    return out;
}

bool StarsExperiment::median_nondecreasing() const {
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].n >= rows[i - 1].n && rows[i].median < rows[i - 1].median) {
            return false;
        }
    }
    return true;
}

std::string StarsExperiment::csv() const {
    std::ostringstream out;
    out << "r,n,samples,completed,min,median,max,reference_r_ln_n_over_8,partial,first_certified_n,last_certified_n\n";
    auto opt = [](const std::optional<std::size_t>& x) { return x ? std::to_string(*x) : std::string("none"); };
    for (const auto& row : rows) {
        out << r << ',' << row.n << ',' << row.samples << ',' << row.completed << ',' << row.min << ','
            << fixed(row.median, 1) << ',' << row.max << ',' << fixed(row.reference) << ',' << (row.partial ? 1 : 0)
            << ',' << opt(first_certified) << ',' << opt(last_certified) << '\n';
    }
    return out.str();
}

std::string StarsExperiment::plot_data() const {
    std::ostringstream out;
    out << "# n min median max reference\n";
    for (const auto& row : rows) {
        out << row.n << ' ' << row.min << ' ' << fixed(row.median, 1) << ' ' << row.max << ' ' << fixed(row.reference)
            << '\n';
    }
    return out.str();
}

} // namespace monotile
