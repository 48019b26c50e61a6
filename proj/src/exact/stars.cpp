#include <algorithm>

#include "monotile/error.hpp"
#include "monotile/stars.hpp"

namespace monotile {

namespace {

class StarSearch {
public:
    StarSearch(const ColouredCompleteGraph& g, std::uint64_t budget) : g_(g), budget_(budget) {
        const std::size_t n = g.n();
        closed_.assign(g.r(), std::vector<Bitset>(n, Bitset(n)));
        for (Colour c = 1; c <= g.r(); ++c) {
            for (Vertex v = 0; v < n; ++v) {
                closed_[c - 1][v] = g.neighbours(c, v);
                closed_[c - 1][v].set(v);
                widest_ = std::max(widest_, closed_[c - 1][v].count());
            }
        }
        is_centre_.assign(n, false);
    }

    std::size_t widest() const noexcept { return widest_; }
    const Bitset& closed(Vertex v, Colour c) const { return closed_[c - 1][v]; }
    std::uint64_t nodes() const noexcept { return nodes_; }
    bool stopped() const noexcept { return stopped_; }

    // Whether `slots` stars can cover every vertex; on success `chosen` holds the centres.
    bool solve(std::size_t slots) {
        chosen.clear();
        buffers_.assign(slots + 1, Bitset(g_.n()));
        Bitset all(g_.n());
        for (Vertex v = 0; v < g_.n(); ++v) {
            all.set(v);
        }
        return dfs(all, slots);
    }

    std::vector<std::pair<Vertex, Colour>> chosen;

private:
    bool dfs(const Bitset& uncovered, std::size_t slots) {
        if (uncovered.none()) {
            return true;
        }
        if (slots == 0 || stopped_) {
            return false;
        }
        if (budget_ && nodes_ >= budget_) {
            stopped_ = true;
            return false;
        }
        ++nodes_;
        if (uncovered.count() > slots * widest_) {
            return false;
        }
        const auto u = static_cast<Vertex>(uncovered.first());
        std::vector<std::pair<std::size_t, std::pair<Vertex, Colour>>> options;
        for (Colour c = 1; c <= g_.r(); ++c) {
            options.push_back({closed(u, c).intersection_count(uncovered), {u, c}});
        }
        for (Vertex v = 0; v < g_.n(); ++v) {
            if (v != u && !is_centre_[v]) {
                const Colour c = g_.colour(u, v);
                options.push_back({closed(v, c).intersection_count(uncovered), {v, c}});
            }
        }
        std::stable_sort(options.begin(), options.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });
        Bitset& next = buffers_[slots - 1];
        for (const auto& [gain, choice] : options) {
            if (uncovered.count() - gain > (slots - 1) * widest_) {
                break;
            }
            next = uncovered;
            next.subtract(closed(choice.first, choice.second));
            is_centre_[choice.first] = true;
            chosen.push_back(choice);
            if (dfs(next, slots - 1)) {
                is_centre_[choice.first] = false;
                return true;
            }
            chosen.pop_back();
            is_centre_[choice.first] = false;
            if (stopped_) {
                return false;
            }
        }
        return false;
    }

    const ColouredCompleteGraph& g_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool stopped_ = false;
    std::size_t widest_ = 0;
    std::vector<std::vector<Bitset>> closed_;
    std::vector<bool> is_centre_;
    std::vector<Bitset> buffers_;
};

std::vector<std::pair<Vertex, Colour>> greedy_centres(const ColouredCompleteGraph& g, const StarSearch& s) {
    Bitset uncovered(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
        uncovered.set(v);
    }
    std::vector<bool> centre(g.n(), false);
    std::vector<std::pair<Vertex, Colour>> out;
    while (uncovered.any()) {
        std::size_t best_gain = 0;
        std::pair<Vertex, Colour> best{0, 1};
        for (Vertex v = 0; v < g.n(); ++v) {
            if (centre[v]) {
                continue;
            }
            for (Colour c = 1; c <= g.r(); ++c) {
                const std::size_t gain = s.closed(v, c).intersection_count(uncovered);
                if (gain > best_gain) {
                    best_gain = gain;
                    best = {v, c};
                }
            }
        }
        centre[best.first] = true;
        uncovered.subtract(s.closed(best.first, best.second));
        out.push_back(best);
    }
    return out;
}

Tiling stars_from_centres(const ColouredCompleteGraph& g, const std::vector<std::pair<Vertex, Colour>>& centres) {
    Tiling t;
    std::vector<bool> taken(g.n(), false);
    for (const auto& [v, c] : centres) {
        taken[v] = true;
        t.pieces.push_back(Piece{c, {v}});
    }
    for (Vertex w = 0; w < g.n(); ++w) {
        if (taken[w]) {
            continue;
        }
        for (std::size_t i = 0; i < centres.size(); ++i) {
            if (g.colour(centres[i].first, w) == centres[i].second) {
                t.pieces[i].map.push_back(w);
                taken[w] = true;
                break;
            }
        }
        if (!taken[w]) {
            throw Error("star centres do not cover vertex " + std::to_string(w));
        }
    }
    return t;
}

Real to_real(const Rational& q) {
    return Real(boost::multiprecision::numerator(q)) / Real(boost::multiprecision::denominator(q));
}

} // namespace

StarCoverResult min_star_cover(const ColouredCompleteGraph& g, const StarCoverOptions& options) {
    StarSearch search(g, options.node_budget);
    StarCoverResult out;
    out.lower_bound = (g.n() + search.widest() - 1) / search.widest();
    if (g.n() <= options.cap) {
        for (std::size_t slots = out.lower_bound; slots <= g.n(); ++slots) {
            if (search.solve(slots)) {
                out.centres = search.chosen;
                out.optimal = true;
                break;
            }
            if (search.stopped()) {
                break;
            }
        }
    }
    out.nodes = search.nodes();
    if (!out.optimal) {
        out.centres = greedy_centres(g, search);
    }
    out.size = out.centres.size();
    out.tiling = stars_from_centres(g, out.centres);
    return out;
}

StarsBound stars_union_bound(std::size_t n, std::size_t r, std::size_t tau) {
    if (n <= tau) {
        throw PreconditionError("stars_union_bound needs n > tau");
    }
    if (r == 0) {
        throw InvalidInput("stars_union_bound needs r >= 1");
    }
    StarsBound out;
    out.n = n;
    out.r = r;
    out.tau = tau;
    const Rational q = 1 - Rational(1, r);
    const auto exponent = static_cast<unsigned>(tau);
    out.per_choice = pow(1 - pow(q, exponent), static_cast<unsigned>(n - tau));
    out.choices = 1;
    for (std::size_t i = 0; i < tau; ++i) {
        out.choices *= (n - i);
        out.choices *= r;
    }
    out.union_bound = out.per_choice * Rational(out.choices);
    out.certifies = out.union_bound < 1;

    using boost::multiprecision::exp;
    using boost::multiprecision::sqrt;
    const Real nr(n);
    const Real q_tau = to_real(pow(q, exponent));
    const Real q_tau1 = to_real(pow(q, exponent + 1));
    const Real decay = exp(-Real(4 * tau) / Real(r));
    const Real e0 = to_real(out.per_choice);
    const Real e1 = exp(-Real(n - tau) * q_tau);
    const Real e2 = exp(-nr * q_tau1);
    const Real e3 = exp(-nr * decay);
    const Real e4 = exp(-sqrt(nr));
    out.links.push_back({"P <= exp(-(n-tau) q^tau)", e0, e1, e0 <= e1});
    out.links.push_back({"exp(-(n-tau) q^tau) <= exp(-n q^(tau+1))", e1, e2,
                         Rational(n - tau) * pow(q, exponent) >= Rational(n) * pow(q, exponent + 1)});
    out.links.push_back({"exp(-n q^(tau+1)) <= exp(-n e^(-4 tau/r))", e2, e3, q_tau1 >= decay});
    out.links.push_back({"exp(-n e^(-4 tau/r)) <= exp(-sqrt n)", e3, e4, nr * decay >= sqrt(nr)});
    const Real rn = Real(r) * nr;
    out.printed_reading = boost::multiprecision::pow(rn, -Real(tau)) * e4;
    out.corrected_reading = boost::multiprecision::pow(rn, Real(tau)) * e4;
    return out;
}

std::size_t stars_tau(std::size_t n, std::size_t r) {
    if (n == 0) {
        throw InvalidInput("stars_tau needs n >= 1");
    }
    const Real value = Real(r) * boost::multiprecision::log(Real(n) / 8);
    if (value <= 0) {
        return 0;
    }
    return static_cast<std::size_t>(boost::multiprecision::ceil(value));
}

CertificationScan scan_certification(std::size_t r, std::size_t from, std::size_t to) {
    CertificationScan out;
    for (std::size_t n = std::max<std::size_t>(from, 1); n <= to; ++n) {
        const std::size_t tau = stars_tau(n, r);
        if (tau >= n) {
            continue;
        }
        auto row = stars_union_bound(n, r, tau);
        if (tau >= 1 && row.certifies) {
            if (!out.first_certified) {
                out.first_certified = n;
            }
            out.last_certified = n;
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

} // namespace monotile
