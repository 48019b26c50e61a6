#include "monotile/regularity.hpp"

#include <algorithm>
#include <numeric>

#include "monotile/error.hpp"
#include "monotile/rng.hpp"

namespace monotile {

namespace {

using Wide = __int128;

void check_sides(const ColourAdjacency& adj, Colour c, std::span<const Vertex> u1,
                 std::span<const Vertex> u2) {
    if (c < 1 || c > adj.r()) {
        throw InvalidInput("colour " + std::to_string(c) + " out of range");
    }
    std::vector<VertexList> parts{VertexList(u1.begin(), u1.end()), VertexList(u2.begin(), u2.end())};
    check_disjoint_parts(adj.n(), parts);
}

// eps = p / q with both small enough for 128-bit cross-multiplication.
std::pair<std::int64_t, std::int64_t> small_fraction(const Rational& eps) {
    BigInt p = boost::multiprecision::numerator(eps);
    BigInt q = boost::multiprecision::denominator(eps);
    const BigInt limit = BigInt(1) << 40;
    if (p > limit || q > limit) {
        throw InvalidInput("epsilon " + to_string(eps) + " has too large a numerator or denominator");
    }
    return {p.convert_to<std::int64_t>(), q.convert_to<std::int64_t>()};
}

Wide absolute(Wide x) { return x < 0 ? -x : x; }

} // namespace

std::uint64_t pair_edges(const ColourAdjacency& adj, Colour c, std::span<const Vertex> u1,
                         std::span<const Vertex> u2) {
    check_sides(adj, c, u1, u2);
    Bitset other = to_bitset(adj.n(), u2);
    std::uint64_t e = 0;
    for (Vertex v : u1) {
        e += adj.neighbours(c, v).intersection_count(other);
    }
    return e;
}

Rational pair_density(const ColourAdjacency& adj, Colour c, std::span<const Vertex> u1,
                      std::span<const Vertex> u2) {
    if (u1.empty() || u2.empty()) {
        throw DivisionUndefined("density of a pair with an empty side");
    }
    return Rational(BigInt(pair_edges(adj, c, u1, u2)), BigInt(u1.size() * u2.size()));
}

RegularityVerdict is_regular(const ColourAdjacency& adj, Colour c, std::span<const Vertex> v1,
                             std::span<const Vertex> v2, const Rational& eps,
                             const RegularityOptions& options) {
    check_sides(adj, c, v1, v2);
    if (eps <= 0) {
        throw InvalidInput("epsilon must be positive");
    }
    RegularityVerdict verdict;
    verdict.mode = options.mode;
    if (v1.empty() || v2.empty()) {
        return verdict;
    }
    const bool swapped = v2.size() < v1.size();
    std::span<const Vertex> a_side = swapped ? v2 : v1;
    std::span<const Vertex> b_side = swapped ? v1 : v2;
    const std::size_t a = a_side.size();
    const std::size_t b = b_side.size();
    const auto [p, q] = small_fraction(eps);
    const std::size_t s_min = std::max<std::size_t>(1, min_qualifying_size(eps, a));
    const std::size_t t_min = std::max<std::size_t>(1, min_qualifying_size(eps, b));
    if (s_min > a || t_min > b) {
        return verdict;
    }

    auto make_witness = [&](VertexList sa, VertexList sb, std::uint64_t e) {
        verdict.regular = false;
        const Rational total(BigInt(pair_edges(adj, c, a_side, b_side)), BigInt(a * b));
        verdict.deviation = abs(Rational(BigInt(e), BigInt(sa.size() * sb.size())) - total);
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (swapped) {
            verdict.witness = std::make_pair(std::move(sb), std::move(sa));
        } else {
            verdict.witness = std::make_pair(std::move(sa), std::move(sb));
        }
        return verdict;
    };

    if (options.mode == CheckMode::sampled) {
        Rng rng(options.seed);
        const Rational total = pair_density(adj, c, a_side, b_side);
        VertexList pool_a(a_side.begin(), a_side.end());
        VertexList pool_b(b_side.begin(), b_side.end());
        for (std::size_t trial = 0; trial < options.samples; ++trial) {
            const std::size_t s = rng.chance(1, 2) ? s_min : s_min + rng.below(a - s_min + 1);
            const std::size_t t = rng.chance(1, 2) ? t_min : t_min + rng.below(b - t_min + 1);
            rng.shuffle(pool_a);
            rng.shuffle(pool_b);
            VertexList sa(pool_a.begin(), pool_a.begin() + s);
            VertexList sb(pool_b.begin(), pool_b.begin() + t);
            const Rational dev = abs(pair_density(adj, c, sa, sb) - total);
            if (dev > eps) {
                return make_witness(std::move(sa), std::move(sb), pair_edges(adj, c, sa, sb));
            }
        }
        return verdict;
    }

    if (a > options.exact_cap || a > 30) {
        throw ModeError("exact regularity check needs the smaller side within the cap of " +
                        std::to_string(std::min<std::size_t>(options.exact_cap, 30)) + ", got " +
                        std::to_string(a));
    }

    // Bit i of masks[j] says a_side[i] is adjacent to b_side[j].
    std::vector<std::uint32_t> masks(b, 0);
    std::uint64_t total_edges = 0;
    for (std::size_t j = 0; j < b; ++j) {
        const Bitset& nb = adj.neighbours(c, b_side[j]);
        for (std::size_t i = 0; i < a; ++i) {
            if (nb.test(a_side[i])) {
                masks[j] |= std::uint32_t{1} << i;
                ++total_edges;
            }
        }
    }
    const Wide ab = static_cast<Wide>(a) * static_cast<Wide>(b);
    const Wide big_e = static_cast<Wide>(total_edges);

    std::vector<std::pair<std::uint32_t, std::uint32_t>> deg(b);  // (degree into S, index)
    std::vector<std::uint64_t> prefix(b + 1, 0);
    const std::uint64_t full = (std::uint64_t{1} << a) - 1;
    for (std::uint64_t s_mask = 1; s_mask <= full; ++s_mask) {
        const auto s = static_cast<std::size_t>(std::popcount(s_mask));
        if (s < s_min) {
            continue;
        }
        for (std::size_t j = 0; j < b; ++j) {
            deg[j] = {static_cast<std::uint32_t>(std::popcount(masks[j] & s_mask)),
                      static_cast<std::uint32_t>(j)};
        }
        std::sort(deg.begin(), deg.end(), [](auto x, auto y) { return x.first > y.first; });
        for (std::size_t j = 0; j < b; ++j) {
            prefix[j + 1] = prefix[j] + deg[j].first;
        }
        const std::uint64_t in_s = prefix[b];
        for (std::size_t t = t_min; t <= b; ++t) {
            const std::uint64_t hi = prefix[t];
            const std::uint64_t lo = in_s - prefix[b - t];
            const Wide st = static_cast<Wide>(s) * static_cast<Wide>(t);
            const Wide bound = static_cast<Wide>(p) * st * ab;
            for (int side = 0; side < 2; ++side) {
                const std::uint64_t e = side == 0 ? hi : lo;
                const Wide diff = absolute(static_cast<Wide>(e) * ab - big_e * st) * q;
                if (diff > bound) {
                    VertexList sa;
                    for (std::size_t i = 0; i < a; ++i) {
                        if ((s_mask >> i) & 1U) {
                            sa.push_back(a_side[i]);
                        }
                    }
                    VertexList sb;
                    for (std::size_t j = 0; j < t; ++j) {
                        sb.push_back(b_side[deg[side == 0 ? j : b - 1 - j].second]);
                    }
                    return make_witness(std::move(sa), std::move(sb), e);
                }
            }
        }
    }
    return verdict;
}

const char* to_string(SuperRegularFault fault) {
    switch (fault) {
    case SuperRegularFault::none:
        return "none";
    case SuperRegularFault::low_degree:
        return "low-degree";
    case SuperRegularFault::low_density:
        return "low-density";
    case SuperRegularFault::irregular:
        return "irregular";
    }
    return "?";
}

SuperRegularVerdict is_super_regular(const ColourAdjacency& adj, Colour c,
                                     std::span<const Vertex> v1, std::span<const Vertex> v2,
                                     const Rational& eps, const Rational& d, const Rational& delta,
                                     const RegularityOptions& options) {
    check_sides(adj, c, v1, v2);
    SuperRegularVerdict verdict;
    const Bitset b1 = to_bitset(adj.n(), v1);
    const Bitset b2 = to_bitset(adj.n(), v2);
    auto degree_ok = [&](std::span<const Vertex> from, const Bitset& into, std::size_t size) {
        for (Vertex v : from) {
            if (Rational(adj.neighbours(c, v).intersection_count(into)) < delta * size) {
                verdict.fault = SuperRegularFault::low_degree;
                verdict.low_degree_vertex = v;
                return false;
            }
        }
        return true;
    };
    if (!degree_ok(v1, b2, v2.size()) || !degree_ok(v2, b1, v1.size())) {
        return verdict;
    }
    if (!v1.empty() && !v2.empty()) {
        verdict.density = pair_density(adj, c, v1, v2);
        if (verdict.density < d) {
            verdict.fault = SuperRegularFault::low_density;
            return verdict;
        }
    }
    verdict.regularity = is_regular(adj, c, v1, v2, eps, options);
    if (!verdict.regularity.regular) {
        verdict.fault = SuperRegularFault::irregular;
    }
    return verdict;
}

} // namespace monotile
