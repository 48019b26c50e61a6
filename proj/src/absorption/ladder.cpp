#include "monotile/absorption.hpp"
#include "monotile/clique.hpp"
#include "monotile/error.hpp"

namespace monotile {

std::vector<Rational> density_ladder(const Rational& d_prime, const Rational& gamma, std::size_t k) {
    if (gamma < 0 || gamma >= 1) {
        throw PreconditionError("density_ladder needs 0 <= gamma < 1, got " + to_string(gamma));
    }
    if (d_prime <= 0 || d_prime > 1) {
        throw PreconditionError("density_ladder needs 0 < d' <= 1, got " + to_string(d_prime));
    }
    if (k < 2) {
        throw PreconditionError("density_ladder needs k >= 2");
    }
    const Rational top = 1 - pow(gamma, static_cast<unsigned>(k));
    std::vector<Rational> out;
    out.reserve(k);
    for (std::size_t i = 1; i <= k; ++i) {
        out.push_back((1 - pow(gamma, static_cast<unsigned>(i))) / top * d_prime);
    }
    return out;
}

namespace {

// (V_2, .., V_{i-1}, middle, U_{i+1}, .., U_k) for i in [2, k], indices relative to V_2.
std::vector<VertexList> mixed_parts(std::span<const VertexList> full, std::span<const VertexList> cyl,
                                    std::size_t i, const VertexList& middle) {
    std::vector<VertexList> out;
    for (std::size_t s = 2; s <= full.size() + 1; ++s) {
        if (s < i) {
            out.push_back(full[s - 2]);
        } else if (s == i) {
            out.push_back(middle);
        } else {
            out.push_back(cyl[s - 2]);
        }
    }
    return out;
}

} // namespace

LeftoverSplit split_leftover(const ColouredCompleteGraph& g, std::span<const Vertex> r,
                             std::span<const VertexList> full, std::span<const VertexList> cylinder,
                             const Rational& d_prime, const Rational& gamma, const Rational& eta,
                             Colour colour) {
    if (full.size() != cylinder.size() || full.empty()) {
        throw InvalidInput("split_leftover needs matching V_2..V_k and U_2..U_k");
    }
    if (eta <= 0) {
        throw PreconditionError("split_leftover needs eta > 0");
    }
    const std::size_t k = full.size() + 1;
    LeftoverSplit out;
    out.ladder = density_ladder(d_prime, gamma, k);
    out.t.assign(k - 1, {});
    out.t_prime.assign(k - 1, {});
    if (r.empty()) {
        return out;
    }
    std::vector<VertexList> tilde(k - 1);
    for (std::size_t s = 0; s + 1 < k; ++s) {
        tilde[s] = set_difference(full[s], cylinder[s]);
        if (tilde[s].empty()) {
            throw PreconditionError("split_leftover needs V_i \\ U_i nonempty for i = " + std::to_string(s + 2));
        }
    }
    const Rational gk = pow(gamma, static_cast<unsigned>(k));
    const Rational t_floor = d_prime + 2 * eta;
    std::vector<bool> assigned(g.n(), false);
    for (Vertex v : r) {
        if (clique_density(g, v, full, colour) < d_prime) {
            throw PreconditionError("split_leftover: vertex " + std::to_string(v) + " has density below d'");
        }
        // in_s[i] for i = 1..k: v in S_i.
        std::vector<bool> in_s(k + 1, false);
        std::vector<Rational> dd_s(k + 1, 0);
        dd_s[1] = clique_density(g, v, cylinder, colour);
        in_s[1] = dd_s[1] >= out.ladder[0];
        if (in_s[1]) {
            out.s1.push_back(v);
        }
        for (std::size_t i = 2; i <= k; ++i) {
            dd_s[i] = clique_density(g, v, mixed_parts(full, cylinder, i, full[i - 2]), colour);
            in_s[i] = dd_s[i] >= out.ladder[i - 1];
            const Rational dd_t = clique_density(g, v, mixed_parts(full, cylinder, i, tilde[i - 2]), colour);
            const bool in_t = dd_t > t_floor;
            if (in_t) {
                out.t[i - 2].push_back(v);
            }
            if (in_s[i] && !in_s[i - 1]) {
                // dd(V~_i) = dd(V_i) |V_i| / |V~_i| - dd(U_i) |U_i| / |V~_i| and the ladder step.
                const Rational vi(full[i - 2].size());
                const Rational ui(cylinder[i - 2].size());
                const Rational ti(tilde[i - 2].size());
                const Rational dd_u = clique_density(g, v, mixed_parts(full, cylinder, i, cylinder[i - 2]), colour);
                if (dd_t != dd_s[i] * vi / ti - dd_u * ui / ti) {
                    throw ClaimViolation("split_leftover: density identity fails at vertex " + std::to_string(v));
                }
                const Rational gi = ui / vi;
                const Rational step = (out.ladder[i - 1] - gi * out.ladder[i - 2]) / (1 - gi);
                if (!in_t) {
                    const bool chain = step >= d_prime / (1 - gk) && d_prime / (1 - gk) >= t_floor;
                    throw ClaimViolation("split_leftover: vertex " + std::to_string(v) + " is in S_" +
                                         std::to_string(i) + " \\ S_" + std::to_string(i - 1) +
                                         " but not in T_" + std::to_string(i) +
                                         (chain ? "" : " (gamma or eta outside the chain's range)"));
                }
            }
        }
        if (!in_s[k]) {
            throw ClaimViolation("split_leftover: vertex " + std::to_string(v) + " missing from S_k");
        }
    }
    for (Vertex v : out.s1) {
        assigned[v] = true;
    }
    for (std::size_t i = 0; i + 1 < k; ++i) {
        for (Vertex v : out.t[i]) {
            if (!assigned[v]) {
                out.t_prime[i].push_back(v);
                assigned[v] = true;
            }
        }
    }
    for (Vertex v : r) {
        if (!assigned[v]) {
            throw ClaimViolation("split_leftover: vertex " + std::to_string(v) + " lies in no S_1, T_i");
        }
    }
    return out;
}

} // namespace monotile
