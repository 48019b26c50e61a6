#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "monotile/coloured_graph.hpp"
#include "monotile/error.hpp"
#include "monotile/rational.hpp"

namespace monotile {

enum class CheckMode { exact, sampled };

struct RegularityOptions {
    CheckMode mode = CheckMode::exact;
    std::size_t exact_cap = 16;   // exact mode: the smaller side may have at most this many vertices
    std::size_t samples = 2000;   // sampled mode: subset pairs drawn
    std::uint64_t seed = 1;
};

struct RegularityVerdict {
    bool regular = true;
    std::optional<std::pair<VertexList, VertexList>> witness;  // (U_1, U_2) when refuted
    CheckMode mode = CheckMode::exact;
    Rational deviation = 0;  // |d(U_1, U_2) - d(V_1, V_2)| of the witness

    explicit operator bool() const noexcept { return regular; }
};

// e(U_1, U_2) / (|U_1| |U_2|) in colour c. Throws DivisionUndefined on an empty side and
// InvalidInput when the sides overlap.
Rational pair_density(const ColourAdjacency& adj, Colour c, std::span<const Vertex> u1,
                      std::span<const Vertex> u2);

std::uint64_t pair_edges(const ColourAdjacency& adj, Colour c, std::span<const Vertex> u1,
                         std::span<const Vertex> u2);

// Exact mode enumerates every subset of the smaller side of every qualifying size and, for each,
// the extreme subsets of the other side, so it decides regularity exactly. Sampled mode can only
// refute. A pair with an empty side is regular. Throws ModeError above the exact cap.
RegularityVerdict is_regular(const ColourAdjacency& adj, Colour c, std::span<const Vertex> v1,
                             std::span<const Vertex> v2, const Rational& eps,
                             const RegularityOptions& options = {});

enum class SuperRegularFault { none, low_degree, low_density, irregular };

const char* to_string(SuperRegularFault fault);

struct SuperRegularVerdict {
    SuperRegularFault fault = SuperRegularFault::none;
    RegularityVerdict regularity;
    std::optional<Vertex> low_degree_vertex;
    Rational density = 0;

    bool ok() const noexcept { return fault == SuperRegularFault::none; }
    explicit operator bool() const noexcept { return ok(); }
};

// Minimum-degree conjunct first, then density, then regularity.
SuperRegularVerdict is_super_regular(const ColourAdjacency& adj, Colour c,
                                     std::span<const Vertex> v1, std::span<const Vertex> v2,
                                     const Rational& eps, const Rational& d, const Rational& delta,
                                     const RegularityOptions& options = {});

struct SuperRegularParams {
    Rational eps;
    Rational d;
    Rational delta;
};

// (max(eps / beta, 2 eps), d - eps). Requires beta > eps > 0.
std::pair<Rational, Rational> slice_parameters(const Rational& eps, const Rational& d,
                                               const Rational& beta);

struct RobustResult {
    VertexList first;
    VertexList second;
    SuperRegularParams params;  // (8 eps, d - 8 eps, delta / 2)
};

// ((V_1 \ X_1) u Y_1, (V_2 \ X_2) u Y_2). Checks 0 < eps < 1/2, delta >= 4 eps, the size bounds
// |X_i|, |Y_i| <= eps^2 |V_i| and the degree of every Y vertex into the opposite side; throws
// PreconditionError naming the violated bound.
RobustResult robust_update(const ColourAdjacency& adj, Colour c, std::span<const Vertex> v1,
                           std::span<const Vertex> v2, std::span<const Vertex> x1,
                           std::span<const Vertex> x2, std::span<const Vertex> y1,
                           std::span<const Vertex> y2, const Rational& eps, const Rational& d,
                           const Rational& delta);

struct Cylinder {
    std::vector<VertexList> parts;
    std::optional<Colour> colour;
    std::optional<SuperRegularParams> tag;

    std::size_t k() const noexcept { return parts.size(); }
    std::size_t vertex_count() const noexcept;
    VertexList vertices() const;  // sorted union
    // max part <= (1 + eps) min part
    bool is_balanced(const Rational& eps = 0) const;
};

// Exact super-regularity of every pair of the cylinder in `colour`.
bool cylinder_is_super_regular(const ColourAdjacency& adj, Colour c, const Cylinder& z,
                               const SuperRegularParams& params,
                               const RegularityOptions& options = {});

// An eps-regular pair with d(V_i, V_j) < threshold would need fewer than eps |V_i| low-degree
// vertices; this carries the offending part pair and its low-degree set.
class TrimContradiction : public PreconditionError {
public:
    TrimContradiction(const std::string& what, std::size_t part, std::size_t other, VertexList low)
        : PreconditionError(what), part_(part), other_(other), low_(std::move(low)) {}
    std::size_t part() const noexcept { return part_; }
    std::size_t other() const noexcept { return other_; }
    const VertexList& low_degree_set() const noexcept { return low_; }

private:
    std::size_t part_;
    std::size_t other_;
    VertexList low_;
};

struct TrimResult {
    Cylinder cylinder;  // tagged (2 eps, d - k eps, d - k eps)
    std::vector<VertexList> removed;
};

// Removes from every part its low-degree vertices, padded with the lowest-degree remaining ones
// to exactly floor((k - 1) eps |V_i|). Requires eps <= 1/(2k) and z.colour.
TrimResult trim_to_super_regular(const ColourAdjacency& adj, const Cylinder& z, const Rational& eps,
                                 const Rational& d);

} // namespace monotile
