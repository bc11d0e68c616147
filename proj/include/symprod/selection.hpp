// Sorting selection: psi maps each unordered tuple to its non-descending
// representative, and f = psi o phi lifts a sampled tuple-valued field to an
// ordered one. psi is an isometry for the matching distance, so the lift
// inherits every modulus of continuity of phi.
#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "symprod/core.hpp"
#include "symprod/metric.hpp"

namespace symprod {

using Edge = std::pair<std::size_t, std::size_t>;

/// Consecutive samples joined: (0,1), (1,2), ...
inline std::vector<Edge> path_adjacency(std::size_t count) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < count; ++i) edges.emplace_back(i - 1, i);
    return edges;
}

/// Sampled phi: one unordered tuple per domain point.
struct SampledField {
    std::size_t dim_m = 0;
    std::vector<RealTuple> points;
    std::vector<UnorderedTuple> values;
    std::vector<Edge> adjacency;

    std::size_t tuple_size() const { return values.empty() ? 0 : values.front().size(); }

    void validate() const {
        require_same_size(points.size(), values.size(), "SampledField points/values");
        for (const auto& p : points) require_same_size(dim_m, p.size(), "SampledField point");
        for (const auto& v : values) require_same_size(tuple_size(), v.size(), "SampledField value");
        for (const auto& [a, b] : adjacency) {
            if (a >= values.size() || b >= values.size())
                throw InvalidInput("SampledField adjacency references a missing sample");
        }
    }
};

/// Sampled f: ordered representatives on the same points and edges.
struct LiftedField {
    std::size_t dim_m = 0;
    std::vector<RealTuple> points;
    std::vector<RealTuple> values;
    std::vector<Edge> adjacency;
};

inline const RealTuple& canonicalize(const UnorderedTuple& x) { return x.canonical(); }

inline RealTuple canonicalize(const RealTuple& x) { return UnorderedTuple(x).canonical(); }

inline LiftedField lift_field(const SampledField& phi) {
    phi.validate();
    LiftedField f{phi.dim_m, phi.points, {}, phi.adjacency};
    f.values.reserve(phi.values.size());
    for (const auto& v : phi.values) f.values.push_back(canonicalize(v));
    return f;
}

struct ContinuityReport {
    /// max over edges with d > 0 of ||f_a - f_b||_1 / d(phi_a, phi_b); 1 when
    /// every edge has d == 0.
    double max_ratio = 1.0;
    std::optional<Edge> worst_edge;
    std::size_t edges_checked = 0;
    std::size_t zero_distance_edges = 0;
    /// Edges with d == 0 whose lifted values differ by more than 1e-12.
    std::size_t zero_distance_violations = 0;
};

inline constexpr double kZeroEdgeTolerance = 1e-12;

inline ContinuityReport continuity_report(const LiftedField& f, const SampledField& phi,
                                          Engine engine = Engine::sorted) {
    phi.validate();
    require_same_size(f.values.size(), phi.values.size(), "continuity_report");
    if (f.adjacency != phi.adjacency) throw InvalidInput("continuity_report: adjacency differs");

    ContinuityReport r;
    double worst = -1.0;
    for (const Edge& e : phi.adjacency) {
        ++r.edges_checked;
        const double lifted = l1_distance(f.values[e.first], f.values[e.second]);
        const double d = distance(phi.values[e.first].canonical(),
                                  phi.values[e.second].canonical(), engine)
                             .value;
        if (d == 0.0) {
            ++r.zero_distance_edges;
            if (lifted > kZeroEdgeTolerance) {
                ++r.zero_distance_violations;
                worst = std::numeric_limits<double>::infinity();
                r.worst_edge = e;
            }
            continue;
        }
        const double ratio = lifted / d;
        if (ratio > worst) {
            worst = ratio;
            r.worst_edge = e;
        }
    }
    if (worst >= 0.0) r.max_ratio = worst;
    return r;
}

}  // namespace symprod
