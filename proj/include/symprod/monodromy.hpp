// Loop tracking for unordered complex tuples. Following a loop of complex
// tuples by minimal matchings and returning to the start can leave the labels
// permuted; a non-identity holonomy means no continuous ordered selection
// exists along that loop, unlike the real case where sorting always works.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "symprod/core.hpp"
#include "symprod/metric.hpp"

namespace symprod {

/// A step of a loop moves further than the anti-aliasing bound allows, or the
/// loop passes through a tuple with coincident components.
struct UndersampledLoop : std::runtime_error {
    UndersampledLoop(const std::string& what, std::size_t suggested)
        : std::runtime_error(what), suggested_steps(suggested) {}
    /// Step count expected to satisfy the bound; 0 when no refinement helps.
    std::size_t suggested_steps;
};

/// Cyclically ordered samples; the step after the last sample returns to
/// sample 0.
class ComplexLoop {
public:
    explicit ComplexLoop(std::vector<ComplexTuple> samples) : samples_(std::move(samples)) {
        if (samples_.empty()) throw InvalidInput("loop needs at least one sample");
        for (const auto& s : samples_) require_same_size(samples_.front().size(), s.size(), "loop sample");
    }

    const std::vector<ComplexTuple>& samples() const noexcept { return samples_; }
    std::size_t step_count() const noexcept { return samples_.size(); }
    std::size_t tuple_size() const noexcept { return samples_.front().size(); }

private:
    std::vector<ComplexTuple> samples_;
};

struct Holonomy {
    /// Label starting at position k of sample 0 ends at position permutation(k).
    Permutation permutation;
    double total_path_cost = 0.0;
    double max_step_cost = 0.0;
    double min_gap = 0.0;
    std::size_t steps = 0;
};

/// Minimal-cost matching from prev to next: prev[k] is paired with
/// next[sigma(k)]. For n <= kBruteForceCap, ties resolve to the
/// lexicographically smallest optimal sigma.
inline Permutation match_step(const ComplexTuple& prev, const ComplexTuple& next,
                              double* cost_out = nullptr) {
    require_same_size(prev.size(), next.size(), "match_step");
    Distance d = dist_assignment(prev, next);
    const std::size_t n = prev.size();
    if (n > 1 && n <= kBruteForceCap) {
        const double limit = d.value + 1e-12 * std::max(1.0, d.value);
        for (const Permutation& sigma : enumerate_perms(n)) {
            if (sigma == d.attaining_perm) break;
            double s = 0.0;
            for (std::size_t k = 0; k < n && s <= limit; ++k) s += std::abs(prev[k] - next[sigma(k)]);
            if (s <= limit) {
                d = {s, sigma};
                break;
            }
        }
    }
    if (cost_out) *cost_out = d.value;
    return d.attaining_perm;
}

/// Smallest distance between two components of any sample; infinity for n < 2.
inline double min_component_gap(const ComplexLoop& loop) {
    double gap = std::numeric_limits<double>::infinity();
    for (const auto& s : loop.samples())
        for (std::size_t j = 0; j < s.size(); ++j)
            for (std::size_t k = j + 1; k < s.size(); ++k) gap = std::min(gap, std::abs(s[j] - s[k]));
    return gap;
}

/// Per-sample positions of every label: labeling[i](k) is where the label that
/// sits at position k in sample 0 is found in sample i. Element step_count()
/// is the labeling after the closing step, i.e. the holonomy.
struct LoopTracking {
    std::vector<Permutation> labeling;
    std::vector<double> step_costs;
    double min_gap = 0.0;
};

inline LoopTracking track_labels(const ComplexLoop& loop) {
    const auto& s = loop.samples();
    const std::size_t count = s.size();
    LoopTracking t;
    t.min_gap = min_component_gap(loop);
    t.labeling.reserve(count + 1);
    t.labeling.push_back(Permutation::identity(loop.tuple_size()));
    t.step_costs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        double cost = 0.0;
        const Permutation sigma = match_step(s[i], s[(i + 1) % count], &cost);
        t.step_costs.push_back(cost);
        t.labeling.push_back(compose(sigma, t.labeling.back()));
    }

    const double max_cost = *std::max_element(t.step_costs.begin(), t.step_costs.end());
    const double bound = 0.5 * t.min_gap;
    if (!(max_cost < bound)) {
        if (t.min_gap == 0.0) {
            throw UndersampledLoop("undersampled loop: components collide, holonomy is undefined", 0);
        }
        const double factor = max_cost / bound;
        const auto suggested = static_cast<std::size_t>(std::ceil(2.0 * factor * static_cast<double>(count)));
        throw UndersampledLoop("undersampled loop: step cost " + std::to_string(max_cost) +
                                   " is not below half the minimal gap " + std::to_string(bound),
                               suggested);
    }
    return t;
}

inline Holonomy track_loop(const ComplexLoop& loop) {
    LoopTracking t = track_labels(loop);
    Holonomy h;
    h.permutation = t.labeling.back();
    for (double c : t.step_costs) h.total_path_cost += c;
    h.max_step_cost = *std::max_element(t.step_costs.begin(), t.step_costs.end());
    h.min_gap = t.min_gap;
    h.steps = loop.step_count();
    return h;
}

/// The k-th roots of radius * e^{i theta} at theta = 2 pi j / steps,
/// j = 0..steps-1. One turn of theta advances every root to the next one.
inline ComplexLoop roots_loop_generator(std::size_t k, std::size_t steps, double radius = 1.0) {
    if (k < 2) throw InvalidInput("roots_loop_generator: k must be at least 2");
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw InvalidInput("roots_loop_generator: radius must be positive and finite");
    if (steps < 8 * k) {
        throw UndersampledLoop("undersampled loop: " + std::to_string(steps) +
                                   " steps is below the minimum of 8k = " + std::to_string(8 * k),
                               8 * k);
    }
    const double modulus = std::pow(radius, 1.0 / static_cast<double>(k));
    const double two_pi = 2.0 * std::numbers::pi;
    std::vector<ComplexTuple> samples;
    samples.reserve(steps);
    for (std::size_t j = 0; j < steps; ++j) {
        const double theta = two_pi * static_cast<double>(j) / static_cast<double>(steps);
        std::vector<std::complex<double>> roots(k);
        for (std::size_t l = 0; l < k; ++l)
            roots[l] = std::polar(modulus, (theta + two_pi * static_cast<double>(l)) / static_cast<double>(k));
        samples.emplace_back(std::move(roots));
    }
    return ComplexLoop(std::move(samples));
}

/// Conjugacy class of sigma in words: "identity", "2-cycle", "3-cycle",
/// "2-cycle + 2-cycle", ... (fixed points omitted).
inline std::string describe_cycle_type(const Permutation& sigma) {
    std::string out;
    for (std::size_t len : sigma.cycle_type()) {
        if (len < 2) continue;
        if (!out.empty()) out += " + ";
        out += std::to_string(len) + "-cycle";
    }
    return out.empty() ? "identity" : out;
}

}  // namespace symprod
