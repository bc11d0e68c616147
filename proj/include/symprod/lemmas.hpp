// Randomized and exhaustive property checks for diagonal sets, stabilizers and
// the cone of non-descending vectors. Deterministic for a given seed.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "symprod/core.hpp"
#include "symprod/diagonal.hpp"
#include "symprod/random.hpp"

namespace symprod {

struct LemmaOptions {
    std::size_t n_min = 2;
    std::size_t n_max = 6;
    std::size_t trials = 200;
    std::uint64_t seed = 0;
    std::vector<double> epsilons{0.1, 1.0, 10.0};
    /// Mutation switch for testing the suite itself: the order predicate used
    /// by the rigidity checks accepts non-ascending instead of non-descending
    /// vectors, which must make the suite fail.
    bool inject_fault = false;
};

struct LemmaResult {
    std::string name;
    std::size_t n = 0;
    /// Individual assertions evaluated.
    std::size_t checks = 0;
    std::size_t violations = 0;
    bool passed() const noexcept { return violations == 0; }
};

namespace lemma_checks {

using OrderPredicate = std::function<bool(const RealTuple&)>;

inline OrderPredicate order_predicate(bool fault) {
    if (fault) {
        return [](const RealTuple& x) { return std::is_sorted(x.begin(), x.end(), std::greater<>{}); };
    }
    return [](const RealTuple& x) { return is_nondescending(x); };
}

/// Near a diagonal set, every stabilizer element moves x by less than 2 eps
/// whenever x is within eps of the set.
inline LemmaResult stabilizer_displacement(random::Rng& rng, std::size_t n, std::size_t trials,
                                           const std::vector<double>& epsilons) {
    LemmaResult r{"stabilizer_displacement", n};
    for (double eps : epsilons) {
        for (std::size_t t = 0; t < trials; ++t) {
            const BlockPartition p = random::partition(rng, n);
            const RealTuple base = random::diagonal_point(rng, p);
            const RealTuple delta = random::l1_perturbation(rng, n, eps);
            std::vector<double> v(n);
            for (std::size_t k = 0; k < n; ++k) v[k] = base[k] + delta[k];
            const RealTuple x(std::move(v));
            if (!(dist_to_diagonal(x, p) < eps)) continue;
            const Stabilizer stab = stabilizer_of(p);
            for (const Permutation& sigma : stab.elements()) {
                ++r.checks;
                if (!(perm_displacement(x, sigma) < 2.0 * eps)) ++r.violations;
            }
        }
    }
    return r;
}

/// Outside the cone, a 1-norm ball of radius (x_i - x_j)/4 around x, for an
/// inverted pair i < j, stays outside.
inline LemmaResult exterior_is_open(random::Rng& rng, std::size_t n, std::size_t trials) {
    LemmaResult r{"exterior_is_open", n};
    if (n < 2) return r;
    for (std::size_t t = 0; t < trials; ++t) {
        const RealTuple x = random::exterior_tuple(rng, n);
        double c = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) c = std::max(c, x[i] - x[j]);
        const double radius = c / 4.0;
        for (int s = 0; s < 8; ++s) {
            const RealTuple d = random::l1_perturbation(rng, n, radius);
            std::vector<double> y(n);
            for (std::size_t k = 0; k < n; ++k) y[k] = x[k] + d[k];
            ++r.checks;
            if (boundary_class(RealTuple(std::move(y))) != BoundaryClass::exterior) ++r.violations;
        }
    }
    return r;
}

/// A strictly ascending vector is sorted only by the identity.
inline LemmaResult interior_rigidity(random::Rng& rng, std::size_t n, std::size_t trials,
                                     const OrderPredicate& ordered) {
    LemmaResult r{"interior_rigidity", n};
    const auto perms = enumerate_perms(n);
    for (std::size_t t = 0; t < trials; ++t) {
        const RealTuple x = random::strictly_ascending(rng, n);
        ++r.checks;
        if (boundary_class(x) != BoundaryClass::interior) ++r.violations;
        for (const Permutation& sigma : perms) {
            if (sigma.is_identity()) continue;
            ++r.checks;
            if (ordered(apply_perm(sigma, x))) ++r.violations;
        }
    }
    return r;
}

/// Every boundary vector has two equal components.
inline LemmaResult boundary_has_tie(random::Rng& rng, std::size_t n, std::size_t trials) {
    LemmaResult r{"boundary_has_tie", n};
    if (n < 2) return r;
    for (std::size_t t = 0; t < trials; ++t) {
        const RealTuple x = random::boundary_tuple(rng, n);
        if (boundary_class(x) != BoundaryClass::boundary) continue;
        ++r.checks;
        if (equality_partition(x, 0.0).empty()) ++r.violations;
    }
    return r;
}

/// For a boundary vector and the minimal diagonal set containing it, every
/// permutation outside the stabilizer breaks the order, and every permutation
/// inside it fixes the vector.
inline LemmaResult minimal_diagonal_rigidity(random::Rng& rng, std::size_t n, std::size_t trials,
                                             const OrderPredicate& ordered) {
    LemmaResult r{"minimal_diagonal_rigidity", n};
    if (n < 2) return r;
    const auto perms = enumerate_perms(n);
    for (std::size_t t = 0; t < trials; ++t) {
        const RealTuple x = random::boundary_tuple(rng, n);
        const Stabilizer stab = stabilizer_of(equality_partition(x, 0.0));
        for (const Permutation& sigma : perms) {
            ++r.checks;
            const RealTuple moved = apply_perm(sigma, x);
            if (stab.contains(sigma)) {
                if (moved != x) ++r.violations;
            } else if (ordered(moved)) {
                ++r.violations;
            }
        }
    }
    return r;
}

/// |Y(M)| = prod |M_j|!, elements distinct, each fixing X(M) pointwise.
inline LemmaResult stabilizer_order(random::Rng& rng, std::size_t n, std::size_t trials) {
    LemmaResult r{"stabilizer_order", n};
    for (std::size_t t = 0; t < trials; ++t) {
        const BlockPartition p = random::partition(rng, n);
        const Stabilizer s = stabilizer_of(p);
        std::size_t expected = 1;
        for (const auto& b : p.blocks()) expected *= factorial(b.size());
        ++r.checks;
        if (s.order() != expected) ++r.violations;
        ++r.checks;
        if (std::adjacent_find(s.elements().begin(), s.elements().end()) != s.elements().end())
            ++r.violations;
        const RealTuple z = random::diagonal_point(rng, p);
        for (const Permutation& sigma : s.elements()) {
            ++r.checks;
            if (apply_perm(sigma, z) != z) ++r.violations;
        }
    }
    return r;
}

/// Closed-form distance to a diagonal set against a per-block scan of
/// candidate common values on a 1e-3 grid over [-10, 10].
inline LemmaResult diagonal_distance_grid(random::Rng& rng, std::size_t n, std::size_t trials) {
    LemmaResult r{"diagonal_distance_grid", n};
    const std::size_t grid_trials = std::min<std::size_t>(trials, 50);
    for (std::size_t t = 0; t < grid_trials; ++t) {
        const BlockPartition p = random::partition(rng, n);
        const RealTuple x = random::real_tuple(rng, n);
        double grid = 0.0;
        for (const auto& b : p.blocks()) {
            double best = std::numeric_limits<double>::infinity();
            for (int g = -10000; g <= 10000; ++g) {
                const double c = g * 1e-3;
                double s = 0.0;
                for (std::size_t k : b) s += std::abs(x[k] - c);
                best = std::min(best, s);
            }
            grid += best;
        }
        ++r.checks;
        if (std::abs(grid - dist_to_diagonal(x, p)) > 2e-3) ++r.violations;
    }
    return r;
}

}  // namespace lemma_checks

/// Runs every check for each n in [n_min, n_max]. Exhaustive permutation
/// checks require n <= 7.
inline std::vector<LemmaResult> run_lemma_suite(const LemmaOptions& opt) {
    if (opt.n_min < 1 || opt.n_min > opt.n_max) throw InvalidInput("lemma suite: invalid n range");
    if (opt.n_max > 7) throw BruteForceTooLarge("lemma suite: n must be at most 7");
    if (opt.trials == 0) throw InvalidInput("lemma suite: trials must be positive");

    using namespace lemma_checks;
    const auto ordered = order_predicate(opt.inject_fault);
    std::vector<LemmaResult> results;
    for (std::size_t n = opt.n_min; n <= opt.n_max; ++n) {
        // Separate streams per (n, check) keep results independent of which
        // other checks or sizes are run.
        auto rng_for = [&](std::uint32_t check) {
            std::seed_seq seq{static_cast<std::uint32_t>(opt.seed),
                              static_cast<std::uint32_t>(opt.seed >> 32),
                              static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(check)};
            return random::Rng(seq);
        };
        auto rng = rng_for(1);
        results.push_back(stabilizer_displacement(rng, n, opt.trials, opt.epsilons));
        rng = rng_for(2);
        results.push_back(exterior_is_open(rng, n, opt.trials));
        rng = rng_for(3);
        results.push_back(interior_rigidity(rng, n, opt.trials, ordered));
        rng = rng_for(4);
        results.push_back(boundary_has_tie(rng, n, opt.trials));
        rng = rng_for(5);
        results.push_back(minimal_diagonal_rigidity(rng, n, opt.trials, ordered));
        rng = rng_for(6);
        results.push_back(stabilizer_order(rng, n, opt.trials));
        rng = rng_for(7);
        results.push_back(diagonal_distance_grid(rng, n, opt.trials));
    }
    return results;
}

}  // namespace symprod
