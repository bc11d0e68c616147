// Matching distance on unordered n-tuples:
//   d(y, z) = min over sigma of || y - apply_perm(sigma, z) ||_1
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "symprod/assignment.hpp"
#include "symprod/core.hpp"

namespace symprod {

/// A point of the symmetric product: the multiset of a RealTuple, stored as
/// its non-descending representative.
class UnorderedTuple {
public:
    UnorderedTuple() = default;
    explicit UnorderedTuple(const RealTuple& any_order) {
        std::vector<double> v = any_order.vector();
        std::sort(v.begin(), v.end());
        canonical_ = RealTuple(std::move(v));
    }
    UnorderedTuple(std::initializer_list<double> values) : UnorderedTuple(RealTuple(values)) {}

    const RealTuple& canonical() const noexcept { return canonical_; }
    std::size_t size() const noexcept { return canonical_.size(); }

    friend bool operator==(const UnorderedTuple&, const UnorderedTuple&) = default;

private:
    RealTuple canonical_;
};

struct Distance {
    double value = 0.0;
    /// Minimizer sigma: y[k] is paired with z[sigma(k)].
    Permutation attaining_perm;
};

enum class Engine { sorted, assignment, brute };

inline std::string_view engine_name(Engine e) {
    switch (e) {
        case Engine::sorted: return "sorted";
        case Engine::assignment: return "assignment";
        case Engine::brute: return "brute";
    }
    return "?";
}

inline Engine parse_engine(std::string_view name) {
    if (name == "sorted") return Engine::sorted;
    if (name == "assignment") return Engine::assignment;
    if (name == "brute") return Engine::brute;
    throw InvalidInput("unknown engine '" + std::string(name) + "'");
}

/// Exhaustive minimum over all n! permutations. Ties go to the
/// lexicographically smallest mapping.
template <class T>
Distance dist_bruteforce(const Tuple<T>& y, const Tuple<T>& z) {
    require_same_size(y.size(), z.size(), "dist_bruteforce");
    const std::size_t n = y.size();
    if (n == 0) return {0.0, Permutation{}};
    if (n > kBruteForceCap) {
        throw BruteForceTooLarge("brute force too large: n = " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(kBruteForceCap));
    }
    std::vector<std::size_t> m(n);
    std::iota(m.begin(), m.end(), std::size_t{0});
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> best_map = m;
    do {
        double s = 0.0;
        for (std::size_t k = 0; k < n && s < best; ++k) s += std::abs(y[k] - z[m[k]]);
        if (s < best) {
            best = s;
            best_map = m;
        }
    } while (std::next_permutation(m.begin(), m.end()));
    return {best, Permutation(std::move(best_map))};
}

namespace detail {
inline std::vector<std::size_t> stable_argsort(const RealTuple& x) {
    std::vector<std::size_t> idx(x.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&x](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    return idx;
}
}  // namespace detail

/// Pairs the i-th smallest component of y with the i-th smallest of z.
/// On the real line this pairing is optimal for the 1-norm cost.
inline Distance dist_sorted(const RealTuple& y, const RealTuple& z) {
    require_same_size(y.size(), z.size(), "dist_sorted");
    const auto ay = detail::stable_argsort(y);
    const auto az = detail::stable_argsort(z);
    std::vector<std::size_t> m(y.size());
    double s = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        m[ay[i]] = az[i];
        s += std::abs(y[ay[i]] - z[az[i]]);
    }
    return {s, Permutation(std::move(m))};
}

template <class T>
Distance dist_assignment(const Tuple<T>& y, const Tuple<T>& z) {
    require_same_size(y.size(), z.size(), "dist_assignment");
    const std::size_t n = y.size();
    CostMatrix c(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) c(j, k) = std::abs(y[j] - z[k]);
    Assignment a = solve_assignment(c);
    return {a.cost, Permutation(std::move(a.row_to_col))};
}

inline Distance distance(const RealTuple& y, const RealTuple& z, Engine engine = Engine::sorted) {
    switch (engine) {
        case Engine::sorted: return dist_sorted(y, z);
        case Engine::assignment: return dist_assignment(y, z);
        case Engine::brute: return dist_bruteforce(y, z);
    }
    return dist_sorted(y, z);
}

/// Complex tuples have no sorted engine; Engine::sorted falls back to the
/// assignment solver.
inline Distance distance(const ComplexTuple& y, const ComplexTuple& z,
                         Engine engine = Engine::assignment) {
    return engine == Engine::brute ? dist_bruteforce(y, z) : dist_assignment(y, z);
}

inline double distance(const UnorderedTuple& a, const UnorderedTuple& b) {
    require_same_size(a.size(), b.size(), "distance");
    return l1_distance(a.canonical(), b.canonical());
}

}  // namespace symprod
