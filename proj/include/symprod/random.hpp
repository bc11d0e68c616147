// Random instance generators shared by the property suite, tests and bench.
#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "symprod/core.hpp"
#include "symprod/diagonal.hpp"

namespace symprod::random {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi_inclusive) {
    return std::uniform_int_distribution<std::size_t>(lo, hi_inclusive)(rng);
}

inline RealTuple real_tuple(Rng& rng, std::size_t n, double lo = -10.0, double hi = 10.0) {
    std::vector<double> v(n);
    for (auto& c : v) c = uniform(rng, lo, hi);
    return RealTuple(std::move(v));
}

inline ComplexTuple complex_tuple(Rng& rng, std::size_t n, double lo = -10.0, double hi = 10.0) {
    std::vector<std::complex<double>> v(n);
    for (auto& c : v) c = {uniform(rng, lo, hi), uniform(rng, lo, hi)};
    return ComplexTuple(std::move(v));
}

inline Permutation permutation(Rng& rng, std::size_t n) {
    std::vector<std::size_t> m(n);
    std::iota(m.begin(), m.end(), std::size_t{0});
    std::shuffle(m.begin(), m.end(), rng);
    return Permutation(std::move(m));
}

/// Random blocks over {0..n-1}: a shuffled index list is cut into chunks of
/// size >= 2, and each chunk is kept or left unconstrained at random.
/// May return the empty partition.
inline BlockPartition partition(Rng& rng, std::size_t n) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<BlockPartition::Block> blocks;
    std::size_t pos = 0;
    while (n - pos >= 2) {
        const std::size_t len = uniform_index(rng, 2, n - pos);
        if (uniform_index(rng, 0, 3) != 0) {
            blocks.emplace_back(idx.begin() + static_cast<std::ptrdiff_t>(pos),
                                idx.begin() + static_cast<std::ptrdiff_t>(pos + len));
            pos += len;
        } else {
            pos += 1;
        }
    }
    return BlockPartition(n, std::move(blocks));
}

/// A point of the diagonal set X(p): one random common value per block.
inline RealTuple diagonal_point(Rng& rng, const BlockPartition& p, double lo = -10.0, double hi = 10.0) {
    std::vector<double> v = real_tuple(rng, p.n(), lo, hi).vector();
    for (const auto& b : p.blocks()) {
        const double c = uniform(rng, lo, hi);
        for (std::size_t k : b) v[k] = c;
    }
    return RealTuple(std::move(v));
}

/// Random vector with 1-norm uniformly distributed in [0, radius).
inline RealTuple l1_perturbation(Rng& rng, std::size_t n, double radius) {
    std::vector<double> v(n);
    double norm = 0.0;
    for (auto& c : v) {
        c = uniform(rng, -1.0, 1.0);
        norm += std::abs(c);
    }
    const double target = uniform(rng, 0.0, radius);
    const double scale = norm > 0.0 ? target / norm : 0.0;
    for (auto& c : v) c *= scale;
    return RealTuple(std::move(v));
}

inline RealTuple strictly_ascending(Rng& rng, std::size_t n) {
    std::vector<double> v(n);
    double cur = uniform(rng, -10.0, 0.0);
    for (auto& c : v) {
        c = cur;
        cur += uniform(rng, 0.01, 3.0);
    }
    return RealTuple(std::move(v));
}

/// Non-descending with at least one tie (n >= 2): strictly ascending values
/// with a random number of neighbours merged.
inline RealTuple boundary_tuple(Rng& rng, std::size_t n) {
    std::vector<double> v = strictly_ascending(rng, n).vector();
    if (n < 2) return RealTuple(std::move(v));
    const std::size_t merges = uniform_index(rng, 1, n - 1);
    for (std::size_t m = 0; m < merges; ++m) {
        const std::size_t i = uniform_index(rng, 1, n - 1);
        v[i] = v[i - 1];
    }
    return RealTuple(std::move(v));
}

/// Tuple that is not non-descending (n >= 2).
inline RealTuple exterior_tuple(Rng& rng, std::size_t n) {
    std::vector<double> v = real_tuple(rng, n).vector();
    if (std::is_sorted(v.begin(), v.end())) std::reverse(v.begin(), v.end());
    if (std::is_sorted(v.begin(), v.end())) v.front() = v.back() + 1.0;
    return RealTuple(std::move(v));
}

}  // namespace symprod::random
