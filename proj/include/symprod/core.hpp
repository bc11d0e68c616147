// Permutations and finite real/complex tuples.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symprod {

/// Inputs of different lengths were combined.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed value (non-finite component, invalid permutation, bad partition, ...).
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration over permutations would exceed kBruteForceCap.
struct BruteForceTooLarge : std::length_error {
    using std::length_error::length_error;
};

/// Largest n for which the full permutation group is enumerated (8! = 40320).
inline constexpr std::size_t kBruteForceCap = 8;

inline std::size_t factorial(std::size_t n) {
    std::size_t r = 1;
    for (std::size_t k = 2; k <= n; ++k) r *= k;
    return r;
}

inline void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimensionMismatch(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
    }
}

namespace detail {
inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(const std::complex<double>& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}
}  // namespace detail

/// Ordered n-tuple with finite components. Element type is double or
/// std::complex<double>.
template <class T>
class Tuple {
public:
    using value_type = T;

    Tuple() = default;
    explicit Tuple(std::vector<T> components) : data_(std::move(components)) {
        for (std::size_t k = 0; k < data_.size(); ++k) {
            if (!detail::is_finite(data_[k])) {
                throw InvalidInput("tuple component " + std::to_string(k) + " is not finite");
            }
        }
    }
    Tuple(std::initializer_list<T> components) : Tuple(std::vector<T>(components)) {}

    std::size_t size() const noexcept { return data_.size(); }
    const T& operator[](std::size_t k) const { return data_[k]; }
    std::span<const T> components() const noexcept { return data_; }
    const std::vector<T>& vector() const noexcept { return data_; }
    auto begin() const noexcept { return data_.begin(); }
    auto end() const noexcept { return data_.end(); }

    friend bool operator==(const Tuple&, const Tuple&) = default;

private:
    std::vector<T> data_;
};

using RealTuple = Tuple<double>;
using ComplexTuple = Tuple<std::complex<double>>;

/// Bijection sigma on {0..n-1}. Applied to a tuple x it produces
/// (x[sigma(0)], ..., x[sigma(n-1)]).
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<std::size_t> mapping) : map_(std::move(mapping)) {
        std::vector<bool> seen(map_.size(), false);
        for (std::size_t image : map_) {
            if (image >= map_.size() || seen[image]) {
                throw InvalidInput("permutation mapping is not a bijection");
            }
            seen[image] = true;
        }
    }
    Permutation(std::initializer_list<std::size_t> mapping)
        : Permutation(std::vector<std::size_t>(mapping)) {}

    static Permutation identity(std::size_t n) {
        std::vector<std::size_t> m(n);
        std::iota(m.begin(), m.end(), std::size_t{0});
        return Permutation(std::move(m));
    }

    /// Builds from 1-based images, e.g. {2, 3, 1}.
    static Permutation from_one_based(std::span<const std::size_t> images) {
        std::vector<std::size_t> m;
        m.reserve(images.size());
        for (std::size_t v : images) {
            if (v == 0) throw InvalidInput("1-based permutation entry must be positive");
            m.push_back(v - 1);
        }
        return Permutation(std::move(m));
    }

    std::size_t size() const noexcept { return map_.size(); }
    std::size_t operator()(std::size_t k) const { return map_[k]; }
    const std::vector<std::size_t>& mapping() const noexcept { return map_; }

    bool is_identity() const noexcept {
        for (std::size_t k = 0; k < map_.size(); ++k)
            if (map_[k] != k) return false;
        return true;
    }

    /// Lengths of all cycles (fixed points included), sorted descending.
    std::vector<std::size_t> cycle_type() const {
        std::vector<std::size_t> lengths;
        std::vector<bool> seen(map_.size(), false);
        for (std::size_t start = 0; start < map_.size(); ++start) {
            if (seen[start]) continue;
            std::size_t len = 0;
            for (std::size_t k = start; !seen[k]; k = map_[k]) {
                seen[k] = true;
                ++len;
            }
            lengths.push_back(len);
        }
        std::sort(lengths.rbegin(), lengths.rend());
        return lengths;
    }

    /// Disjoint cycle notation with 1-based labels, fixed points omitted:
    /// "(1 2)(3 5 4)", or "()" for the identity.
    std::string cycle_notation() const {
        std::string out;
        std::vector<bool> seen(map_.size(), false);
        for (std::size_t start = 0; start < map_.size(); ++start) {
            if (seen[start] || map_[start] == start) continue;
            out += '(';
            for (std::size_t k = start; !seen[k]; k = map_[k]) {
                seen[k] = true;
                if (k != start) out += ' ';
                out += std::to_string(k + 1);
            }
            out += ')';
        }
        return out.empty() ? "()" : out;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.map_ <=> b.map_; }

private:
    std::vector<std::size_t> map_;
};

/// (first ∘ second)(k) = first(second(k)). With this convention
/// apply_perm(compose(s, t), x) == apply_perm(t, apply_perm(s, x)).
inline Permutation compose(const Permutation& first, const Permutation& second) {
    require_same_size(first.size(), second.size(), "compose");
    std::vector<std::size_t> m(first.size());
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = first(second(k));
    return Permutation(std::move(m));
}

inline Permutation invert(const Permutation& sigma) {
    std::vector<std::size_t> m(sigma.size());
    for (std::size_t k = 0; k < m.size(); ++k) m[sigma(k)] = k;
    return Permutation(std::move(m));
}

template <class T>
Tuple<T> apply_perm(const Permutation& sigma, const Tuple<T>& x) {
    require_same_size(sigma.size(), x.size(), "apply_perm");
    std::vector<T> out(x.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = x[sigma(k)];
    return Tuple<T>(std::move(out));
}

/// All n! permutations of {0..n-1} in lexicographic order of their mappings.
inline std::vector<Permutation> enumerate_perms(std::size_t n) {
    if (n == 0) throw InvalidInput("enumerate_perms: n must be positive");
    if (n > kBruteForceCap) {
        throw BruteForceTooLarge("brute force too large: n = " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(kBruteForceCap));
    }
    std::vector<Permutation> perms;
    perms.reserve(factorial(n));
    std::vector<std::size_t> m(n);
    std::iota(m.begin(), m.end(), std::size_t{0});
    do {
        perms.emplace_back(m);
    } while (std::next_permutation(m.begin(), m.end()));
    return perms;
}

/// Sum of absolute values (complex modulus for complex tuples).
template <class T>
double l1_norm(const Tuple<T>& x) {
    double s = 0.0;
    for (const T& v : x) s += std::abs(v);
    return s;
}

/// ||a - b||_1 without materializing the difference.
template <class T>
double l1_distance(const Tuple<T>& a, const Tuple<T>& b) {
    require_same_size(a.size(), b.size(), "l1_distance");
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += std::abs(a[k] - b[k]);
    return s;
}

}  // namespace symprod
