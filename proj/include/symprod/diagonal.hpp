// Diagonal sets, their stabilizers, and the order structure of the cone of
// non-descending vectors.
//
// For a partition of indices into blocks M_1..M_i (disjoint, each of size >= 2):
//   X(M) = { z : z_a == z_b whenever a, b share a block }
//   Y(M) = { sigma : apply_perm(sigma, z) == z for every z in X(M) }
// Y(M) is the product of the symmetric groups on the blocks.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "symprod/core.hpp"

namespace symprod {

/// Disjoint index blocks over {0..n-1}, each of size >= 2. Indices not in
/// any block are unconstrained. Stored normalized: each block ascending,
/// blocks ordered by their smallest index.
class BlockPartition {
public:
    using Block = std::vector<std::size_t>;

    explicit BlockPartition(std::size_t n, std::vector<Block> blocks = {})
        : n_(n), blocks_(std::move(blocks)) {
        std::vector<bool> used(n_, false);
        for (Block& b : blocks_) {
            if (b.size() < 2) throw InvalidInput("partition block must have at least 2 indices");
            std::sort(b.begin(), b.end());
            for (std::size_t k : b) {
                if (k >= n_) throw InvalidInput("partition index out of range");
                if (used[k]) throw InvalidInput("partition blocks are not disjoint");
                used[k] = true;
            }
        }
        std::sort(blocks_.begin(), blocks_.end(),
                  [](const Block& a, const Block& b) { return a.front() < b.front(); });
    }

    std::size_t n() const noexcept { return n_; }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    bool empty() const noexcept { return blocks_.empty(); }

    /// block_of()[k] is the block containing k, or npos.
    std::vector<std::size_t> block_of() const {
        std::vector<std::size_t> out(n_, npos);
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            for (std::size_t k : blocks_[b]) out[k] = b;
        return out;
    }

    /// True iff z lies in the diagonal set X of this partition.
    bool contains(const RealTuple& z) const {
        require_same_size(n_, z.size(), "BlockPartition::contains");
        for (const Block& b : blocks_)
            for (std::size_t k : b)
                if (z[k] != z[b.front()]) return false;
        return true;
    }

    friend bool operator==(const BlockPartition&, const BlockPartition&) = default;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::size_t n_;
    std::vector<Block> blocks_;
};

/// Blocks of the smallest diagonal set containing x: indices are grouped when
/// their values are within tol, closed transitively. Singletons are dropped, so
/// an empty result means all components are pairwise farther apart than tol.
inline BlockPartition equality_partition(const RealTuple& x, double tol = 0.0) {
    if (!(tol >= 0.0)) throw InvalidInput("equality_partition: tol must be nonnegative");
    std::vector<std::size_t> order(x.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&x](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    // In sorted order, the transitive closure of "within tol" is exactly the
    // set of maximal runs whose consecutive gaps are <= tol.
    std::vector<BlockPartition::Block> blocks;
    BlockPartition::Block run;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && x[order[i]] - x[order[i - 1]] > tol) {
            if (run.size() >= 2) blocks.push_back(run);
            run.clear();
        }
        run.push_back(order[i]);
    }
    if (run.size() >= 2) blocks.push_back(run);
    return BlockPartition(x.size(), std::move(blocks));
}

/// Explicit element list of Y(M), sorted lexicographically.
class Stabilizer {
public:
    Stabilizer(BlockPartition partition, std::vector<Permutation> elements)
        : partition_(std::move(partition)), elements_(std::move(elements)) {}

    const std::vector<Permutation>& elements() const noexcept { return elements_; }
    std::size_t order() const noexcept { return elements_.size(); }
    const BlockPartition& partition() const noexcept { return partition_; }

    /// Membership test without searching the element list: sigma must fix
    /// unconstrained indices and map every block into itself.
    bool contains(const Permutation& sigma) const {
        if (sigma.size() != partition_.n()) return false;
        const auto owner = partition_.block_of();
        for (std::size_t k = 0; k < sigma.size(); ++k) {
            if (owner[k] == BlockPartition::npos) {
                if (sigma(k) != k) return false;
            } else if (owner[sigma(k)] != owner[k]) {
                return false;
            }
        }
        return true;
    }

private:
    BlockPartition partition_;
    std::vector<Permutation> elements_;
};

/// Product of the symmetric groups on each block. Order = prod |M_j|!.
inline Stabilizer stabilizer_of(const BlockPartition& p) {
    std::size_t order = 1;
    for (const auto& b : p.blocks()) {
        if (b.size() > kBruteForceCap) {
            throw BruteForceTooLarge("stabilizer block of size " + std::to_string(b.size()) +
                                     " too large to enumerate");
        }
        order *= factorial(b.size());
        if (order > factorial(kBruteForceCap)) {
            throw BruteForceTooLarge("stabilizer order exceeds enumeration cap");
        }
    }
    if (p.n() == 0) return Stabilizer(p, {Permutation{}});

    std::vector<std::vector<std::size_t>> elements{Permutation::identity(p.n()).mapping()};
    for (const auto& block : p.blocks()) {
        std::vector<std::size_t> images = block;  // ascending
        std::vector<std::vector<std::size_t>> next;
        next.reserve(elements.size() * factorial(block.size()));
        for (const auto& base : elements) {
            std::vector<std::size_t> imgs = images;
            do {
                auto m = base;
                for (std::size_t i = 0; i < block.size(); ++i) m[block[i]] = imgs[i];
                next.push_back(std::move(m));
            } while (std::next_permutation(imgs.begin(), imgs.end()));
        }
        elements = std::move(next);
    }
    std::sort(elements.begin(), elements.end());
    std::vector<Permutation> perms;
    perms.reserve(elements.size());
    for (auto& m : elements) perms.emplace_back(std::move(m));
    return Stabilizer(p, std::move(perms));
}

/// Closest point of X(M) to x in the 1-norm: every block collapses to the
/// lower median of its components.
inline RealTuple nearest_diagonal_point(const RealTuple& x, const BlockPartition& p) {
    require_same_size(x.size(), p.n(), "nearest_diagonal_point");
    std::vector<double> out = x.vector();
    for (const auto& b : p.blocks()) {
        std::vector<double> vals;
        vals.reserve(b.size());
        for (std::size_t k : b) vals.push_back(x[k]);
        const auto mid = vals.begin() + static_cast<std::ptrdiff_t>((vals.size() - 1) / 2);
        std::nth_element(vals.begin(), mid, vals.end());
        for (std::size_t k : b) out[k] = *mid;
    }
    return RealTuple(std::move(out));
}

/// min over y in X(M) of ||x - y||_1.
inline double dist_to_diagonal(const RealTuple& x, const BlockPartition& p) {
    return l1_distance(x, nearest_diagonal_point(x, p));
}

/// ||apply_perm(sigma, x) - x||_1.
inline double perm_displacement(const RealTuple& x, const Permutation& sigma) {
    require_same_size(x.size(), sigma.size(), "perm_displacement");
    double s = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) s += std::abs(x[sigma(k)] - x[k]);
    return s;
}

/// Exact test x_1 <= x_2 <= ... <= x_n.
inline bool is_nondescending(const RealTuple& x) {
    return std::is_sorted(x.begin(), x.end());
}

enum class BoundaryClass { interior, boundary, exterior };

inline const char* to_string(BoundaryClass c) {
    switch (c) {
        case BoundaryClass::interior: return "interior";
        case BoundaryClass::boundary: return "boundary";
        case BoundaryClass::exterior: return "exterior";
    }
    return "?";
}

/// Position of x relative to the cone of non-descending vectors, exact
/// comparisons: strictly ascending is interior, non-descending with a tie is
/// boundary, anything else is exterior.
inline BoundaryClass boundary_class(const RealTuple& x) {
    bool tie = false;
    for (std::size_t k = 1; k < x.size(); ++k) {
        if (x[k - 1] > x[k]) return BoundaryClass::exterior;
        if (x[k - 1] == x[k]) tie = true;
    }
    return tie ? BoundaryClass::boundary : BoundaryClass::interior;
}

}  // namespace symprod
