// Minimum-cost perfect matching on a square cost matrix (Hungarian method,
// shortest augmenting path form with row/column potentials). O(n^3).
#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace symprod {

/// Dense row-major n x n cost matrix.
class CostMatrix {
public:
    explicit CostMatrix(std::size_t n) : n_(n), cost_(n * n, 0.0) {}

    std::size_t size() const noexcept { return n_; }
    double& operator()(std::size_t row, std::size_t col) { return cost_[row * n_ + col]; }
    double operator()(std::size_t row, std::size_t col) const { return cost_[row * n_ + col]; }

private:
    std::size_t n_;
    std::vector<double> cost_;
};

struct Assignment {
    /// row_to_col[r] is the column matched with row r.
    std::vector<std::size_t> row_to_col;
    double cost = 0.0;
};

inline Assignment solve_assignment(const CostMatrix& c) {
    const std::size_t n = c.size();
    constexpr double inf = std::numeric_limits<double>::infinity();

    // Index 0 is a sentinel column/row; real rows and columns are 1..n.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
    std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);  // match[col] = row
    std::vector<char> used(n + 1);

    for (std::size_t row = 1; row <= n; ++row) {
        match[0] = row;
        std::size_t col0 = 0;
        std::fill(minv.begin(), minv.end(), inf);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[col0] = 1;
            const std::size_t row0 = match[col0];
            double delta = inf;
            std::size_t col1 = 0;
            for (std::size_t col = 1; col <= n; ++col) {
                if (used[col]) continue;
                const double reduced = c(row0 - 1, col - 1) - u[row0] - v[col];
                if (reduced < minv[col]) {
                    minv[col] = reduced;
                    way[col] = col0;
                }
                if (minv[col] < delta) {
                    delta = minv[col];
                    col1 = col;
                }
            }
            if (col1 == 0) throw std::runtime_error("solve_assignment: non-finite cost");
            for (std::size_t col = 0; col <= n; ++col) {
                if (used[col]) {
                    u[match[col]] += delta;
                    v[col] -= delta;
                } else {
                    minv[col] -= delta;
                }
            }
            col0 = col1;
        } while (match[col0] != 0);
        // Flip the augmenting path.
        do {
            const std::size_t col1 = way[col0];
            match[col0] = match[col1];
            col0 = col1;
        } while (col0 != 0);
    }

    Assignment result;
    result.row_to_col.assign(n, 0);
    for (std::size_t col = 1; col <= n; ++col) result.row_to_col[match[col] - 1] = col - 1;
    // Primal cost, summed from the matrix.
    for (std::size_t row = 0; row < n; ++row) result.cost += c(row, result.row_to_col[row]);
    return result;
}

}  // namespace symprod
