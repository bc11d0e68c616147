#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "symprod/assignment.hpp"
#include "symprod/random.hpp"

using namespace symprod;

TEST(Assignment, TextbookFourByFour) {
    const double raw[4][4] = {{82, 83, 69, 92}, {77, 37, 49, 92}, {11, 69, 5, 86}, {8, 9, 98, 23}};
    CostMatrix c(4);
    std::vector<std::vector<double>> rows(4, std::vector<double>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) c(i, j) = rows[i][j] = raw[i][j];
    double best = 1e300;
    for (const auto& m : oracle::all_mappings(4)) {
        double s = 0;
        for (int i = 0; i < 4; ++i) s += rows[i][m[i]];
        best = std::min(best, s);
    }
    const Assignment a = solve_assignment(c);
    EXPECT_DOUBLE_EQ(a.cost, best);
    EXPECT_DOUBLE_EQ(a.cost, 140.0);
    EXPECT_EQ(std::set<std::size_t>(a.row_to_col.begin(), a.row_to_col.end()).size(), 4u);
}

TEST(Assignment, EmptyAndSingle) {
    EXPECT_EQ(solve_assignment(CostMatrix(0)).cost, 0.0);
    CostMatrix one(1);
    one(0, 0) = 2.5;
    const auto a = solve_assignment(one);
    EXPECT_EQ(a.cost, 2.5);
    EXPECT_EQ(a.row_to_col, std::vector<std::size_t>{0});
}

TEST(Assignment, RandomMatricesAgreeWithEnumeration) {
    random::Rng rng(99);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = random::uniform_index(rng, 1, 7);
        CostMatrix c(n);
        std::vector<std::vector<double>> rows(n, std::vector<double>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) c(i, j) = rows[i][j] = random::uniform(rng, -5, 20);
        double best = 1e300;
        for (const auto& m : oracle::all_mappings(n)) {
            double s = 0;
            for (std::size_t i = 0; i < n; ++i) s += rows[i][m[i]];
            best = std::min(best, s);
        }
        EXPECT_NEAR(solve_assignment(c).cost, best, 1e-9);
    }
}

TEST(Assignment, RejectsNonFiniteCost) {
    CostMatrix c(2);
    c(0, 0) = c(0, 1) = std::numeric_limits<double>::infinity();
    EXPECT_THROW(solve_assignment(c), std::runtime_error);
}
