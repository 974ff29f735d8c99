#include <gtest/gtest.h>

#include <random>

#include <ktjurina/linalg.hpp>

#include "independent_oracle.hpp"

using namespace ktjurina;

namespace {

Matrix<Integer> from_rows(const std::vector<std::vector<long>>& rows) {
    Matrix<Integer> m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

} // namespace

TEST(Rank, SmallCases) {
    EXPECT_EQ(rank_fraction_free(from_rows({{1, 2}, {2, 4}})), 1u);
    EXPECT_EQ(rank_fraction_free(from_rows({{0, 0}, {0, 0}})), 0u);
    EXPECT_EQ(rank_fraction_free(from_rows({{0, 1, 2}, {0, 3, 4}, {0, 5, 6}})), 2u);
    EXPECT_EQ(rank_fraction_free(Matrix<Integer>(0, 4)), 0u);
    // full rank mod p only after reduction would drop it: entries divisible by p
    Matrix<Integer> m = from_rows({{1, 0}, {0, 1}});
    m(1, 1) = Integer(default_prime);
    EXPECT_EQ(rank_fraction_free(m), 2u);
    EXPECT_EQ(rank_sparse(m), 2u);
    EXPECT_EQ(rank_mod_prime(m), 1u);
    EXPECT_EQ(rank_sparse(from_rows({{0, 6, 4}, {0, 3, 2}, {5, 0, 1}})), 2u);
    EXPECT_EQ(rank_sparse(std::vector<SparseRow>{}), 0u);
}

// Bareiss and the sparse elimination agree with textbook Gauss-Jordan over Q on
// random low-rank matrices, and the modular rank never exceeds them.
TEST(RankProperty, MatchesRationalGaussJordan) {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> dim(1, 9);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int trial = 0; trial < 300; ++trial) {
        const int rows = dim(rng), cols = dim(rng), inner = dim(rng);
        // product of rows x inner and inner x cols has rank <= inner
        std::vector<std::vector<long>> a(rows, std::vector<long>(inner)), b(inner, std::vector<long>(cols));
        for (auto& r : a)
            for (auto& x : r) x = entry(rng);
        for (auto& r : b)
            for (auto& x : r) x = entry(rng) * (trial % 3 == 0 ? 0 : 1) + (trial % 3 == 0 ? entry(rng) % 2 : 0);
        Matrix<Integer> m(rows, cols);
        std::vector<std::vector<Rational>> q(rows, std::vector<Rational>(cols));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                long v = 0;
                for (int k = 0; k < inner; ++k) v += a[i][k] * b[k][j];
                m(i, j) = v;
                q[i][j] = v;
            }
        const auto exact = rank_fraction_free(m);
        EXPECT_EQ(exact, reference::gauss_rank(q));
        EXPECT_EQ(rank_sparse(m), exact);
        EXPECT_LE(rank_mod_prime(m), exact);
    }
}

TEST(NullSpace, Basis) {
    Matrix<Rational> m(2, 3);
    m(0, 0) = 2; m(0, 1) = 0; m(0, 2) = -1;
    m(1, 0) = 0; m(1, 1) = 3; m(1, 2) = -1;
    auto basis = null_space(m);
    ASSERT_EQ(basis.size(), 1u);
    const auto& v = basis[0];
    EXPECT_EQ(2 * v[0] - v[2], 0);
    EXPECT_EQ(3 * v[1] - v[2], 0);
    EXPECT_NE(v[2], 0);

    EXPECT_EQ(null_space(Matrix<Rational>(0, 3)).size(), 3u);
}
