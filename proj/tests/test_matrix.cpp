#include <gtest/gtest.h>

#include <random>

#include <entangle/matrix.hpp>

using entangle::amplitude;
using entangle::complex_matrix;
using entangle::eta_det;
using entangle::eta_det_naive;
using entangle::permutation_sign;
using entangle::statistics;

namespace {

complex_matrix random_matrix(std::mt19937_64& rng, int order) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    complex_matrix m(order);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) m.at(i, j) = amplitude(unit(rng), unit(rng));
    return m;
}

// Independent fermionic reference: Laplace cofactor expansion along row 0.
amplitude det_cofactor(const complex_matrix& m) {
    const int n = m.order();
    if (n == 1) return m.at(0, 0);
    amplitude total(0.0, 0.0);
    for (int j = 0; j < n; ++j) {
        complex_matrix minor(n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        total += sign * m.at(0, j) * det_cofactor(minor);
    }
    return total;
}

}  // namespace

TEST(permutation_sign, identity_is_even) {
    EXPECT_EQ(permutation_sign({0}), 1);
    EXPECT_EQ(permutation_sign({0, 1, 2, 3}), 1);
}

TEST(permutation_sign, single_swap_is_odd) {
    EXPECT_EQ(permutation_sign({1, 0}), -1);
    EXPECT_EQ(permutation_sign({0, 2, 1, 3}), -1);
}

TEST(permutation_sign, cycles) {
    EXPECT_EQ(permutation_sign({1, 2, 0}), 1);     // 3-cycle, even
    EXPECT_EQ(permutation_sign({3, 2, 1, 0}), 1);  // two swaps
    EXPECT_EQ(permutation_sign({1, 2, 3, 0}), -1); // 4-cycle, odd
}

TEST(eta_det, order_one_is_the_entry) {
    complex_matrix m = complex_matrix::from_rows({{amplitude(2.0, -1.0)}});
    EXPECT_EQ(eta_det(m, statistics::fermion), amplitude(2.0, -1.0));
    EXPECT_EQ(eta_det(m, statistics::boson), amplitude(2.0, -1.0));
}

TEST(eta_det, order_two_closed_forms) {
    complex_matrix m = complex_matrix::from_rows(
        {{amplitude(1.0, 0.0), amplitude(2.0, 0.0)},
         {amplitude(3.0, 0.0), amplitude(4.0, 0.0)}});
    EXPECT_NEAR(std::abs(eta_det(m, statistics::fermion) - amplitude(-2.0, 0.0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(eta_det(m, statistics::boson) - amplitude(10.0, 0.0)), 0.0, 1e-12);
}

TEST(eta_det, uniform_three_by_three_permanent) {
    const double a = 1.0 / std::sqrt(3.0);
    complex_matrix m(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = a;
    // 3! terms, each (1/sqrt(3))^3: permanent = 6/(3 sqrt(3)) = 2/sqrt(3).
    EXPECT_NEAR(eta_det(m, statistics::boson).real(), 2.0 / std::sqrt(3.0), 1e-12);
    EXPECT_NEAR(eta_det(m, statistics::boson).imag(), 0.0, 1e-12);
    // Uniform rows are linearly dependent, so the determinant vanishes.
    EXPECT_NEAR(std::abs(eta_det(m, statistics::fermion)), 0.0, 1e-12);
}

TEST(eta_det, antidiagonal_needs_pivoting) {
    complex_matrix m = complex_matrix::from_rows(
        {{amplitude(0.0, 0.0), amplitude(1.0, 0.0)},
         {amplitude(1.0, 0.0), amplitude(0.0, 0.0)}});
    EXPECT_NEAR(std::abs(eta_det(m, statistics::fermion) - amplitude(-1.0, 0.0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(eta_det(m, statistics::boson) - amplitude(1.0, 0.0)), 0.0, 1e-12);
}

TEST(eta_det, purely_imaginary_diagonal) {
    complex_matrix m = complex_matrix::from_rows(
        {{amplitude(0.0, 1.0), amplitude(0.0, 0.0)},
         {amplitude(0.0, 0.0), amplitude(0.0, 1.0)}});
    EXPECT_NEAR(std::abs(eta_det(m, statistics::fermion) - amplitude(-1.0, 0.0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(eta_det(m, statistics::boson) - amplitude(-1.0, 0.0)), 0.0, 1e-12);
}

TEST(eta_det, matches_naive_on_random_matrices) {
    std::mt19937_64 rng(7777);
    for (int trial = 0; trial < 500; ++trial) {
        const int order = 2 + trial % 5;
        const complex_matrix m = random_matrix(rng, order);
        for (statistics st : {statistics::boson, statistics::fermion}) {
            const amplitude fast = eta_det(m, st);
            const amplitude slow = eta_det_naive(m, st);
            ASSERT_LE(std::abs(fast - slow), 1e-10 * std::max(1.0, std::abs(slow)))
                << "order " << order << " trial " << trial;
        }
    }
}

TEST(eta_det, fermion_matches_cofactor_expansion) {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 50; ++trial) {
        const complex_matrix m = random_matrix(rng, 4);
        ASSERT_LE(std::abs(eta_det(m, statistics::fermion) - det_cofactor(m)), 1e-12);
    }
}

TEST(eta_det, transpose_invariance) {
    std::mt19937_64 rng(55);
    const complex_matrix m = random_matrix(rng, 5);
    const complex_matrix t = m.transposed();
    for (statistics st : {statistics::boson, statistics::fermion})
        EXPECT_LE(std::abs(eta_det(m, st) - eta_det(t, st)), 1e-10);
}

TEST(eta_det, row_swap_flips_only_the_determinant) {
    std::mt19937_64 rng(56);
    const complex_matrix m = random_matrix(rng, 4);
    complex_matrix swapped = m;
    for (int j = 0; j < 4; ++j) {
        std::swap(swapped.at(1, j), swapped.at(2, j));
    }
    EXPECT_LE(std::abs(eta_det(m, statistics::fermion) + eta_det(swapped, statistics::fermion)),
              1e-10);
    EXPECT_LE(std::abs(eta_det(m, statistics::boson) - eta_det(swapped, statistics::boson)),
              1e-10);
}

TEST(eta_det, row_scaling_is_linear) {
    std::mt19937_64 rng(57);
    const complex_matrix m = random_matrix(rng, 4);
    const amplitude scale(0.5, 1.5);
    complex_matrix scaled = m;
    for (int j = 0; j < 4; ++j) scaled.at(2, j) *= scale;
    for (statistics st : {statistics::boson, statistics::fermion})
        EXPECT_LE(std::abs(eta_det(scaled, st) - scale * eta_det(m, st)), 1e-10);
}

TEST(eta_det, duplicate_rows_kill_the_determinant) {
    std::mt19937_64 rng(58);
    complex_matrix m = random_matrix(rng, 4);
    for (int j = 0; j < 4; ++j) m.at(3, j) = m.at(0, j);
    EXPECT_LE(std::abs(eta_det(m, statistics::fermion)), 1e-12);
    EXPECT_GT(std::abs(eta_det(m, statistics::boson)), 0.0);
}

TEST(eta_det, order_limits) {
    complex_matrix big(17);
    EXPECT_THROW(eta_det(big, statistics::boson), entangle::order_too_large_error);
    complex_matrix nine(9);
    EXPECT_THROW(eta_det_naive(nine, statistics::boson), entangle::order_too_large_error);
    complex_matrix sixteen(16);
    for (int i = 0; i < 16; ++i) sixteen.at(i, i) = 1.0;
    EXPECT_NEAR(std::abs(eta_det(sixteen, statistics::fermion) - amplitude(1.0, 0.0)), 0.0,
                1e-12);
}

TEST(complex_matrix, rejects_ragged_rows) {
    EXPECT_THROW(complex_matrix::from_rows({{amplitude(1.0, 0.0)},
                                            {amplitude(1.0, 0.0), amplitude(2.0, 0.0)}}),
                 entangle::non_square_error);
}

TEST(complex_matrix, rejects_zero_order) {
    EXPECT_THROW(complex_matrix m(0), std::invalid_argument);
}
