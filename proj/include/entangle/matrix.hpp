#pragma once

// Dense complex square matrices and the statistics-weighted determinant:
// the permanent for bosons, the determinant for fermions. Both arise as
// the coincidence amplitude of identical particles distributed over
// detection regions, where each permutation of particles contributes the
// product of its single-particle amplitudes weighted by eta^sign.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "core.hpp"

namespace entangle {

class non_square_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class order_too_large_error : public std::length_error {
public:
    using std::length_error::length_error;
};

class complex_matrix {
public:
    explicit complex_matrix(int order)
        : order_(order), entries_(static_cast<std::size_t>(order) * order) {
        if (order < 1) throw std::invalid_argument("matrix order must be at least 1");
    }

    // Builds from explicit rows; every row must have the same length as the
    // row count.
    static complex_matrix from_rows(std::initializer_list<std::initializer_list<amplitude>> rows) {
        const int n = static_cast<int>(rows.size());
        if (n < 1) throw std::invalid_argument("matrix order must be at least 1");
        complex_matrix m(n);
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != n)
                throw non_square_error("row " + std::to_string(i) + " has " +
                                       std::to_string(row.size()) + " entries, expected " +
                                       std::to_string(n));
            int j = 0;
            for (const amplitude& a : row) m.at(i, j++) = a;
            ++i;
        }
        return m;
    }

    int order() const { return order_; }

    amplitude& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * order_ + j]; }
    const amplitude& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * order_ + j];
    }

    complex_matrix transposed() const {
        complex_matrix t(order_);
        for (int i = 0; i < order_; ++i)
            for (int j = 0; j < order_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

private:
    int order_;
    std::vector<amplitude> entries_;
};

namespace detail {

// Permanent via Ryser's inclusion-exclusion over column subsets, walking
// subsets in Gray-code order so each step updates the running row sums with
// a single column. O(2^n * n).
inline amplitude permanent_ryser(const complex_matrix& m) {
    const int n = m.order();
    std::vector<amplitude> row_sum(n, amplitude(0.0, 0.0));
    amplitude total(0.0, 0.0);
    std::uint32_t gray = 0;
    for (std::uint32_t k = 1; k < (std::uint32_t{1} << n); ++k) {
        const std::uint32_t next = k ^ (k >> 1);
        const int col = std::countr_zero(gray ^ next);
        const bool added = (next >> col) & 1u;
        gray = next;
        for (int i = 0; i < n; ++i) {
            if (added)
                row_sum[i] += m.at(i, col);
            else
                row_sum[i] -= m.at(i, col);
        }
        amplitude prod(1.0, 0.0);
        for (int i = 0; i < n; ++i) prod *= row_sum[i];
        const int popcount = std::popcount(gray);
        total += ((n - popcount) % 2 == 0) ? prod : -prod;
    }
    return total;
}

// Determinant via Gaussian elimination with partial pivoting; the pivot
// swap parity carries the permutation sign. O(n^3).
inline amplitude determinant_lu(const complex_matrix& m) {
    const int n = m.order();
    complex_matrix a = m;
    double sign = 1.0;
    amplitude det(1.0, 0.0);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(a.at(col, col));
        for (int r = col + 1; r < n; ++r) {
            const double mag = std::abs(a.at(r, col));
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best == 0.0) return amplitude(0.0, 0.0);
        if (pivot != col) {
            for (int c = col; c < n; ++c) std::swap(a.at(col, c), a.at(pivot, c));
            sign = -sign;
        }
        det *= a.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            const amplitude factor = a.at(r, col) / a.at(col, col);
            if (factor == amplitude(0.0, 0.0)) continue;
            for (int c = col; c < n; ++c) a.at(r, c) -= factor * a.at(col, c);
        }
    }
    return sign * det;
}

}  // namespace detail

// Sign of the permutation p (p[i] = image of i) from its cycle structure.
inline int permutation_sign(const std::vector<int>& p) {
    std::vector<bool> seen(p.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::size_t j = i;
        int cycle_length = 0;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(p[j]);
            ++cycle_length;
        }
        if (cycle_length % 2 == 0) sign = -sign;
    }
    return sign;
}

// Statistics-weighted determinant: sum over permutations of the diagonal
// products, each weighted by eta^sign. Bosons (eta = +1) give the permanent,
// fermions (eta = -1) the determinant. Supports orders up to 16.
inline amplitude eta_det(const complex_matrix& m, statistics s) {
    if (m.order() > 16)
        throw order_too_large_error("eta_det supports order <= 16, got " +
                                    std::to_string(m.order()));
    return s == statistics::boson ? detail::permanent_ryser(m) : detail::determinant_lu(m);
}

// Reference evaluation by explicit enumeration of all n! permutations.
// Exponentially slow; kept as an independent cross-check for the fast paths.
// Supports orders up to 8.
inline amplitude eta_det_naive(const complex_matrix& m, statistics s) {
    const int n = m.order();
    if (n > 8)
        throw order_too_large_error("eta_det_naive supports order <= 8, got " +
                                    std::to_string(n));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    amplitude total(0.0, 0.0);
    do {
        amplitude term(1.0, 0.0);
        for (int i = 0; i < n; ++i) term *= m.at(i, perm[i]);
        if (s == statistics::fermion && permutation_sign(perm) < 0)
            total -= term;
        else
            total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace entangle
