#pragma once

/* Determinant and adjugate of matrices with polynomial entries, exact.
 *
 * Determinants run fraction-free Bareiss elimination (all divisions
 * exact by construction), which controls coefficient growth compared
 * to naive expansion. Adjugates are assembled from cofactor minors;
 * the matrices here are resolvent-sized (s <= 10), so this is cheap.
 */

#include "rkstab/linalg.hpp"
#include "rkstab/polynomial.hpp"

#include <utility>

namespace rkstab {

template <typename F>
using PolyMat = Mat<Poly<F>>;

template <typename F>
Poly<F> poly_det(PolyMat<F> m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw contract_violation("determinant of non-square matrix");
    if (n == 0) return Poly<F>::one();
    int sgn = 1;
    Poly<F> prev_pivot = Poly<F>::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m(swap_row, k).is_zero()) ++swap_row;
            if (swap_row == n) return Poly<F>();
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev_pivot;
        prev_pivot = m(k, k);
    }
    return sgn < 0 ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

namespace detail {

template <typename F>
Poly<F> poly_minor(const PolyMat<F>& m, std::size_t drop_row, std::size_t drop_col) {
    const std::size_t n = m.rows();
    PolyMat<F> sub(n - 1, n - 1);
    for (std::size_t i = 0, si = 0; i < n; ++i) {
        if (i == drop_row) continue;
        for (std::size_t j = 0, sj = 0; j < n; ++j) {
            if (j == drop_col) continue;
            sub(si, sj) = m(i, j);
            ++sj;
        }
        ++si;
    }
    return poly_det(std::move(sub));
}

} // namespace detail

/* Exact determinant and adjugate: m * adj = det * I coefficientwise. */
template <typename F>
std::pair<Poly<F>, PolyMat<F>> polymatrix_det_adj(const PolyMat<F>& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw contract_violation("adjugate of non-square matrix");
    PolyMat<F> adj(n, n);
    if (n == 0) return {Poly<F>::one(), adj};
    if (n == 1) {
        adj(0, 0) = Poly<F>::one();
        return {m(0, 0), adj};
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Poly<F> mn = detail::poly_minor(m, j, i); // transposed cofactor
            adj(i, j) = ((i + j) % 2 == 0) ? mn : -mn;
        }
    return {poly_det(m), adj};
}

} // namespace rkstab
