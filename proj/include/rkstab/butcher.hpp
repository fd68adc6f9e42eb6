#pragma once

/* Butcher tableau of a collocation method, over any scalar field F
 * with exact (or floating) arithmetic.
 *
 * A solves A V = W where V, W are the Vandermonde-type moment matrices
 * of the nodes; b integrates the Lagrange basis over [0,1]. For exact
 * fields both are cross-checked on the spot against the quadrature
 * identities sum_j a_ij c_j^{p-1} = c_i^p / p and
 * sum_i b_i c_i^{p-1} = 1/p, p = 1..s.
 */

#include "rkstab/linalg.hpp"
#include "rkstab/nodes.hpp"
#include "rkstab/polynomial.hpp"

#include <vector>

namespace rkstab {

template <typename F>
struct ButcherTableau {
    Mat<F> A;
    std::vector<F> b;
    std::vector<F> c;
    std::size_t stage_count() const { return c.size(); }
};

/* Lagrange basis polynomial l_i for the given nodes. */
template <typename F>
Poly<F> lagrange_basis(const std::vector<F>& c, std::size_t i) {
    Poly<F> l = Poly<F>::one();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (j == i) continue;
        l = l * Poly<F>{-c[j], F(1)} / (c[i] - c[j]);
    }
    return l;
}

template <typename F>
ButcherTableau<F> butcher_from_nodes(const std::vector<F>& c) {
    const std::size_t s = c.size();
    if (s == 0) throw contract_violation("empty node list");
    Mat<F> V(s, s), W(s, s);
    for (std::size_t i = 0; i < s; ++i) {
        F pw(1);
        for (std::size_t j = 0; j < s; ++j) {
            V(i, j) = pw;
            pw = pw * c[i];
            W(i, j) = pw / F(Int(j + 1));
        }
    }
    ButcherTableau<F> t;
    t.c = c;
    // A V = W  <=>  V^t A^t = W^t
    t.A = solve(V.transposed(), W.transposed()).transposed();
    t.b.resize(s);
    for (std::size_t i = 0; i < s; ++i) {
        Poly<F> prim = lagrange_basis(c, i).integral();
        t.b[i] = prim(F(1));
    }
    if constexpr (is_exact_field_v<F>) {
        for (std::size_t p = 1; p <= s; ++p) {
            F brow(0);
            for (std::size_t i = 0; i < s; ++i) {
                F lhs(0), cp(1);
                for (std::size_t q = 1; q < p; ++q) cp = cp * c[i];
                for (std::size_t j = 0; j < s; ++j) {
                    F cj(1);
                    for (std::size_t q = 1; q < p; ++q) cj = cj * c[j];
                    lhs += t.A(i, j) * cj;
                }
                if (lhs * F(Int(p)) != cp * c[i])
                    throw contract_violation("tableau failed the quadrature identity");
                brow += t.b[i] * cp;
            }
            if (brow * F(Int(p)) != F(1))
                throw contract_violation("weights failed the quadrature identity");
        }
    }
    return t;
}

/* Independent construction of A by direct exact integration of the
 * Lagrange basis: a_ij = integral of l_j over [0, c_i]. Used to
 * cross-validate the Vandermonde route. */
template <typename F>
Mat<F> butcher_matrix_by_integration(const std::vector<F>& c) {
    const std::size_t s = c.size();
    Mat<F> A(s, s);
    for (std::size_t j = 0; j < s; ++j) {
        Poly<F> prim = lagrange_basis(c, j).integral();
        for (std::size_t i = 0; i < s; ++i) A(i, j) = prim(c[i]);
    }
    return A;
}

inline ButcherTableau<Rational> butcher_from_nodes(const NodeSet& ns) {
    if (ns.exactness != Exactness::Exact)
        throw contract_violation("exact tableau requires exact nodes");
    return butcher_from_nodes<Rational>(ns.values);
}

} // namespace rkstab
