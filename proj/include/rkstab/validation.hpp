#pragma once

/* Empirical validators: integrate the Dahlquist equation y' = a y with
 * the method and compare against R(ah)^n, and evaluate the two Laplace
 * integrals whose ratio reproduces R for Re(lambda) > 0. Both are
 * consistency oracles, not certificates.
 */

#include "rkstab/butcher.hpp"
#include "rkstab/stability_function.hpp"

#include <complex>
#include <vector>

namespace rkstab {

using Cplx = std::complex<double>;

inline Cplx eval_at(const RPoly& p, const Cplx& z) {
    return p.eval_as<Cplx>(z, [](const Rational& c) { return Cplx(static_cast<double>(c)); });
}

namespace detail {

/* Dense complex solve, partial pivoting; s is tiny. */
inline std::vector<Cplx> csolve(std::vector<std::vector<Cplx>> M, std::vector<Cplx> rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
        if (std::abs(M[piv][col]) == 0.0)
            throw std::domain_error("singular stage system: 1/(ah) is an eigenvalue of A");
        std::swap(M[piv], M[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            Cplx f = M[r][col] / M[col][col];
            if (f == Cplx(0)) continue;
            for (std::size_t j = col; j < n; ++j) M[r][j] -= f * M[col][j];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<Cplx> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Cplx acc = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= M[i][j] * x[j];
        x[i] = acc / M[i][i];
    }
    return x;
}

} // namespace detail

/* Runs n steps of the method on y' = a y from y0 = 1 (stage systems
 * solved directly) and returns |y_n - R(ah)^n| / max(1, |R(ah)^n|). */
inline double dahlquist_validate(const ButcherTableau<Rational>& tab,
                                 const StabilityFunction& sf, Cplx a, double h, unsigned n) {
    const std::size_t s = tab.stage_count();
    const Cplx ah = a * h;
    std::vector<std::vector<Cplx>> M(s, std::vector<Cplx>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            M[i][j] = -ah * Cplx(static_cast<double>(tab.A(i, j)));
            if (i == j) M[i][j] += 1.0;
        }
    Cplx y = 1.0;
    for (unsigned step = 0; step < n; ++step) {
        std::vector<Cplx> stages = detail::csolve(M, std::vector<Cplx>(s, y));
        Cplx acc = y;
        for (std::size_t i = 0; i < s; ++i)
            acc += ah * Cplx(static_cast<double>(tab.b[i])) * stages[i];
        y = acc;
    }
    const Cplx r = eval_at(sf.N, ah) / eval_at(sf.D, ah);
    const Cplx rn = std::pow(r, static_cast<double>(n));
    return std::abs(y - rn) / std::max(1.0, std::abs(rn));
}

/* Term-by-term evaluation of the Laplace integrals
 * int_0^inf e^{-lambda s} pi(s + 1) ds / int_0^inf e^{-lambda s} pi(s) ds
 * using int e^{-lambda s} s^k ds = k! / lambda^{k+1}; compares the
 * ratio to N(lambda)/D(lambda). Requires Re(lambda) > 0. */
inline double laplace_cross_check(const RPoly& pi, const StabilityFunction& sf, Cplx lambda) {
    if (lambda.real() <= 0)
        throw contract_violation("Laplace comparison requires Re(lambda) > 0");
    auto transform = [&](const RPoly& p) {
        Cplx acc = 0.0;
        Cplx lam_pow = lambda;
        for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
            double kfact = static_cast<double>(factorial(static_cast<unsigned>(k)));
            acc += Cplx(static_cast<double>(p.coeffs()[k])) * kfact / lam_pow;
            lam_pow *= lambda;
        }
        return acc;
    };
    const Cplx integral_ratio = transform(shift(pi, Rational(1))) / transform(pi);
    const Cplx r = eval_at(sf.N, lambda) / eval_at(sf.D, lambda);
    return std::abs(integral_ratio - r) / std::max(1.0, std::abs(r));
}

} // namespace rkstab
