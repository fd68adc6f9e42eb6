#pragma once

/* Uncertified numeric layer: high-precision floating point scalars,
 * the Aberth-Ehrlich simultaneous root finder, and small-matrix
 * eigenvector helpers. Results carry residual-based error radii and
 * are used as oracles and for uncertified verdicts only; nothing here
 * feeds a certified-exact certificate.
 *
 * Default working precision is 64 decimal digits, comfortably past the
 * 10 digits quoted for reference eigenvalues.
 */

#include "rkstab/linalg.hpp"
#include "rkstab/polynomial.hpp"
#include "rkstab/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <vector>

namespace rkstab {

using BigFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<64>,
                                               boost::multiprecision::et_off>;
using BigComplex = boost::multiprecision::cpp_complex<64>;

inline BigFloat to_bigfloat(const Rational& x) {
    return BigFloat(numerator(x)) / BigFloat(denominator(x));
}

inline BigComplex to_bigcomplex(const Rational& x) { return BigComplex(to_bigfloat(x)); }

inline Poly<BigFloat> to_bigfloat_poly(const RPoly& p) {
    std::vector<BigFloat> c;
    c.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) c.push_back(to_bigfloat(a));
    return Poly<BigFloat>(std::move(c));
}

inline BigFloat norm_sq(const BigComplex& z) { return z.real() * z.real() + z.imag() * z.imag(); }

struct RootApprox {
    BigComplex value;
    BigFloat radius;   // residual-based error radius deg * |p/p'|
};

struct SpectrumApprox {
    std::vector<RootApprox> roots;  // with multiplicity; zeros listed exactly
    bool converged = true;
};

namespace detail {

inline BigComplex horner(const std::vector<BigComplex>& c, const BigComplex& z) {
    BigComplex acc(0);
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
    return acc;
}

} // namespace detail

/* All complex roots of the polynomial with the given ascending
 * coefficients (leading nonzero). Roots at the origin are split off
 * exactly; the rest run through Aberth-Ehrlich iteration. */
inline SpectrumApprox aberth_roots(std::vector<BigComplex> coeffs) {
    SpectrumApprox out;
    while (!coeffs.empty() && abs(coeffs.back()) == 0) coeffs.pop_back();
    if (coeffs.size() <= 1) {
        if (coeffs.empty()) throw contract_violation("root finding on zero polynomial");
        return out;
    }
    std::size_t zero_roots = 0;
    while (abs(coeffs[zero_roots]) == 0) ++zero_roots;
    for (std::size_t k = 0; k < zero_roots; ++k) out.roots.push_back({BigComplex(0), BigFloat(0)});
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(zero_roots));

    const std::size_t n = coeffs.size() - 1;
    if (n == 0) return out;
    std::vector<BigComplex> dcoeffs(n);
    for (std::size_t k = 1; k <= n; ++k) dcoeffs[k - 1] = BigFloat(Int(k)) * coeffs[k];

    BigFloat maxratio(0);
    for (std::size_t k = 0; k < n; ++k) {
        BigFloat r = abs(coeffs[k]) / abs(coeffs[n]);
        if (r > maxratio) maxratio = r;
    }
    const BigFloat radius = 1 + maxratio;

    std::vector<BigComplex> z(n);
    const BigFloat pi = 4 * atan(BigFloat(1));
    for (std::size_t i = 0; i < n; ++i) {
        BigFloat theta = 2 * pi * BigFloat(Int(i)) / BigFloat(Int(n)) + BigFloat("0.39");
        z[i] = radius * BigComplex(cos(theta), sin(theta));
    }

    const BigFloat eps("1e-60");
    bool converged = false;
    for (int sweep = 0; sweep < 400 && !converged; ++sweep) {
        converged = true;
        for (std::size_t i = 0; i < n; ++i) {
            BigComplex pv = detail::horner(coeffs, z[i]);
            if (abs(pv) == 0) continue;
            BigComplex dv = detail::horner(dcoeffs, z[i]);
            if (abs(dv) == 0) { converged = false; continue; }
            BigComplex newton = pv / dv;
            BigComplex sum(0);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) sum += BigComplex(1) / (z[i] - z[j]);
            BigComplex corr = newton / (BigComplex(1) - newton * sum);
            z[i] -= corr;
            if (abs(corr) > eps * (1 + abs(z[i]))) converged = false;
        }
    }
    out.converged = converged;
    for (std::size_t i = 0; i < n; ++i) {
        BigComplex pv = detail::horner(coeffs, z[i]);
        BigComplex dv = detail::horner(dcoeffs, z[i]);
        BigFloat rad = abs(dv) == 0 ? BigFloat(1) : BigFloat(Int(n)) * abs(pv) / abs(dv);
        out.roots.push_back({z[i], rad});
    }
    return out;
}

inline SpectrumApprox numeric_roots(const RPoly& p) {
    if (p.degree() < 1) throw contract_violation("numeric roots require degree >= 1");
    std::vector<BigComplex> c;
    c.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) c.push_back(to_bigcomplex(a));
    return aberth_roots(std::move(c));
}

inline SpectrumApprox numeric_roots_of(const Poly<BigFloat>& p) {
    std::vector<BigComplex> c;
    for (const auto& a : p.coeffs()) c.push_back(BigComplex(a));
    return aberth_roots(std::move(c));
}

/* Unit eigenvector of A for the (approximately known, simple)
 * eigenvalue mu via a few passes of shifted inverse iteration. */
inline std::vector<BigComplex> eigenvector_for(const Mat<BigComplex>& A, const BigComplex& mu) {
    const std::size_t n = A.rows();
    Mat<BigComplex> M = A;
    const BigFloat tiny("1e-55");
    for (std::size_t i = 0; i < n; ++i) M(i, i) -= mu + BigComplex(tiny, tiny);
    std::vector<BigComplex> v(n, BigComplex(1));
    for (int pass = 0; pass < 3; ++pass) {
        v = solve_vec(M, v);
        BigFloat norm(0);
        for (const auto& x : v) norm += norm_sq(x);
        norm = sqrt(norm);
        for (auto& x : v) x /= norm;
    }
    return v;
}

} // namespace rkstab
