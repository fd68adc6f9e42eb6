#pragma once

/* The linear stability function R = N/D of a collocation method,
 * built exactly from the node polynomial: with s = deg pi,
 *
 *   N(lambda) = lambda^s * tau(pi(X+1))(1/lambda)
 *   D(lambda) = lambda^s * tau(pi(X))(1/lambda)
 *
 * both polynomials of degree <= s. N(0) = D(0) = s! (pi is monic), so
 * the gcd never vanishes at 0 and R(0) = 1 survives reduction. The
 * reduced pair is what pole analysis must use: common roots of tau(pi)
 * and tau(pi(X+1)) produce removable singularities of R.
 */

#include "rkstab/butcher.hpp"
#include "rkstab/polynomial.hpp"
#include "rkstab/routh.hpp"

#include <array>

namespace rkstab {

struct StabilityFunction {
    unsigned s = 0;
    RPoly N, D;          // unreduced pair
    RPoly g;             // monic gcd(N, D)
    RPoly N_red, D_red;  // N = N_red * g, D = D_red * g up to the monic scaling
};

inline StabilityFunction stability_function(const RPoly& pi) {
    if (pi.degree() < 1 || pi.leading() != 1)
        throw contract_violation("stability function requires a monic node polynomial");
    StabilityFunction sf;
    sf.s = static_cast<unsigned>(pi.degree());
    const RPoly tp = tau_transform(pi);
    const RPoly tps = tau_transform(shift(pi, Rational(1)));
    sf.N = reversal(tps, sf.s);
    sf.D = reversal(tp, sf.s);
    if (sf.D.constant() != Rational(factorial(sf.s)))
        throw contract_violation("denominator bookkeeping: D(0) != s!");
    sf.g = gcd_poly(sf.N, sf.D);
    sf.N_red = sf.N / sf.g;
    sf.D_red = sf.D / sf.g;
    return sf;
}

/* Cross-checks N/D against the defining formula
 * R(lambda) = 1 + lambda b^t (I - lambda A)^{-1} 1 by exact evaluation
 * at a few rational points (skipping points where I - lambda A is
 * singular). Throws on disagreement; this guards the construction. */
inline void verify_against_definition(const StabilityFunction& sf,
                                      const ButcherTableau<Rational>& tab) {
    const std::size_t s = tab.stage_count();
    static const std::array<Rational, 4> probes = {Rational(1, 2), Rational(-1, 2),
                                                   Rational(1, 3), Rational(-1, 3)};
    for (const auto& lambda : probes) {
        Mat<Rational> M = Mat<Rational>::identity(s);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) M(i, j) -= lambda * tab.A(i, j);
        std::vector<Rational> y;
        try {
            y = solve_vec(M, std::vector<Rational>(s, Rational(1)));
        } catch (const contract_violation&) {
            continue; // lambda hit a pole; not a usable probe point
        }
        Rational r(1);
        for (std::size_t i = 0; i < s; ++i) r += lambda * tab.b[i] * y[i];
        if (sf.N(lambda) != r * sf.D(lambda))
            throw contract_violation("stability function disagrees with its definition");
    }
}

/* E(x) = |D_red(ix)|^2 - |N_red(ix)|^2, an even real polynomial.
 * E >= 0 on R is exactly the boundary condition |R| <= 1 on the
 * imaginary axis (and E < 0 somewhere witnesses its failure). */
inline RPoly boundary_deficit(const StabilityFunction& sf) {
    auto [dr, di] = evaluate_on_axis(sf.D_red);
    auto [nr, ni] = evaluate_on_axis(sf.N_red);
    return dr * dr + di * di - (nr * nr + ni * ni);
}

enum class SignOnReals { IdenticallyZero, NonNegative, SomewhereNegative };

/* Exact nonnegativity test via the square-free split: p >= 0 on all of
 * R iff p is zero, or its leading coefficient is positive and no
 * irreducible factor of odd multiplicity has a real root. */
inline SignOnReals nonnegative_on_reals(const RPoly& p) {
    if (p.is_zero()) return SignOnReals::IdenticallyZero;
    if (sign(p.leading()) < 0) return SignOnReals::SomewhereNegative;
    RPoly odd = odd_multiplicity_part(p);
    if (odd.degree() == 0) return SignOnReals::NonNegative;
    return sturm_real_root_count(odd) == 0 ? SignOnReals::NonNegative
                                           : SignOnReals::SomewhereNegative;
}

} // namespace rkstab
