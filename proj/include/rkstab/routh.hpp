#pragma once

/* Exact localization of polynomial roots relative to the imaginary
 * axis and the two open half-planes.
 *
 * The workhorse is the generalized Routh array in exact rational
 * arithmetic. A real polynomial has all roots in the open left
 * half-plane iff the array completes with no zero first-column entry
 * and no sign change; any zero pivot or zero row certifies that some
 * root lies on the axis or in the closed right half-plane, so for the
 * all-roots-strictly-inside decisions a degeneracy immediately yields
 * "false". Zero rows are replaced by the derivative of the auxiliary
 * polynomial so the array always completes and degeneracies are still
 * classified. Imaginary-axis roots are found independently from
 * gcd(Re p(ix), Im p(ix)) and Sturm isolation.
 */

#include "rkstab/polynomial.hpp"
#include "rkstab/sturm.hpp"

#include <vector>

namespace rkstab {

struct HalfPlaneVerdict {
    bool all_open_rhp = false;          // every root has Re > 0
    bool all_open_lhp = false;          // every root has Re < 0
    std::vector<RootInterval> axis_root_parameters; // real x with p(ix) = 0
    bool degenerate = false;            // a Routh array hit a zero pivot/row
};

/* Real and imaginary parts of x -> p(ix) as real polynomials in x. */
inline std::pair<RPoly, RPoly> evaluate_on_axis(const RPoly& p) {
    std::vector<Rational> re, im;
    const auto& c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        // i^k cycles 1, i, -1, -i
        Rational v = (k % 4 >= 2) ? Rational(-c[k]) : c[k];
        if (k % 2 == 0) {
            re.resize(std::max(re.size(), k + 1), Rational(0));
            re[k] = v;
        } else {
            im.resize(std::max(im.size(), k + 1), Rational(0));
            im[k] = v;
        }
    }
    return {RPoly(std::move(re)), RPoly(std::move(im))};
}

/* Isolated real parameters x with p(ix) = 0, certified exactly.
 * Empty result is an exact emptiness certificate. */
inline std::vector<RootInterval> imaginary_axis_roots(const RPoly& p) {
    if (p.is_zero()) throw contract_violation("axis roots of zero polynomial");
    auto [re, im] = evaluate_on_axis(p);
    RPoly g;
    if (re.is_zero()) g = im;
    else if (im.is_zero()) g = re;
    else g = gcd_poly(re, im);
    if (g.degree() <= 0) return {};
    return isolate_real_roots(g);
}

namespace detail {

/* Runs the Routh array on p (lc normalized positive). Returns true if
 * the array proves all roots lie in the open left half-plane;
 * *degenerate is set when a zero pivot or zero row occurred. */
inline bool routh_array_hurwitz(const RPoly& p, bool* degenerate) {
    *degenerate = false;
    const int n = p.degree();
    if (n <= 0) return true;
    // Fixed-width rows: row i corresponds to powers n-i, n-i-2, ...
    const std::size_t width = static_cast<std::size_t>(n) / 2 + 1;
    std::vector<Rational> prev(width, Rational(0)), cur(width, Rational(0));
    for (std::size_t j = 0; 2 * j <= static_cast<std::size_t>(n); ++j)
        prev[j] = p.coeff(static_cast<std::size_t>(n) - 2 * j);
    for (std::size_t j = 0; 2 * j + 1 <= static_cast<std::size_t>(n); ++j)
        cur[j] = p.coeff(static_cast<std::size_t>(n) - 1 - 2 * j);
    if (sign(prev[0]) < 0) {
        for (auto& v : prev) v = -v;
        for (auto& v : cur) v = -v;
    }
    bool hurwitz = true;
    for (int i = 1; i <= n; ++i) {
        bool all_zero = true;
        for (const auto& v : cur)
            if (v != 0) { all_zero = false; break; }
        if (all_zero) {
            // Row i vanished: p has roots placed symmetrically about
            // the origin (axis pairs or +/- pairs), so it is not
            // Hurwitz. Replace by the derivative of the auxiliary
            // polynomial built from row i-1 (powers n-i+1-2j) so the
            // array can complete.
            *degenerate = true;
            hurwitz = false;
            bool still_zero = true;
            for (std::size_t j = 0; j < width; ++j) {
                int power = n - (i - 1) - 2 * static_cast<int>(j);
                cur[j] = power > 0 ? Rational(power) * prev[j] : Rational(0);
                if (cur[j] != 0) still_zero = false;
            }
            if (still_zero) break; // auxiliary polynomial was constant
        }
        if (cur[0] == 0) {
            // Zero pivot in a nonzero row: not Hurwitz (a Hurwitz array
            // has strictly positive pivots throughout).
            *degenerate = true;
            hurwitz = false;
            break;
        }
        if (sign(cur[0]) < 0) hurwitz = false;
        if (i == n) break;
        std::vector<Rational> next(width, Rational(0));
        for (std::size_t j = 0; j + 1 < width; ++j)
            next[j] = (cur[0] * prev[j + 1] - prev[0] * cur[j + 1]) / cur[0];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return hurwitz;
}

} // namespace detail

/* Full half-plane classification: both strict verdicts plus the exact
 * axis-root isolation. */
inline HalfPlaneVerdict half_plane_analysis(const RPoly& p) {
    if (p.is_zero()) throw contract_violation("half-plane analysis of zero polynomial");
    HalfPlaneVerdict v;
    v.axis_root_parameters = imaginary_axis_roots(p);
    bool deg_l = false, deg_r = false;
    // p(-X) reflects the spectrum, so the Hurwitz test on it decides
    // the open right half-plane.
    std::vector<Rational> neg = p.coeffs();
    for (std::size_t k = 1; k < neg.size(); k += 2) neg[k] = -neg[k];
    v.all_open_lhp = detail::routh_array_hurwitz(p, &deg_l);
    v.all_open_rhp = detail::routh_array_hurwitz(RPoly(std::move(neg)), &deg_r);
    v.degenerate = deg_l || deg_r;
    if (!v.axis_root_parameters.empty()) {
        v.all_open_lhp = false;
        v.all_open_rhp = false;
    }
    return v;
}

/* Decides whether all roots of p lie in the open left half-plane. */
inline HalfPlaneVerdict routh_all_open_lhp(const RPoly& p) { return half_plane_analysis(p); }

/* Decides whether all roots of p lie in the open right half-plane,
 * i.e. p has no root in the closed left half-plane C^-. */
inline HalfPlaneVerdict all_open_rhp(const RPoly& p) { return half_plane_analysis(p); }

/* True iff p has no root in C^- \ {0}: roots are allowed at the origin
 * but nowhere else with Re <= 0. */
inline bool no_root_in_closed_lhp_except_origin(const RPoly& p) {
    if (p.is_zero()) throw contract_violation("root localization of zero polynomial");
    std::vector<Rational> c = p.coeffs();
    std::size_t k = 0;
    while (k < c.size() && c[k] == 0) ++k; // strip the X^k factor
    RPoly q(std::vector<Rational>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()));
    if (q.degree() <= 0) return true;
    return half_plane_analysis(q).all_open_rhp;
}

/* The explicit closed-form Routh-Hurwitz inequality sets for monic
 * polynomials of degree 3 and 4 (two variants at degree 4). */
struct ClosedFormRH {
    bool rh3 = false;      // a2 > 0, a2 a1 - a0 > 0, a0 > 0
    bool rh4 = false;      // a3 > 0, a3 a2 - a1 > 0, a3 a2 a1 - a1^2 - a3^2 a0 > 0, a0 > 0
    bool rh4_alt = false;  // a3 > 0, a1 > 0, a3 a2 a1 - a1^2 - a3^2 a0 > 0, a0 > 0
    bool all_open_lhp = false;
};

inline ClosedFormRH closed_form_rh(const RPoly& p) {
    if (p.degree() != 3 && p.degree() != 4)
        throw contract_violation("closed-form criterion requires degree 3 or 4");
    if (p.leading() != 1) throw contract_violation("closed-form criterion requires monic input");
    ClosedFormRH r;
    if (p.degree() == 3) {
        const Rational a2 = p.coeff(2), a1 = p.coeff(1), a0 = p.coeff(0);
        r.rh3 = a2 > 0 && a2 * a1 - a0 > 0 && a0 > 0;
        r.all_open_lhp = r.rh3;
    } else {
        const Rational a3 = p.coeff(3), a2 = p.coeff(2), a1 = p.coeff(1), a0 = p.coeff(0);
        const Rational delta = a3 * a2 * a1 - a1 * a1 - a3 * a3 * a0;
        r.rh4 = a3 > 0 && a3 * a2 - a1 > 0 && delta > 0 && a0 > 0;
        r.rh4_alt = a3 > 0 && a1 > 0 && delta > 0 && a0 > 0;
        r.all_open_lhp = r.rh4;
    }
    return r;
}

} // namespace rkstab
