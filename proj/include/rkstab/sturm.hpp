#pragma once

/* Sturm sequences over the rationals: exact real-root counting and
 * isolation by bisection. All arithmetic is exact; no floating point
 * enters any certified path here.
 */

#include "rkstab/polynomial.hpp"
#include "rkstab/rational.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace rkstab {

using RPoly = Poly<Rational>;

/* Closed interval [lo, hi] (lo == hi encodes an exactly known rational
 * root) guaranteed to contain exactly one distinct real root of the
 * polynomial it was produced for. */
struct RootInterval {
    Rational lo, hi;
    bool exact() const { return lo == hi; }
    Rational midpoint() const { return (lo + hi) / 2; }
    Rational width() const { return hi - lo; }
};

namespace detail {

inline std::vector<RPoly> sturm_sequence(const RPoly& p) {
    std::vector<RPoly> seq;
    seq.push_back(p);
    RPoly d = p.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(d);
    while (true) {
        RPoly r = seq[seq.size() - 2] % seq.back();
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    return seq;
}

/* Sign variations of the sequence at x; zero entries are skipped. */
inline int variations_at(const std::vector<RPoly>& seq, const Rational& x) {
    int count = 0, prev = 0;
    for (const auto& q : seq) {
        int s = sign(q(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

/* Variations at -inf (neg = true) or +inf. */
inline int variations_at_infinity(const std::vector<RPoly>& seq, bool neg) {
    int count = 0, prev = 0;
    for (const auto& q : seq) {
        if (q.is_zero()) continue;
        int s = sign(q.leading());
        if (neg && q.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

} // namespace detail

/* 1 + max |a_k| / |a_n|: every real root lies in (-B, B). */
inline Rational cauchy_root_bound(const RPoly& p) {
    if (p.is_zero()) throw contract_violation("root bound of zero polynomial");
    Rational m = 0;
    for (const auto& a : p.coeffs())
        if (abs(a) > m) m = abs(a);
    return 1 + m / abs(p.leading());
}

/* p with repeated factors collapsed: p / gcd(p, p'). */
inline RPoly radical(const RPoly& p) {
    if (p.is_zero()) throw contract_violation("radical of zero polynomial");
    if (p.degree() <= 1) return p.monic();
    return (p / gcd_poly(p, p.derivative())).monic();
}

/* Exact count of distinct real roots of square-free p in (lo, hi],
 * where each bound may be absent (= the corresponding infinity). */
inline int sturm_real_root_count(const RPoly& p,
                                 const std::optional<Rational>& lo = std::nullopt,
                                 const std::optional<Rational>& hi = std::nullopt) {
    if (p.is_zero()) throw contract_violation("Sturm count of zero polynomial");
    if (p.degree() == 0) return 0;
    auto seq = detail::sturm_sequence(p);
    int vlo = lo ? detail::variations_at(seq, *lo) : detail::variations_at_infinity(seq, true);
    int vhi = hi ? detail::variations_at(seq, *hi) : detail::variations_at_infinity(seq, false);
    // With zero entries skipped the variation count is right-continuous
    // at roots of p, so V(lo) - V(hi) is exactly the number of distinct
    // roots in (lo, hi] even when an endpoint is itself a root.
    return vlo - vhi;
}

namespace detail {

inline int count_open(const std::vector<RPoly>& seq, const Rational& lo, const Rational& hi) {
    return variations_at(seq, lo) - variations_at(seq, hi);
}

inline void isolate_rec(const std::vector<RPoly>& seq, const RPoly& p, const Rational& lo,
                        const Rational& hi, int nroots, const Rational& max_width,
                        std::vector<RootInterval>& out) {
    if (nroots == 0) return;
    if (nroots == 1 && hi - lo <= max_width) {
        out.push_back({lo, hi});
        return;
    }
    Rational mid = (lo + hi) / 2;
    if (p(mid) == 0) {
        out.push_back({mid, mid});
        // Shrink a punctured neighbourhood around mid until it holds no
        // other root (mid itself accounts for the 1), then recurse on
        // what is left of each side.
        Rational delta = (hi - lo) / 4;
        while (count_open(seq, mid - delta, mid) + count_open(seq, mid, mid + delta) > 1)
            delta /= 2;
        isolate_rec(seq, p, lo, mid - delta, count_open(seq, lo, mid - delta), max_width, out);
        isolate_rec(seq, p, mid + delta, hi, count_open(seq, mid + delta, hi), max_width, out);
        return;
    }
    int left = count_open(seq, lo, mid);
    isolate_rec(seq, p, lo, mid, left, max_width, out);
    isolate_rec(seq, p, mid, hi, nroots - left, max_width, out);
}

} // namespace detail

/* Disjoint isolating intervals, one per distinct real root of p,
 * each of width at most max_width (default 2^-40), sorted ascending.
 * Works on the radical of p, so repeated roots are isolated once. */
inline std::vector<RootInterval> isolate_real_roots(
    const RPoly& p, const Rational& max_width = Rational(1, Int(1) << 40)) {
    if (p.is_zero()) throw contract_violation("isolating roots of zero polynomial");
    RPoly q = radical(p);
    std::vector<RootInterval> out;
    if (q.degree() == 0) return out;
    auto seq = detail::sturm_sequence(q);
    Rational bound = cauchy_root_bound(q);
    // Endpoints of the initial box are non-roots by the Cauchy bound.
    int total = detail::count_open(seq, -bound, bound);
    detail::isolate_rec(seq, q, -bound, bound, total, max_width, out);
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

/* Bisect an isolating interval down to the requested width. The root
 * lies in (lo, hi]; if lo happens to be a root of p it belongs to a
 * neighbouring interval, and the sign just inside is that of p'(lo). */
inline RootInterval refine_root(const RPoly& p, RootInterval iv, const Rational& max_width) {
    if (iv.exact()) return iv;
    int slo = sign(p(iv.lo));
    if (slo == 0) slo = sign(p.derivative()(iv.lo));
    while (iv.width() > max_width) {
        Rational mid = iv.midpoint();
        int sm = sign(p(mid));
        if (sm == 0) return {mid, mid};
        if (sm == slo) iv.lo = mid;
        else iv.hi = mid;
    }
    return iv;
}

} // namespace rkstab
