#pragma once

/* The eight stability verdicts of a collocation Runge-Kutta method,
 * each carrying a certificate that names the deciding criterion and
 * whether the decision is certified-exact or numerical.
 *
 * Exact decisions:
 *   A / I     from the reduced stability function: pole localization
 *             (Routh) plus nonnegativity of E(x) = |D(ix)|^2-|N(ix)|^2.
 *   ASI / ISI from reduced resolvent entries when the tableau is
 *             rational, otherwise from the spectrum of A read off
 *             tau(pi) exactly.
 *   AS / IS   from the reduced entries of lambda b^t (I-lambda A)^{-1}
 *             when the tableau is rational; the range shortcut
 *             (b in range(A^t) and ASI => AS) covers invertible-A
 *             methods without a rational tableau.
 * Everything else falls back to eigenvalue classification and
 * eigenvector-orthogonality residuals at a stated tolerance, and is
 * flagged uncertified.
 */

#include "rkstab/butcher.hpp"
#include "rkstab/nodes.hpp"
#include "rkstab/numeric.hpp"
#include "rkstab/poly_matrix.hpp"
#include "rkstab/routh.hpp"
#include "rkstab/stability_function.hpp"

#include <map>
#include <optional>
#include <string>

namespace rkstab {

enum class Criterion {
    GaussTheorem,
    SymmetricFastpathA,
    SymmetricFastpathI,
    LemmaAHat,
    LemmaIHat,
    FullDecision,
    ResolventExact,
    ResolventNumerical,
    BInRangeAt,
    SmallSTheorem,
};

inline const char* criterion_name(Criterion c) {
    switch (c) {
        case Criterion::GaussTheorem: return "gauss-theorem";
        case Criterion::SymmetricFastpathA: return "symmetric-fastpath-A";
        case Criterion::SymmetricFastpathI: return "symmetric-fastpath-I";
        case Criterion::LemmaAHat: return "lemma-A-hat";
        case Criterion::LemmaIHat: return "lemma-I-hat";
        case Criterion::FullDecision: return "full-decision";
        case Criterion::ResolventExact: return "resolvent-exact";
        case Criterion::ResolventNumerical: return "resolvent-numerical";
        case Criterion::BInRangeAt: return "b-in-range-At";
        case Criterion::SmallSTheorem: return "small-s-theorem";
    }
    return "?";
}

struct Certificate {
    Criterion criterion = Criterion::FullDecision;
    bool exact = false;
    std::string details;
};

struct Verdict {
    bool value = false;
    Certificate certificate;
};

enum class Notion { A, I, AS, ASI, IS, ISI, AHat, IHat };

inline const char* notion_name(Notion n) {
    switch (n) {
        case Notion::A: return "A";
        case Notion::I: return "I";
        case Notion::AS: return "AS";
        case Notion::ASI: return "ASI";
        case Notion::IS: return "IS";
        case Notion::ISI: return "ISI";
        case Notion::AHat: return "A-hat";
        case Notion::IHat: return "I-hat";
    }
    return "?";
}

struct StabilityReport {
    std::map<Notion, Verdict> verdicts;
    StructureFlags flags;
    bool flags_exact = true;
    SpectrumApprox spectrum;           // eigenvalues of A
    std::optional<StabilityFunction> sf;
    std::optional<Certificate> consistency; // small-stage theorem check
    bool value(Notion n) const { return verdicts.at(n).value; }
};

/* A method assembled from any of the input modes, normalized to what
 * the deciders need. The exact node polynomial is present whenever the
 * input allows it; the high-precision numerical tableau always is. */
struct CollocationMethod {
    unsigned s = 0;
    std::optional<NodeSet> nodes;                        // exact or literal
    std::optional<RPoly> pi;                             // exact node polynomial
    std::optional<ButcherTableau<Rational>> tableau;     // exact tableau
    ButcherTableau<BigFloat> tableau_num;
    bool gauss_family = false;
    StructureFlags flags;
    bool flags_exact = true;
};

namespace detail {

inline std::vector<BigFloat> bigfloat_nodes(const std::vector<Rational>& v) {
    std::vector<BigFloat> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(to_bigfloat(x));
    return out;
}

} // namespace detail

inline CollocationMethod method_from_nodes(const NodeSet& ns) {
    CollocationMethod m;
    m.s = static_cast<unsigned>(ns.stage_count());
    m.nodes = ns;
    m.flags = structure_flags(ns);
    if (ns.exactness == Exactness::Exact) {
        m.pi = pi_from_nodes(ns);
        m.tableau = butcher_from_nodes(ns);
        m.flags_exact = true;
    } else {
        m.flags_exact = false;
    }
    m.tableau_num = butcher_from_nodes<BigFloat>(detail::bigfloat_nodes(ns.values));
    return m;
}

/* The pi-coefficient input mode: exact even for irrational nodes. The
 * tableau is rebuilt from high-precision root approximations and is
 * uncertified; decisions that only need pi stay exact. */
inline CollocationMethod method_from_pi(const RPoly& pi,
                                        const Rational& node_width = Rational(1, Int(1) << 320)) {
    NodeSet ns = nodes_from_pi(pi, node_width); // validates the polynomial
    CollocationMethod m;
    m.s = static_cast<unsigned>(pi.degree());
    m.nodes = ns;
    m.pi = pi;
    m.flags = structure_flags_from_pi(pi);
    m.flags_exact = true;
    m.gauss_family = (pi == gauss_pi(m.s));
    m.tableau_num = butcher_from_nodes<BigFloat>(detail::bigfloat_nodes(ns.values));
    return m;
}

inline CollocationMethod method_gauss(unsigned s) {
    CollocationMethod m = method_from_pi(gauss_pi(s));
    m.gauss_family = true;
    return m;
}

/* --- exact building blocks ------------------------------------- */

/* Reduced rational function num/den with gcd(num, den) = 1. */
struct ReducedEntry {
    RPoly num, den;
};

inline ReducedEntry reduce_fraction(const RPoly& num, const RPoly& den) {
    if (den.is_zero()) throw contract_violation("rational function with zero denominator");
    if (num.is_zero()) return {RPoly(), RPoly::one()};
    RPoly g = gcd_poly(num, den);
    return {num / g, den / g};
}

/* Entries of (I - lambda A)^{-1} as reduced rational functions. */
inline std::vector<std::vector<ReducedEntry>> resolvent_entries(
    const ButcherTableau<Rational>& tab) {
    const std::size_t s = tab.stage_count();
    PolyMat<Rational> M(s, s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            std::vector<Rational> e = {Rational(i == j ? 1 : 0), -tab.A(i, j)};
            M(i, j) = RPoly(std::move(e));
        }
    auto [det, adj] = polymatrix_det_adj(M);
    if (det.is_zero()) throw contract_violation("singular resolvent matrix");
    std::vector<std::vector<ReducedEntry>> out(s, std::vector<ReducedEntry>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) out[i][j] = reduce_fraction(adj(i, j), det);
    return out;
}

/* Entries of the row vector lambda b^t (I - lambda A)^{-1}, reduced. */
inline std::vector<ReducedEntry> weighted_resolvent_row(const ButcherTableau<Rational>& tab) {
    const std::size_t s = tab.stage_count();
    PolyMat<Rational> M(s, s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            std::vector<Rational> e = {Rational(i == j ? 1 : 0), -tab.A(i, j)};
            M(i, j) = RPoly(std::move(e));
        }
    auto [det, adj] = polymatrix_det_adj(M);
    std::vector<ReducedEntry> out(s);
    for (std::size_t j = 0; j < s; ++j) {
        RPoly num;
        for (std::size_t i = 0; i < s; ++i) num += RPoly(tab.b[i]) * adj(i, j);
        num = num * RPoly::x(); // the lambda prefactor
        out[j] = reduce_fraction(num, det);
    }
    return out;
}

/* No pole in C^- (resp. in iR) and boundedness at infinity, decided
 * structurally for a reduced rational function. */
inline bool bounded_on_left_half_plane(const ReducedEntry& e) {
    if (e.num.is_zero()) return true;
    if (e.num.degree() > e.den.degree()) return false;
    if (e.den.degree() == 0) return true;
    return half_plane_analysis(e.den).all_open_rhp;
}

inline bool bounded_on_imaginary_axis(const ReducedEntry& e) {
    if (e.num.is_zero()) return true;
    if (e.num.degree() > e.den.degree()) return false;
    if (e.den.degree() == 0) return true;
    return imaginary_axis_roots(e.den).empty();
}

/* Exact test for b in range(A^t) via rank comparison. */
inline bool b_in_range_of_At(const ButcherTableau<Rational>& tab) {
    const std::size_t s = tab.stage_count();
    Mat<Rational> At = tab.A.transposed();
    Mat<Rational> Aug(s, s + 1);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) Aug(i, j) = At(i, j);
        Aug(i, s) = tab.b[i];
    }
    return rank(At) == rank(Aug);
}

/* --- component deciders ----------------------------------------- */

inline Verdict decide_I(const StabilityFunction& sf) {
    Verdict v;
    v.certificate.criterion = Criterion::FullDecision;
    v.certificate.exact = true;
    if (!imaginary_axis_roots(sf.D_red).empty()) {
        v.value = false;
        v.certificate.details = "reduced denominator vanishes on the imaginary axis";
        return v;
    }
    switch (nonnegative_on_reals(boundary_deficit(sf))) {
        case SignOnReals::IdenticallyZero:
            v.value = true;
            v.certificate.details = "E identically zero: |R| = 1 on the imaginary axis";
            break;
        case SignOnReals::NonNegative:
            v.value = true;
            v.certificate.details = "E(x) >= 0 for all real x";
            break;
        case SignOnReals::SomewhereNegative:
            v.value = false;
            v.certificate.details = "E(x) < 0 for some real x: |R(ix)| > 1";
            break;
    }
    return v;
}

inline Verdict decide_A(const StabilityFunction& sf) {
    Verdict v;
    v.certificate.criterion = Criterion::FullDecision;
    v.certificate.exact = true;
    const bool pole_free =
        sf.D_red.degree() == 0 || half_plane_analysis(sf.D_red).all_open_rhp;
    if (!pole_free) {
        v.value = false;
        v.certificate.details = "reduced R has a pole in the closed left half-plane";
        return v;
    }
    Verdict onaxis = decide_I(sf);
    v.value = onaxis.value;
    v.certificate.details = onaxis.value
        ? "no pole of reduced R in C^-, and " + onaxis.certificate.details
        : onaxis.certificate.details;
    return v;
}

/* ASI / ISI over an exact tableau: every reduced resolvent entry must
 * be pole-free on the region and proper at infinity. */
inline Verdict decide_ASI(const ButcherTableau<Rational>& tab) {
    Verdict v;
    v.certificate = {Criterion::ResolventExact, true,
                     "all reduced resolvent entries bounded on C^-"};
    v.value = true;
    for (const auto& row : resolvent_entries(tab))
        for (const auto& e : row)
            if (!bounded_on_left_half_plane(e)) {
                v.value = false;
                v.certificate.details = "a reduced resolvent entry has a pole in C^-"
                                        " or grows at infinity";
                return v;
            }
    return v;
}

inline Verdict decide_ISI(const ButcherTableau<Rational>& tab) {
    Verdict v;
    v.certificate = {Criterion::ResolventExact, true,
                     "all reduced resolvent entries bounded on the imaginary axis"};
    v.value = true;
    for (const auto& row : resolvent_entries(tab))
        for (const auto& e : row)
            if (!bounded_on_imaginary_axis(e)) {
                v.value = false;
                v.certificate.details = "a reduced resolvent entry has a pole on the"
                                        " imaginary axis or grows at infinity";
                return v;
            }
    return v;
}

inline Verdict decide_AS(const ButcherTableau<Rational>& tab) {
    Verdict v;
    v.certificate = {Criterion::ResolventExact, true,
                     "lambda b^t (I-lambda A)^{-1} bounded on C^-"};
    v.value = true;
    for (const auto& e : weighted_resolvent_row(tab))
        if (!bounded_on_left_half_plane(e)) {
            v.value = false;
            v.certificate.details =
                "an entry of lambda b^t (I-lambda A)^{-1} is unbounded on C^-";
            return v;
        }
    if (b_in_range_of_At(tab))
        v.certificate.details += "; b lies in range(A^t)";
    return v;
}

inline Verdict decide_IS(const ButcherTableau<Rational>& tab) {
    Verdict v;
    v.certificate = {Criterion::ResolventExact, true,
                     "lambda b^t (I-lambda A)^{-1} bounded on the imaginary axis"};
    v.value = true;
    for (const auto& e : weighted_resolvent_row(tab))
        if (!bounded_on_imaginary_axis(e)) {
            v.value = false;
            v.certificate.details =
                "an entry of lambda b^t (I-lambda A)^{-1} is unbounded on the axis";
            return v;
        }
    return v;
}

/* Spectral route for methods known only through pi: the resolvent norm
 * blows up at 1/mu for every eigenvalue mu != 0, and collocation
 * methods have at most a simple eigenvalue 0, so boundedness at
 * infinity holds and the spectrum decides ASI / ISI exactly. */
inline Verdict decide_ASI_spectral(const RPoly& pi) {
    Verdict v;
    v.certificate = {Criterion::FullDecision, true, ""};
    const RPoly tp = tau_transform(pi);
    v.value = no_root_in_closed_lhp_except_origin(tp);
    v.certificate.details = v.value
        ? "spectrum of A meets C^- at most in {0}"
        : "A has an eigenvalue in C^- \\ {0}: resolvent blows up at its inverse";
    return v;
}

inline Verdict decide_ISI_spectral(const RPoly& pi) {
    Verdict v;
    v.certificate = {Criterion::FullDecision, true, ""};
    RPoly tp = tau_transform(pi);
    std::vector<Rational> c = tp.coeffs();
    std::size_t k = 0;
    while (k < c.size() && c[k] == 0) ++k;
    RPoly stripped(std::vector<Rational>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()));
    v.value = stripped.degree() <= 0 || imaginary_axis_roots(stripped).empty();
    v.certificate.details = v.value
        ? "no nonzero eigenvalue of A on the imaginary axis"
        : "A has a nonzero imaginary-axis eigenvalue: resolvent blows up at its inverse";
    return v;
}

} // namespace rkstab
