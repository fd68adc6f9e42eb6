#pragma once

/* Orchestration: structural fast paths, full component decisions,
 * numerical fallbacks, and the assembled report with its implication
 * invariants.
 */

#include "rkstab/stability.hpp"

#include <cmath>
#include <complex>
#include <sstream>

namespace rkstab {

struct ClassifyOptions {
    bool force_full = false;       // bypass fast paths, cross-validation mode
    BigFloat tolerance = BigFloat("1e-9"); // numerical-path classification tolerance
};

namespace detail {

inline Mat<BigComplex> complex_matrix(const ButcherTableau<BigFloat>& tab) {
    const std::size_t s = tab.stage_count();
    Mat<BigComplex> A(s, s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) A(i, j) = BigComplex(tab.A(i, j));
    return A;
}

/* Eigenvalues of A: roots of tau(pi)/s!, exact coefficients when pi is
 * available, floating-point expansion of prod(X - c_i) otherwise. */
inline SpectrumApprox method_spectrum(const CollocationMethod& m) {
    if (m.pi) return numeric_roots(tau_transform(*m.pi));
    Poly<BigFloat> pi_num = Poly<BigFloat>::one();
    for (const auto& c : m.tableau_num.c)
        pi_num = pi_num * Poly<BigFloat>{-c, BigFloat(1)};
    return numeric_roots_of(tau_transform(pi_num));
}

/* Eigenvalues lying (within tol) in the closed region of interest and
 * away from 0: these are the resolvent pole producers. */
inline std::vector<BigComplex> offending_eigenvalues(const SpectrumApprox& sp,
                                                     bool left_half_plane,
                                                     const BigFloat& tol) {
    std::vector<BigComplex> out;
    for (const auto& r : sp.roots) {
        if (abs(r.value) <= tol) continue; // the 0 eigenvalue is harmless
        const BigFloat re = r.value.real();
        const bool in_region = left_half_plane ? (re <= tol) : (abs(re) <= tol);
        if (in_region) out.push_back(r.value);
    }
    return out;
}

/* |b^t v| / (|b| |v|) for the eigenvector v of A at mu: zero residual
 * means b annihilates the spectral direction and the pole of
 * lambda b^t (I-lambda A)^{-1} at 1/mu cancels. */
inline BigFloat orthogonality_residual(const ButcherTableau<BigFloat>& tab,
                                       const BigComplex& mu) {
    Mat<BigComplex> A = complex_matrix(tab);
    std::vector<BigComplex> v = eigenvector_for(A, mu);
    BigComplex dot(0);
    BigFloat nb(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        dot += BigComplex(tab.b[i]) * v[i];
        nb += tab.b[i] * tab.b[i];
    }
    return abs(dot) / sqrt(nb); // v is unit
}

inline Verdict decide_SI_numerical(bool left_half_plane, const BigFloat& tol,
                                   const SpectrumApprox& sp) {
    Verdict v;
    v.certificate = {Criterion::ResolventNumerical, false, ""};
    auto bad = offending_eigenvalues(sp, left_half_plane, tol);
    v.value = bad.empty();
    std::ostringstream os;
    os << "eigenvalue classification at tolerance " << static_cast<double>(tol) << ": "
       << bad.size() << " eigenvalue(s) in the region";
    v.certificate.details = os.str();
    return v;
}

inline Verdict decide_S_numerical(const CollocationMethod& m, bool left_half_plane,
                                  const BigFloat& tol, const SpectrumApprox& sp) {
    Verdict v;
    v.certificate = {Criterion::ResolventNumerical, false, ""};
    v.value = true;
    std::ostringstream os;
    os << "eigenvalue classification at tolerance " << static_cast<double>(tol);
    for (const auto& mu : offending_eigenvalues(sp, left_half_plane, tol)) {
        BigFloat res = orthogonality_residual(m.tableau_num, mu);
        os << "; |b^t v| residual " << static_cast<double>(res) << " at eigenvalue ("
           << static_cast<double>(mu.real()) << ", " << static_cast<double>(mu.imag()) << ")";
        if (res >= tol) v.value = false;
    }
    v.certificate.details = os.str();
    return v;
}

/* Uncertified A/I for methods without an exact node polynomial
 * (decimal-literal nodes): pole classification and the sign of E are
 * evaluated in high-precision floating point at tolerance tol. */
inline std::pair<Verdict, Verdict> decide_AI_numerical(const CollocationMethod& m,
                                                       const BigFloat& tol) {
    Poly<BigFloat> pi_num = Poly<BigFloat>::one();
    for (const auto& c : m.tableau_num.c)
        pi_num = pi_num * Poly<BigFloat>{-c, BigFloat(1)};
    const unsigned s = static_cast<unsigned>(pi_num.degree());
    Poly<BigFloat> tp = tau_transform(pi_num);
    Poly<BigFloat> tps = tau_transform(shift(pi_num, BigFloat(1)));
    Poly<BigFloat> N = reversal(tps, s), D = reversal(tp, s);

    // Poles that survive reduction: roots of D not matched by a root of N.
    auto droots = numeric_roots_of(D);
    auto nroots = numeric_roots_of(N);
    bool pole_axis = false, pole_lhp = false;
    for (const auto& d : droots.roots) {
        bool cancelled = false;
        for (const auto& n : nroots.roots)
            if (abs(d.value - n.value) <= tol * (1 + abs(d.value))) { cancelled = true; break; }
        if (cancelled) continue;
        if (abs(d.value.real()) <= tol) pole_axis = true;
        if (d.value.real() <= tol) pole_lhp = true;
    }

    // E(x) = |D(ix)|^2 - |N(ix)|^2 >= -tol*scale on sample points
    // around and between its real roots.
    auto conj_sq = [&](const Poly<BigFloat>& p) {
        std::vector<BigFloat> re, im;
        const auto& c = p.coeffs();
        for (std::size_t k = 0; k < c.size(); ++k) {
            BigFloat v = (k % 4 >= 2) ? BigFloat(-c[k]) : c[k];
            auto& dst = (k % 2 == 0) ? re : im;
            dst.resize(std::max(dst.size(), k + 1), BigFloat(0));
            dst[k] = v;
        }
        Poly<BigFloat> pr{std::move(re)}, pi2{std::move(im)};
        return pr * pr + pi2 * pi2;
    };
    Poly<BigFloat> E = conj_sq(D) - conj_sq(N);
    // Cancellation noise: coefficients many orders below the largest
    // one are artifacts of rounding, not signal. Flush them to zero so
    // near-symmetric inputs read as E = 0 rather than as a huge-degree
    // noise polynomial.
    {
        BigFloat scale(0);
        for (const auto& c : E.coeffs())
            if (abs(c) > scale) scale = abs(c);
        const BigFloat floor = scale * BigFloat("1e-45");
        std::vector<BigFloat> cleaned = E.coeffs();
        for (auto& c : cleaned)
            if (abs(c) <= floor) c = 0;
        E = Poly<BigFloat>(std::move(cleaned));
    }
    bool e_nonneg = true, e_zero = E.is_zero();
    if (!e_zero) {
        BigFloat scale(0);
        for (const auto& c : E.coeffs())
            if (abs(c) > scale) scale = abs(c);
        if (E.coeffs().size() <= 1) {
            e_nonneg = E.constant() >= -tol * scale;
        } else {
            std::vector<BigFloat> xs = {BigFloat(0)};
            for (const auto& r : numeric_roots_of(E).roots)
                if (abs(r.value.imag()) <= tol) xs.push_back(r.value.real());
            std::sort(xs.begin(), xs.end());
            std::vector<BigFloat> samples = {xs.front() - 1, xs.back() + 1};
            for (std::size_t i = 0; i + 1 < xs.size(); ++i)
                samples.push_back((xs[i] + xs[i + 1]) / 2);
            for (const auto& x : samples)
                if (E(x) < -tol * scale) { e_nonneg = false; break; }
        }
    }

    Verdict vi, va;
    vi.certificate = {Criterion::FullDecision, false, "numerical E-sign and pole classification"};
    va.certificate = vi.certificate;
    vi.value = !pole_axis && e_nonneg;
    va.value = !pole_lhp && e_nonneg;
    return {va, vi};
}

} // namespace detail

/* Consistency guard for forward methods with few stages: the spectrum
 * lies in {0} union the open right half-plane, and I-stability must
 * come with A-stability. A failure here is an implementation bug. */
inline Certificate small_s_consistency(const CollocationMethod& m, const StabilityReport& rep) {
    Certificate c{Criterion::SmallSTheorem, true, ""};
    if (!m.pi) {
        c.exact = false;
        c.details = "skipped: no exact node polynomial";
        return c;
    }
    if (!no_root_in_closed_lhp_except_origin(tau_transform(*m.pi)))
        throw contract_violation("spectrum localization violated for a forward method, s <= 4");
    if (rep.value(Notion::I) && !rep.value(Notion::A))
        throw contract_violation("I-stable but not A-stable with s <= 4: inconsistent report");
    c.details = "spectrum in {0} u RHP confirmed; I => A holds";
    return c;
}

inline StabilityReport classify(const CollocationMethod& m, const ClassifyOptions& opt = {}) {
    StabilityReport rep;
    rep.flags = m.flags;
    rep.flags_exact = m.flags_exact;

    std::optional<StabilityFunction> sf;
    if (m.pi) {
        sf = stability_function(*m.pi);
        if (m.tableau) verify_against_definition(*sf, *m.tableau);
        rep.sf = sf;
    }
    rep.spectrum = detail::method_spectrum(m);

    auto set6 = [&](bool value, Criterion crit, bool exact, const std::string& why) {
        for (Notion n : {Notion::A, Notion::AS, Notion::ASI, Notion::I, Notion::IS, Notion::ISI})
            rep.verdicts[n] = Verdict{value, Certificate{crit, exact, why}};
    };
    auto have = [&](Notion n) { return rep.verdicts.count(n) != 0; };

    std::optional<HalfPlaneVerdict> tau_hp;
    std::optional<bool> tau_axis_free;
    if (m.pi) {
        RPoly tp = tau_transform(*m.pi);
        tau_hp = half_plane_analysis(tp);
        tau_axis_free = imaginary_axis_roots(tp).empty();
    }

    if (!opt.force_full) {
        if (m.gauss_family) {
            set6(true, Criterion::GaussTheorem, true,
                 "collocation at Gauss points is A-hat- and I-hat-stable");
        } else if (m.pi && m.flags.symmetric && tau_hp->all_open_rhp) {
            set6(true, Criterion::SymmetricFastpathA, true,
                 "symmetric nodes and tau(pi) root-free in C^-");
        } else {
            if (m.pi) {
                Verdict a = decide_A(*sf);
                rep.verdicts[Notion::A] = a;
                if (a.value && tau_hp->all_open_rhp) {
                    Certificate c{Criterion::LemmaAHat, true,
                                  "A-stable and tau(pi) root-free in C^-"};
                    rep.verdicts[Notion::AS] = {true, c};
                    rep.verdicts[Notion::ASI] = {true, c};
                    Verdict i = decide_I(*sf);
                    rep.verdicts[Notion::I] = i;
                    Certificate ci{Criterion::LemmaAHat, true, "implied: A-hat => I-hat"};
                    rep.verdicts[Notion::IS] = {true, ci};
                    rep.verdicts[Notion::ISI] = {true, ci};
                }
            }
            if (!have(Notion::I) && m.pi && m.flags.symmetric && *tau_axis_free) {
                Certificate c{Criterion::SymmetricFastpathI, true,
                              "symmetric nodes and tau(pi) root-free on the imaginary axis"};
                rep.verdicts[Notion::I] = {true, c};
                rep.verdicts[Notion::IS] = {true, c};
                rep.verdicts[Notion::ISI] = {true, c};
            }
            if (!have(Notion::I) && m.pi) {
                Verdict i = decide_I(*sf);
                rep.verdicts[Notion::I] = i;
                if (i.value && *tau_axis_free) {
                    Certificate c{Criterion::LemmaIHat, true,
                                  "I-stable and tau(pi) root-free on the imaginary axis"};
                    rep.verdicts[Notion::IS] = {true, c};
                    rep.verdicts[Notion::ISI] = {true, c};
                }
            }
        }
    }

    // Full decisions for whatever the fast paths left open.
    if (!have(Notion::A) || !have(Notion::I)) {
        if (m.pi) {
            if (!have(Notion::A)) rep.verdicts[Notion::A] = decide_A(*sf);
            if (!have(Notion::I)) rep.verdicts[Notion::I] = decide_I(*sf);
        } else {
            auto [va, vi] = detail::decide_AI_numerical(m, opt.tolerance);
            if (!have(Notion::A)) rep.verdicts[Notion::A] = va;
            if (!have(Notion::I)) rep.verdicts[Notion::I] = vi;
        }
    }
    if (!have(Notion::ASI))
        rep.verdicts[Notion::ASI] =
            m.tableau ? decide_ASI(*m.tableau)
                      : (m.pi ? decide_ASI_spectral(*m.pi)
                              : detail::decide_SI_numerical(true, opt.tolerance, rep.spectrum));
    if (!have(Notion::ISI))
        rep.verdicts[Notion::ISI] =
            m.tableau ? decide_ISI(*m.tableau)
                      : (m.pi ? decide_ISI_spectral(*m.pi)
                              : detail::decide_SI_numerical(false, opt.tolerance, rep.spectrum));
    if (!have(Notion::AS)) {
        if (m.tableau) {
            rep.verdicts[Notion::AS] = decide_AS(*m.tableau);
        } else if (m.pi && rep.value(Notion::ASI) && rep.verdicts[Notion::ASI].certificate.exact &&
                   m.pi->constant() != 0) {
            rep.verdicts[Notion::AS] = {
                true, Certificate{Criterion::BInRangeAt, true,
                                  "A invertible (pi(0) != 0), so b in range(A^t);"
                                  " ASI-stability then implies AS-stability"}};
        } else {
            rep.verdicts[Notion::AS] = detail::decide_S_numerical(m, true, opt.tolerance,
                                                                  rep.spectrum);
        }
    }
    if (!have(Notion::IS)) {
        if (m.tableau) {
            rep.verdicts[Notion::IS] = decide_IS(*m.tableau);
        } else if (m.pi && rep.value(Notion::ISI) && rep.verdicts[Notion::ISI].certificate.exact &&
                   m.pi->constant() != 0) {
            rep.verdicts[Notion::IS] = {
                true, Certificate{Criterion::BInRangeAt, true,
                                  "A invertible (pi(0) != 0), so b in range(A^t);"
                                  " ISI-stability then implies IS-stability"}};
        } else {
            rep.verdicts[Notion::IS] = detail::decide_S_numerical(m, false, opt.tolerance,
                                                                  rep.spectrum);
        }
    }

    // A-hat / I-hat are the conjunctions, by definition.
    auto conj = [&](Notion target, Notion x, Notion y, Notion z) {
        bool val = rep.value(x) && rep.value(y) && rep.value(z);
        bool exact = rep.verdicts[x].certificate.exact && rep.verdicts[y].certificate.exact &&
                     rep.verdicts[z].certificate.exact;
        rep.verdicts[target] =
            Verdict{val, Certificate{Criterion::FullDecision, exact,
                                     std::string("conjunction of ") + notion_name(x) + ", " +
                                         notion_name(y) + ", " + notion_name(z)}};
    };
    conj(Notion::AHat, Notion::A, Notion::AS, Notion::ASI);
    conj(Notion::IHat, Notion::I, Notion::IS, Notion::ISI);

    // Implication lattice: these hold by definition; a violation in an
    // exact report is an implementation bug.
    if (rep.flags_exact) {
        auto implies_ok = [&](Notion strong, Notion weak) {
            return !(rep.verdicts[strong].certificate.exact &&
                     rep.verdicts[weak].certificate.exact) ||
                   !rep.value(strong) || rep.value(weak);
        };
        if (!implies_ok(Notion::A, Notion::I) || !implies_ok(Notion::AS, Notion::IS) ||
            !implies_ok(Notion::ASI, Notion::ISI))
            throw contract_violation("implication lattice violated in an exact report");
    }

    if (m.flags.forward && m.flags_exact && m.s <= 4 && m.pi)
        rep.consistency = small_s_consistency(m, rep);

    return rep;
}

} // namespace rkstab
