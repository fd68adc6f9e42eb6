#pragma once

/* Collocation node sets: validation, the node polynomial, the named
 * node families, and exact structural properties.
 */

#include "rkstab/polynomial.hpp"
#include "rkstab/rational.hpp"
#include "rkstab/sturm.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace rkstab {

enum class Exactness { Exact, Numerical };

/* Strictly increasing, distinct node values. Numerical node sets store
 * rational approximants (isolating-interval midpoints or decimal
 * literals); only Exact ones may feed certified construction. */
struct NodeSet {
    std::vector<Rational> values;     // sorted ascending
    std::vector<Rational> original;   // input order, for the report echo
    Exactness exactness = Exactness::Exact;
    std::size_t stage_count() const { return values.size(); }
};

struct StructureFlags {
    bool forward = false;            // all nodes >= 0
    bool symmetric = false;          // c_i + c_{s+1-i} = 1 for all i
    bool contains_zero_node = false;
};

inline NodeSet validate_nodes(std::vector<Rational> raw, Exactness ex = Exactness::Exact) {
    if (raw.empty()) throw std::invalid_argument("node list is empty");
    NodeSet ns;
    ns.original = raw;
    ns.exactness = ex;
    std::sort(raw.begin(), raw.end());
    for (std::size_t i = 0; i + 1 < raw.size(); ++i)
        if (raw[i] == raw[i + 1])
            throw std::invalid_argument("duplicate node " + to_string(raw[i]));
    ns.values = std::move(raw);
    return ns;
}

/* Grammar: comma-separated tokens, each "p/q", an integer, or a
 * decimal literal. Any decimal token downgrades the set to Numerical. */
inline NodeSet parse_nodes(const std::string& text) {
    std::vector<Rational> vals;
    bool any_decimal = false;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string tok = text.substr(start, comma == std::string::npos ? comma : comma - start);
        // trim blanks
        while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        bool dec = false;
        vals.push_back(parse_rational(tok, &dec));
        any_decimal |= dec;
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return validate_nodes(std::move(vals),
                          any_decimal ? Exactness::Numerical : Exactness::Exact);
}

/* The monic node polynomial prod (X - c_i), expanded exactly. */
inline RPoly pi_from_nodes(const NodeSet& ns) {
    if (ns.exactness != Exactness::Exact)
        throw contract_violation("exact node polynomial requires exact nodes");
    RPoly p = RPoly::one();
    for (const auto& c : ns.values) p = p * RPoly{-c, Rational(1)};
    return p;
}

/* Monic polynomial whose roots are the s Gauss points: the s-th
 * derivative of (X(X-1))^s, normalized. */
inline RPoly gauss_pi(unsigned s) {
    if (s < 1) throw contract_violation("stage count must be positive");
    RPoly base = RPoly{Rational(0), Rational(-1), Rational(1)}; // X^2 - X
    RPoly p = RPoly::one();
    for (unsigned k = 0; k < s; ++k) p = p * base;
    for (unsigned k = 0; k < s; ++k) p = p.derivative();
    return p.monic();
}

inline NodeSet uniform_closed_nodes(unsigned s) {
    if (s < 2) throw std::invalid_argument("endpoint grid needs at least 2 stages");
    std::vector<Rational> v;
    for (unsigned i = 0; i < s; ++i) v.emplace_back(Int(i), Int(s - 1));
    return validate_nodes(std::move(v));
}

inline NodeSet uniform_open_nodes(unsigned s) {
    if (s < 1) throw std::invalid_argument("stage count must be positive");
    std::vector<Rational> v;
    for (unsigned i = 1; i <= s; ++i) v.emplace_back(Int(i), Int(s + 1));
    return validate_nodes(std::move(v));
}

inline StructureFlags structure_flags(const NodeSet& ns) {
    StructureFlags f;
    const auto& c = ns.values;
    const std::size_t s = c.size();
    f.forward = c.front() >= 0;
    f.contains_zero_node = false;
    for (const auto& v : c) f.contains_zero_node |= (v == 0);
    f.symmetric = true;
    for (std::size_t i = 0; i < s; ++i)
        if (c[i] + c[s - 1 - i] != 1) { f.symmetric = false; break; }
    return f;
}

/* Structural properties read off the node polynomial alone, exactly:
 * symmetry is the coefficient identity pi(X+1) = (-1)^s pi(-X),
 * forwardness is the absence of negative real roots (Sturm). */
inline StructureFlags structure_flags_from_pi(const RPoly& pi) {
    if (pi.degree() < 1) throw contract_violation("node polynomial must have degree >= 1");
    StructureFlags f;
    const int s = pi.degree();
    f.contains_zero_node = pi.constant() == 0;

    std::vector<Rational> neg = pi.coeffs();
    for (std::size_t k = 1; k < neg.size(); k += 2) neg[k] = -neg[k];
    RPoly pi_neg(std::move(neg)); // pi(-X)
    f.symmetric = shift(pi, Rational(1)) == (s % 2 == 0 ? pi_neg : -pi_neg);

    RPoly q = pi;
    if (f.contains_zero_node) q = q / RPoly::x();
    f.forward = q.degree() == 0 ||
                sturm_real_root_count(radical(q), std::nullopt, Rational(0)) == 0;
    return f;
}

/* Numerical nodes recovered from an exact node polynomial. Rejects
 * polynomials that do not have deg(p) distinct real roots. */
inline NodeSet nodes_from_pi(const RPoly& p,
                             const Rational& max_width = Rational(1, Int(1) << 40)) {
    if (p.is_zero() || p.degree() < 1)
        throw std::invalid_argument("node polynomial must have degree >= 1");
    if (p.leading() != 1)
        throw std::invalid_argument("node polynomial must be monic");
    const int s = p.degree();
    if (gcd_poly(p, p.derivative()).degree() != 0)
        throw std::invalid_argument("node polynomial has repeated roots");
    if (sturm_real_root_count(p) != s)
        throw std::invalid_argument("node polynomial has non-real roots");
    auto ivs = isolate_real_roots(p, max_width);
    NodeSet ns;
    ns.exactness = Exactness::Numerical;
    for (auto& iv : ivs) {
        iv = refine_root(p, iv, max_width);
        ns.values.push_back(iv.midpoint());
    }
    ns.original = ns.values;
    return ns;
}

} // namespace rkstab
