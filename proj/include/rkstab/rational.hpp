#pragma once

/* Exact scalar layer: arbitrary-precision integers and rationals.
 *
 * Rationals are kept canonical (positive denominator, reduced) by the
 * backing boost::multiprecision type; everything downstream relies on
 * exact comparisons and exact sign computations on these values.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rkstab {

using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

inline int sign(const Rational& x) { return x.sign(); }
inline int sign(const Int& x) { return x.sign(); }

inline Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

inline Rational pow(const Rational& x, unsigned e) {
    Rational r = 1, base = x;
    for (; e; e >>= 1) {
        if (e & 1) r *= base;
        base *= base;
    }
    return r;
}

/* Renders as "p/q", or "p" when the denominator is 1. */
inline std::string to_string(const Rational& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

/* Accepts "p", "p/q" and decimal literals ("0.35", "-1.5e-2").
 * Decimal input is converted to the exact fraction it denotes;
 * `was_decimal` tells the caller which grammar branch matched. */
inline Rational parse_rational(std::string_view tok, bool* was_decimal = nullptr) {
    if (was_decimal) *was_decimal = false;
    std::string t(tok);
    if (t.empty()) throw std::invalid_argument("empty numeric token");

    auto slash = t.find('/');
    if (slash != std::string::npos) {
        try {
            Int num(t.substr(0, slash));
            Int den(t.substr(slash + 1));
            if (den == 0) throw std::invalid_argument("zero denominator in '" + t + "'");
            return Rational(num, den);
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("malformed rational '" + t + "'");
        }
    }

    auto dot = t.find('.');
    auto exp = t.find_first_of("eE");
    if (dot == std::string::npos && exp == std::string::npos) {
        try {
            return Rational(Int(t));
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("malformed integer '" + t + "'");
        }
    }

    if (was_decimal) *was_decimal = true;
    long e10 = 0;
    if (exp != std::string::npos) {
        try {
            e10 = std::stol(t.substr(exp + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed exponent in '" + t + "'");
        }
        t = t.substr(0, exp);
        dot = t.find('.');
    }
    if (dot != std::string::npos) {
        e10 -= static_cast<long>(t.size() - dot - 1);
        t.erase(dot, 1);
    }
    if (t.empty() || t == "-" || t == "+") throw std::invalid_argument("malformed decimal");
    Int mantissa;
    try {
        mantissa = Int(t);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed decimal '" + t + "'");
    }
    Rational r(mantissa);
    Int ten10 = 1;
    for (long k = 0; k < (e10 < 0 ? -e10 : e10); ++k) ten10 *= 10;
    if (e10 >= 0) r *= Rational(ten10);
    else r /= Rational(ten10);
    return r;
}

/* Thrown when a documented precondition of an internal operation is
 * violated; distinct from invalid_argument, which flags bad user input. */
class contract_violation : public std::logic_error {
  public:
    explicit contract_violation(const std::string& what) : std::logic_error(what) {}
};

/* Marks scalar types whose arithmetic is exact; equality checks on
 * such types are mathematically meaningful. */
template <typename F>
inline constexpr bool is_exact_field_v = false;
template <>
inline constexpr bool is_exact_field_v<Rational> = true;

} // namespace rkstab
