#pragma once

/* The real quadratic field Q(sqrt(d)): values a + b*sqrt(d) with exact
 * rational components. d is carried per value; a value with b = 0 is
 * radicand-agnostic and combines with any d. Ordering and sign are
 * exact (d > 0, so the field embeds in R).
 *
 * Used for tableau construction at irrational collocation nodes that
 * live in a quadratic extension (Gauss two-point nodes and the like);
 * all certified stability decisions stay over the rationals.
 */

#include "rkstab/rational.hpp"

#include <cmath>
#include <string>

namespace rkstab {

class QuadraticRational {
  public:
    QuadraticRational() : a_(0), b_(0), d_(0) {}
    QuadraticRational(int v) : a_(v), b_(0), d_(0) {}
    explicit QuadraticRational(const Int& v) : a_(v), b_(0), d_(0) {}
    QuadraticRational(Rational v) : a_(std::move(v)), b_(0), d_(0) {}
    QuadraticRational(Rational a, Rational b, Int d)
        : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        if (d_ <= 0) throw contract_violation("radicand must be positive");
        if (b_ == 0) d_ = 0;
    }

    static QuadraticRational sqrt_of(Int d) { return QuadraticRational(0, 1, std::move(d)); }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    const Int& radicand() const { return d_; }
    bool is_rational() const { return b_ == 0; }

    friend QuadraticRational operator-(const QuadraticRational& x) {
        QuadraticRational r(x);
        r.a_ = -r.a_;
        r.b_ = -r.b_;
        return r;
    }

    friend QuadraticRational operator+(const QuadraticRational& x, const QuadraticRational& y) {
        Int d = joint_radicand(x, y);
        QuadraticRational r;
        r.a_ = x.a_ + y.a_;
        r.b_ = x.b_ + y.b_;
        r.d_ = r.b_ == 0 ? Int(0) : d;
        return r;
    }
    friend QuadraticRational operator-(const QuadraticRational& x, const QuadraticRational& y) {
        return x + (-y);
    }
    friend QuadraticRational operator*(const QuadraticRational& x, const QuadraticRational& y) {
        Int d = joint_radicand(x, y);
        QuadraticRational r;
        r.a_ = x.a_ * y.a_ + x.b_ * y.b_ * Rational(d);
        r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
        r.d_ = r.b_ == 0 ? Int(0) : d;
        return r;
    }
    friend QuadraticRational operator/(const QuadraticRational& x, const QuadraticRational& y) {
        Int d = joint_radicand(x, y);
        Rational n = y.a_ * y.a_ - y.b_ * y.b_ * Rational(d);
        if (n == 0) throw contract_violation("division by zero in Q(sqrt(d))");
        QuadraticRational conj;
        conj.a_ = y.a_ / n;
        conj.b_ = -y.b_ / n;
        conj.d_ = conj.b_ == 0 ? Int(0) : d;
        return x * conj;
    }

    QuadraticRational& operator+=(const QuadraticRational& y) { return *this = *this + y; }
    QuadraticRational& operator-=(const QuadraticRational& y) { return *this = *this - y; }
    QuadraticRational& operator*=(const QuadraticRational& y) { return *this = *this * y; }
    QuadraticRational& operator/=(const QuadraticRational& y) { return *this = *this / y; }

    friend bool operator==(const QuadraticRational& x, const QuadraticRational& y) {
        if (x.b_ != 0 && y.b_ != 0 && x.d_ != y.d_) return false;
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadraticRational& x, const QuadraticRational& y) {
        return !(x == y);
    }

    /* Exact sign of the real number a + b*sqrt(d). */
    int sgn() const {
        if (b_ == 0) return sign(a_);
        if (a_ == 0) return sign(b_);
        int sa = sign(a_), sb = sign(b_);
        if (sa == sb) return sa;
        int cmp = sign(a_ * a_ - b_ * b_ * Rational(d_)); // sign of a^2 - b^2 d
        return cmp == 0 ? 0 : (cmp > 0 ? sa : sb);
    }

    friend bool operator<(const QuadraticRational& x, const QuadraticRational& y) {
        return (x - y).sgn() < 0;
    }

    double to_double() const {
        double r = static_cast<double>(a_);
        if (b_ != 0) r += static_cast<double>(b_) * std::sqrt(static_cast<double>(d_));
        return r;
    }

    std::string str() const {
        if (b_ == 0) return to_string(a_);
        std::string s;
        if (a_ != 0) s = to_string(a_) + (b_ > 0 ? " + " : " - ");
        else if (b_ < 0) s = "-";
        Rational ab = rkstab::abs(b_);
        if (ab != 1) s += to_string(ab) + "*";
        s += "sqrt(" + d_.str() + ")";
        return s;
    }

  private:
    static Int joint_radicand(const QuadraticRational& x, const QuadraticRational& y) {
        if (x.b_ == 0) return y.d_;
        if (y.b_ == 0) return x.d_;
        if (x.d_ != y.d_)
            throw contract_violation("mixing incompatible quadratic radicands");
        return x.d_;
    }

    Rational a_, b_;
    Int d_;
};

inline int sign(const QuadraticRational& x) { return x.sgn(); }
inline QuadraticRational abs(const QuadraticRational& x) { return x.sgn() < 0 ? -x : x; }
inline std::string to_string(const QuadraticRational& x) { return x.str(); }

template <>
inline constexpr bool is_exact_field_v<QuadraticRational> = true;

} // namespace rkstab
