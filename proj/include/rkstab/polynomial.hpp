#pragma once

/* Dense univariate polynomials over an exact field.
 *
 * Coefficients are stored in ascending order (index k holds the
 * coefficient of X^k) and the representation is kept normalized: the
 * highest-index coefficient is nonzero, the zero polynomial is the
 * empty sequence. Degree of the zero polynomial is reported as -1.
 *
 * The template parameter F needs field arithmetic (+,-,*,/), equality,
 * and construction from Int. Instantiated with Rational for all
 * certified computation, with QuadraticRational for tableau work in
 * quadratic number fields, and with floating types in the uncertified
 * numeric pipeline.
 */

#include "rkstab/rational.hpp"

#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace rkstab {

template <typename F>
class Poly {
  public:
    Poly() = default;
    explicit Poly(int v) : c_{F(v)} { normalize(); }
    explicit Poly(const F& c0) : c_{c0} { normalize(); }
    explicit Poly(std::vector<F> ascending) : c_(std::move(ascending)) { normalize(); }
    Poly(std::initializer_list<F> ascending) : c_(ascending) { normalize(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(F(1)); }
    static Poly x() { return Poly{F(0), F(1)}; }
    /* c * X^k */
    static Poly monomial(const F& c, std::size_t k) {
        if (c == F(0)) return Poly();
        std::vector<F> v(k + 1, F(0));
        v[k] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    /* -1 for the zero polynomial */
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<F>& coeffs() const { return c_; }
    F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F(0); }
    const F& leading() const {
        if (c_.empty()) throw contract_violation("leading coefficient of zero polynomial");
        return c_.back();
    }
    F constant() const { return coeff(0); }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r(*this);
        for (auto& a : r.c_) a = -a;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), F(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        normalize();
        return *this;
    }
    Poly& operator-=(const Poly& o) { return *this += -o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(v));
    }

    friend Poly operator*(const F& s, Poly p) {
        for (auto& a : p.c_) a = s * a;
        p.normalize();
        return p;
    }
    friend Poly operator*(Poly p, const F& s) { return s * std::move(p); }

    Poly operator/(const F& s) const {
        Poly r(*this);
        for (auto& a : r.c_) a = a / s;
        return r;
    }

    /* Euclidean division; F is a field so this is always defined for
     * nonzero divisor. Returns {quotient, remainder}. */
    friend std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw contract_violation("polynomial division by zero");
        if (a.degree() < b.degree()) return {Poly(), a};
        std::vector<F> rem = a.c_;
        std::vector<F> quot(a.c_.size() - b.c_.size() + 1, F(0));
        const F inv_lc = F(1) / b.leading();
        for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
            F q = rem[k + b.degree()] * inv_lc;
            if (q == F(0)) continue;
            quot[static_cast<std::size_t>(k)] = q;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                rem[static_cast<std::size_t>(k) + j] -= q * b.c_[j];
        }
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

    friend Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

    F operator()(const F& x) const {
        F acc(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    /* Horner evaluation at a point of a different (wider) scalar type;
     * Conv converts each coefficient. */
    template <typename T, typename Conv>
    T eval_as(const T& x, Conv conv) const {
        T acc(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + conv(c_[k]);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<F> v(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = F(Int(k)) * c_[k];
        return Poly(std::move(v));
    }

    /* Antiderivative vanishing at 0. */
    Poly integral() const {
        if (is_zero()) return Poly();
        std::vector<F> v(c_.size() + 1, F(0));
        for (std::size_t k = 0; k < c_.size(); ++k) v[k + 1] = c_[k] / F(Int(k + 1));
        return Poly(std::move(v));
    }

    Poly monic() const {
        if (is_zero()) throw contract_violation("monic of zero polynomial");
        return *this / leading();
    }

    std::string str(const char* var = "X") const;

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == F(0)) c_.pop_back();
    }

    std::vector<F> c_;
};

/* q(X) = p(X + a), expanded exactly by Horner over F[X]. */
template <typename F>
Poly<F> shift(const Poly<F>& p, const F& a) {
    Poly<F> acc;
    const Poly<F> xa{a, F(1)};
    for (std::size_t k = p.coeffs().size(); k-- > 0;)
        acc = acc * xa + Poly<F>(p.coeffs()[k]);
    return acc;
}

/* Coefficient mirror: sum_k a_k X^{n-k}. Requires n >= deg p. */
template <typename F>
Poly<F> reversal(const Poly<F>& p, std::size_t n) {
    if (p.degree() > static_cast<int>(n))
        throw contract_violation("reversal: degree bound below actual degree");
    if (p.is_zero()) return Poly<F>();
    std::vector<F> v(n + 1, F(0));
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) v[n - k] = p.coeffs()[k];
    return Poly<F>(std::move(v));
}

/* The linear map multiplying the coefficient of X^k by k!. */
template <typename F>
Poly<F> tau_transform(const Poly<F>& p) {
    std::vector<F> v = p.coeffs();
    for (std::size_t k = 2; k < v.size(); ++k) v[k] = F(factorial(static_cast<unsigned>(k))) * v[k];
    return Poly<F>(std::move(v));
}

/* Monic gcd by the Euclidean algorithm, renormalizing each remainder to
 * keep coefficient growth in check. gcd(0,0) is a contract violation. */
template <typename F>
Poly<F> gcd_poly(Poly<F> a, Poly<F> b) {
    if (a.is_zero() && b.is_zero()) throw contract_violation("gcd of two zero polynomials");
    while (!b.is_zero()) {
        Poly<F> r = a % b;
        if (!r.is_zero()) r = r.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/* Square-free (Yun) decomposition: returns factors f_i with
 * multiplicity i, i = 1..m, so that p = lc * prod f_i^i with all f_i
 * monic, square-free and pairwise coprime (some may be 1). */
template <typename F>
std::vector<Poly<F>> squarefree_decomposition(const Poly<F>& p) {
    if (p.is_zero()) throw contract_violation("square-free decomposition of zero");
    std::vector<Poly<F>> out;
    if (p.degree() == 0) return out;
    Poly<F> pm = p.monic();
    Poly<F> d = pm.derivative();
    Poly<F> a = gcd_poly(pm, d);
    Poly<F> b = pm / a;       // product of distinct factors
    Poly<F> c = d / a;
    Poly<F> z = c - b.derivative();
    while (!(b.degree() == 0)) {
        Poly<F> f = z.is_zero() ? b : gcd_poly(b, z);
        out.push_back(f);
        b = b / f;
        c = z / f;
        z = c - b.derivative();
    }
    return out;
}

/* Product of the irreducible factors of odd multiplicity (monic).
 * p / odd_part is then a perfect square up to the positive constant
 * lc(p)/lc(odd_part) exactly when that ratio is positive. */
template <typename F>
Poly<F> odd_multiplicity_part(const Poly<F>& p) {
    auto sf = squarefree_decomposition(p);
    Poly<F> odd = Poly<F>::one();
    for (std::size_t i = 0; i < sf.size(); ++i)
        if (i % 2 == 0) odd = odd * sf[i]; // multiplicity i+1 odd
    return odd;
}

/* True when a = c*b for a nonzero constant c (both zero also counts). */
template <typename F>
bool proportional(const Poly<F>& a, const Poly<F>& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.degree() != b.degree()) return false;
    const F ratio = a.leading() / b.leading();
    return a == ratio * b;
}

template <typename F>
std::string Poly<F>::str(const char* var) const {
    using rkstab::to_string;
    using std::to_string;
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k] == F(0)) continue;
        std::string cs;
        if constexpr (std::is_same_v<F, Rational>) cs = to_string(c_[k]);
        else {
            std::ostringstream t;
            t << c_[k];
            cs = t.str();
        }
        bool neg = !cs.empty() && cs[0] == '-';
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        if (neg) cs.erase(0, 1);
        bool need_coeff = (k == 0) || cs != "1";
        if (need_coeff) os << cs;
        if (k > 0) {
            if (need_coeff) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

} // namespace rkstab
