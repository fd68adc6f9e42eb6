#include "rkstab/poly_matrix.hpp"
#include "rkstab/polynomial.hpp"
#include "rkstab/quadratic_ext.hpp"
#include "rkstab/rational.hpp"
#include "rkstab/sturm.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace rkstab;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

std::mt19937_64 rng(20240811u);

Rational random_rational(long max_num = 6, long max_den = 4) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

RPoly random_poly(int max_deg) {
    std::uniform_int_distribution<int> d(0, max_deg);
    int deg = d(rng);
    std::vector<Rational> c;
    for (int k = 0; k <= deg; ++k) c.push_back(random_rational());
    return RPoly(std::move(c));
}

} // namespace

TEST_CASE("rational parsing and canonical form") {
    CHECK(parse_rational("3/6") == Q(1, 2));
    CHECK(parse_rational("-4/8") == Q(-1, 2));
    CHECK(parse_rational("7") == Q(7));
    bool dec = false;
    CHECK(parse_rational("0.25", &dec) == Q(1, 4));
    CHECK(dec);
    dec = false;
    CHECK(parse_rational("-1.5e-2", &dec) == Q(-3, 200));
    CHECK(dec);
    CHECK(parse_rational("1/3", &dec) == Q(1, 3));
    CHECK_FALSE(dec);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK(to_string(Q(-3, 7)) == "-3/7");
    CHECK(to_string(Q(5)) == "5");
}

TEST_CASE("rational canonicality under random arithmetic chains") {
    for (int iter = 0; iter < 200; ++iter) {
        Rational x = random_rational(20, 15), y = random_rational(20, 15);
        for (Rational v : {x + y, x * y, x - y}) {
            CHECK(gcd(numerator(v) < 0 ? Int(-numerator(v)) : numerator(v), denominator(v)) == 1);
            CHECK(denominator(v) > 0);
        }
    }
}

TEST_CASE("polynomial ring laws on random triples") {
    for (int iter = 0; iter < 100; ++iter) {
        RPoly a = random_poly(5), b = random_poly(5), c = random_poly(5);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("division, derivative, integral") {
    RPoly p{Q(-1), Q(0), Q(1)};          // X^2 - 1
    RPoly d{Q(-1), Q(1)};                // X - 1
    auto [q, r] = divrem(p, d);
    CHECK(q == RPoly{Q(1), Q(1)});
    CHECK(r.is_zero());
    CHECK(p.derivative() == RPoly{Q(0), Q(2)});
    CHECK(p.derivative().integral() == RPoly{Q(0), Q(0), Q(1)});
}

TEST_CASE("tau transform") {
    // X^2 + X + 1 -> 2X^2 + X + 1
    CHECK(tau_transform(RPoly{Q(1), Q(1), Q(1)}) == RPoly{Q(1), Q(1), Q(2)});
    // Gauss s=2 node polynomial X^2 - X + 1/6 -> 2X^2 - X + 1/6
    CHECK(tau_transform(RPoly{Q(1, 6), Q(-1), Q(1)}) == RPoly{Q(1, 6), Q(-1), Q(2)});
    CHECK(tau_transform(RPoly()).is_zero());
}

TEST_CASE("tau transform is linear") {
    for (int iter = 0; iter < 50; ++iter) {
        RPoly p = random_poly(6), q = random_poly(6);
        Rational alpha = random_rational(), beta = random_rational();
        CHECK(tau_transform(alpha * p + beta * q) ==
              alpha * tau_transform(p) + beta * tau_transform(q));
    }
}

TEST_CASE("shift") {
    CHECK(shift(RPoly{Q(0), Q(0), Q(1)}, Q(1)) == RPoly{Q(1), Q(2), Q(1)});
    RPoly p = random_poly(6);
    CHECK(shift(p, Q(0)) == p);
    // symmetric nodes (1/3, 2/3): pi(X+1) = (-1)^2 pi(-X)
    RPoly pi{Q(2, 9), Q(-1), Q(1)};
    RPoly pi_neg{Q(2, 9), Q(1), Q(1)};
    CHECK(shift(pi, Q(1)) == pi_neg);
}

TEST_CASE("shift round-trips") {
    for (int iter = 0; iter < 50; ++iter) {
        RPoly p = random_poly(7);
        Rational a = random_rational();
        CHECK(shift(shift(p, a), Rational(-a)) == p);
    }
}

TEST_CASE("reversal") {
    CHECK(reversal(RPoly{Q(1, 6), Q(-1), Q(2)}, 2) == RPoly{Q(2), Q(-1), Q(1, 6)});
    CHECK(reversal(RPoly::one(), 3) == RPoly::monomial(Q(1), 3));
    CHECK(reversal(RPoly{Q(-1, 2), Q(1)}, 1) == RPoly{Q(1), Q(-1, 2)});
    CHECK_THROWS_AS(reversal(RPoly{Q(1), Q(1), Q(1)}, 1), contract_violation);
    for (int iter = 0; iter < 50; ++iter) {
        RPoly p = random_poly(6);
        if (p.is_zero() || p.constant() == 0) continue;
        auto n = static_cast<std::size_t>(p.degree());
        CHECK(reversal(reversal(p, n), n) == p);
    }
}

TEST_CASE("gcd") {
    CHECK(gcd_poly(RPoly{Q(-1), Q(0), Q(1)}, RPoly{Q(-1), Q(1)}) == RPoly{Q(-1), Q(1)});
    CHECK(gcd_poly(RPoly{Q(0), Q(1)}, RPoly{Q(1), Q(1)}) == RPoly::one());
    CHECK_THROWS_AS(gcd_poly(RPoly(), RPoly()), contract_violation);
    for (int iter = 0; iter < 50; ++iter) {
        RPoly p = random_poly(4), q = random_poly(4), g = random_poly(3);
        if (p.is_zero() || q.is_zero() || g.is_zero()) continue;
        RPoly lhs = gcd_poly(p * g, q * g);
        RPoly rhs = g.monic() * gcd_poly(p, q);
        CHECK(proportional(lhs, rhs));
        // the monic gcd of the cofactors divides out
        CHECK((lhs % g.monic()).is_zero());
    }
}

TEST_CASE("square-free part") {
    RPoly pm1{Q(-1), Q(1)}, pp2{Q(2), Q(1)};
    CHECK(odd_multiplicity_part(pm1 * pm1 * pp2) == pp2);
    CHECK(odd_multiplicity_part(RPoly::monomial(Q(1), 4)) == RPoly::one());
    CHECK(odd_multiplicity_part(pm1 * pm1 * pm1) == pm1);
    CHECK_THROWS_AS(squarefree_decomposition(RPoly()), contract_violation);
}

TEST_CASE("sturm root counts") {
    CHECK(sturm_real_root_count(RPoly{Q(1), Q(0), Q(1)}) == 0);   // X^2 + 1
    CHECK(sturm_real_root_count(RPoly{Q(0), Q(-1), Q(1)}) == 2);  // X^2 - X
    // half-open interval semantics (lo, hi]
    RPoly p{Q(0), Q(-1), Q(1)}; // roots 0, 1
    CHECK(sturm_real_root_count(p, Q(0), Q(1)) == 1);
    CHECK(sturm_real_root_count(p, Q(-1), Q(0)) == 1);
    CHECK(sturm_real_root_count(p, Q(-1), Q(1)) == 2);
    CHECK(sturm_real_root_count(p, Q(1), Q(2)) == 0);
}

TEST_CASE("sturm count for the five-stage reference quintic") {
    // 34560 X^5 - 17280 X^4 + 4164 X^3 - 642 X^2 + 71 X - 6: one real
    // root and two complex-conjugate pairs.
    RPoly chi{Q(-6), Q(71), Q(-642), Q(4164), Q(-17280), Q(34560)};
    CHECK(gcd_poly(chi, chi.derivative()).degree() == 0); // already square-free
    CHECK(sturm_real_root_count(chi) == 1);
}

TEST_CASE("root isolation") {
    RPoly p{Q(-2), Q(0), Q(1)}; // X^2 - 2
    auto ivs = isolate_real_roots(p);
    REQUIRE(ivs.size() == 2);
    CHECK(ivs[0].hi < 0);
    CHECK(ivs[1].lo > 0);
    for (const auto& iv : ivs) {
        CHECK(iv.width() <= Rational(1, Int(1) << 40));
        if (!iv.exact()) CHECK(sign(p(iv.lo)) * sign(p(iv.hi)) <= 0);
    }

    auto single = isolate_real_roots(RPoly{Q(-1, 2), Q(1)});
    REQUIRE(single.size() == 1);
    CHECK(single[0].lo <= Q(1, 2));
    CHECK(Q(1, 2) <= single[0].hi);

    // chi for nodes (1/3, 2/3): no real roots
    CHECK(isolate_real_roots(RPoly{Q(1, 9), Q(-1, 2), Q(1)}).empty());
}

TEST_CASE("isolation with rational roots hitting midpoints") {
    // roots at dyadic and non-dyadic rationals force exact-hit handling
    RPoly p = RPoly{Q(-1, 2), Q(1)} * RPoly{Q(-1, 4), Q(1)} * RPoly{Q(-1, 3), Q(1)};
    auto ivs = isolate_real_roots(p);
    REQUIRE(ivs.size() == 3);
    CHECK(ivs[0].lo <= Q(1, 4));
    CHECK(Q(1, 4) <= ivs[0].hi);
    CHECK(ivs[1].lo <= Q(1, 3));
    CHECK(Q(1, 3) <= ivs[1].hi);
    CHECK(ivs[2].lo <= Q(1, 2));
    CHECK(Q(1, 2) <= ivs[2].hi);
}

TEST_CASE("isolation agrees with an independent count on random products") {
    // products of distinct linear factors: the true roots are known
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<Rational> roots;
        RPoly p = RPoly::one();
        std::uniform_int_distribution<int> nd(1, 5);
        int n = nd(rng);
        for (int k = 0; k < n; ++k) {
            Rational r = random_rational(8, 5);
            bool dup = false;
            for (const auto& x : roots) dup |= (x == r);
            if (dup) continue;
            roots.push_back(r);
            p = p * RPoly{Rational(-r), Q(1)};
        }
        auto ivs = isolate_real_roots(p);
        REQUIRE(ivs.size() == roots.size());
        std::sort(roots.begin(), roots.end());
        for (std::size_t i = 0; i < roots.size(); ++i) {
            CHECK(ivs[i].lo <= roots[i]);
            CHECK(roots[i] <= ivs[i].hi);
        }
    }
}

TEST_CASE("polynomial matrix determinant and adjugate") {
    SECTION("1x1") {
        PolyMat<Rational> m(1, 1);
        m(0, 0) = RPoly{Q(1), Q(-1, 2)}; // 1 - c1 lambda with c1 = 1/2
        auto [det, adj] = polymatrix_det_adj(m);
        CHECK(det == m(0, 0));
        CHECK(adj(0, 0) == RPoly::one());
    }
    SECTION("2x2 identity") {
        PolyMat<Rational> m(2, 2);
        m(0, 0) = RPoly::one();
        m(1, 1) = RPoly::one();
        auto [det, adj] = polymatrix_det_adj(m);
        CHECK(det == RPoly::one());
        CHECK(adj(0, 0) == RPoly::one());
        CHECK(adj(1, 1) == RPoly::one());
        CHECK(adj(0, 1).is_zero());
        CHECK(adj(1, 0).is_zero());
    }
    SECTION("Lobatto two-stage resolvent matrix") {
        // I - lambda A for A = [[0,0],[1/2,1/2]]
        PolyMat<Rational> m(2, 2);
        m(0, 0) = RPoly::one();
        m(0, 1) = RPoly();
        m(1, 0) = RPoly{Q(0), Q(-1, 2)};
        m(1, 1) = RPoly{Q(1), Q(-1, 2)};
        auto [det, adj] = polymatrix_det_adj(m);
        CHECK(det == RPoly{Q(1), Q(-1, 2)});
        // adj/det = [[1, 0], [lambda/(2-lambda), 2/(2-lambda)]]
        CHECK(adj(0, 0) == RPoly{Q(1), Q(-1, 2)});
        CHECK(adj(1, 0) == RPoly{Q(0), Q(1, 2)});
        CHECK(adj(1, 1) == RPoly::one());
        CHECK(adj(0, 1).is_zero());
    }
}

TEST_CASE("M * adj(M) = det(M) * I on random polynomial matrices") {
    std::uniform_int_distribution<int> nd(1, 5), dd(0, 2);
    for (int iter = 0; iter < 25; ++iter) {
        int n = nd(rng);
        PolyMat<Rational> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<Rational> c;
                int deg = dd(rng);
                for (int k = 0; k <= deg; ++k) c.push_back(random_rational(3, 3));
                m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                    RPoly(std::move(c));
            }
        auto [det, adj] = polymatrix_det_adj(m);
        PolyMat<Rational> prod = m * adj;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(prod(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) ==
                      (i == j ? det : RPoly()));
    }
}

TEST_CASE("quadratic extension field arithmetic") {
    using QR = QuadraticRational;
    QR r3 = QR::sqrt_of(3);
    CHECK(r3 * r3 == QR(Q(3)));
    QR x = QR(Q(1, 4)) - r3 * QR(Q(1, 6)); // 1/4 - sqrt(3)/6
    QR y = QR(Q(1, 4)) + r3 * QR(Q(1, 6));
    CHECK(x + y == QR(Q(1, 2)));
    CHECK(x * y == QR(Q(1, 16)) - QR(Q(3, 36))); // 1/16 - 1/12 = -1/48
    CHECK(x * y == QR(Q(-1, 48)));
    CHECK((x / y) * y == x);
    CHECK(x.sgn() < 0);  // 1/4 < sqrt(3)/6
    CHECK(y.sgn() > 0);
    CHECK(QR(Q(1, 2)) - r3 * QR(Q(1, 6)) < QR(Q(1, 2)) + r3 * QR(Q(1, 6)));
    CHECK_THROWS_AS(x / QR(Q(0)), contract_violation);
}
