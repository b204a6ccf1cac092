#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cb/onevar.hpp"

using cb::MultiPoly;
using cb::Rational;
namespace ov = cb::onevar;

namespace {
const MultiPoly X = MultiPoly::variable(1, 0);
const MultiPoly ONE = MultiPoly::constant(1, 1);
}  // namespace

TEST_CASE("frozen small cases of the partition summand") {
    // p_{0,0} = 1 - x
    CHECK(ov::build_p(0, 0) == ONE - X);
    // p_{1,1} = 1 - 3x^2 + 2x^3
    MultiPoly p11 = ov::build_p(1, 1);
    CHECK(p11.coeff({0}) == Rational(1));
    CHECK(p11.coeff({1}) == Rational(0));
    CHECK(p11.coeff({2}) == Rational(-3));
    CHECK(p11.coeff({3}) == Rational(2));
    CHECK(p11.term_count() == 3);
    // boundary rows: p_{m,0} = 1 - x^{m+1}, p_{0,n} = (1-x)^{n+1}
    for (unsigned m = 0; m <= 6; ++m) CHECK(ov::build_p(m, 0) == ONE - X.pow(m + 1));
    for (unsigned n = 0; n <= 6; ++n) CHECK(ov::build_p(0, n) == (ONE - X).pow(n + 1));
}

TEST_CASE("three constructions agree") {
    for (unsigned m = 0; m <= 5; ++m)
        for (unsigned n = 0; n <= 5; ++n) {
            MultiPoly p = ov::build_p(m, n);
            CHECK(p == ov::build_p_recur(m, n));
            CHECK(p == ov::genfun_coeff(m, n));
        }
}

TEST_CASE("partition of unity holds exactly") {
    for (unsigned m = 0; m <= 6; ++m)
        for (unsigned n = 0; n <= 6; ++n) {
            auto r = ov::verify_onevar(m, n);
            CHECK(r.status == cb::Status::ExactPass);
            CHECK(r.residual_exact == Rational(0));
            CHECK(r.witness.empty());
        }
}

TEST_CASE("root orders at the endpoints") {
    for (unsigned m = 0; m <= 6; ++m)
        for (unsigned n = 0; n <= 6; ++n) {
            MultiPoly p = ov::build_p(m, n);
            CHECK(p.root_order(Rational(1)) == n + 1);
            CHECK((ONE - p).root_order(Rational(0)) == m + 1);
        }
}

TEST_CASE("degree and value sanity") {
    for (unsigned m = 0; m <= 5; ++m)
        for (unsigned n = 0; n <= 5; ++n) {
            MultiPoly p = ov::build_p(m, n);
            CHECK(p.total_degree() == m + n + 1);
            CHECK(p.evaluate({Rational(0)}) == Rational(1));
            CHECK(p.evaluate({Rational(1)}) == Rational(0));
            // strictly inside (0,1) the value lies in (0,1): it is a probability
            Rational v = p.evaluate({Rational(1, 3)});
            CHECK(v > Rational(0));
            CHECK(v < Rational(1));
        }
}

TEST_CASE("homogeneous companion splits the binomial power") {
    for (unsigned m = 0; m <= 5; ++m)
        for (unsigned n = 0; n <= 5; ++n) {
            MultiPoly P = ov::build_P_hom(m, n);
            CHECK(P.arity() == 2);
            CHECK(P.total_degree() == m);
            // homogeneous of degree m
            for (const auto& [e, c] : P.terms()) CHECK(e[0] + e[1] == m);
            // y^{n+1} P(m,n; x,y) + x^{m+1} P(n,m; y,x) = (x+y)^{m+n+1}
            MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
            MultiPoly split = y.pow(n + 1) * P +
                              x.pow(m + 1) * ov::build_P_hom(n, m).permute_variables({1, 0});
            CHECK(split == (x + y).pow(m + n + 1));
            // restricting to y = 1-x recovers p(m,n) after the (1-x)^{n+1} prefactor
            MultiPoly restricted = cb::compose(P, {X, ONE - X});
            CHECK((ONE - X).pow(n + 1) * restricted == ov::build_p(m, n));
            CHECK(ov::verify_homogeneous(m, n).status == cb::Status::ExactPass);
        }
}

TEST_CASE("truncation identity") {
    for (unsigned m = 0; m <= 6; ++m)
        for (unsigned n = 0; n <= 6; ++n)
            CHECK(ov::verify_truncation(m, n).status == cb::Status::ExactPass);
}

TEST_CASE("derivative descent") {
    for (unsigned m = 1; m <= 5; ++m)
        for (unsigned n = 0; n <= 5; ++n)
            CHECK(ov::verify_derivative_descent(m, n).status == cb::Status::ExactPass);
}

TEST_CASE("hypergeometric ODE facts") {
    for (unsigned m = 0; m <= 4; ++m)
        for (unsigned n = 0; n <= 4; ++n)
            CHECK(ov::verify_ode_onevar(m, n).status == cb::Status::ExactPass);
}

TEST_CASE("terminating series builder") {
    // 2F1(-N, b; c; z) as a polynomial in the (polynomial) argument z.
    MultiPoly f = ov::hyp2f1_poly(2, Rational(1), Rational(3), X);
    // sum_k (-2)_k (1)_k / ((3)_k k!) x^k = 1 - 2/3 x + 1/12 * ... compute:
    // k=0: 1; k=1: (-2)(1)/(3*1) = -2/3; k=2: (-2)(-1)(1)(2)/((3)(4) 2!) = 4/24 = 1/6
    CHECK(f.coeff({0}) == Rational(1));
    CHECK(f.coeff({1}) == Rational(-2, 3));
    CHECK(f.coeff({2}) == Rational(1, 6));
    CHECK(f.degree_in(0) == 2);

    // composing with a polynomial argument matches substitution
    MultiPoly g = ov::hyp2f1_poly(2, Rational(1), Rational(3), ONE - X);
    CHECK(g == cb::compose(f, {ONE - X}));
}

TEST_CASE("Bezout certificate") {
    // frozen (1,1) cofactors: (1-x)^2 (1+2x) + x^2 (3-2x) = 1
    auto [u, v] = ov::bezout_certificate(1, 1);
    CHECK(u == ONE + Rational(2) * X);
    CHECK(v == MultiPoly::constant(1, 3) - Rational(2) * X);

    for (unsigned m = 0; m <= 5; ++m)
        for (unsigned n = 0; n <= 5; ++n) {
            auto [a, b] = ov::bezout_certificate(m, n);
            CHECK((ONE - X).pow(n + 1) * a + X.pow(m + 1) * b == ONE);
            // cofactor degree bounds make the certificate unique
            CHECK(a.total_degree() <= m);
            CHECK(b.total_degree() <= n);
        }
}
