#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cb/multivar.hpp"
#include "cb/parallel.hpp"

#include <stdexcept>
#include <vector>

using cb::MultiPoly;
using cb::Rational;
namespace mv = cb::multivar;

TEST_CASE("cyclic summand: frozen small cases") {
    // n=2, a=(1,1), inhomogeneous: x2^2 (1 + 2 x1)
    MultiPoly f = mv::build_f({1, 1}, false);
    CHECK(f.arity() == 2);
    CHECK(f.coeff({0, 2}) == Rational(1));
    CHECK(f.coeff({1, 2}) == Rational(2));
    CHECK(f.term_count() == 2);

    // n=2 inhomogeneous summand equals the one-variable truncated product:
    // f(a; x1, x2) = x2^{a2+1} * sum_{k<=a1} C(a2+k, k) x1^k
    MultiPoly g = mv::build_f({2, 1}, false);
    CHECK(g.coeff({0, 2}) == Rational(1));
    CHECK(g.coeff({1, 2}) == Rational(2));
    CHECK(g.coeff({2, 2}) == Rational(3));

    // homogeneous variant is homogeneous of degree |a|+1
    MultiPoly h = mv::build_f({1, 1, 1}, true);
    for (const auto& [e, c] : h.terms()) CHECK(e[0] + e[1] + e[2] == 4);
    // frozen value at the all-ones point
    CHECK(h.evaluate({Rational(1), Rational(1), Rational(1)}) == Rational(27));

    CHECK_THROWS_AS(mv::build_f({3}, false), std::invalid_argument);  // needs n >= 2
}

TEST_CASE("cyclic partition of unity") {
    std::vector<std::vector<unsigned>> tuples = {
        {0, 0}, {1, 0}, {2, 3}, {4, 1}, {0, 0, 0}, {1, 1, 1}, {2, 0, 1}, {3, 2, 2}, {1, 1, 1, 1}, {2, 1, 0, 2},
    };
    for (const auto& a : tuples) {
        auto r = mv::verify_cyclic(a);
        CHECK(r.status == cb::Status::ExactPass);
        CHECK(r.residual_exact == Rational(0));
    }
}

TEST_CASE("coefficient table: recurrence equals closed form") {
    // n=2, a=(1,1): gamma_k = (2)_k / k! -> 1, 2
    mv::CoeffTable t1 = mv::lauricella_coeffs({1, 1});
    CHECK(t1.size() == 2);
    CHECK(t1.at({0}) == Rational(1));
    CHECK(t1.at({1}) == Rational(2));

    // n=3, a=(1,1,0): gamma_k = (1)_{|k|} / (k1! k2!) = |k|! / (k1! k2!)
    mv::CoeffTable t2 = mv::lauricella_coeffs({1, 1, 0});
    CHECK(t2.size() == 4);
    CHECK(t2.at({0, 0}) == Rational(1));
    CHECK(t2.at({1, 0}) == Rational(1));
    CHECK(t2.at({0, 1}) == Rational(1));
    CHECK(t2.at({1, 1}) == Rational(2));

    // general closed form over a bigger box
    std::vector<unsigned> a = {2, 3, 2};
    mv::CoeffTable t = mv::lauricella_coeffs(a);
    for (unsigned k1 = 0; k1 <= a[0]; ++k1)
        for (unsigned k2 = 0; k2 <= a[1]; ++k2) {
            Rational want = cb::pochhammer(Rational(a.back() + 1), k1 + k2) /
                            (Rational(cb::factorial(k1)) * Rational(cb::factorial(k2)));
            CHECK(t.at({k1, k2}) == want);
        }

    CHECK_THROWS_AS(t.at({9, 9}), std::invalid_argument);
}

TEST_CASE("table to_poly matches hand-built sum") {
    mv::CoeffTable t = mv::lauricella_coeffs({1, 2, 1});
    MultiPoly p = t.to_poly();
    CHECK(p.arity() == 2);
    MultiPoly hand(2);
    for (unsigned k1 = 0; k1 <= 1; ++k1)
        for (unsigned k2 = 0; k2 <= 2; ++k2) hand.add_term({k1, k2}, t.at({k1, k2}));
    CHECK(p == hand);
}

TEST_CASE("PDE residuals vanish on the series solution") {
    std::vector<std::vector<unsigned>> tuples = {{1, 1}, {2, 1}, {1, 1, 1}, {2, 0, 1}, {1, 2, 1, 0}};
    for (const auto& a : tuples) {
        MultiPoly u = mv::lauricella_coeffs(a).to_poly();
        CHECK(mv::pde_residual_sum(a, u).is_zero());
        for (std::size_t i = 1; i <= a.size() - 1; ++i) CHECK(mv::pde_residual_component(a, i, u).is_zero());
    }
}

TEST_CASE("PDE residuals detect a wrong candidate") {
    std::vector<unsigned> a = {1, 1, 1};
    MultiPoly u = mv::lauricella_coeffs(a).to_poly();
    MultiPoly wrong = u + MultiPoly::variable(2, 0);
    CHECK_FALSE(mv::pde_residual_sum(a, wrong).is_zero());
}

TEST_CASE("first-order-free operator annihilates every permuted slice") {
    std::vector<unsigned> a = {1, 2, 1};
    std::vector<std::vector<std::size_t>> perms = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1},
    };
    for (const auto& sigma : perms) {
        auto r = mv::verify_permutation_pde(a, sigma);
        CHECK(r.status == cb::Status::ExactPass);
    }
}

TEST_CASE("homogeneous companion operator") {
    std::vector<unsigned> a = {1, 1, 2};
    unsigned total = 4;
    CHECK(mv::pde_residual_w(a, mv::build_f(a, true)).is_zero());
    CHECK(mv::pde_residual_w(a, mv::power_of_sum(a.size(), total + 1)).is_zero());
    // the operator is not trivial: a bare variable is not annihilated
    CHECK_FALSE(mv::pde_residual_w(a, MultiPoly::variable(a.size(), 0)).is_zero());
}

TEST_CASE("power_of_sum caches and stays correct under concurrency") {
    MultiPoly direct = cb::sum_of_variables(3).pow(9);
    CHECK(mv::power_of_sum(3, 9) == direct);
    auto results = cb::parallel_map<MultiPoly>(16, [&](std::size_t i) {
        return mv::power_of_sum(2 + (i % 3), static_cast<unsigned>(i));
    });
    for (std::size_t i = 0; i < results.size(); ++i)
        CHECK(results[i] == cb::sum_of_variables(2 + (i % 3)).pow(static_cast<unsigned>(i)));
}

TEST_CASE("params_a formatting") {
    CHECK(mv::params_a({1, 2, 0}) == "a=1,2,0");
}
