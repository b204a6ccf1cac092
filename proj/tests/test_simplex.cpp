#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cb/simplex.hpp"

#include <vector>

using cb::Int;
using cb::MultiPoly;
using cb::Rational;
namespace sx = cb::simplex;

namespace {

// Exact one-dimensional oracle: integral over [0, x] of t^a (1-t)^b dt,
// integrated termwise after binomial expansion. Polynomial in x.
MultiPoly segment_integral(unsigned a, unsigned b) {
    MultiPoly r(1);
    for (unsigned j = 0; j <= b; ++j) {
        Rational c = Rational(cb::binomial(b, j)) * Rational((j % 2) ? -1 : 1) / Rational(a + j + 1);
        r.add_term({a + j + 1}, c);
    }
    return r;
}

}  // namespace

TEST_CASE("normalizing constant: frozen values and symmetry") {
    // one-dimensional: a! b! / (a+b+1)!
    CHECK(sx::dirichlet({1, 2}) == Rational(1, 12));
    CHECK(sx::dirichlet({0, 0}) == Rational(1));
    CHECK(sx::dirichlet({3, 4}) == Rational(Int(cb::factorial(3) * cb::factorial(4)), Int(cb::factorial(8))));
    // two-dimensional simplex
    CHECK(sx::dirichlet({1, 1, 1}) == Rational(1, 120));
    CHECK(sx::dirichlet({0, 0, 0}) == Rational(1, 2));
    // symmetric in all exponents
    CHECK(sx::dirichlet({2, 0, 1}) == sx::dirichlet({0, 1, 2}));
    CHECK(sx::dirichlet({1, 2, 3, 4}) == sx::dirichlet({4, 3, 2, 1}));
}

TEST_CASE("general closed form") {
    for (unsigned a1 = 0; a1 <= 3; ++a1)
        for (unsigned a2 = 0; a2 <= 3; ++a2)
            for (unsigned a3 = 0; a3 <= 3; ++a3) {
                Rational want = Rational(Int(cb::factorial(a1) * cb::factorial(a2) * cb::factorial(a3)),
                                         Int(cb::factorial(a1 + a2 + a3 + 2)));
                CHECK(sx::dirichlet({a1, a2, a3}) == want);
            }
}

TEST_CASE("one-dimensional sub-simplex pieces against direct integration") {
    for (unsigned a = 0; a <= 4; ++a)
        for (unsigned b = 0; b <= 4; ++b) {
            // first piece: integral over [0, x]
            MultiPoly i1 = sx::subsimplex_integral(1, {a, b});
            CHECK(i1.arity() == 1);
            CHECK(i1 == segment_integral(a, b));
            // second piece: integral over [x, 1]; pieces sum to the full integral
            MultiPoly i2 = sx::subsimplex_integral(2, {a, b});
            MultiPoly total = i1 + i2;
            CHECK(total == MultiPoly::constant(1, sx::dirichlet({a, b})));
        }
}

TEST_CASE("pieces vanish appropriately at the vertices") {
    // at x = 0 the first piece is the empty integral
    MultiPoly i1 = sx::subsimplex_integral(1, {2, 1});
    CHECK(i1.evaluate({Rational(0)}) == Rational(0));
    CHECK(i1.evaluate({Rational(1)}) == sx::dirichlet({2, 1}));
}

TEST_CASE("splitting identity") {
    std::vector<std::vector<unsigned>> tuples = {
        {0, 0}, {1, 2}, {3, 3},            // n = 1
        {0, 0, 0}, {1, 1, 1}, {2, 0, 3},   // n = 2
        {1, 1, 1, 1}, {2, 1, 0, 2},        // n = 3
    };
    for (const auto& a : tuples) {
        auto r = sx::verify_split(a);
        CHECK(r.status == cb::Status::ExactPass);
        CHECK(r.residual_exact == Rational(0));
    }
}

TEST_CASE("symmetry under relabeling") {
    std::vector<unsigned> a = {2, 1, 0};
    CHECK(sx::verify_simplex_symmetry(a, {1, 0, 2}).status == cb::Status::ExactPass);
    CHECK(sx::verify_simplex_symmetry(a, {1, 2, 0}).status == cb::Status::ExactPass);
    CHECK(sx::verify_simplex_symmetry({1, 3}, {1, 0}).status == cb::Status::ExactPass);
    CHECK(sx::verify_simplex_symmetry({1, 0, 2, 1}, {3, 2, 1, 0}).status == cb::Status::ExactPass);
}
