#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cb/paths.hpp"

#include <cstdint>

using cb::Int;
using cb::MultiPoly;
using cb::Rational;
namespace pt = cb::paths;

TEST_CASE("splitmix64 matches the published reference sequence") {
    pt::SplitMix64 g0(0);
    CHECK(g0.next() == UINT64_C(0xe220a8397b1dcdaf));
    CHECK(g0.next() == UINT64_C(0x6e789e6aa1b965f4));
    CHECK(g0.next() == UINT64_C(0x06c45d188009454f));

    pt::SplitMix64 g42(42);
    CHECK(g42.next() == UINT64_C(0xbdd732262feb6e95));
    CHECK(g42.next() == UINT64_C(0x28efe333b266f103));
    CHECK(g42.next() == UINT64_C(0x47526757130f9f52));
}

TEST_CASE("next_double lies in [0,1) and is deterministic") {
    pt::SplitMix64 a(7), b(7);
    for (int i = 0; i < 1000; ++i) {
        double d = a.next_double();
        CHECK(d >= 0.0);
        CHECK(d < 1.0);
        CHECK(d == b.next_double());
    }
}

TEST_CASE("smallest grid: two paths, split by final step") {
    pt::PathWeights w = pt::enumerate_weighted_paths(0, 0);
    MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    CHECK(w.total == (x + y).pow(2));
    CHECK(w.vertical == x * (x + y));    // east then the forced north finisher
    CHECK(w.horizontal == y * (x + y));  // north then the forced east finisher
    CHECK(w.total_count == 2);
    CHECK(w.vertical_count == 1);
    CHECK(w.horizontal_count == 1);
}

TEST_CASE("weights split and counts are binomial") {
    for (unsigned m = 0; m <= 4; ++m)
        for (unsigned n = 0; n <= 4; ++n) {
            pt::PathWeights w = pt::enumerate_weighted_paths(m, n);
            CHECK(w.total == w.vertical + w.horizontal);
            CHECK(w.total == cb::sum_of_variables(2).pow(m + n + 2));
            CHECK(w.total_count == cb::binomial(m + n + 2, m + 1));
            CHECK(w.vertical_count == cb::binomial(m + n + 1, m + 1));
            CHECK(w.horizontal_count == cb::binomial(m + n + 1, n + 1));
            CHECK(Int(w.vertical_count + w.horizontal_count) == w.total_count);
        }
}

TEST_CASE("closed forms match the enumeration") {
    for (unsigned m = 0; m <= 4; ++m)
        for (unsigned n = 0; n <= 4; ++n) {
            pt::PathWeights w = pt::enumerate_weighted_paths(m, n);
            CHECK(w.vertical == pt::vertical_closed_form(m, n));
            CHECK(w.horizontal == pt::horizontal_closed_form(m, n));
        }
}

TEST_CASE("partition report") {
    for (unsigned m = 0; m <= 3; ++m)
        for (unsigned n = 0; n <= 3; ++n) {
            auto r = pt::verify_path_partition(m, n);
            CHECK(r.status == cb::Status::ExactPass);
            CHECK(r.residual_exact == Rational(0));
        }
}

TEST_CASE("specializing y := 1-x recovers the partition of unity summands") {
    // vertical weight with y -> 1-x equals x^{m+1} sum_k C(m+k,k) (1-x)^k,
    // the complementary summand of the one-variable identity.
    MultiPoly x1 = MultiPoly::variable(1, 0);
    MultiPoly one = MultiPoly::constant(1, 1);
    for (unsigned m = 0; m <= 3; ++m)
        for (unsigned n = 0; n <= 3; ++n) {
            pt::PathWeights w = pt::enumerate_weighted_paths(m, n);
            MultiPoly vert = cb::compose(w.vertical, {x1, one - x1});
            MultiPoly horz = cb::compose(w.horizontal, {x1, one - x1});
            CHECK(vert + horz == one);
        }
}

TEST_CASE("coin-toss simulation is reproducible and unbiased") {
    pt::McResult r1 = pt::mc_coin_toss(Rational(1, 2), 1, 1, 40000, 99);
    pt::McResult r2 = pt::mc_coin_toss(Rational(1, 2), 1, 1, 40000, 99);
    REQUIRE(r1.outcomes.size() == 4);  // heads-first k=0..1, tails-first k=0..1
    for (std::size_t i = 0; i < r1.outcomes.size(); ++i) {
        CHECK(r1.outcomes[i].count == r2.outcomes[i].count);  // bit-reproducible
        CHECK(r1.outcomes[i].exact == Rational(1, 4));        // all four outcomes equally likely
    }
    CHECK(r1.exact_sum == Rational(1));
    CHECK(r1.trials == 40000);
    CHECK(r1.seed == 99);
    CHECK(r1.all_within(4.0));

    std::uint64_t total = 0;
    for (const auto& o : r1.outcomes) total += o.count;
    CHECK(total == 40000);
}

TEST_CASE("coin-toss outcome probabilities match the closed form") {
    // heads-first outcome (k tails seen): C(m+k,k) x^{m+1} (1-x)^k
    // tails-first outcome (k heads seen): C(n+k,k) (1-x)^{n+1} x^k
    unsigned m = 2, n = 3;
    Rational x(1, 3);
    auto rpow = [](const Rational& b, unsigned e) {
        Rational r(1);
        for (unsigned i = 0; i < e; ++i) r = r * b;
        return r;
    };
    pt::McResult r = pt::mc_coin_toss(x, m, n, 1, 1);
    REQUIRE(r.outcomes.size() == (n + 1) + (m + 1));
    for (unsigned k = 0; k <= n; ++k) {
        const auto& o = r.outcomes[k];
        CHECK(o.heads_first);
        CHECK(o.k == k);
        CHECK(o.exact == Rational(cb::binomial(m + k, k)) * rpow(x, m + 1) * rpow(Rational(1) - x, k));
    }
    for (unsigned k = 0; k <= m; ++k) {
        const auto& o = r.outcomes[n + 1 + k];
        CHECK_FALSE(o.heads_first);
        CHECK(o.k == k);
    }
    CHECK(r.exact_sum == Rational(1));
}

TEST_CASE("degenerate bias x = 0 always ends tails-first immediately") {
    pt::McResult r = pt::mc_coin_toss(Rational(0), 2, 1, 5000, 3);
    for (const auto& o : r.outcomes) {
        if (!o.heads_first && o.k == 0) {
            CHECK(o.exact == Rational(1));
            CHECK(o.count == 5000);
        } else {
            CHECK(o.exact == Rational(0));
            CHECK(o.count == 0);
        }
    }
    CHECK(r.all_within(4.0));
}
