#include "cb/onevar.hpp"

#include <stdexcept>
#include <vector>

namespace cb::onevar {

namespace {

MultiPoly x_poly() { return MultiPoly::variable(1, 0); }

MultiPoly one_minus_x() {
    return MultiPoly::constant(1, Rational(1)) - MultiPoly::variable(1, 0);
}

std::string params_mn(unsigned m, unsigned n) {
    return "m=" + std::to_string(m) + " n=" + std::to_string(n);
}

// sum_{k=0}^{m} C(n+k, k) x^k
MultiPoly binomial_partial_sum(unsigned m, unsigned n) {
    MultiPoly s(1);
    for (unsigned k = 0; k <= m; ++k) s.add_term({k}, Rational(binomial(n + k, k)));
    return s;
}

}  // namespace

MultiPoly build_p(unsigned m, unsigned n) {
    return one_minus_x().pow(n + 1) * binomial_partial_sum(m, n);
}

MultiPoly build_p_recur(unsigned m, unsigned n) {
    MultiPoly x = x_poly(), omx = one_minus_x();
    // row j = 0: 1 - x^{i+1}; column i = 0: (1-x)^{j+1}
    std::vector<std::vector<MultiPoly>> p(m + 1, std::vector<MultiPoly>(n + 1, MultiPoly(1)));
    for (unsigned i = 0; i <= m; ++i) {
        p[i][0] = MultiPoly::constant(1, Rational(1));
        p[i][0].add_term({i + 1}, Rational(-1));
    }
    for (unsigned j = 0; j <= n; ++j) p[0][j] = omx.pow(j + 1);
    for (unsigned i = 1; i <= m; ++i)
        for (unsigned j = 1; j <= n; ++j) p[i][j] = x * p[i - 1][j] + omx * p[i][j - 1];
    return p[m][n];
}

MultiPoly build_P_hom(unsigned m, unsigned n) {
    MultiPoly P(2);
    for (unsigned k = 0; k <= m; ++k) P.add_term({k, m - k}, Rational(binomial(m + n + 1, k)));
    return P;
}

MultiPoly genfun_coeff(unsigned m, unsigned n) {
    MultiPoly x = x_poly(), omx = one_minus_x();
    // c[i][j] = x c[i-1][j] + (1-x) c[i][j-1], c[0][0] = 1: the coefficient of
    // u^i v^j in 1/(1 - ux - v(1-x)). The 1/(1-u) factor sums over i.
    std::vector<std::vector<MultiPoly>> c(m + 1, std::vector<MultiPoly>(n + 1, MultiPoly(1)));
    for (unsigned i = 0; i <= m; ++i)
        for (unsigned j = 0; j <= n; ++j) {
            if (i == 0 && j == 0) {
                c[0][0] = MultiPoly::constant(1, Rational(1));
                continue;
            }
            MultiPoly t(1);
            if (i > 0) t += x * c[i - 1][j];
            if (j > 0) t += omx * c[i][j - 1];
            c[i][j] = t;
        }
    MultiPoly acc(1);
    for (unsigned i = 0; i <= m; ++i) acc += c[i][n];
    return omx * acc;
}

MultiPoly hyp2f1_poly(unsigned N, const Rational& b, const Rational& c, const MultiPoly& z) {
    MultiPoly sum = MultiPoly::constant(z.arity(), Rational(1));
    MultiPoly zk = sum;
    Rational coef(1);
    Rational top(-static_cast<long>(N));
    for (unsigned k = 0; k < N; ++k) {
        Rational ck = c + Rational(static_cast<long>(k));
        if (ck.is_zero()) throw std::domain_error("hyp2f1_poly: lower parameter hits a pole");
        coef *= (top + Rational(static_cast<long>(k))) * (b + Rational(static_cast<long>(k)));
        coef /= ck * Rational(static_cast<long>(k + 1));
        zk = zk * z;
        sum += zk * coef;
    }
    return sum;
}

VerifyReport verify_onevar(unsigned m, unsigned n) {
    Stopwatch sw;
    MultiPoly complement = build_p(n, m).substitute(0, one_minus_x());
    MultiPoly residual = build_p(m, n) + complement - MultiPoly::constant(1, Rational(1));
    return make_exact_report("onevar", params_mn(m, n), residual, sw.ms());
}

VerifyReport verify_homogeneous(unsigned m, unsigned n) {
    Stopwatch sw;
    MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    MultiPoly s = x + y;
    MultiPoly total = s.pow(m + n + 1);

    MultiPoly first(2), second(2);
    for (unsigned k = 0; k <= m; ++k) {
        Rational c = pochhammer(Rational(static_cast<long>(n) + 1), k) / Rational(factorial(k));
        first += MultiPoly::monomial({k, 0}, c) * s.pow(m - k);
    }
    for (unsigned k = 0; k <= n; ++k) {
        Rational c = pochhammer(Rational(static_cast<long>(m) + 1), k) / Rational(factorial(k));
        second += MultiPoly::monomial({0, k}, c) * s.pow(n - k);
    }
    MultiPoly r1 = total - y.pow(n + 1) * first - x.pow(m + 1) * second;

    // Same split with the binomial-coefficient companion polynomials.
    MultiPoly r2 = total - y.pow(n + 1) * build_P_hom(m, n)
                 - x.pow(m + 1) * build_P_hom(n, m).permute_variables({1, 0});
    return make_exact_report("homogeneous", params_mn(m, n), r1.is_zero() ? r2 : r1, sw.ms());
}

VerifyReport verify_truncation(unsigned m, unsigned n) {
    Stopwatch sw;
    MultiPoly omx = one_minus_x();
    MultiPoly lhs(1);
    for (unsigned k = 0; k <= m; ++k) {
        MultiPoly t = MultiPoly::monomial(Mono{k}, Rational(binomial(m + n + 1, k)));
        lhs += t * omx.pow(m - k);
    }
    return make_exact_report("truncation", params_mn(m, n), lhs - binomial_partial_sum(m, n), sw.ms());
}

VerifyReport verify_derivative_descent(unsigned m, unsigned n) {
    if (m < 1) throw std::invalid_argument("verify_derivative_descent: requires m >= 1");
    Stopwatch sw;
    Rational np1(static_cast<long>(n) + 1);
    MultiPoly omx = one_minus_x();

    // First expression: the product-rule derivative of the one-sided quotient,
    // two groups with poles of order n+1 and n+2.
    MultiPoly coreA(1), coreB(1);
    for (unsigned k = 0; k <= n; ++k) {
        Rational base = pochhammer(Rational(static_cast<long>(m) + 1), k) / Rational(factorial(k));
        Rational cA = Rational(static_cast<long>(m) + 1) / np1 * base;
        Rational cB = Rational(static_cast<long>(n) - static_cast<long>(k) + 1) / np1 * base;
        coreA += MultiPoly::monomial(Mono{m}, cA) * omx.pow(k);
        coreB += MultiPoly::monomial(Mono{m + 1}, cB) * omx.pow(k);
    }
    ScaledPoly A(coreA, 0, n + 1), B(coreB, 0, n + 2);

    // Second expression: the single-sum collapsed form over (1-x)^{n+2}.
    MultiPoly coreC(1);
    for (unsigned k = 0; k <= n + 1; ++k) {
        Rational c = pochhammer(Rational(static_cast<long>(m)), k) / Rational(factorial(k));
        coreC += MultiPoly::monomial(Mono{m}, c) * omx.pow(k);
    }
    ScaledPoly C(coreC, 0, n + 2);

    ScaledPoly diff = A + B - C;
    return make_exact_report("descent", params_mn(m, n), diff.core(), sw.ms());
}

namespace {

// x(1-x) u'' - ((n+2)x + m(1-x)) u' + m(n+1) u, coefficientwise in x.
MultiPoly ode_first_order_coeff(unsigned m, unsigned n) {
    MultiPoly x = x_poly();
    return MultiPoly::constant(1, Rational(static_cast<long>(n) + 2)) * x
         + MultiPoly::constant(1, Rational(static_cast<long>(m))) * one_minus_x();
}

MultiPoly apply_ode_poly(unsigned m, unsigned n, const MultiPoly& u) {
    MultiPoly x = x_poly();
    MultiPoly r = x * one_minus_x() * u.partial_derivative(0).partial_derivative(0);
    r -= ode_first_order_coeff(m, n) * u.partial_derivative(0);
    r += MultiPoly::constant(1, Rational(static_cast<long>(m) * (static_cast<long>(n) + 1))) * u;
    return r;
}

ScaledPoly apply_ode_scaled(unsigned m, unsigned n, const ScaledPoly& u) {
    MultiPoly x = x_poly();
    ScaledPoly du = u.derivative();
    ScaledPoly r = du.derivative().mul_poly(x * one_minus_x());
    r = r - du.mul_poly(ode_first_order_coeff(m, n));
    r = r + u.mul_scalar(Rational(static_cast<long>(m) * (static_cast<long>(n) + 1)));
    return r;
}

}  // namespace

VerifyReport verify_ode_onevar(unsigned m, unsigned n) {
    Stopwatch sw;
    std::string params = params_mn(m, n);

    // Polynomial solution.
    MultiPoly u1(1);
    for (unsigned k = 0; k <= m; ++k)
        u1.add_term({k}, pochhammer(Rational(static_cast<long>(n) + 1), k) / Rational(factorial(k)));

    // Pole-carrying solution x^{m+1} * S(x) / (1-x)^{n+1}.
    MultiPoly core2(1);
    for (unsigned k = 0; k <= n; ++k) {
        Rational c = pochhammer(Rational(static_cast<long>(m) + 1), k) / Rational(factorial(k));
        core2 += MultiPoly::monomial(Mono{m + 1}, c) * one_minus_x().pow(k);
    }
    ScaledPoly u2(core2, 0, n + 1);

    // Their sum: (1-x)^{-n-1}.
    ScaledPoly u3(MultiPoly::constant(1, Rational(1)), 0, n + 1);

    MultiPoly r1 = apply_ode_poly(m, n, u1);
    if (!r1.is_zero()) return make_exact_report("ode-onevar", params, r1, sw.ms());
    ScaledPoly r2 = apply_ode_scaled(m, n, u2);
    if (!r2.is_zero()) return make_exact_report("ode-onevar", params, r2.core(), sw.ms());
    ScaledPoly r3 = apply_ode_scaled(m, n, u3);
    if (!r3.is_zero()) return make_exact_report("ode-onevar", params, r3.core(), sw.ms());
    ScaledPoly r4 = u3 - (ScaledPoly::from_poly(u1) + u2);
    if (!r4.is_zero()) return make_exact_report("ode-onevar", params, r4.core(), sw.ms());

    // The two one-sided hypergeometric forms of u2's polynomial factor differ
    // by the explicit constant (m+n+1)! / ((m+1)! n!).
    Rational cnst = Rational(factorial(m + n + 1)) / (Rational(factorial(m + 1)) * Rational(factorial(n)));
    MultiPoly lhs = hyp2f1_poly(n, Rational(static_cast<long>(m) + 1), Rational(-static_cast<long>(n)),
                                one_minus_x());
    MultiPoly rhs = hyp2f1_poly(n, Rational(static_cast<long>(m) + 1), Rational(static_cast<long>(m) + 2),
                                x_poly());
    return make_exact_report("ode-onevar", params, lhs - rhs * cnst, sw.ms());
}

std::pair<MultiPoly, MultiPoly> bezout_certificate(unsigned m, unsigned n) {
    MultiPoly q = binomial_partial_sum(m, n);
    MultiPoly r(1);
    for (unsigned k = 0; k <= n; ++k)
        r += MultiPoly::constant(1, Rational(binomial(m + k, k))) * one_minus_x().pow(k);
    MultiPoly check = one_minus_x().pow(n + 1) * q + x_poly().pow(m + 1) * r
                    - MultiPoly::constant(1, Rational(1));
    if (!check.is_zero()) throw std::logic_error("bezout_certificate: internal identity violated");
    return {q, r};
}

}  // namespace cb::onevar
