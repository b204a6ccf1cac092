#pragma once

#include "cb/report.hpp"
#include "cb/scaled_poly.hpp"

#include <utility>

namespace cb::onevar {

// p(m, n; x) = (1-x)^{n+1} * sum_{k=0}^{m} C(n+k, k) x^k, the polynomial whose
// complementary-argument partner makes a partition of unity:
// p(m, n; x) + p(n, m; 1-x) = 1.
MultiPoly build_p(unsigned m, unsigned n);

// Same polynomial via the two-index recurrence
// p(m, n) = x p(m-1, n) + (1-x) p(m, n-1), seeded by the one-sided rows.
MultiPoly build_p_recur(unsigned m, unsigned n);

// Homogeneous companion P(m, n; x, y) = sum_{k=0}^{m} C(m+n+1, k) x^k y^{m-k}.
MultiPoly build_P_hom(unsigned m, unsigned n);

// Coefficient of u^m v^n in (1-x) / ((1-u)(1-ux-v(1-x))), extracted via the
// two-index coefficient recurrence of the denominator; equals p(m, n; x).
MultiPoly genfun_coeff(unsigned m, unsigned n);

// Terminating hypergeometric sum
// sum_{k=0}^{N} (-N)_k (b)_k / ((c)_k k!) * z^k  with a polynomial argument.
// (c)_k must not vanish for k <= N.
MultiPoly hyp2f1_poly(unsigned N, const Rational& b, const Rational& c, const MultiPoly& z);

// Partition of unity: p(m, n; x) + p(n, m; 1-x) == 1.
VerifyReport verify_onevar(unsigned m, unsigned n);

// Two-variable homogeneous split of (x+y)^{m+n+1}, in both the rising-factorial
// and the build_P_hom form.
VerifyReport verify_homogeneous(unsigned m, unsigned n);

// Binomial truncation: sum_{k<=m} C(m+n+1, k) x^k (1-x)^{m-k} == sum_{k<=m} C(n+k, k) x^k.
VerifyReport verify_truncation(unsigned m, unsigned n);

// Equality of the two derivative expressions of the one-sided series quotient,
// brought over the common denominator (1-x)^{n+2}. Requires m >= 1.
VerifyReport verify_derivative_descent(unsigned m, unsigned n);

// The three closed-form solutions u1 (polynomial), u2 (pole part), and
// u3 = (1-x)^{-n-1} of the defining second-order ODE
//   x(1-x) u'' - ((n+2)x + m(1-x)) u' + m(n+1) u = 0
// are checked symbolically, together with u3 = u1 + u2 and the constant
// linking the two one-sided hypergeometric forms of u2's polynomial factor.
VerifyReport verify_ode_onevar(unsigned m, unsigned n);

// Polynomials (q, r) with (1-x)^{n+1} q(x) + x^{m+1} r(x) = 1;
// q(m, n; x) = r(n, m; 1-x). Derived from build_p, then revalidated.
std::pair<MultiPoly, MultiPoly> bezout_certificate(unsigned m, unsigned n);

}  // namespace cb::onevar
