#pragma once

#include "cb/rational.hpp"
#include "cb/report.hpp"

#include <complex>
#include <string>

namespace cb {

using Complex = std::complex<double>;

// Complex degree parameters with Re > -1 plus an evaluation point in (0,1).
struct ExtensionParams {
    Complex m;
    Complex n;
    double x;
    ExtensionParams(Complex m_, Complex n_, double x_);
};

// Parameters of the alpha-deformed three-term identity: alpha > 0, integer
// degrees m, n, and a complex point z off the real segment [0,1].
struct ThreeTermParams {
    double alpha;
    unsigned m;
    unsigned n;
    Complex z;
    ThreeTermParams(double alpha_, unsigned m_, unsigned n_, Complex z_);
};

// Gamma function for |Im z| <= 50, |Re z| < 50 (relative error well under
// 1e-12), via a shifted rational series for Re z >= 1/2 and the reflection
// formula otherwise. Throws std::domain_error at nonpositive-integer poles.
Complex gamma_complex(Complex z);

// Reciprocal Gamma; entire, exactly zero at nonpositive integers.
Complex rgamma_complex(Complex z);

// Gauss hypergeometric 2F1(a, b; c; z). Terminating series (a or b a
// nonpositive integer) are summed exactly -- in rational arithmetic when all
// inputs are real -- with a pole check on c. Non-terminating evaluation uses
// the direct series for |z| <= 1/2 and otherwise transforms to whichever of
// the arguments z, z/(z-1), 1-z, 1/(1-z) has the smallest modulus. Throws
// std::domain_error for z on the branch cut [1, oo) in the non-terminating
// case and for a lower-parameter pole hit before termination.
Complex hyp2f1(Complex a, Complex b, Complex c, Complex z);

// Exact terminating sum 2F1(-N, b; c; z) = sum_{k=0}^{N} (-N)_k (b)_k /
// ((c)_k k!) z^k over rationals. Throws std::domain_error if (c)_k vanishes
// for some k <= N.
Rational hyp2f1_terminating(unsigned N, const Rational& b, const Rational& c,
                            const Rational& z);

// Incomplete beta B_x(p, q) = integral of t^(p-1) (1-t)^(q-1) over (0, x),
// evaluated as (x^p / p) 2F1(1-q, p; p+1; x). Requires Re p > 0 and
// 0 < x < 1.
Complex incomplete_beta(double x, Complex p, Complex q);

// Analytic extension of the first partition summand to complex degrees:
// Gamma(m+n+2) / (Gamma(m+1) Gamma(n+1)) * B_{1-x}(n+1, m+1).
Complex extended_p(const ExtensionParams& params);

// Checks that the extension above agrees with the fractional-sum form
// 1 - Gamma(m+n+2)/(Gamma(m+1)Gamma(n+1)) * B_x(m+1, n+1); their equality is
// the complex-degree partition of unity. Numeric-pass at 1e-9 relative.
VerifyReport verify_extension_equivalence(const ExtensionParams& params);

// The three deformed solutions of the degree-(m,n) hypergeometric equation
// with deformation alpha; u3 = u1 + u2 on C \ [0,1]. Exposed for tests and
// for the finite-difference ODE check.
Complex threeterm_u1(const ThreeTermParams& params);
Complex threeterm_u2(const ThreeTermParams& params);
Complex threeterm_u3(const ThreeTermParams& params);

// Relative residual |u3 - (u1 + u2)| / |u3|; numeric-pass at 1e-8.
VerifyReport verify_threeterm(const ThreeTermParams& params);

// Central finite-difference residual of the deformed equation
//   z(1-z) u'' - ((n+2)z + m(1-z) + alpha) u' + m(n+1) u = 0
// on each of u1, u2, u3, with step cbrt(unit roundoff) * |z|, measured
// relative to the largest of the three equation terms; numeric-pass at 1e-5.
VerifyReport verify_ode_numeric(const ThreeTermParams& params);

// Parses "a+bi" complex syntax ("2", "-0.5i", "1.5-2e-3i", "i", ...).
Complex parse_complex(const std::string& s);

// Formats a complex number compactly ("2", "1.5+0.25i", "-2i").
std::string format_complex(Complex z);

}  // namespace cb
