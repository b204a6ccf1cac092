#pragma once

#include "cb/report.hpp"

#include <cstddef>
#include <vector>

namespace cb::simplex {

// Monomial integral over the standard n-simplex (n = a.size() - 1 >= 1):
// integral of t_1^{a_1}..t_n^{a_n} (1-t_1-..-t_n)^{a_{n+1}} equals
// prod a_i! / (sum a_i + n)!. Symmetric in all n+1 exponents.
Rational dirichlet(const std::vector<unsigned>& a);

// Integral of the same monomial over the sub-simplex with vertex x and the n
// further vertices from {0, e_1..e_n} with e_i deleted (i <= n) or 0 deleted
// (i = n+1). Computed symbolically: affine parametrization over the standard
// simplex, expansion, termwise monomial integration. Result is a polynomial
// in x_1..x_n; i is 1-based.
MultiPoly subsimplex_integral(std::size_t i, const std::vector<unsigned>& a);

// The n+1 sub-simplex integrals sum to the full integral, and each ratio
// I^(i)/I equals the cyclically indexed partition polynomial evaluated with
// x_{n+1} := 1 - x_1 - .. - x_n.
VerifyReport verify_split(const std::vector<unsigned>& a);

// Relabeling covariance: sigma (0-based permutation of 0..n) acts on exponents
// and coordinates simultaneously; I^(i) over the a's equals I^(sigma^-1(i))
// over the permuted a's composed with the permuted coordinates.
VerifyReport verify_simplex_symmetry(const std::vector<unsigned>& a, const std::vector<std::size_t>& sigma);

}  // namespace cb::simplex
