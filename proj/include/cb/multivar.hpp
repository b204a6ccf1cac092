#pragma once

#include "cb/report.hpp"

#include <cstddef>
#include <vector>

namespace cb::multivar {

// f(a_1..a_n; x_1..x_n) =
//   x_n^{a_n+1} * sum_{k_i <= a_i} (a_n+1)_{k_1+..+k_{n-1}} / (k_1!..k_{n-1}!)
//                 * x_1^{k_1}..x_{n-1}^{k_{n-1}} * S^{(a_1+..+a_{n-1}) - sum k}
// with S = x_1+..+x_n when homogeneous = true (degree a_1+..+a_n+1 throughout);
// without the S factor when homogeneous = false. Requires n >= 2.
MultiPoly build_f(const std::vector<unsigned>& a, bool homogeneous);

// Cyclic partition: the n cyclic shifts of (a, x) sum to (x_1+..+x_n)^{|a|+1};
// the inhomogeneous variant sums to 1 after x_n := 1 - x_1 - .. - x_{n-1}.
VerifyReport verify_cyclic(const std::vector<unsigned>& a);

// Dense table of series coefficients gamma_k over the box k_i <= a_i
// (i = 1..n-1), filled by downward recurrence from the top corner.
class CoeffTable {
public:
    CoeffTable(std::vector<unsigned> bounds);
    const std::vector<unsigned>& bounds() const { return bounds_; }
    Rational& at(const std::vector<unsigned>& k);
    const Rational& at(const std::vector<unsigned>& k) const;
    // sum_k gamma_k x^k as a polynomial in n-1 variables.
    MultiPoly to_poly() const;
    std::size_t size() const { return data_.size(); }

private:
    std::vector<unsigned> bounds_;
    std::vector<Rational> data_;
    std::size_t index(const std::vector<unsigned>& k) const;
};

// Coefficients of the terminating multivariate series solving the system of
// second-order PDEs; seeded at the top corner k = (a_1..a_{n-1}) with
// (a_n+1)_{sum a'} / prod a_i! and filled downward. Closed form:
// gamma_k = (a_n+1)_{sum k} / prod k_i!.
CoeffTable lauricella_coeffs(const std::vector<unsigned>& a);

// Residual of the summed second-order operator applied to u(x_1..x_{n-1}).
MultiPoly pde_residual_sum(const std::vector<unsigned>& a, const MultiPoly& u);

// Residual of the i-th individual operator (i in 1..n-1, 1-based).
MultiPoly pde_residual_component(const std::vector<unsigned>& a, std::size_t i, const MultiPoly& u);

// Residual of the first-order-free operator annihilating every permuted
// inhomogeneous f on the affine slice x_1+..+x_n = 1; v has n-1 variables.
MultiPoly pde_residual_v(const std::vector<unsigned>& a, const MultiPoly& v);

// Residual of the homogeneous companion operator in all n variables.
MultiPoly pde_residual_w(const std::vector<unsigned>& a, const MultiPoly& w);

// sigma is a permutation of {0..n-1}; checks that
// (x_1..x_{n-1}) -> f(a∘sigma; x_sigma(1)..x_sigma(n)), x_n := 1 - sum x_i,
// is annihilated by the v-operator with the *original* a.
VerifyReport verify_permutation_pde(const std::vector<unsigned>& a, const std::vector<std::size_t>& sigma);

// (x_1+..+x_arity)^e with a process-wide cache (thread-safe).
MultiPoly power_of_sum(std::size_t arity, unsigned e);

std::string params_a(const std::vector<unsigned>& a);

}  // namespace cb::multivar
