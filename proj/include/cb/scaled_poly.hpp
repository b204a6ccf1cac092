#pragma once

#include "cb/multipoly.hpp"

namespace cb {

// Univariate expression core(x) / (x^d0 * (1-x)^d1), kept normalized: the
// stored core is divisible by neither x (when d0 > 0) nor 1-x (when d1 > 0),
// and the zero expression is (0, 0, 0). Closed under +, -, polynomial
// multiplication and d/dx, which is what the pole-carrying identity checks
// need.
class ScaledPoly {
public:
    ScaledPoly() : core_(1), d0_(0), d1_(0) {}
    ScaledPoly(MultiPoly core, unsigned d0, unsigned d1);
    static ScaledPoly from_poly(MultiPoly p) { return ScaledPoly(std::move(p), 0, 0); }

    const MultiPoly& core() const { return core_; }
    unsigned d0() const { return d0_; }
    unsigned d1() const { return d1_; }
    bool is_zero() const { return core_.is_zero(); }

    ScaledPoly operator+(const ScaledPoly& o) const;
    ScaledPoly operator-(const ScaledPoly& o) const;
    ScaledPoly operator-() const;
    ScaledPoly mul_poly(const MultiPoly& p) const;
    ScaledPoly mul_scalar(const Rational& c) const;
    ScaledPoly derivative() const;

    // x distinct from 0 and 1 whenever the corresponding pole is present.
    Rational evaluate(const Rational& x) const;

    bool operator==(const ScaledPoly& o) const { return (*this - o).is_zero(); }

    std::string str() const;

private:
    MultiPoly core_;  // arity 1
    unsigned d0_, d1_;
    void normalize();
};

// Quotient of p by (1-x); p(1) must be 0.
MultiPoly divide_by_one_minus_x(const MultiPoly& p);

}  // namespace cb
