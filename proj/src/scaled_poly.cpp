#include "cb/scaled_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace cb {

namespace {

MultiPoly one_minus_x() {
    MultiPoly p = MultiPoly::constant(1, Rational(1));
    p -= MultiPoly::variable(1, 0);
    return p;
}

// Smallest exponent of x dividing every term.
unsigned min_exponent(const MultiPoly& p) {
    unsigned m = p.terms().begin()->first[0];
    for (const auto& [e, c] : p.terms()) m = std::min(m, e[0]);
    return m;
}

MultiPoly shift_down(const MultiPoly& p, unsigned k) {
    MultiPoly r(1);
    for (const auto& [e, c] : p.terms()) r.add_term({e[0] - k}, c);
    return r;
}

}  // namespace

MultiPoly divide_by_one_minus_x(const MultiPoly& p) {
    if (p.arity() != 1) throw std::invalid_argument("divide_by_one_minus_x: univariate only");
    // p = (1-x) q  <=>  p = -(x-1) q; synthetic division by root 1, negated.
    std::vector<Rational> cs(p.is_zero() ? 1 : p.degree_in(0) + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) cs[e[0]] = c;
    std::vector<Rational> q(cs.size() > 1 ? cs.size() - 1 : 0);
    Rational acc(0);
    for (std::size_t i = cs.size(); i-- > 0;) {
        acc = acc + cs[i];  // Horner at x = 1
        if (i > 0) q[i - 1] = acc;
    }
    if (!acc.is_zero()) throw std::domain_error("divide_by_one_minus_x: 1 is not a root");
    MultiPoly r(1);
    for (std::size_t i = 0; i < q.size(); ++i) r.add_term({static_cast<unsigned>(i)}, -q[i]);
    return r;
}

ScaledPoly::ScaledPoly(MultiPoly core, unsigned d0, unsigned d1)
    : core_(std::move(core)), d0_(d0), d1_(d1) {
    if (core_.arity() != 1) throw std::invalid_argument("ScaledPoly: univariate core only");
    normalize();
}

void ScaledPoly::normalize() {
    if (core_.is_zero()) {
        d0_ = d1_ = 0;
        return;
    }
    unsigned k = std::min(static_cast<unsigned>(min_exponent(core_)), d0_);
    if (k > 0) {
        core_ = shift_down(core_, k);
        d0_ -= k;
    }
    while (d1_ > 0 && core_.evaluate({Rational(1)}).is_zero()) {
        core_ = divide_by_one_minus_x(core_);
        --d1_;
    }
}

ScaledPoly ScaledPoly::operator+(const ScaledPoly& o) const {
    unsigned D0 = std::max(d0_, o.d0_), D1 = std::max(d1_, o.d1_);
    MultiPoly x = MultiPoly::variable(1, 0), omx = one_minus_x();
    MultiPoly a = core_ * x.pow(D0 - d0_) * omx.pow(D1 - d1_);
    MultiPoly b = o.core_ * x.pow(D0 - o.d0_) * omx.pow(D1 - o.d1_);
    return ScaledPoly(a + b, D0, D1);
}

ScaledPoly ScaledPoly::operator-(const ScaledPoly& o) const { return *this + (-o); }

ScaledPoly ScaledPoly::operator-() const {
    ScaledPoly r = *this;
    r.core_ = -r.core_;
    return r;
}

ScaledPoly ScaledPoly::mul_poly(const MultiPoly& p) const {
    return ScaledPoly(core_ * p, d0_, d1_);
}

ScaledPoly ScaledPoly::mul_scalar(const Rational& c) const {
    return ScaledPoly(core_ * c, d0_, d1_);
}

ScaledPoly ScaledPoly::derivative() const {
    // (c * x^-a * (1-x)^-b)' = (c' x (1-x) - a c (1-x) + b c x) * x^-(a+1) * (1-x)^-(b+1)
    MultiPoly x = MultiPoly::variable(1, 0), omx = one_minus_x();
    MultiPoly num = core_.partial_derivative(0) * x * omx;
    num -= core_ * Rational(static_cast<long>(d0_)) * omx;
    num += core_ * Rational(static_cast<long>(d1_)) * x;
    return ScaledPoly(std::move(num), d0_ + 1, d1_ + 1);
}

Rational ScaledPoly::evaluate(const Rational& x) const {
    if ((d0_ > 0 && x.is_zero()) || (d1_ > 0 && x == Rational(1)))
        throw std::domain_error("ScaledPoly::evaluate: pole");
    Rational num = core_.evaluate({x});
    Rational den(1);
    for (unsigned i = 0; i < d0_; ++i) den *= x;
    Rational omx = Rational(1) - x;
    for (unsigned i = 0; i < d1_; ++i) den *= omx;
    return num / den;
}

std::string ScaledPoly::str() const {
    std::ostringstream os;
    os << "(" << core_.str() << ")";
    if (d0_ > 0) os << " / x^" << d0_;
    if (d1_ > 0) os << (d0_ > 0 ? " / (1-x)^" : " / (1-x)^") << d1_;
    return os.str();
}

}  // namespace cb
