#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace cb {

using Int = mpz_class;

// Arbitrary-precision rational kept in canonical form: reduced, denominator > 0.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(n) {}
    Rational(unsigned long n) : v_(n) {}
    Rational(unsigned n) : v_(n) {}
    Rational(const Int& z) : v_(z) {}
    Rational(const Int& num, const Int& den) {
        if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    // Accepts "p/q", integers, and decimal literals ("0.3" -> 3/10).
    static Rational parse(const std::string& s);

    // Exact binary-rational value of a finite double.
    static Rational from_double(double d) {
        if (!std::isfinite(d)) throw std::domain_error("Rational::from_double: non-finite value");
        Rational r;
        r.v_ = mpq_class(d);
        return r;
    }

    const mpq_class& raw() const { return v_; }
    Int numerator() const { return v_.get_num(); }
    Int denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    Rational abs() const { Rational r; r.v_ = ::abs(v_); return r; }

    double to_double() const { return v_.get_d(); }
    std::string str() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

private:
    mpq_class v_;
};

inline std::string Rational::str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
}

inline Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            Int num(s.substr(0, slash), 10);  // base 10: avoid octal auto-detect on leading zeros
            Int den(s.substr(slash + 1), 10);
            return Rational(num, den);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(Int(s, 10));
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("bad decimal");
        Int den(1);
        for (std::size_t i = 0; i < frac; ++i) den *= 10;
        return Rational(Int(digits, 10), den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational::parse: cannot parse '" + s + "'");
    }
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// C(n, k); zero outside 0 <= k <= n so sum bounds never need guards.
inline Int binomial(unsigned long n, long long k) {
    if (k < 0 || static_cast<unsigned long long>(k) > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

// Rising factorial (a)_k = a (a+1) ... (a+k-1), (a)_0 = 1.
inline Rational pochhammer(const Rational& a, unsigned k) {
    Rational r(1), f(a);
    for (unsigned i = 0; i < k; ++i) {
        r *= f;
        f += Rational(1);
    }
    return r;
}

}  // namespace cb
