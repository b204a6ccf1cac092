#pragma once

#include "cb/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace cb {

// Exponent vector; length equals the arity of the owning polynomial.
using Mono = std::vector<unsigned>;

// Graded lexicographic order: lower total degree first, ties broken
// lexicographically on the exponent vector.
struct GrlexLess {
    bool operator()(const Mono& a, const Mono& b) const;
};

// Sparse multivariate polynomial over Rational. Invariants: no explicit zero
// coefficients, all exponent vectors have length arity(), terms held in
// graded-lex order (the map comparator), so equal polynomials have equal
// representations.
class MultiPoly {
public:
    using TermMap = std::map<Mono, Rational, GrlexLess>;

    explicit MultiPoly(std::size_t arity = 1) : arity_(arity) {}
    static MultiPoly constant(std::size_t arity, const Rational& c);
    static MultiPoly variable(std::size_t arity, std::size_t idx);
    static MultiPoly monomial(Mono exponents, const Rational& c);

    std::size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    unsigned total_degree() const;           // 0 for the zero polynomial
    unsigned degree_in(std::size_t var) const;
    Rational coeff(const Mono& e) const;

    void add_term(const Mono& e, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator-() const;
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const Rational& c);
    friend MultiPoly operator*(const Rational& c, const MultiPoly& a) { return a * c; }
    MultiPoly pow(unsigned e) const;

    MultiPoly partial_derivative(std::size_t var) const;
    // Replace variable `var` by `r` (same arity as *this).
    MultiPoly substitute(std::size_t var, const MultiPoly& r) const;
    Rational evaluate(const std::vector<Rational>& point) const;
    // Multiplicity of `at` as a root; arity-1 nonzero polynomials only.
    unsigned root_order(const Rational& at) const;

    // Rename variable j to variable perm[j]; perm must be a bijection on
    // 0..arity-1. Term exponents move with their variables.
    MultiPoly permute_variables(const std::vector<std::size_t>& perm) const;
    // Drop a variable that occurs in no term.
    MultiPoly remove_variable(std::size_t var) const;
    // Embed into a larger variable space (new vars appended, unused).
    MultiPoly with_arity(std::size_t new_arity) const;

    bool operator==(const MultiPoly& o) const {
        return arity_ == o.arity_ && terms_ == o.terms_;
    }

    // Canonical text form, terms in ascending graded-lex order.
    std::string str(const std::vector<std::string>& names = {}) const;
    std::string latex(const std::vector<std::string>& names = {}) const;

    // Largest |coefficient| (0 for the zero polynomial) and the graded-lex
    // leading term as text; used for residual reporting.
    Rational max_abs_coeff() const;
    std::string leading_term_str(const std::vector<std::string>& names = {}) const;

private:
    std::size_t arity_;
    TermMap terms_;
    void check_arity(const MultiPoly& o) const;
};

// x_0 + x_1 + ... + x_{arity-1}.
MultiPoly sum_of_variables(std::size_t arity);

// g(args[0], ..., args[g.arity()-1]); the args share a common arity, which
// becomes the arity of the result.
MultiPoly compose(const MultiPoly& g, const std::vector<MultiPoly>& args);

// Default display names: x | x,y | x1..xn.
std::vector<std::string> default_names(std::size_t arity);

}  // namespace cb
