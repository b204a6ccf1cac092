#include "cb/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cb {

bool GrlexLess::operator()(const Mono& a, const Mono& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(std::size_t arity, const Rational& c) {
    MultiPoly p(arity);
    if (!c.is_zero()) p.terms_.emplace(Mono(arity, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t idx) {
    if (idx >= arity) throw std::invalid_argument("MultiPoly::variable: index out of range");
    MultiPoly p(arity);
    Mono e(arity, 0);
    e[idx] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(Mono exponents, const Rational& c) {
    MultiPoly p(exponents.size());
    if (!c.is_zero()) p.terms_.emplace(std::move(exponents), c);
    return p;
}

unsigned MultiPoly::total_degree() const {
    if (terms_.empty()) return 0;
    const Mono& lead = terms_.rbegin()->first;  // grlex max has max total degree
    return std::accumulate(lead.begin(), lead.end(), 0u);
}

unsigned MultiPoly::degree_in(std::size_t var) const {
    if (var >= arity_) throw std::invalid_argument("MultiPoly::degree_in: index out of range");
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

Rational MultiPoly::coeff(const Mono& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Mono& e, const Rational& c) {
    if (e.size() != arity_) throw std::invalid_argument("MultiPoly::add_term: exponent arity mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_arity(const MultiPoly& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("MultiPoly: arity mismatch");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_arity(b);
    MultiPoly r(a.arity_);
    Mono e(a.arity_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly operator*(const MultiPoly& a, const Rational& c) {
    MultiPoly r(a.arity_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : a.terms_) r.terms_.emplace(e, v * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(arity_, Rational(1));
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

MultiPoly MultiPoly::partial_derivative(std::size_t var) const {
    if (var >= arity_) throw std::invalid_argument("MultiPoly::partial_derivative: index out of range");
    MultiPoly r(arity_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Mono f = e;
        --f[var];
        r.terms_.emplace(std::move(f), c * Rational(static_cast<long>(e[var])));
    }
    return r;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& r) const {
    if (var >= arity_) throw std::invalid_argument("MultiPoly::substitute: index out of range");
    check_arity(r);
    // Cache powers of the replacement.
    std::vector<MultiPoly> powers{constant(arity_, Rational(1))};
    MultiPoly out(arity_);
    for (const auto& [e, c] : terms_) {
        while (powers.size() <= e[var]) powers.push_back(powers.back() * r);
        Mono rest = e;
        rest[var] = 0;
        out += monomial(std::move(rest), c) * powers[e[var]];
    }
    return out;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != arity_) throw std::invalid_argument("MultiPoly::evaluate: point arity mismatch");
    std::vector<std::vector<Rational>> powers(arity_, {Rational(1)});
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < arity_; ++i) {
            auto& p = powers[i];
            while (p.size() <= e[i]) p.push_back(p.back() * point[i]);
            t *= p[e[i]];
        }
        total += t;
    }
    return total;
}

unsigned MultiPoly::root_order(const Rational& at) const {
    if (arity_ != 1) throw std::domain_error("MultiPoly::root_order: univariate only");
    if (is_zero()) throw std::domain_error("MultiPoly::root_order: zero polynomial");
    // Dense coefficient vector, synthetic division by (x - at) while it divides.
    std::vector<Rational> cs(degree_in(0) + 1, Rational(0));
    for (const auto& [e, c] : terms_) cs[e[0]] = c;
    unsigned order = 0;
    while (true) {
        // Horner: remainder = p(at), quotient coefficients accumulate in place.
        std::vector<Rational> q(cs.size() > 1 ? cs.size() - 1 : 0);
        Rational acc(0);
        for (std::size_t i = cs.size(); i-- > 0;) {
            acc = acc * at + cs[i];
            if (i > 0) q[i - 1] = acc;
            // after the loop acc holds p(at); q holds p div (x - at) when acc == 0
        }
        if (!acc.is_zero()) return order;
        ++order;
        if (q.empty()) return order;  // constant zero remainder: p was c*(x-at)^deg
        cs = std::move(q);
    }
}

MultiPoly MultiPoly::permute_variables(const std::vector<std::size_t>& perm) const {
    if (perm.size() != arity_) throw std::invalid_argument("MultiPoly::permute_variables: size mismatch");
    std::vector<bool> seen(arity_, false);
    for (std::size_t p : perm) {
        if (p >= arity_ || seen[p]) throw std::invalid_argument("MultiPoly::permute_variables: not a bijection");
        seen[p] = true;
    }
    MultiPoly r(arity_);
    Mono f(arity_);
    for (const auto& [e, c] : terms_) {
        for (std::size_t j = 0; j < arity_; ++j) f[perm[j]] = e[j];
        r.terms_.emplace(f, c);
    }
    return r;
}

MultiPoly MultiPoly::remove_variable(std::size_t var) const {
    if (var >= arity_) throw std::invalid_argument("MultiPoly::remove_variable: index out of range");
    MultiPoly r(arity_ - 1);
    Mono f(arity_ - 1);
    for (const auto& [e, c] : terms_) {
        if (e[var] != 0) throw std::invalid_argument("MultiPoly::remove_variable: variable occurs");
        f.assign(e.begin(), e.begin() + var);
        f.insert(f.end(), e.begin() + var + 1, e.end());
        r.terms_.emplace(f, c);
    }
    return r;
}

MultiPoly MultiPoly::with_arity(std::size_t new_arity) const {
    if (new_arity < arity_) throw std::invalid_argument("MultiPoly::with_arity: cannot shrink");
    MultiPoly r(new_arity);
    for (const auto& [e, c] : terms_) {
        Mono f = e;
        f.resize(new_arity, 0);
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

std::vector<std::string> default_names(std::size_t arity) {
    if (arity == 1) return {"x"};
    if (arity == 2) return {"x", "y"};
    std::vector<std::string> names;
    names.reserve(arity);
    for (std::size_t i = 1; i <= arity; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

namespace {

std::string format_terms(const MultiPoly& p, const std::vector<std::string>& names, bool tex) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool any_var = std::any_of(e.begin(), e.end(), [](unsigned k) { return k > 0; });
        bool unit = (a == Rational(1));
        if (!unit || !any_var) {
            if (tex && !a.is_integer())
                os << "\\frac{" << a.numerator().get_str() << "}{" << a.denominator().get_str() << "}";
            else
                os << a.str();
        }
        bool first_var = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!tex && (!first_var || !unit)) os << "*";
            else if (tex && !first_var) os << " ";
            first_var = false;
            os << names[i];
            if (e[i] > 1) {
                if (tex)
                    os << "^{" << e[i] << "}";
                else
                    os << "^" << e[i];
            }
        }
    }
    return os.str();
}

}  // namespace

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    return format_terms(*this, names.empty() ? default_names(arity_) : names, false);
}

std::string MultiPoly::latex(const std::vector<std::string>& names) const {
    return format_terms(*this, names.empty() ? default_names(arity_) : names, true);
}

Rational MultiPoly::max_abs_coeff() const {
    Rational m(0);
    for (const auto& [e, c] : terms_) m = std::max(m, c.abs());
    return m;
}

std::string MultiPoly::leading_term_str(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    const auto& [e, c] = *terms_.rbegin();
    MultiPoly t = monomial(e, c);
    return t.str(names);
}

MultiPoly sum_of_variables(std::size_t arity) {
    MultiPoly s(arity);
    for (std::size_t i = 0; i < arity; ++i) s += MultiPoly::variable(arity, i);
    return s;
}

MultiPoly compose(const MultiPoly& g, const std::vector<MultiPoly>& args) {
    if (args.size() != g.arity()) throw std::invalid_argument("compose: argument count mismatch");
    std::size_t out_arity = args.empty() ? 0 : args[0].arity();
    for (const auto& a : args)
        if (a.arity() != out_arity) throw std::invalid_argument("compose: argument arity mismatch");
    std::vector<std::vector<MultiPoly>> powers(args.size(), {MultiPoly::constant(out_arity, Rational(1))});
    MultiPoly out(out_arity);
    for (const auto& [e, c] : g.terms()) {
        MultiPoly t = MultiPoly::constant(out_arity, c);
        for (std::size_t j = 0; j < args.size(); ++j) {
            auto& p = powers[j];
            while (p.size() <= e[j]) p.push_back(p.back() * args[j]);
            t = t * p[e[j]];
        }
        out += t;
    }
    return out;
}

}  // namespace cb
