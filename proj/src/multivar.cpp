#include "cb/multivar.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cb::multivar {

namespace {

void require_params(const std::vector<unsigned>& a, std::size_t min_size = 2) {
    if (a.size() < min_size) throw std::invalid_argument("parameter vector too short");
}

// Odometer over the box 0 <= k_i <= bounds_i; returns false after the last.
bool next_point(std::vector<unsigned>& k, const std::vector<unsigned>& bounds) {
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] < bounds[i]) {
            ++k[i];
            return true;
        }
        k[i] = 0;
    }
    return false;
}

unsigned sum_of(const std::vector<unsigned>& v, std::size_t count) {
    return std::accumulate(v.begin(), v.begin() + count, 0u);
}

}  // namespace

std::string params_a(const std::vector<unsigned>& a) {
    std::string s = "a=";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s;
}

MultiPoly power_of_sum(std::size_t arity, unsigned e) {
    static std::mutex mu;
    static std::map<std::pair<std::size_t, unsigned>, MultiPoly> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find({arity, e}); it != cache.end()) return it->second;
    MultiPoly p = MultiPoly::constant(arity, Rational(1));
    unsigned have = 0;
    for (unsigned j = e; j > 0; --j)
        if (auto it = cache.find({arity, j}); it != cache.end()) {
            p = it->second;
            have = j;
            break;
        }
    MultiPoly s = sum_of_variables(arity);
    for (unsigned j = have + 1; j <= e; ++j) {
        p = p * s;
        cache.emplace(std::make_pair(arity, j), p);
    }
    return p;
}

MultiPoly build_f(const std::vector<unsigned>& a, bool homogeneous) {
    require_params(a);
    const std::size_t n = a.size();
    const unsigned an = a[n - 1];
    const unsigned deg_prime = sum_of(a, n - 1);

    MultiPoly result(n);
    std::vector<unsigned> bounds(a.begin(), a.end() - 1);
    std::vector<unsigned> k(n - 1, 0);
    do {
        unsigned ks = sum_of(k, n - 1);
        Rational c = pochhammer(Rational(static_cast<long>(an) + 1), ks);
        for (unsigned ki : k) c /= Rational(factorial(ki));
        Mono e(n, 0);
        for (std::size_t i = 0; i < n - 1; ++i) e[i] = k[i];
        e[n - 1] = an + 1;
        MultiPoly term = MultiPoly::monomial(std::move(e), c);
        if (homogeneous) term = term * power_of_sum(n, deg_prime - ks);
        result += term;
    } while (next_point(k, bounds));
    return result;
}

VerifyReport verify_cyclic(const std::vector<unsigned>& a) {
    require_params(a);
    Stopwatch sw;
    const std::size_t n = a.size();
    const unsigned total = sum_of(a, n);

    MultiPoly hom_sum(n), inh_sum(n);
    for (std::size_t shift = 0; shift < n; ++shift) {
        std::vector<std::size_t> perm(n);
        std::vector<unsigned> b(n);
        for (std::size_t l = 0; l < n; ++l) {
            perm[l] = (l + shift) % n;
            b[l] = a[perm[l]];
        }
        hom_sum += build_f(b, true).permute_variables(perm);
        inh_sum += build_f(b, false).permute_variables(perm);
    }
    MultiPoly residual = hom_sum - power_of_sum(n, total + 1);
    if (residual.is_zero()) {
        // Affine slice: substitute x_n := 1 - x_1 - .. - x_{n-1}.
        MultiPoly slice = MultiPoly::constant(n, Rational(1));
        for (std::size_t i = 0; i + 1 < n; ++i) slice -= MultiPoly::variable(n, i);
        residual = inh_sum.substitute(n - 1, slice) - MultiPoly::constant(n, Rational(1));
    }
    return make_exact_report("cyclic", params_a(a), residual, sw.ms());
}

CoeffTable::CoeffTable(std::vector<unsigned> bounds) : bounds_(std::move(bounds)) {
    std::size_t total = 1;
    for (unsigned b : bounds_) total *= b + 1;
    data_.assign(total, Rational(0));
}

std::size_t CoeffTable::index(const std::vector<unsigned>& k) const {
    if (k.size() != bounds_.size()) throw std::invalid_argument("CoeffTable: index arity mismatch");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] > bounds_[i]) throw std::invalid_argument("CoeffTable: index out of bounds");
        idx = idx * (bounds_[i] + 1) + k[i];
    }
    return idx;
}

Rational& CoeffTable::at(const std::vector<unsigned>& k) { return data_[index(k)]; }
const Rational& CoeffTable::at(const std::vector<unsigned>& k) const { return data_[index(k)]; }

MultiPoly CoeffTable::to_poly() const {
    MultiPoly p(bounds_.size());
    std::vector<unsigned> k(bounds_.size(), 0);
    do {
        p.add_term(Mono(k.begin(), k.end()), at(k));
    } while (next_point(k, bounds_));
    return p;
}

CoeffTable lauricella_coeffs(const std::vector<unsigned>& a) {
    require_params(a);
    const std::size_t n = a.size();
    const unsigned an = a[n - 1];
    std::vector<unsigned> bounds(a.begin(), a.end() - 1);
    const unsigned top = std::accumulate(bounds.begin(), bounds.end(), 0u);

    CoeffTable g(bounds);
    // Seed at the top corner.
    Rational seed = pochhammer(Rational(static_cast<long>(an) + 1), top);
    for (unsigned b : bounds) seed /= Rational(factorial(b));
    g.at(bounds) = seed;

    // Downward induction on |k|: each gamma_k is determined by the gamma at
    // k + e_i, with vanishing factors skipping out-of-box neighbours.
    for (unsigned t = top; t-- > 0;) {
        std::vector<unsigned> k(bounds.size(), 0);
        do {
            if (std::accumulate(k.begin(), k.end(), 0u) != t) continue;
            Rational acc(0);
            for (std::size_t i = 0; i < k.size(); ++i) {
                if (k[i] >= bounds[i]) continue;  // (k_i - a_i) = 0 term
                std::vector<unsigned> up = k;
                ++up[i];
                acc += Rational(static_cast<long>(k[i]) + 1)
                     * Rational(static_cast<long>(k[i]) - static_cast<long>(bounds[i])) * g.at(up);
            }
            Rational denom = Rational(static_cast<long>(top) - static_cast<long>(t))
                           * Rational(static_cast<long>(an) + 1 + static_cast<long>(t));
            g.at(k) = -acc / denom;
        } while (next_point(k, bounds));
    }
    return g;
}

namespace {

void require_arity(const MultiPoly& u, std::size_t expected, const char* what) {
    if (u.arity() != expected) throw std::invalid_argument(std::string(what) + ": wrong arity");
}

}  // namespace

MultiPoly pde_residual_component(const std::vector<unsigned>& a, std::size_t i, const MultiPoly& u) {
    require_params(a);
    const std::size_t n = a.size();
    require_arity(u, n - 1, "pde_residual_component");
    if (i < 1 || i > n - 1) throw std::invalid_argument("pde_residual_component: index out of range");
    const std::size_t ii = i - 1;
    const long ai = a[ii], an = a[n - 1];

    MultiPoly xi = MultiPoly::variable(n - 1, ii);
    MultiPoly di = u.partial_derivative(ii);
    MultiPoly r = xi * (MultiPoly::constant(n - 1, Rational(1)) - xi)
                * di.partial_derivative(ii);
    for (std::size_t j = 0; j < n - 1; ++j) {
        if (j == ii) continue;
        r -= xi * MultiPoly::variable(n - 1, j) * di.partial_derivative(j);
    }
    r -= (MultiPoly::constant(n - 1, Rational(ai)) + MultiPoly::constant(n - 1, Rational(an + 2)) * xi) * di;
    for (std::size_t j = 0; j < n - 1; ++j)
        r += Rational(ai) * MultiPoly::variable(n - 1, j) * u.partial_derivative(j);
    r += Rational((an + 1) * ai) * u;
    return r;
}

MultiPoly pde_residual_sum(const std::vector<unsigned>& a, const MultiPoly& u) {
    require_params(a);
    const std::size_t n = a.size();
    require_arity(u, n - 1, "pde_residual_sum");
    const long an = a[n - 1];
    const long sum_prime = static_cast<long>(sum_of(a, n - 1));

    MultiPoly r(n - 1);
    for (std::size_t i = 0; i < n - 1; ++i) {
        MultiPoly xi = MultiPoly::variable(n - 1, i);
        MultiPoly di = u.partial_derivative(i);
        r += xi * (MultiPoly::constant(n - 1, Rational(1)) - xi) * di.partial_derivative(i);
        for (std::size_t j = 0; j < n - 1; ++j) {
            if (j == i) continue;
            r -= xi * MultiPoly::variable(n - 1, j) * di.partial_derivative(j);
        }
        r += Rational(sum_prime - an - 2) * xi * di;
        r -= Rational(static_cast<long>(a[i])) * di;
    }
    r += Rational((an + 1) * sum_prime) * u;
    return r;
}

MultiPoly pde_residual_v(const std::vector<unsigned>& a, const MultiPoly& v) {
    require_params(a);
    const std::size_t n = a.size();
    require_arity(v, n - 1, "pde_residual_v");
    const long total = static_cast<long>(sum_of(a, n));

    MultiPoly r(n - 1);
    for (std::size_t i = 0; i < n - 1; ++i) {
        MultiPoly xi = MultiPoly::variable(n - 1, i);
        MultiPoly di = v.partial_derivative(i);
        r += xi * (MultiPoly::constant(n - 1, Rational(1)) - xi) * di.partial_derivative(i);
        for (std::size_t j = i + 1; j < n - 1; ++j)
            r -= Rational(2) * xi * MultiPoly::variable(n - 1, j) * di.partial_derivative(j);
        r += (Rational(total) * xi - MultiPoly::constant(n - 1, Rational(static_cast<long>(a[i])))) * di;
    }
    return r;
}

MultiPoly pde_residual_w(const std::vector<unsigned>& a, const MultiPoly& w) {
    require_params(a);
    const std::size_t n = a.size();
    require_arity(w, n, "pde_residual_w");
    const long total = static_cast<long>(sum_of(a, n));
    MultiPoly S = sum_of_variables(n);

    MultiPoly r(n);
    for (std::size_t i = 0; i < n; ++i) {
        MultiPoly yi = MultiPoly::variable(n, i);
        MultiPoly di = w.partial_derivative(i);
        r += yi * (S - yi) * di.partial_derivative(i);
        for (std::size_t j = i + 1; j < n; ++j)
            r -= Rational(2) * yi * MultiPoly::variable(n, j) * di.partial_derivative(j);
        r += (Rational(total) * yi - Rational(static_cast<long>(a[i])) * S) * di;
    }
    return r;
}

VerifyReport verify_permutation_pde(const std::vector<unsigned>& a, const std::vector<std::size_t>& sigma) {
    require_params(a);
    Stopwatch sw;
    const std::size_t n = a.size();
    if (sigma.size() != n) throw std::invalid_argument("verify_permutation_pde: permutation size mismatch");

    std::vector<unsigned> b(n);
    for (std::size_t l = 0; l < n; ++l) b[l] = a[sigma[l]];
    MultiPoly h = build_f(b, false).permute_variables(sigma);

    MultiPoly slice = MultiPoly::constant(n, Rational(1));
    for (std::size_t i = 0; i + 1 < n; ++i) slice -= MultiPoly::variable(n, i);
    MultiPoly v = h.substitute(n - 1, slice).remove_variable(n - 1);

    std::string params = params_a(a) + " sigma=";
    for (std::size_t l = 0; l < n; ++l) params += (l ? "," : "") + std::to_string(sigma[l] + 1);
    return make_exact_report("pde-permutation", params, pde_residual_v(a, v), sw.ms());
}

}  // namespace cb::multivar
