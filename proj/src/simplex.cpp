#include "cb/simplex.hpp"

#include "cb/multivar.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cb::simplex {

namespace {

void require_exponents(const std::vector<unsigned>& a) {
    if (a.size() < 2) throw std::invalid_argument("simplex: need at least two exponents");
}

// Laplace expansion along the first column; fine at the small arities used.
MultiPoly det(const std::vector<std::vector<MultiPoly>>& mat) {
    std::size_t n = mat.size();
    if (n == 1) return mat[0][0];
    std::size_t arity = mat[0][0].arity();
    MultiPoly result(arity);
    for (std::size_t r = 0; r < n; ++r) {
        if (mat[r][0].is_zero()) continue;
        std::vector<std::vector<MultiPoly>> minor;
        minor.reserve(n - 1);
        for (std::size_t rr = 0; rr < n; ++rr) {
            if (rr == r) continue;
            minor.emplace_back(mat[rr].begin() + 1, mat[rr].end());
        }
        MultiPoly term = mat[r][0] * det(minor);
        if (r % 2)
            result -= term;
        else
            result += term;
    }
    return result;
}

// Vertices of the sub-simplex other than x, as 0/1 coordinate vectors:
// 0 and e_k (k != i) for i <= n, e_1..e_n for i = n+1, in that fixed order.
std::vector<std::vector<unsigned>> other_vertices(std::size_t i, std::size_t n) {
    std::vector<std::vector<unsigned>> vs;
    if (i <= n) vs.push_back(std::vector<unsigned>(n, 0));  // origin
    for (std::size_t k = 1; k <= n; ++k) {
        if (k == i) continue;
        std::vector<unsigned> v(n, 0);
        v[k - 1] = 1;
        vs.push_back(std::move(v));
    }
    return vs;
}

// |det| of the affine map onto the standard simplex, as a polynomial in x;
// sign fixed by evaluation at the interior point (1/(n+1), .., 1/(n+1)).
MultiPoly jacobian_abs(std::size_t i, std::size_t n) {
    auto vs = other_vertices(i, n);
    std::vector<std::vector<MultiPoly>> mat(n, std::vector<MultiPoly>(n, MultiPoly(n)));
    for (std::size_t col = 0; col < n; ++col)
        for (std::size_t row = 0; row < n; ++row) {
            MultiPoly entry = MultiPoly::constant(n, Rational(static_cast<long>(vs[col][row])));
            entry -= MultiPoly::variable(n, row);
            mat[row][col] = std::move(entry);
        }
    MultiPoly d = det(mat);
    std::vector<Rational> center(n, Rational(1, static_cast<long>(n) + 1));
    int sign = d.evaluate(center).sign();
    if (sign == 0) throw std::logic_error("jacobian_abs: degenerate sub-simplex");
    return sign < 0 ? -d : d;
}

std::string params_a(const std::vector<unsigned>& a) { return multivar::params_a(a); }

// f of the partition family with one more exponent than free arguments:
// args.size() + 1 exponents b, the trailing coordinate being 1 - sum(args).
MultiPoly partition_poly(const std::vector<unsigned>& b, const std::vector<MultiPoly>& args) {
    MultiPoly g = multivar::build_f(b, false);
    std::size_t arity = args[0].arity();
    std::vector<MultiPoly> full = args;
    MultiPoly last = MultiPoly::constant(arity, Rational(1));
    for (const auto& arg : args) last -= arg;
    full.push_back(std::move(last));
    return compose(g, full);
}

}  // namespace

Rational dirichlet(const std::vector<unsigned>& a) {
    require_exponents(a);
    std::size_t n = a.size() - 1;
    Rational num(1);
    for (unsigned ai : a) num *= Rational(factorial(ai));
    unsigned total = std::accumulate(a.begin(), a.end(), 0u);
    return num / Rational(factorial(total + n));
}

MultiPoly subsimplex_integral(std::size_t i, const std::vector<unsigned>& a) {
    require_exponents(a);
    const std::size_t n = a.size() - 1;
    if (i < 1 || i > n + 1) throw std::invalid_argument("subsimplex_integral: i out of range");

    // Combined space: vars 0..n-1 = x, vars n..2n-1 = simplex parameters s,
    // var 2n = r, standing for the barycentric remainder 1 - s_1 - .. - s_n.
    const std::size_t N = 2 * n + 1;
    auto vs = other_vertices(i, n);

    // t_j = r x_j + sum of the parameters attached to vertices with e_j = 1.
    std::vector<MultiPoly> t(n + 1, MultiPoly(N));
    for (std::size_t j = 0; j < n; ++j) {
        Mono rx(N, 0);
        rx[j] = 1;
        rx[2 * n] = 1;
        t[j] = MultiPoly::monomial(std::move(rx), Rational(1));
        for (std::size_t l = 0; l < n; ++l)
            if (vs[l][j] == 1) t[j] += MultiPoly::variable(N, n + l);
    }
    // Barycentric factor 1 - sum t_j = r (1 - sum x) + parameter of the origin.
    {
        Mono r(N, 0);
        r[2 * n] = 1;
        MultiPoly base = MultiPoly::monomial(std::move(r), Rational(1));
        MultiPoly xs(N);
        for (std::size_t j = 0; j < n; ++j) {
            Mono rx(N, 0);
            rx[j] = 1;
            rx[2 * n] = 1;
            xs += MultiPoly::monomial(std::move(rx), Rational(1));
        }
        t[n] = base - xs;
        for (std::size_t l = 0; l < n; ++l) {
            bool origin = std::all_of(vs[l].begin(), vs[l].end(), [](unsigned c) { return c == 0; });
            if (origin) t[n] += MultiPoly::variable(N, n + l);
        }
    }

    MultiPoly integrand = MultiPoly::constant(N, Rational(1));
    for (std::size_t j = 0; j <= n; ++j)
        for (unsigned rep = 0; rep < a[j]; ++rep) integrand = integrand * t[j];

    // Termwise monomial integration over the parameter simplex:
    // s^beta r^K  ->  (prod beta_l!) K! / (sum beta + K + n)!.
    MultiPoly result(n);
    for (const auto& [e, c] : integrand.terms()) {
        unsigned beta_sum = 0;
        Rational num(1);
        for (std::size_t l = 0; l < n; ++l) {
            beta_sum += e[n + l];
            num *= Rational(factorial(e[n + l]));
        }
        unsigned K = e[2 * n];
        num *= Rational(factorial(K));
        Rational value = c * num / Rational(factorial(beta_sum + K + n));
        result.add_term(Mono(e.begin(), e.begin() + n), value);
    }
    return result * jacobian_abs(i, n);
}

VerifyReport verify_split(const std::vector<unsigned>& a) {
    require_exponents(a);
    Stopwatch sw;
    const std::size_t n = a.size() - 1;
    const Rational I = dirichlet(a);

    std::vector<MultiPoly> pieces;
    pieces.reserve(n + 1);
    MultiPoly sum(n);
    for (std::size_t i = 1; i <= n + 1; ++i) {
        pieces.push_back(subsimplex_integral(i, a));
        sum += pieces.back();
    }
    MultiPoly residual = sum - MultiPoly::constant(n, I);

    if (residual.is_zero()) {
        // Each piece against the cyclically indexed partition polynomial:
        // sigma cyclic on 1..n+1 with sigma(n) = i.
        for (std::size_t i = 1; i <= n + 1 && residual.is_zero(); ++i) {
            long shift = static_cast<long>(i) - static_cast<long>(n);
            auto sigma = [&](std::size_t j) {  // 1-based
                long v = (static_cast<long>(j) - 1 + shift) % static_cast<long>(n + 1);
                if (v < 0) v += static_cast<long>(n + 1);
                return static_cast<std::size_t>(v) + 1;
            };
            std::vector<unsigned> b;
            b.reserve(n + 1);
            b.push_back(a[sigma(n + 1) - 1]);
            for (std::size_t j = 1; j <= n; ++j) b.push_back(a[sigma(j) - 1]);

            std::vector<MultiPoly> args;
            args.reserve(n);
            auto coord = [&](std::size_t idx1) {  // x_{idx1}, with x_{n+1} = 1 - sum
                if (idx1 <= n) return MultiPoly::variable(n, idx1 - 1);
                MultiPoly p = MultiPoly::constant(n, Rational(1));
                for (std::size_t v = 0; v < n; ++v) p -= MultiPoly::variable(n, v);
                return p;
            };
            args.push_back(coord(sigma(n + 1)));
            for (std::size_t j = 1; j + 1 <= n; ++j) args.push_back(coord(sigma(j)));

            residual = pieces[i - 1] - MultiPoly::constant(n, I) * partition_poly(b, args);
        }
    }
    return make_exact_report("simplex-split", params_a(a), residual, sw.ms());
}

VerifyReport verify_simplex_symmetry(const std::vector<unsigned>& a, const std::vector<std::size_t>& sigma) {
    require_exponents(a);
    Stopwatch sw;
    const std::size_t n = a.size() - 1;
    if (sigma.size() != n + 1) throw std::invalid_argument("verify_simplex_symmetry: permutation size mismatch");

    std::vector<std::size_t> inv(n + 1);
    for (std::size_t l = 0; l <= n; ++l) inv[sigma[l]] = l;

    std::vector<unsigned> b(n + 1);
    for (std::size_t l = 0; l <= n; ++l) b[l] = a[sigma[l]];

    auto coord = [&](std::size_t idx0) {  // 0-based; index n means 1 - sum
        if (idx0 < n) return MultiPoly::variable(n, idx0);
        MultiPoly p = MultiPoly::constant(n, Rational(1));
        for (std::size_t v = 0; v < n; ++v) p -= MultiPoly::variable(n, v);
        return p;
    };

    MultiPoly residual(n);
    for (std::size_t i = 1; i <= n + 1 && residual.is_zero(); ++i) {
        MultiPoly lhs = subsimplex_integral(i, a);
        MultiPoly rhs_poly = subsimplex_integral(inv[i - 1] + 1, b);
        std::vector<MultiPoly> args;
        args.reserve(n);
        for (std::size_t l = 0; l < n; ++l) args.push_back(coord(sigma[l]));
        residual = lhs - compose(rhs_poly, args);
    }

    std::string params = params_a(a) + " sigma=";
    for (std::size_t l = 0; l <= n; ++l) params += (l ? "," : "") + std::to_string(sigma[l] + 1);
    return make_exact_report("simplex-symmetry", params, residual, sw.ms());
}

}  // namespace cb::simplex
