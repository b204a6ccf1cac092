// cbverify: command-line front door for the verification library. Every
// subcommand streams one JSON object per check (JSON lines) followed by a
// summary object. Exit status: 0 = all checks passed, 1 = at least one check
// failed, 2 = usage or configuration error.
//
// Output is byte-deterministic for a fixed command line (and seed); wall-clock
// timings are only included under the opt-in --timings flag.

#include "cb/hyper.hpp"
#include "cb/multivar.hpp"
#include "cb/onevar.hpp"
#include "cb/parallel.hpp"
#include "cb/paths.hpp"
#include "cb/report.hpp"
#include "cb/simplex.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using cb::Complex;
using cb::MultiPoly;
using cb::Rational;
using cb::VerifyReport;
using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Output plumbing

struct Output {
    std::ostream* os = &std::cout;
    std::ofstream file;
    bool timings = false;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
        os = &file;
    }
    void line(const ordered_json& j) { (*os) << j.dump() << "\n"; }
};

ordered_json report_json(const VerifyReport& r, bool timings) {
    ordered_json j;
    j["identity"] = r.identity;
    j["params"] = r.params;
    j["status"] = cb::to_string(r.status);
    if (r.exact)
        j["residual"] = r.residual_exact.str();
    else
        j["residual"] = r.residual_numeric;
    if (timings) j["elapsed_ms"] = r.elapsed_ms;
    if (!r.witness.empty()) j["witness"] = r.witness;
    return j;
}

// Streams the reports plus a trailing summary object; returns the exit code.
int finish(Output& out, const std::string& suite, const std::vector<VerifyReport>& reports) {
    std::size_t passed = 0;
    for (const auto& r : reports) {
        out.line(report_json(r, out.timings));
        if (r.passed()) ++passed;
    }
    ordered_json s;
    s["summary"] = suite;
    s["checks"] = reports.size();
    s["passed"] = passed;
    s["failed"] = reports.size() - passed;
    s["status"] = (passed == reports.size()) ? "pass" : "fail";
    out.line(s);
    return (passed == reports.size()) ? 0 : 1;
}

std::string fmt_double(double v) {
    std::ostringstream oss;
    oss << std::setprecision(15) << v;
    return oss.str();
}

std::string params_mn(unsigned m, unsigned n) {
    return "m=" + std::to_string(m) + " n=" + std::to_string(n);
}

std::vector<unsigned> parse_a_list(const std::string& s) {
    std::vector<unsigned> a;
    std::string item;
    std::istringstream iss(s);
    while (std::getline(iss, item, ',')) {
        std::size_t used = 0;
        long v = -1;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || v < 0)
            throw std::runtime_error("--a expects a comma-separated list of nonnegative integers, got '" + s + "'");
        a.push_back(static_cast<unsigned>(v));
    }
    if (a.empty()) throw std::runtime_error("--a expects a nonempty comma-separated list");
    return a;
}

// ---------------------------------------------------------------------------
// verify onevar

// Negative control (hidden test hook): re-runs the partition check with one
// coefficient of p_{m,n} deliberately corrupted, so the residual is nonzero.
VerifyReport corrupted_onevar(unsigned m, unsigned n) {
    cb::Stopwatch sw;
    MultiPoly p = cb::onevar::build_p(m, n) + MultiPoly::constant(1, Rational(1, 7));
    MultiPoly one_minus_x = MultiPoly::constant(1, 1) - MultiPoly::variable(1, 0);
    MultiPoly q = cb::compose(cb::onevar::build_p(n, m), {one_minus_x});
    MultiPoly residual = p + q - MultiPoly::constant(1, 1);
    return cb::make_exact_report("onevar", params_mn(m, n) + " corrupt=1", residual, sw.ms());
}

// Full check cluster for a single (m, n): partition of unity, construction
// equivalences, root orders, homogeneous/truncation/descent/ODE variants and
// the Bezout certificate.
std::vector<VerifyReport> onevar_cluster(unsigned m, unsigned n) {
    namespace ov = cb::onevar;
    std::vector<VerifyReport> out;
    const std::string params = params_mn(m, n);

    out.push_back(ov::verify_onevar(m, n));
    {
        cb::Stopwatch sw;
        MultiPoly p = ov::build_p(m, n);
        out.push_back(cb::make_exact_report("construction-recurrence", params,
                                            p - ov::build_p_recur(m, n), sw.ms()));
        cb::Stopwatch sw2;
        out.push_back(cb::make_exact_report("construction-genfun", params,
                                            p - ov::genfun_coeff(m, n), sw2.ms()));

        cb::Stopwatch sw3;
        VerifyReport roots;
        roots.identity = "root-order";
        roots.params = params;
        roots.exact = true;
        roots.elapsed_ms = sw3.ms();
        MultiPoly complement = MultiPoly::constant(1, 1) - p;
        if (p.root_order(Rational(1)) == n + 1 && complement.root_order(Rational(0)) == m + 1) {
            roots.status = cb::Status::ExactPass;
        } else {
            roots.status = cb::Status::Fail;
            roots.residual_exact = Rational(1);
            roots.witness = "root order at x=1 is " + std::to_string(p.root_order(Rational(1))) +
                            " (want " + std::to_string(n + 1) + "), at x=0 of 1-p is " +
                            std::to_string(complement.root_order(Rational(0))) + " (want " +
                            std::to_string(m + 1) + ")";
        }
        out.push_back(roots);
    }
    out.push_back(ov::verify_homogeneous(m, n));
    out.push_back(ov::verify_truncation(m, n));
    if (m >= 1) out.push_back(ov::verify_derivative_descent(m, n));
    out.push_back(ov::verify_ode_onevar(m, n));
    {
        cb::Stopwatch sw;
        auto [u, v] = ov::bezout_certificate(m, n);
        MultiPoly x = MultiPoly::variable(1, 0);
        MultiPoly one = MultiPoly::constant(1, 1);
        MultiPoly residual = (one - x).pow(n + 1) * u + x.pow(m + 1) * v - one;
        out.push_back(cb::make_exact_report("bezout", params, residual, sw.ms()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// verify pde

std::vector<std::vector<std::size_t>> permutation_set(std::size_t n, bool all) {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    if (all) {
        do perms.push_back(sigma); while (std::next_permutation(sigma.begin(), sigma.end()));
        return perms;
    }
    perms.push_back(sigma);  // identity
    if (n >= 2) {
        std::vector<std::size_t> tr = perms[0];
        std::swap(tr[0], tr[1]);
        perms.push_back(tr);  // adjacent transposition
        std::vector<std::size_t> cyc(n);
        for (std::size_t i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
        if (cyc != tr) perms.push_back(cyc);  // full cycle (generates S_n with the transposition)
    }
    return perms;
}

// Checks the full PDE family for one exponent tuple: the summed and the
// per-direction second-order operators on the terminating series, the
// coefficient recurrence against its closed form, the first-order-free
// operator on every permuted slice solution, and the homogeneous companion
// operator on both the cyclic summand and the pure power of the sum.
std::vector<VerifyReport> pde_suite(const std::vector<unsigned>& a, bool all_perms) {
    namespace mv = cb::multivar;
    std::vector<VerifyReport> out;
    const std::size_t n = a.size();
    const std::string params = mv::params_a(a);
    unsigned total = std::accumulate(a.begin(), a.end(), 0u);

    cb::Stopwatch sw;
    mv::CoeffTable table = mv::lauricella_coeffs(a);
    MultiPoly u = table.to_poly();
    out.push_back(cb::make_exact_report("pde-sum", params, mv::pde_residual_sum(a, u), sw.ms()));
    for (std::size_t i = 1; i <= n - 1; ++i) {
        cb::Stopwatch sw2;
        out.push_back(cb::make_exact_report("pde-component", params + " i=" + std::to_string(i),
                                            mv::pde_residual_component(a, i, u), sw2.ms()));
    }
    {
        // gamma_k = (a_n+1)_{|k|} / prod k_i! over the box k_i <= a_i.
        cb::Stopwatch sw2;
        mv::CoeffTable closed(std::vector<unsigned>(a.begin(), a.end() - 1));
        std::vector<unsigned> k(n - 1, 0);
        while (true) {
            unsigned ks = 0;
            Rational denom(1);
            for (unsigned ki : k) {
                ks += ki;
                denom = denom * Rational(cb::factorial(ki));
            }
            closed.at(k) = cb::pochhammer(Rational(a.back() + 1), ks) / denom;
            std::size_t pos = 0;
            for (; pos < k.size(); ++pos) {
                if (k[pos] < a[pos]) {
                    ++k[pos];
                    break;
                }
                k[pos] = 0;
            }
            if (pos == k.size()) break;
        }
        out.push_back(cb::make_exact_report("coeff-closed-form", params, u - closed.to_poly(), sw2.ms()));
    }
    for (const auto& sigma : permutation_set(n, all_perms))
        out.push_back(mv::verify_permutation_pde(a, sigma));
    {
        cb::Stopwatch sw2;
        out.push_back(cb::make_exact_report("pde-w-cyclic-summand", params,
                                            mv::pde_residual_w(a, mv::build_f(a, true)), sw2.ms()));
        cb::Stopwatch sw3;
        out.push_back(cb::make_exact_report("pde-w-power", params,
                                            mv::pde_residual_w(a, mv::power_of_sum(n, total + 1)), sw3.ms()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// verify dirichlet

std::vector<VerifyReport> dirichlet_suite(const std::vector<unsigned>& a) {
    std::vector<VerifyReport> out;
    out.push_back(cb::simplex::verify_split(a));
    for (const auto& sigma : permutation_set(a.size(), false)) {
        bool identity_perm = true;
        for (std::size_t i = 0; i < sigma.size(); ++i)
            if (sigma[i] != i) identity_perm = false;
        if (identity_perm) continue;
        out.push_back(cb::simplex::verify_simplex_symmetry(a, sigma));
    }
    return out;
}

// ---------------------------------------------------------------------------
// mc

std::vector<VerifyReport> mc_suite(const Rational& x, unsigned m, unsigned n,
                                   std::uint64_t trials, std::uint64_t seed) {
    std::vector<VerifyReport> out;
    cb::Stopwatch sw;
    cb::paths::McResult res = cb::paths::mc_coin_toss(x, m, n, trials, seed);
    const std::string params = params_mn(m, n) + " x=" + x.str() + " trials=" + std::to_string(trials) +
                               " seed=" + std::to_string(seed);

    // Exact outcome probabilities must sum to exactly 1.
    out.push_back(cb::make_exact_report("mc-exact-sum", params,
                                        MultiPoly::constant(1, res.exact_sum - Rational(1)), sw.ms()));

    // Worst deviation across outcomes, in standard-error units (tolerance 4).
    double worst = 0.0;
    std::string worst_outcome;
    for (const auto& o : res.outcomes) {
        double dev = std::abs(o.empirical - o.exact.to_double());
        double sigmas = (o.std_err > 0.0) ? dev / o.std_err : (dev > 0.0 ? HUGE_VAL : 0.0);
        if (sigmas >= worst) {
            worst = sigmas;
            worst_outcome = std::string(o.heads_first ? "heads" : "tails") + "-first k=" + std::to_string(o.k);
        }
    }
    out.push_back(cb::make_numeric_report("mc-coin-toss", params, worst, 4.0, sw.ms(),
                                          "outcome " + worst_outcome + " deviates by " + fmt_double(worst) +
                                              " standard errors"));
    return out;
}

// ---------------------------------------------------------------------------
// numeric ext

std::vector<VerifyReport> extension_suite(Complex m, Complex n, double x) {
    std::vector<VerifyReport> out;
    out.push_back(cb::verify_extension_equivalence(cb::ExtensionParams(m, n, x)));

    cb::Stopwatch sw;
    Complex p = cb::extended_p(cb::ExtensionParams(m, n, x));
    Complex q = cb::extended_p(cb::ExtensionParams(n, m, 1.0 - x));
    double resid = std::abs(p + q - 1.0);
    const std::string params =
        "m=" + cb::format_complex(m) + " n=" + cb::format_complex(n) + " x=" + fmt_double(x);
    out.push_back(cb::make_numeric_report("extension-unity", params, resid, 1e-9, sw.ms()));
    return out;
}

// ---------------------------------------------------------------------------
// sweep helpers

std::vector<std::vector<unsigned>> tuples_within(const std::vector<unsigned>& bounds) {
    std::vector<std::vector<unsigned>> tuples;
    std::vector<unsigned> a(bounds.size(), 0);
    while (true) {
        tuples.push_back(a);
        std::size_t pos = 0;
        for (; pos < a.size(); ++pos) {
            if (a[pos] < bounds[pos]) {
                ++a[pos];
                break;
            }
            a[pos] = 0;
        }
        if (pos == a.size()) break;
    }
    return tuples;
}

// 20-point grid off the real segment [0,1]: five radii spanning [0.2, 5]
// crossed with four diagonal directions.
std::vector<Complex> threeterm_z_grid() {
    const double radii[] = {0.2, 0.45, 1.0, 2.2, 5.0};
    const double args[] = {0.25, 0.75, 1.25, 1.75};  // multiples of pi
    std::vector<Complex> zs;
    const double pi = std::acos(-1.0);
    for (double r : radii)
        for (double t : args) zs.push_back(std::polar(r, t * pi));
    return zs;
}

// ---------------------------------------------------------------------------

int run(int argc, char** argv) {
    CLI::App app{
        "cbverify: exact and numeric verification of the Chaundy-Bullard partition of unity,\n"
        "its multivariable/homogeneous relatives, and the deformed hypergeometric extensions"};
    app.require_subcommand(1);

    std::string out_path;
    bool timings = false;
    app.add_option("--out", out_path, "write the report stream to this file instead of stdout");
    app.add_flag("--timings", timings,
                 "include wall-clock elapsed_ms in reports (off by default so output stays byte-deterministic)");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "exact symbolic identity checks");
    verify->require_subcommand(1);

    std::int64_t ov_m = -1, ov_n = -1;
    unsigned ov_max = 3;
    bool ov_corrupt = false;
    auto* v_onevar = verify->add_subcommand(
        "onevar", "one-variable partition of unity and its construction/ODE/Bezout cluster");
    v_onevar->add_option("--m", ov_m, "first degree; with --n, runs the full check cluster for one pair");
    v_onevar->add_option("--n", ov_n, "second degree");
    v_onevar->add_option("--max-mn", ov_max, "grid sweep bound: partition check for all 0 <= m,n <= K")
        ->capture_default_str();
    v_onevar->add_flag("--corrupt", ov_corrupt)->group("");  // hidden negative-control hook

    std::string mv_a;
    auto* v_multivar =
        verify->add_subcommand("multivar", "cyclic multivariable partition of unity for one exponent tuple");
    v_multivar->add_option("--a", mv_a, "comma-separated exponents a1,a2,... (at least two)")->required();

    std::string pde_a;
    auto* v_pde = verify->add_subcommand(
        "pde", "hypergeometric PDE family: series solution, coefficient recurrence, permuted slices");
    v_pde->add_option("--a", pde_a, "comma-separated exponents a1,a2,... (at least two)")->required();

    std::string di_a;
    auto* v_dirichlet = verify->add_subcommand(
        "dirichlet", "simplex splitting of the Dirichlet integral plus symmetry checks");
    v_dirichlet->add_option("--a", di_a, "comma-separated exponents a1,...,a_{n+1} (at least two)")->required();

    std::int64_t pa_m = -1, pa_n = -1;
    unsigned pa_max = 3;
    auto* v_paths = verify->add_subcommand(
        "paths", "weighted lattice-path partition: enumeration vs closed forms and path counts");
    v_paths->add_option("--m", pa_m, "first degree; with --n, checks a single pair");
    v_paths->add_option("--n", pa_n, "second degree");
    v_paths->add_option("--max-mn", pa_max, "grid sweep bound: all 0 <= m,n <= K")->capture_default_str();

    // ---- numeric ----
    auto* numeric = app.add_subcommand("numeric", "floating-point checks of the analytic extensions");
    numeric->require_subcommand(1);

    std::string ex_m = "1", ex_n = "1";
    double ex_x = 0.5;
    auto* n_ext = numeric->add_subcommand(
        "ext", "complex-degree extension: incomplete-beta form equivalence and partition of unity");
    n_ext->add_option("--m", ex_m, "complex degree, e.g. 1.7 or 0.4+1.1i")->capture_default_str();
    n_ext->add_option("--n", ex_n, "complex degree")->capture_default_str();
    n_ext->add_option("--x", ex_x, "evaluation point in (0,1)")->capture_default_str();

    double tt_alpha = 1.5;
    unsigned tt_m = 1, tt_n = 1;
    std::string tt_z = "2+3i";
    auto* n_threeterm = numeric->add_subcommand(
        "threeterm", "alpha-deformed three-term identity and its finite-difference ODE residual");
    n_threeterm->add_option("--alpha", tt_alpha, "deformation parameter, alpha > 0")->capture_default_str();
    n_threeterm->add_option("--m", tt_m, "first degree")->capture_default_str();
    n_threeterm->add_option("--n", tt_n, "second degree")->capture_default_str();
    n_threeterm->add_option("--z", tt_z, "complex point off the real segment [0,1], e.g. 2+3i")
        ->capture_default_str();

    // ---- mc ----
    unsigned mc_m = 4, mc_n = 6;
    std::string mc_x = "0.3";
    std::uint64_t mc_trials = 1000000, mc_seed = 0;
    auto* mc = app.add_subcommand("mc", "seeded Monte-Carlo coin-toss check of the outcome probabilities");
    mc->add_option("--m", mc_m, "heads needed minus one")->capture_default_str();
    mc->add_option("--n", mc_n, "tails needed minus one")->capture_default_str();
    mc->add_option("--x", mc_x, "head probability as p/q or decimal")->capture_default_str();
    mc->add_option("--trials", mc_trials, "number of simulated games")->capture_default_str();
    mc->add_option("--seed", mc_seed, "64-bit RNG seed")->required();

    // ---- emit ----
    std::string em_id = "onevar", em_format = "text";
    std::int64_t em_m = 1, em_n = 1;
    std::string em_a = "0,0";
    double em_alpha = 1.5;
    std::string em_z = "2+3i";
    auto* emit = app.add_subcommand("emit", "render an identity instance as text or LaTeX");
    emit->add_option("--identity", em_id, "which identity to render")
        ->check(CLI::IsMember({"onevar", "multivar", "threeterm"}))
        ->capture_default_str();
    emit->add_option("--format", em_format, "output encoding")
        ->check(CLI::IsMember({"json", "latex", "text"}))
        ->capture_default_str();
    emit->add_option("--m", em_m)->capture_default_str();
    emit->add_option("--n", em_n)->capture_default_str();
    emit->add_option("--a", em_a, "exponents for the multivariable identity")->capture_default_str();
    emit->add_option("--alpha", em_alpha)->capture_default_str();
    emit->add_option("--z", em_z)->capture_default_str();

    // ---- sweep ----
    std::string sw_suite;
    unsigned sw_max = 0;
    bool sw_max_given = false;
    std::string sw_a;
    std::uint64_t sw_trials = 100, sw_seed = 42;
    double sw_alpha = 1.5;
    auto* sweep = app.add_subcommand("sweep", "run a whole parameter range of one suite");
    sweep->add_option("--suite", sw_suite,
                      "one of onevar, multivar, pde, dirichlet, paths, numeric-ext, threeterm, mc")
        ->check(CLI::IsMember(
            {"onevar", "multivar", "pde", "dirichlet", "paths", "numeric-ext", "threeterm", "mc"}))
        ->required();
    sweep->add_option("--max-mn", sw_max, "degree bound for onevar/paths/threeterm grids")
        ->each([&sw_max_given](const std::string&) { sw_max_given = true; });
    sweep->add_option("--a", sw_a, "per-coordinate exponent bounds for multivar/pde/dirichlet, e.g. 2,2,2");
    sweep->add_option("--trials", sw_trials, "number of pseudo-random draws for numeric-ext")
        ->capture_default_str();
    sweep->add_option("--seed", sw_seed, "seed for the numeric-ext draws")->capture_default_str();
    sweep->add_option("--alpha", sw_alpha, "deformation parameter for the threeterm grid")
        ->capture_default_str();

    // Let the global --out/--timings flags appear after a subcommand too.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
        for (CLI::App* leaf : sub->get_subcommands([](const CLI::App*) { return true; }))
            leaf->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Help requests exit 0; any real parse problem is a usage error (2).
        return app.exit(e) == 0 ? 0 : 2;
    }

    Output out;
    out.timings = timings;
    out.open(out_path);

    // ---- dispatch ----
    if (*v_onevar) {
        if ((ov_m >= 0) != (ov_n >= 0)) throw std::runtime_error("--m and --n must be given together");
        if (ov_m >= 0) {
            std::vector<VerifyReport> reports;
            if (ov_corrupt)
                reports.push_back(corrupted_onevar(static_cast<unsigned>(ov_m), static_cast<unsigned>(ov_n)));
            else
                reports = onevar_cluster(static_cast<unsigned>(ov_m), static_cast<unsigned>(ov_n));
            return finish(out, "verify-onevar", reports);
        }
        const unsigned side = ov_max + 1;
        auto reports = cb::parallel_map<VerifyReport>(side * side, [&](std::size_t idx) {
            unsigned m = static_cast<unsigned>(idx / side), n = static_cast<unsigned>(idx % side);
            return ov_corrupt ? corrupted_onevar(m, n) : cb::onevar::verify_onevar(m, n);
        });
        return finish(out, "verify-onevar", reports);
    }
    if (*v_multivar) {
        std::vector<unsigned> a = parse_a_list(mv_a);
        return finish(out, "verify-multivar", {cb::multivar::verify_cyclic(a)});
    }
    if (*v_pde) {
        std::vector<unsigned> a = parse_a_list(pde_a);
        return finish(out, "verify-pde", pde_suite(a, a.size() <= 4));
    }
    if (*v_dirichlet) {
        std::vector<unsigned> a = parse_a_list(di_a);
        return finish(out, "verify-dirichlet", dirichlet_suite(a));
    }
    if (*v_paths) {
        if ((pa_m >= 0) != (pa_n >= 0)) throw std::runtime_error("--m and --n must be given together");
        if (pa_m >= 0)
            return finish(out, "verify-paths",
                          {cb::paths::verify_path_partition(static_cast<unsigned>(pa_m),
                                                            static_cast<unsigned>(pa_n))});
        const unsigned side = pa_max + 1;
        auto reports = cb::parallel_map<VerifyReport>(side * side, [&](std::size_t idx) {
            return cb::paths::verify_path_partition(static_cast<unsigned>(idx / side),
                                                    static_cast<unsigned>(idx % side));
        });
        return finish(out, "verify-paths", reports);
    }
    if (*n_ext)
        return finish(out, "numeric-ext",
                      extension_suite(cb::parse_complex(ex_m), cb::parse_complex(ex_n), ex_x));
    if (*n_threeterm) {
        cb::ThreeTermParams p(tt_alpha, tt_m, tt_n, cb::parse_complex(tt_z));
        return finish(out, "numeric-threeterm", {cb::verify_threeterm(p), cb::verify_ode_numeric(p)});
    }
    if (*mc) return finish(out, "mc", mc_suite(Rational::parse(mc_x), mc_m, mc_n, mc_trials, mc_seed));

    if (*emit) {
        if (em_m < 0 || em_n < 0) throw std::runtime_error("--m and --n must be nonnegative");
        const unsigned m = static_cast<unsigned>(em_m), n = static_cast<unsigned>(em_n);
        std::string params, latex, text;
        if (em_id == "onevar") {
            params = params_mn(m, n);
            MultiPoly p = cb::onevar::build_p(m, n);
            MultiPoly one_minus_x = MultiPoly::constant(1, 1) - MultiPoly::variable(1, 0);
            MultiPoly q = cb::compose(cb::onevar::build_p(n, m), {one_minus_x});
            latex = "\\left(" + p.latex({"x"}) + "\\right) + \\left(" + q.latex({"x"}) + "\\right) = 1";
            text = "p[" + params + "](x) = " + p.str({"x"}) + "\n" +
                   "p[" + params_mn(n, m) + "](1-x) = " + q.str({"x"}) + "\n" +
                   "sum = " + (p + q).str({"x"});
        } else if (em_id == "multivar") {
            std::vector<unsigned> a = parse_a_list(em_a);
            params = cb::multivar::params_a(a);
            const std::size_t arity = a.size();
            std::vector<std::string> names, latex_names;
            for (std::size_t i = 1; i <= arity; ++i) {
                names.push_back("x" + std::to_string(i));
                latex_names.push_back("x_{" + std::to_string(i) + "}");
            }
            std::string lhs_text, lhs_latex;
            for (std::size_t i = 0; i < arity; ++i) {
                // i-th cyclic shift: exponents rotate left by i, variable j of the
                // shifted instance is x_{(j+i) mod arity}.
                std::vector<unsigned> b(arity);
                std::vector<std::size_t> perm(arity);
                for (std::size_t j = 0; j < arity; ++j) {
                    b[j] = a[(j + i) % arity];
                    perm[j] = (j + i) % arity;
                }
                MultiPoly term = cb::multivar::build_f(b, false).permute_variables(perm);
                if (i) {
                    lhs_text += " + ";
                    lhs_latex += " + ";
                }
                lhs_text += "(" + term.str(names) + ")";
                lhs_latex += "\\left(" + term.latex(latex_names) + "\\right)";
            }
            std::string constraint;
            if (arity <= 4)
                for (std::size_t i = 0; i < arity; ++i) constraint += (i ? "+" : "") + names[i];
            else
                constraint = "x1+...+x" + std::to_string(arity);
            text = lhs_text + " = 1   on " + constraint + " = 1";
            latex = lhs_latex + " = 1";
        } else {  // threeterm
            cb::ThreeTermParams p(em_alpha, m, n, cb::parse_complex(em_z));
            params = "alpha=" + fmt_double(p.alpha) + " " + params_mn(m, n) + " z=" + cb::format_complex(p.z);
            const std::string al = fmt_double(p.alpha);
            const std::string ms = std::to_string(m), ns = std::to_string(n);
            const std::string m1 = std::to_string(m + 1), n1 = std::to_string(n + 1);
            const std::string nm2 = std::to_string(n + m + 2);
            Complex u1 = cb::threeterm_u1(p), u2 = cb::threeterm_u2(p), u3 = cb::threeterm_u3(p);
            latex = "(1-z)^{-" + n1 + "}\\,(1-z^{-1})^{-" + al + "}\\,{}_2F_1\\!\\left(" + m1 + ",-" + al +
                    ";" + nm2 + ";z^{-1}\\right) = \\frac{(" + m1 + ")_{" + n1 + "}}{(" + m1 + "+" + al +
                    ")_{" + n1 + "}}\\,{}_2F_1\\!\\left(-" + ms + "," + n1 + ";-" + ms + "-" + al +
                    ";z\\right) + \\frac{(" + n1 + ")_{" + m1 + "}}{(" + n1 + "+" + al + ")_{" + m1 +
                    "}}\\,z^{" + m1 + "}(1-z)^{-" + n1 + "}(1-z^{-1})^{-" + al + "}\\,{}_2F_1\\!\\left(-" +
                    ns + "," + m1 + ";-" + ns + "-" + al + ";1-z\\right), \\quad z = " +
                    cb::format_complex(p.z);
            text = "u3 = u1 + u2 at " + params + "\n" +
                   "u1 = (" + m1 + ")_" + n1 + "/(" + m1 + "+" + al + ")_" + n1 + " * 2F1(-" + ms + "," +
                   n1 + ";-" + ms + "-" + al + ";z) = " + cb::format_complex(u1) + "\n" +
                   "u2 = (" + n1 + ")_" + m1 + "/(" + n1 + "+" + al + ")_" + m1 + " * z^" + m1 +
                   " (1-z)^-" + n1 + " (1-1/z)^-" + al + " * 2F1(-" + ns + "," + m1 + ";-" + ns + "-" +
                   al + ";1-z) = " + cb::format_complex(u2) + "\n" +
                   "u3 = (1-z)^-" + n1 + " (1-1/z)^-" + al + " * 2F1(" + m1 + ",-" + al + ";" + nm2 +
                   ";1/z) = " + cb::format_complex(u3) + "\n" +
                   "u1 + u2 - u3 = " + cb::format_complex(u1 + u2 - u3);
        }
        if (em_format == "latex") {
            (*out.os) << latex << "\n";
        } else if (em_format == "text") {
            (*out.os) << text << "\n";
        } else {
            ordered_json j;
            j["identity"] = em_id;
            j["params"] = params;
            j["latex"] = latex;
            j["text"] = text;
            out.line(j);
        }
        return 0;
    }

    if (*sweep) {
        if (sw_suite == "onevar") {
            const unsigned side = (sw_max_given ? sw_max : 12) + 1;
            auto reports = cb::parallel_map<VerifyReport>(side * side, [&](std::size_t idx) {
                return cb::onevar::verify_onevar(static_cast<unsigned>(idx / side),
                                                 static_cast<unsigned>(idx % side));
            });
            return finish(out, "sweep-onevar", reports);
        }
        if (sw_suite == "paths") {
            const unsigned side = (sw_max_given ? sw_max : 6) + 1;
            auto reports = cb::parallel_map<VerifyReport>(side * side, [&](std::size_t idx) {
                return cb::paths::verify_path_partition(static_cast<unsigned>(idx / side),
                                                        static_cast<unsigned>(idx % side));
            });
            return finish(out, "sweep-paths", reports);
        }
        if (sw_suite == "multivar" || sw_suite == "pde" || sw_suite == "dirichlet") {
            std::vector<unsigned> bounds = parse_a_list(sw_a.empty() ? "2,2,2" : sw_a);
            auto tuples = tuples_within(bounds);
            auto chunks = cb::parallel_map<std::vector<VerifyReport>>(tuples.size(), [&](std::size_t idx) {
                if (sw_suite == "multivar")
                    return std::vector<VerifyReport>{cb::multivar::verify_cyclic(tuples[idx])};
                if (sw_suite == "pde") return pde_suite(tuples[idx], false);
                return dirichlet_suite(tuples[idx]);
            });
            std::vector<VerifyReport> reports;
            for (auto& c : chunks) reports.insert(reports.end(), c.begin(), c.end());
            return finish(out, "sweep-" + sw_suite, reports);
        }
        if (sw_suite == "numeric-ext") {
            // Pseudo-random complex degrees with Re in (-0.9, 5), |Im| <= 5,
            // each checked on the decimal x grid 0.1..0.9.
            cb::paths::SplitMix64 rng(sw_seed);
            std::vector<std::pair<Complex, Complex>> draws;
            for (std::uint64_t d = 0; d < sw_trials; ++d) {
                double rm = -0.9 + 5.9 * rng.next_double();
                double im = -5.0 + 10.0 * rng.next_double();
                double rn = -0.9 + 5.9 * rng.next_double();
                double in = -5.0 + 10.0 * rng.next_double();
                draws.emplace_back(Complex(rm, im), Complex(rn, in));
            }
            auto chunks = cb::parallel_map<std::vector<VerifyReport>>(draws.size(), [&](std::size_t idx) {
                std::vector<VerifyReport> local;
                for (int xi = 1; xi <= 9; ++xi) {
                    auto r = extension_suite(draws[idx].first, draws[idx].second, xi / 10.0);
                    local.insert(local.end(), r.begin(), r.end());
                }
                return local;
            });
            std::vector<VerifyReport> reports;
            for (auto& c : chunks) reports.insert(reports.end(), c.begin(), c.end());
            return finish(out, "sweep-numeric-ext", reports);
        }
        if (sw_suite == "mc") {
            const unsigned side = (sw_max_given ? sw_max : 2) + 1;
            auto chunks =
                cb::parallel_map<std::vector<VerifyReport>>(side * side, [&](std::size_t idx) {
                    unsigned m = static_cast<unsigned>(idx / side), n = static_cast<unsigned>(idx % side);
                    return mc_suite(Rational(3, 10), m, n, sw_trials, sw_seed);
                });
            std::vector<VerifyReport> reports;
            for (auto& c : chunks) reports.insert(reports.end(), c.begin(), c.end());
            return finish(out, "sweep-mc", reports);
        }
        // threeterm: degree grid x 20-point z grid, identity + ODE residual each.
        const unsigned side = (sw_max_given ? sw_max : 4) + 1;
        auto zs = threeterm_z_grid();
        auto chunks =
            cb::parallel_map<std::vector<VerifyReport>>(side * side, [&](std::size_t idx) {
                unsigned m = static_cast<unsigned>(idx / side), n = static_cast<unsigned>(idx % side);
                std::vector<VerifyReport> local;
                for (Complex z : zs) {
                    cb::ThreeTermParams p(sw_alpha, m, n, z);
                    local.push_back(cb::verify_threeterm(p));
                    local.push_back(cb::verify_ode_numeric(p));
                }
                return local;
            });
        std::vector<VerifyReport> reports;
        for (auto& c : chunks) reports.insert(reports.end(), c.begin(), c.end());
        return finish(out, "sweep-threeterm", reports);
    }

    throw std::runtime_error("no subcommand dispatched");  // unreachable: require_subcommand(1)
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
