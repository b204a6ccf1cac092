#include "cb/paths.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace cb::paths {

namespace {

struct Suffix {
    MultiPoly vertical{2}, horizontal{2};
    Int vcount{0}, hcount{0};
};

struct Enumerator {
    unsigned m, n;
    MultiPoly x = MultiPoly::variable(2, 0);
    MultiPoly y = MultiPoly::variable(2, 1);
    MultiPoly xy = x + y;
    std::vector<std::optional<Suffix>> memo;

    Enumerator(unsigned m_, unsigned n_) : m(m_), n(n_), memo((m + 2) * (n + 2)) {}

    std::size_t idx(unsigned i, unsigned j) const { return i * (n + 2) + j; }

    // Weighted sums over path suffixes from (i,j) to (m+1,n+1), split by the
    // direction of the full path's final step.
    const Suffix& suffixes(unsigned i, unsigned j) {
        auto& slot = memo[idx(i, j)];
        if (slot) return *slot;
        Suffix s;
        bool east_ok = i <= m, north_ok = j <= n;
        if (east_ok) {
            MultiPoly w = (j == n + 1) ? xy : x;
            if (i == m && j == n + 1) {
                s.horizontal += w;  // this east step finishes the path
                s.hcount += 1;
            } else {
                const Suffix& nxt = suffixes(i + 1, j);
                s.vertical += w * nxt.vertical;
                s.horizontal += w * nxt.horizontal;
                s.vcount += nxt.vcount;
                s.hcount += nxt.hcount;
            }
        }
        if (north_ok) {
            MultiPoly w = (i == m + 1) ? xy : y;
            if (j == n && i == m + 1) {
                s.vertical += w;
                s.vcount += 1;
            } else {
                const Suffix& nxt = suffixes(i, j + 1);
                s.vertical += w * nxt.vertical;
                s.horizontal += w * nxt.horizontal;
                s.vcount += nxt.vcount;
                s.hcount += nxt.hcount;
            }
        }
        slot = std::move(s);
        return *slot;
    }
};

}  // namespace

PathWeights enumerate_weighted_paths(unsigned m, unsigned n) {
    Enumerator e(m, n);
    const Suffix& root = e.suffixes(0, 0);
    PathWeights w;
    w.vertical = root.vertical;
    w.horizontal = root.horizontal;
    w.total = root.vertical + root.horizontal;
    w.vertical_count = root.vcount;
    w.horizontal_count = root.hcount;
    w.total_count = root.vcount + root.hcount;
    return w;
}

MultiPoly vertical_closed_form(unsigned m, unsigned n) {
    const MultiPoly x = MultiPoly::variable(2, 0);
    const MultiPoly y = MultiPoly::variable(2, 1);
    const MultiPoly xy = x + y;
    MultiPoly sum(2);
    for (unsigned k = 0; k <= n; ++k)
        sum += Rational(binomial(m + k, k)) * y.pow(k) * xy.pow(n - k + 1);
    return x.pow(m + 1) * sum;
}

MultiPoly horizontal_closed_form(unsigned m, unsigned n) {
    return vertical_closed_form(n, m).permute_variables({1, 0});
}

VerifyReport verify_path_partition(unsigned m, unsigned n) {
    Stopwatch sw;
    const PathWeights w = enumerate_weighted_paths(m, n);
    const std::string params = "m=" + std::to_string(m) + " n=" + std::to_string(n);
    const std::pair<const char*, MultiPoly> residuals[] = {
        {"total vs (x+y)^(m+n+2)", w.total - sum_of_variables(2).pow(m + n + 2)},
        {"vertical closed form", w.vertical - vertical_closed_form(m, n)},
        {"horizontal closed form", w.horizontal - horizontal_closed_form(m, n)},
    };
    for (const auto& [label, r] : residuals) {
        if (!r.is_zero()) {
            VerifyReport rep = make_exact_report("paths-partition", params, r, sw.ms());
            rep.witness = std::string(label) + ": " + rep.witness;
            return rep;
        }
    }
    if (w.total_count != binomial(m + n + 2, m + 1) ||
        w.vertical_count != binomial(m + n + 1, m + 1) ||
        w.horizontal_count != binomial(m + n + 1, n + 1)) {
        VerifyReport rep;
        rep.identity = "paths-partition";
        rep.params = params;
        rep.exact = true;
        rep.status = Status::Fail;
        rep.residual_exact = Rational(1);
        rep.witness = "path count does not match its binomial";
        rep.elapsed_ms = sw.ms();
        return rep;
    }
    return make_exact_report("paths-partition", params, MultiPoly(2), sw.ms());
}

McResult mc_coin_toss(const Rational& x, unsigned m, unsigned n,
                      std::uint64_t trials, std::uint64_t seed) {
    if (x < Rational(0) || x > Rational(1))
        throw std::domain_error("mc_coin_toss: x must lie in [0, 1]");

    McResult res;
    res.trials = trials;
    res.seed = seed;

    // Exact outcome probabilities: reach m+1 heads having seen k tails, or
    // n+1 tails having seen k heads.
    Rational omx = Rational(1) - x;
    res.outcomes.reserve(n + m + 2);
    for (unsigned k = 0; k <= n; ++k) {
        McOutcome o;
        o.heads_first = true;
        o.k = k;
        Rational p = Rational(binomial(m + k, k));
        for (unsigned i = 0; i <= m; ++i) p *= x;
        for (unsigned i = 0; i < k; ++i) p *= omx;
        o.exact = p;
        res.outcomes.push_back(o);
    }
    for (unsigned k = 0; k <= m; ++k) {
        McOutcome o;
        o.heads_first = false;
        o.k = k;
        Rational p = Rational(binomial(n + k, k));
        for (unsigned i = 0; i <= n; ++i) p *= omx;
        for (unsigned i = 0; i < k; ++i) p *= x;
        o.exact = p;
        res.outcomes.push_back(o);
    }

    const double px = x.to_double();
    constexpr std::uint64_t block_size = 65536;
    std::vector<std::uint64_t> heads_bins(n + 1, 0), tails_bins(m + 1, 0);
    for (std::uint64_t block = 0; block * block_size < trials; ++block) {
        // Per-block stream: decorrelate by running the seed and block index
        // through the output function itself.
        SplitMix64 seeder(seed);
        std::uint64_t s0 = seeder.next();
        SplitMix64 rng(s0 ^ (block * 0x9e3779b97f4a7c15ull));
        std::uint64_t begin = block * block_size;
        std::uint64_t end = std::min(trials, begin + block_size);
        for (std::uint64_t t = begin; t < end; ++t) {
            unsigned heads = 0, tails = 0;
            while (heads <= m && tails <= n) {
                if (rng.next_double() < px)
                    ++heads;
                else
                    ++tails;
            }
            if (heads == m + 1)
                ++heads_bins[tails];
            else
                ++tails_bins[heads];
        }
    }

    for (auto& o : res.outcomes) {
        o.count = o.heads_first ? heads_bins[o.k] : tails_bins[o.k];
        o.empirical = trials ? static_cast<double>(o.count) / static_cast<double>(trials) : 0.0;
        double p = o.exact.to_double();
        o.std_err = trials ? std::sqrt(p * (1.0 - p) / static_cast<double>(trials)) : 0.0;
        res.exact_sum += o.exact;
    }
    return res;
}

}  // namespace cb::paths
