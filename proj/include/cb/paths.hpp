#pragma once

#include "cb/report.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace cb::paths {

// SplitMix64: counter-based 64-bit generator (public-domain algorithm of
// Steele, Lea & Flood). State advances by the golden-gamma constant; output
// is a bijective finalizer of the counter, so streams seeded differently
// never correlate. Deterministic across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    static constexpr const char* algorithm_id = "splitmix64";

private:
    std::uint64_t state_;
};

// Weighted east/north lattice paths from (0,0) to (m+1, n+1). An east step
// from (i,j) weighs x if j < n+1 and x+y if j = n+1; a north step from (i,j)
// weighs y if i < m+1 and x+y if i = m+1 — once a path hits the top or right
// boundary its forced remaining steps weigh x+y. From every point with both
// steps available the weights of the alternatives sum to x+y.
struct PathWeights {
    MultiPoly total;       // sum of all path weights, equals (x+y)^{m+n+2}
    MultiPoly vertical;    // paths whose final step is north
    MultiPoly horizontal;  // paths whose final step is east
    Int total_count{0}, vertical_count{0}, horizontal_count{0};
};

// Exhaustive enumeration with memoized suffix sums.
PathWeights enumerate_weighted_paths(unsigned m, unsigned n);

// Closed forms of the two halves of the path partition: grouping the
// vertical-ending paths by the height k at which they hit the right boundary
// gives x^{m+1} sum_{k<=n} C(m+k,k) y^k (x+y)^{n-k+1}; horizontal-ending
// paths mirror with x and y swapped.
MultiPoly vertical_closed_form(unsigned m, unsigned n);
MultiPoly horizontal_closed_form(unsigned m, unsigned n);

// Exact check: enumerated total equals (x+y)^{m+n+2}, each half equals its
// closed form, and the path counts are the three binomials
// C(m+n+2, m+1), C(m+n+1, m+1), C(m+n+1, n+1).
VerifyReport verify_path_partition(unsigned m, unsigned n);

// Biased-coin stopping game: toss Pr(head) = x until m+1 heads or n+1 tails.
struct McOutcome {
    bool heads_first;   // reached m+1 heads (k = tails seen), else n+1 tails (k = heads seen)
    unsigned k;
    Rational exact;     // exact outcome probability
    std::uint64_t count = 0;
    double empirical = 0.0;
    double std_err = 0.0;  // sqrt(p(1-p)/trials)
    bool within(double sigmas) const {
        return std::abs(empirical - exact.to_double()) <= sigmas * std_err;
    }
};

struct McResult {
    std::vector<McOutcome> outcomes;  // heads-first k=0..n, then tails-first k=0..m
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    Rational exact_sum{0};  // must be exactly 1
    bool all_within(double sigmas) const {
        for (const auto& o : outcomes)
            if (!o.within(sigmas)) return false;
        return true;
    }
};

// x must lie in [0, 1]. Trials are simulated in fixed blocks of 65536 with
// per-block SplitMix64 streams derived from (seed, block), so counts do not
// depend on scheduling and are bit-reproducible.
McResult mc_coin_toss(const Rational& x, unsigned m, unsigned n,
                      std::uint64_t trials, std::uint64_t seed);

}  // namespace cb::paths
