#pragma once

#include "cb/multipoly.hpp"

#include <chrono>
#include <string>

namespace cb {

enum class Status { ExactPass, NumericPass, Fail };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::ExactPass: return "exact-pass";
        case Status::NumericPass: return "numeric-pass";
        default: return "fail";
    }
}

// Outcome of one identity check. Exact checks carry a rational residual
// magnitude (0 iff pass); numeric checks carry a nonnegative real residual.
// A failing report always has a nonempty witness.
struct VerifyReport {
    std::string identity;
    std::string params;
    Status status = Status::Fail;
    bool exact = true;
    Rational residual_exact{0};
    double residual_numeric = 0.0;
    double elapsed_ms = 0.0;
    std::string witness;

    bool passed() const { return status != Status::Fail; }
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Exact check: pass iff the residual polynomial is identically zero; the
// residual magnitude is its largest |coefficient| and the witness the
// leading offending term.
inline VerifyReport make_exact_report(std::string identity, std::string params,
                                      const MultiPoly& residual, double elapsed_ms) {
    VerifyReport r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.exact = true;
    r.elapsed_ms = elapsed_ms;
    if (residual.is_zero()) {
        r.status = Status::ExactPass;
    } else {
        r.status = Status::Fail;
        r.residual_exact = residual.max_abs_coeff();
        r.witness = "nonzero residual term " + residual.leading_term_str();
    }
    return r;
}

inline VerifyReport make_numeric_report(std::string identity, std::string params,
                                        double residual, double tolerance, double elapsed_ms,
                                        std::string fail_witness = {}) {
    VerifyReport r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.exact = false;
    r.residual_numeric = residual;
    r.elapsed_ms = elapsed_ms;
    if (residual <= tolerance) {
        r.status = Status::NumericPass;
    } else {
        r.status = Status::Fail;
        r.witness = fail_witness.empty()
                        ? "residual " + std::to_string(residual) + " exceeds tolerance " + std::to_string(tolerance)
                        : std::move(fail_witness);
    }
    return r;
}

}  // namespace cb
