#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fmlimit/limit.hpp"
#include "fmlimit/oracle.hpp"

namespace fmlimit {

struct VerifyOptions {
    int g_max = 5;
    int weight_lo = 0, weight_hi = 3;
    int truncation_slack = 2;
    std::uint64_t seed = 20260808;
    int jobs = 1;
};

struct VerifyFailure {
    std::string case_id;
    std::string detail;
};

struct SuiteReport {
    std::string name;
    int cases = 0;
    std::vector<VerifyFailure> failures;
    // measured values surfaced by a suite (oracle sign constants and the like)
    std::vector<std::pair<std::string, std::string>> constants;
    double wall_ms = 0;  // diagnostic only; never part of the stable report
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<SuiteReport> suites;
    int total_cases() const;
    int total_failures() const;
    bool passed() const { return total_failures() == 0; }
};

// Suite contents:
//   theorem   closed formula vs the special-fibre pipeline on the bigrade
//             grid, the gamma-kill collapse with its single surviving (n,m)
//             summand, truncation stability under raised bounds, and the
//             double-transform consistency check (always run through g = 6)
//   lemmas    xi-power closed forms vs iterated relation rewriting, the
//             centre pushforward identity, the closed form of
//             tau*(tau*p1*x . E^k) vs the generic pipeline, the projection
//             formula, and the kernel factorization against the literal
//             divisor exponential
//   beauville per-weight specialization rows, their transform round trip,
//             and the two worked demos
//   oracle    exterior-algebra model: double Fourier sign, the numeric
//             replay of the pipeline, Pontryagin intertwining constants
//   infrastructure  parser and printer round trips
SuiteReport run_suite_theorem(const VerifyOptions& opt);
SuiteReport run_suite_lemmas(const VerifyOptions& opt);
SuiteReport run_suite_beauville(const VerifyOptions& opt);
SuiteReport run_suite_oracle(const VerifyOptions& opt);
SuiteReport run_suite_infrastructure(const VerifyOptions& opt);

// names: theorem|lemmas|beauville|oracle|infrastructure|all
VerifyReport run_suites(const std::vector<std::string>& names, const VerifyOptions& opt);

// Stable serializations: byte-identical for identical options and seed,
// independent of --jobs (timings go to diagnostics, not here).
std::string report_to_text(const VerifyReport& report);
std::string report_to_json(const VerifyReport& report);

}  // namespace fmlimit
