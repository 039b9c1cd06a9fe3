#pragma once

// The verification harness: a registry of named checks (V1..V12), each
// re-deriving one concrete claim from scratch and comparing against the
// frozen expected value.  Results serialize to line-delimited JSON.

#include "af3/fixtures.hpp"

namespace af3 {

struct CheckResult {
    std::string id;
    std::string claim;     // human-readable sentence
    std::string expected;  // canonical JSON
    std::string computed;  // canonical JSON, equal to expected iff pass
    bool pass = false;
    int64_t millis = 0;
};

// Registered ids in canonical execution order.
std::vector<std::string> check_ids();

// Runs one check.  Throws Error on unknown id or infrastructure failure
// (missing fixture, parse error); claim mismatches are reported via pass.
CheckResult run_check(const std::string& id, const std::string& fixtures_override = "");

// Runs all checks on `threads` workers.  Results come back in registry
// order regardless of scheduling.  Checks not started before the deadline
// (timeout_secs > 0) throw; the caller decides how to surface that.
std::vector<CheckResult> run_all(const std::string& fixtures_override = "", int threads = 1,
                                 int timeout_secs = 0);

// One self-contained JSON object: id, claim, expected, computed, pass, millis.
std::string report_line(const CheckResult& r);

// Trailing summary record for a report.
std::string report_summary(const std::vector<CheckResult>& results, int64_t total_millis);

}  // namespace af3
