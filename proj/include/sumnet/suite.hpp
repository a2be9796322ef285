#ifndef SUMNET_SUITE_HPP
#define SUMNET_SUITE_HPP

#include <string>
#include <vector>

namespace sumnet {

/// One verified claim: what was checked, what was expected, what was seen.
/// pass is always derived from observed results, never set by hand.
struct ClaimResult {
    std::string id;
    std::string statement;
    std::string params;
    std::string expected;
    std::string observed;
    bool pass = false;
    double runtime_ms = 0.0;
};

struct SuiteReport {
    std::vector<ClaimResult> claims;
    bool all_pass() const;
};

/// Claim ids in execution order.
std::vector<std::string> suite_claim_ids();

/// Glob-style match ('*' and '?') used by the claim filter.
bool claim_id_matches(const std::string& pattern, const std::string& id);

/// Runs every claim whose id matches the filter. Individual claim failures
/// (including exceptions) are recorded in the report; the suite never aborts.
SuiteReport run_paper_suite(const std::string& filter = "*");

/// Canonical JSON rendering (sorted keys, two-space indent, trailing newline).
std::string report_to_json(const SuiteReport& report);

/// Fixed-width text table, one row per claim.
std::string report_to_table(const SuiteReport& report);

}  // namespace sumnet

#endif
