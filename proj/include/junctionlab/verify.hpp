#pragma once
// verify.hpp - the verification suites behind `junctionlab verify`.
//
//   oracle      recurrence vs. window scan for Gen(u) and F(u)
//   tables      K-table rows against the bundled golden tables
//   properties  structural invariants of the K-table engine
//   fixtures    generated b-files and tower sequences against fixtures/oeis

#include <cstdint>
#include <string>
#include <vector>

namespace junctionlab {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    [[nodiscard]] bool ok() const;
    /// One "PASS name" / "FAIL name: detail" line per check.
    [[nodiscard]] std::string format() const;
};

struct VerifyOptions {
    std::vector<std::uint32_t> bases{2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::uint64_t limit = 100000;  // oracle: largest u checked
    std::uint64_t n_max = 16;      // properties: rows checked
    std::string fixture_dir;       // empty: the bundled directory
    bool heights = true;           // properties: include the tower-height formula check
};

SuiteReport verify_oracle(const VerifyOptions& opts);
SuiteReport verify_tables(const VerifyOptions& opts);
SuiteReport verify_properties(const VerifyOptions& opts);
SuiteReport verify_fixtures(const VerifyOptions& opts);

/// Dispatches on "oracle", "tables", "properties" or "fixtures".
SuiteReport run_suite(const std::string& suite, const VerifyOptions& opts);

}  // namespace junctionlab
