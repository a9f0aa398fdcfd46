#ifndef BUNKBED_REPORT_HPP
#define BUNKBED_REPORT_HPP

#include "bunkbed/monte_carlo.hpp"
#include "bunkbed/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace bunkbed {

struct CheckResult {
    std::string name;
    std::string expected;   // value or relation being checked
    std::string computed;
    std::string provenance; // which engine / formula produced the value
    bool pass = false;
};

/// Result of one named verification: a list of sub-checks, passing iff all
/// sub-checks pass. Values are compared as exact rationals.
struct ClaimReport {
    std::string claim;
    std::vector<CheckResult> checks;
    std::int64_t elapsed_ms = 0;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return !checks.empty();
    }

    void add(std::string name, std::string expected, std::string computed,
             std::string provenance, bool pass) {
        checks.push_back({std::move(name), std::move(expected), std::move(computed),
                          std::move(provenance), pass});
    }
    /// Exact equality check.
    void add_eq(const std::string& name, const Rational& expected, const Rational& computed,
                const std::string& provenance) {
        add(name, expected.str(), computed.str(), provenance, expected == computed);
    }
};

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const MCEstimate& e);
nlohmann::json to_json(const ClaimReport& r, bool with_timing = false);

/// Human-readable one-line-per-check rendering.
std::string format_report(const ClaimReport& r, bool with_timing = false);

} // namespace bunkbed

#endif
