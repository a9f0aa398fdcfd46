#include "bunkbed/report.hpp"

#include <sstream>

namespace bunkbed {

nlohmann::json to_json(const Rational& r) {
    return {{"num", r.num_str()}, {"den", r.den_str()}, {"float", r.approx()}};
}

nlohmann::json to_json(const MCEstimate& e) {
    return {{"n", e.n},           {"hits", e.hits},       {"estimate", e.estimate},
            {"ci_low", e.ci_low}, {"ci_high", e.ci_high}, {"seed", e.seed}};
}

nlohmann::json to_json(const ClaimReport& r, bool with_timing) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"provenance", c.provenance},
                          {"pass", c.pass}});
    return {{"claim", r.claim},
            {"checks", checks},
            {"pass", r.pass()},
            {"elapsed_ms", with_timing ? r.elapsed_ms : 0}};
}

std::string format_report(const ClaimReport& r, bool with_timing) {
    std::ostringstream out;
    out << "== " << r.claim << " ==\n";
    for (const auto& c : r.checks) {
        out << (c.pass ? "  [pass] " : "  [FAIL] ") << c.name << ": expected " << c.expected
            << ", computed " << c.computed << " (" << c.provenance << ")\n";
    }
    out << (r.pass() ? "RESULT: pass" : "RESULT: FAIL");
    if (with_timing) out << "  (" << r.elapsed_ms << " ms)";
    out << "\n";
    return out.str();
}

} // namespace bunkbed
