#pragma once

#include <string>
#include <utility>
#include <vector>

namespace upg {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Outcome of a validation or verification sweep. `canonical_text` is the
// byte-stable rendering used for golden comparisons and determinism checks;
// wall-clock timings are reported separately and never enter it.
struct VerificationReport {
    std::vector<Check> checks;
    std::string instance_digest;
    std::vector<std::pair<std::string, double>> timings;

    bool pass() const {
        for (const Check& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(std::string name, bool ok, std::string detail = "") {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }

    std::string canonical_text() const {
        std::string out;
        out += "digest " + instance_digest + "\n";
        for (const Check& c : checks) {
            out += c.pass ? "pass " : "FAIL ";
            out += c.name;
            if (!c.detail.empty()) out += " | " + c.detail;
            out += "\n";
        }
        out += pass() ? "overall pass\n" : "overall FAIL\n";
        return out;
    }

    // First failing check, for terse error paths.
    const Check* first_failure() const {
        for (const Check& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
};

}  // namespace upg
