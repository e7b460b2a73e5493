#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace sfde {

/// One verified inequality or property: pass/fail with the worst margin seen
/// (margin >= 0 means the inequality held) and the point attaining it.
struct CheckResult {
    std::string name;
    bool pass = true;
    double worst_margin = 0.0;
    nlohmann::json worst_point;
    long checked = 0;
};

struct CertificateReport {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    /// Tightens `name` with a new observation; flips pass when margin < -tol.
    void observe(const std::string& name, double margin, double tol,
                 nlohmann::json point);
    nlohmann::json to_json() const;
};

}  // namespace sfde
