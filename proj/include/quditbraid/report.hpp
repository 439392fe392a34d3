#pragma once

#include <string>
#include <vector>

namespace quditbraid {

struct ResidualCheck {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
};

/// Named residuals against a tolerance; passes only if every check does.
struct VerificationReport {
    std::vector<ResidualCheck> checks;

    void add(std::string name, double residual, double tol) {
        checks.push_back({std::move(name), residual, tol, residual <= tol});
    }

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

}  // namespace quditbraid
