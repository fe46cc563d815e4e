#ifndef DDO_REPORT_HPP
#define DDO_REPORT_HPP

#include <string>
#include <vector>

namespace ddo {

/// One verified invariant: the measured residual against its tolerance.
struct CheckResult {
    std::string name;
    double residual;
    double tolerance;
    bool pass;
    std::string detail;
};

struct VerificationReport {
    std::string title;
    std::vector<CheckResult> checks;

    void add(std::string name, double residual, double tolerance,
             std::string detail = "")
    {
        checks.push_back(CheckResult{std::move(name), residual, tolerance,
                                     residual <= tolerance, std::move(detail)});
    }

    void add_flag(std::string name, bool ok, std::string detail = "")
    {
        checks.push_back(
            CheckResult{std::move(name), ok ? 0.0 : 1.0, 0.5, ok, std::move(detail)});
    }

    void merge(const VerificationReport& other)
    {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    bool pass() const
    {
        for (const CheckResult& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
};

} // namespace ddo

#endif
