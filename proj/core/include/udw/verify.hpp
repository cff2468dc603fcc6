#ifndef UDW_VERIFY_HPP
#define UDW_VERIFY_HPP

#include <string>
#include <vector>

// Built-in verification catalogue: each criterion runs the engine against an
// independent reference (closed form, dual formulation, or exact identity)
// and reports a measured value with its target and tolerance. Shared by the
// CLI `verify` command and the acceptance test binary.

namespace udw::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    double measured = 0.0;
    double target = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;  // optional extra context
};

enum class Suite { fast, full };

const std::vector<int>& suite_ids(Suite suite);

CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_suite(Suite suite);

std::string format_result(const CriterionResult& r);

}  // namespace udw::verify

#endif
