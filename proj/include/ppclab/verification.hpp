#pragma once

#include <map>
#include <string>

#include <json.hpp>

namespace ppclab {

enum class CheckStatus { Pass, Fail, Vacuous, NotApplicable, Inconclusive };

const char* to_string(CheckStatus s);

// One verified inequality/identity: both sides, the margin, and the inputs
// that produced it. `informational` marks hypothesis-type classifications
// that describe the data rather than the implementation; they never fail
// a verification run.
struct VerificationRecord {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    CheckStatus status = CheckStatus::Pass;
    bool informational = false;
    std::map<std::string, double> params;
    std::string note; // e.g. the message of a numerical failure

    bool counts_as_failure() const {
        return status == CheckStatus::Fail && !informational;
    }
};

nlohmann::ordered_json to_json(const VerificationRecord& rec);

} // namespace ppclab
