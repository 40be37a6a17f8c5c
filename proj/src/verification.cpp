#include "ppclab/verification.hpp"

namespace ppclab {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Vacuous: return "vacuous";
        case CheckStatus::NotApplicable: return "not-applicable";
        case CheckStatus::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

nlohmann::ordered_json to_json(const VerificationRecord& rec) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : rec.params) {
        params[key] = value;
    }
    params["informational"] = rec.informational;
    nlohmann::ordered_json j{
        {"name", rec.name}, {"lhs", rec.lhs},       {"rhs", rec.rhs},
        {"slack", rec.slack}, {"status", to_string(rec.status)}, {"params", params},
    };
    if (!rec.note.empty()) {
        j["note"] = rec.note;
    }
    return j;
}

} // namespace ppclab
