#pragma once

#include <json.hpp>

#include <string>

namespace ck {

// Machine-checkable outcome of one identity verification.
struct VerificationReport {
    std::string identity;
    int n = 0;
    int maxdeg = -1; // degree cutoff or index bound of the check, -1 if not applicable
    bool pass = true;
    nlohmann::json counterexample; // null when pass

    VerificationReport() = default;
    VerificationReport(std::string id, int rank, int cutoff)
        : identity(std::move(id)), n(rank), maxdeg(cutoff) {}

    void fail(nlohmann::json why) {
        if (pass) counterexample = std::move(why); // keep the first one
        pass = false;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["identity"] = identity;
        j["n"] = n;
        j["maxdeg"] = maxdeg;
        j["status"] = pass ? "pass" : "fail";
        j["counterexample"] = pass ? nlohmann::json() : counterexample;
        return j;
    }
};

} // namespace ck
