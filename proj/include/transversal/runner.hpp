#pragma once

#include <json.hpp>

#include "transversal/session.hpp"

namespace transversal {

inline constexpr const char* kEngineVersion = "transversal 0.1.0";

struct CommandError : Error {
    int index;
    CommandError(int idx, const std::string& msg)
        : Error("command #" + std::to_string(idx + 1) + ": " + msg), index(idx)
    {
    }
};

struct Report {
    int index = 0;
    std::string command;      // canonical echo
    std::string fingerprint;  // hash of canonical operand forms
    nlohmann::json result;
    std::vector<std::string> lines;  // human-readable rendering
    double wallMs = 0.0;
    bool internalDisagreement = false;
};

struct RunOptions {
    CheckOptions checks;  // defaults; per-command key=value args win
    int artinReesNmax = 6;
    int moduleRtBound = 6;
};

std::vector<Report> run_session(const SessionScript& script, const RunOptions& opts);

nlohmann::json report_to_json(const Report& report);
std::string render_report_text(const Report& report);

/// Built-in fixture scripts exercised by `transversal selftest`.
std::vector<std::pair<std::string, std::string>> selftest_scripts();

}  // namespace transversal
