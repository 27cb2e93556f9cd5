#pragma once

// Report data model and serialization. JSON output is byte-stable for a
// fixed (config, seed): keys keep insertion order and the per-check "ms"
// field is emitted as 0 unless real timings are explicitly requested (the
// table format always shows real timings).

#include <string>
#include <vector>

#include "json.hpp"

namespace flagberg {

inline const char* FLAGBERG_VERSION = "0.1.0";

struct CheckResult {
    std::string name;
    std::string status;   // "pass" | "fail" | "skipped"
    std::string witness;  // non-empty on fail/skip: what went wrong / why skipped
    nlohmann::ordered_json constants = nlohmann::ordered_json::object();
    long ms = 0;          // real wall time; suppressed in default JSON output

    bool passed() const { return status == "pass"; }
    bool failed() const { return status == "fail"; }
};

struct JobReport {
    int id = 0;
    std::string group;
    std::vector<int> black;
    nlohmann::ordered_json xi;  // "KE" or array of rational strings
    std::vector<CheckResult> checks;
};

struct Report {
    std::string version = FLAGBERG_VERSION;
    std::vector<JobReport> jobs;

    // Exit-code contract: success iff no non-skipped check failed.
    bool all_passed() const {
        for (const auto& j : jobs)
            for (const auto& c : j.checks)
                if (c.failed()) return false;
        return true;
    }
};

inline nlohmann::ordered_json report_to_json(const Report& rep, bool with_timings = false) {
    nlohmann::ordered_json out;
    out["version"] = rep.version;
    out["jobs"] = nlohmann::ordered_json::array();
    for (const auto& job : rep.jobs) {
        nlohmann::ordered_json jj;
        jj["id"] = job.id;
        jj["group"] = job.group;
        jj["black"] = job.black;
        jj["xi"] = job.xi;
        jj["checks"] = nlohmann::ordered_json::object();
        for (const auto& c : job.checks) {
            nlohmann::ordered_json cj;
            cj["status"] = c.status;
            if (!c.witness.empty()) cj["witness"] = c.witness;
            if (!c.constants.empty()) cj["constants"] = c.constants;
            cj["ms"] = with_timings ? c.ms : 0L;
            jj["checks"][c.name] = cj;
        }
        out["jobs"].push_back(jj);
    }
    return out;
}

inline std::string emit_json(const Report& rep, bool with_timings = false) {
    return report_to_json(rep, with_timings).dump(2) + "\n";
}

inline std::string emit_table(const Report& rep) {
    std::string out;
    char line[512];
    std::snprintf(line, sizeof line, "%-4s %-6s %-12s %-14s %-8s %8s  %s\n", "job", "group",
                  "black", "check", "status", "ms", "note");
    out += line;
    out += std::string(72, '-') + "\n";
    for (const auto& job : rep.jobs) {
        std::string blk;
        for (std::size_t i = 0; i < job.black.size(); ++i)
            blk += (i ? "," : "") + std::to_string(job.black[i]);
        for (const auto& c : job.checks) {
            std::string note = c.witness.substr(0, 60);
            std::snprintf(line, sizeof line, "%-4d %-6s %-12s %-14s %-8s %8ld  %s\n", job.id,
                          job.group.c_str(), blk.c_str(), c.name.c_str(), c.status.c_str(), c.ms,
                          note.c_str());
            out += line;
        }
    }
    out += rep.all_passed() ? "result: all non-skipped checks passed\n"
                            : "result: FAILURES present\n";
    return out;
}

// Inverse of emit_json for the fields that drive the exit code; used to
// verify that serialization round-trips the pass/fail decisions.
inline Report parse_report(const std::string& text) {
    auto j = nlohmann::ordered_json::parse(text);
    Report rep;
    rep.version = j.at("version").get<std::string>();
    for (const auto& jj : j.at("jobs")) {
        JobReport job;
        job.id = jj.at("id").get<int>();
        job.group = jj.at("group").get<std::string>();
        job.black = jj.at("black").get<std::vector<int>>();
        job.xi = jj.at("xi");
        for (auto it = jj.at("checks").begin(); it != jj.at("checks").end(); ++it) {
            CheckResult c;
            c.name = it.key();
            c.status = it.value().at("status").get<std::string>();
            if (it.value().contains("witness"))
                c.witness = it.value()["witness"].get<std::string>();
            if (it.value().contains("constants")) c.constants = it.value()["constants"];
            c.ms = it.value().at("ms").get<long>();
            job.checks.push_back(c);
        }
        rep.jobs.push_back(job);
    }
    return rep;
}

}  // namespace flagberg
