#pragma once

// Run-configuration schema and strict JSON parsing with field-path
// diagnostics. Unknown keys are rejected so typos cannot silently disable a
// check.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "flagberg/rational.hpp"
#include "flagberg/rootsystems.hpp"

namespace flagberg {

inline const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names{"roots",  "q",      "diastasis", "einstein",
                                                "dims",   "kernel", "kempf-numeric"};
    return names;
}

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct JobConfig {
    std::string group;        // e.g. "A2" = type A, rank 2
    Family family = Family::A;
    int rank = 0;             // Dynkin rank from the group token
    int d = 0;                // classical parameter (A: rank+1, else rank)
    std::vector<int> black;
    bool xi_ke = true;
    std::vector<Rat> xi;      // used when !xi_ke; one entry per black node
    std::vector<std::string> checks;
    long samples = 10;
    long trunc = 200;
    std::uint64_t seed = 0;
};

struct RunConfig {
    std::vector<JobConfig> jobs;
};

// "A3" -> family A, rank 3 (= SU(4)); "B2"/"C2"/"D4" likewise with d = rank.
inline void parse_group_token(const std::string& tok, const std::string& path, JobConfig& job) {
    if (tok.size() < 2) throw ConfigError(path + ": group token too short: '" + tok + "'");
    switch (tok[0]) {
        case 'A': job.family = Family::A; break;
        case 'B': job.family = Family::B; break;
        case 'C': job.family = Family::C; break;
        case 'D': job.family = Family::D; break;
        default:
            throw ConfigError(path + ": group family must be one of A, B, C, D: '" + tok + "'");
    }
    for (std::size_t i = 1; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i])))
            throw ConfigError(path + ": group rank must be an integer: '" + tok + "'");
    int r = std::stoi(tok.substr(1));
    if (r < 1 || r > 8) throw ConfigError(path + ": group rank out of supported range 1..8");
    job.rank = r;
    job.d = job.family == Family::A ? r + 1 : r;
    if (job.family == Family::D && r < 2)
        throw ConfigError(path + ": family D needs rank >= 2");
    job.group = tok;
}

namespace detail {

inline void require_keys(const nlohmann::json& obj, const std::string& path,
                         const std::set<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw ConfigError(path + ": unknown key '" + it.key() + "'");
}

inline long get_long(const nlohmann::json& j, const std::string& path, long lo, long hi) {
    if (!j.is_number_integer())
        throw ConfigError(path + ": expected an integer");
    long v = j.get<long>();
    if (v < lo || v > hi)
        throw ConfigError(path + ": value " + std::to_string(v) + " outside [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v;
}

}  // namespace detail

inline JobConfig parse_job(const nlohmann::json& j, const std::string& path) {
    if (!j.is_object()) throw ConfigError(path + ": job must be an object");
    detail::require_keys(j, path,
                         {"group", "black", "xi", "checks", "samples", "trunc", "seed"});
    if (!j.contains("group")) throw ConfigError(path + ".group: missing");
    if (!j.contains("black")) throw ConfigError(path + ".black: missing");

    JobConfig job;
    if (!j["group"].is_string()) throw ConfigError(path + ".group: expected a string");
    parse_group_token(j["group"].get<std::string>(), path + ".group", job);

    const auto& blk = j["black"];
    if (!blk.is_array() || blk.empty())
        throw ConfigError(path + ".black: expected a non-empty array of node indices");
    for (std::size_t i = 0; i < blk.size(); ++i) {
        long v = detail::get_long(blk[i], path + ".black[" + std::to_string(i) + "]", 1, 8);
        if (v > job.rank)
            throw ConfigError(path + ".black[" + std::to_string(i) + "]: node " +
                              std::to_string(v) + " outside 1.." + std::to_string(job.rank));
        job.black.push_back(static_cast<int>(v));
    }
    for (std::size_t i = 1; i < job.black.size(); ++i)
        if (job.black[i] <= job.black[i - 1])
            throw ConfigError(path + ".black: nodes must be strictly increasing");

    if (j.contains("xi")) {
        const auto& xi = j["xi"];
        if (xi.is_string()) {
            if (xi.get<std::string>() != "KE")
                throw ConfigError(path + ".xi: string form must be \"KE\"");
            job.xi_ke = true;
        } else if (xi.is_array()) {
            if (xi.size() != job.black.size())
                throw ConfigError(path + ".xi: need exactly " +
                                  std::to_string(job.black.size()) +
                                  " entries (one per black node), got " +
                                  std::to_string(xi.size()));
            job.xi_ke = false;
            for (std::size_t i = 0; i < xi.size(); ++i) {
                const std::string p = path + ".xi[" + std::to_string(i) + "]";
                if (xi[i].is_number_integer()) {
                    job.xi.push_back(Rat(xi[i].get<long>()));
                } else if (xi[i].is_string()) {
                    try {
                        job.xi.push_back(parse_rat(xi[i].get<std::string>()));
                    } catch (const std::exception& e) {
                        throw ConfigError(p + ": " + e.what());
                    }
                } else {
                    throw ConfigError(p + ": expected integer or rational string");
                }
            }
        } else {
            throw ConfigError(path + ".xi: expected \"KE\" or an array");
        }
    }

    if (j.contains("checks")) {
        const auto& cks = j["checks"];
        if (!cks.is_array()) throw ConfigError(path + ".checks: expected an array");
        for (std::size_t i = 0; i < cks.size(); ++i) {
            const std::string p = path + ".checks[" + std::to_string(i) + "]";
            if (!cks[i].is_string()) throw ConfigError(p + ": expected a string");
            std::string name = cks[i].get<std::string>();
            bool known = false;
            for (const auto& k : known_checks()) known = known || k == name;
            if (!known) throw ConfigError(p + ": unknown check '" + name + "'");
            for (const auto& prev : job.checks)
                if (prev == name) throw ConfigError(p + ": duplicate check '" + name + "'");
            job.checks.push_back(name);
        }
    }
    if (job.checks.empty()) job.checks = known_checks();

    if (j.contains("samples")) job.samples = detail::get_long(j["samples"], path + ".samples", 1, 1000);
    if (j.contains("trunc")) job.trunc = detail::get_long(j["trunc"], path + ".trunc", 1, 100000);
    if (j.contains("seed")) {
        if (!j["seed"].is_number_integer() || j["seed"].get<long long>() < 0)
            throw ConfigError(path + ".seed: expected a non-negative integer");
        job.seed = j["seed"].get<std::uint64_t>();
    }
    return job;
}

inline RunConfig parse_config(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config: top level must be an object");
    detail::require_keys(j, "config", {"jobs"});
    if (!j.contains("jobs") || !j["jobs"].is_array())
        throw ConfigError("config.jobs: expected an array");
    RunConfig cfg;
    for (std::size_t i = 0; i < j["jobs"].size(); ++i)
        cfg.jobs.push_back(parse_job(j["jobs"][i], "jobs[" + std::to_string(i) + "]"));
    return cfg;
}

}  // namespace flagberg
