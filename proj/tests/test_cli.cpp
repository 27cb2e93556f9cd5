#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include "flagberg/flagberg.hpp"

using namespace flagberg;

namespace {

std::string wrap(const std::string& job_body) {
    return std::string("{\"jobs\": [") + job_body + "]}";
}

std::string parse_error(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("config parsing accepts a minimal job and fills defaults") {
    RunConfig cfg = parse_config(wrap("{\"group\": \"A2\", \"black\": [1]}"));
    REQUIRE(cfg.jobs.size() == 1);
    const JobConfig& j = cfg.jobs[0];
    CHECK(j.group == "A2");
    CHECK(j.family == Family::A);
    CHECK(j.rank == 2);
    CHECK(j.d == 3);
    CHECK(j.black == std::vector<int>{1});
    CHECK(j.xi_ke);
    CHECK(j.checks == known_checks());
    CHECK(j.samples == 10);
    CHECK(j.trunc == 200);
    CHECK(j.seed == 0);
}

TEST_CASE("group tokens map to the four families") {
    CHECK(parse_config(wrap("{\"group\": \"B3\", \"black\": [1]}")).jobs[0].d == 3);
    CHECK(parse_config(wrap("{\"group\": \"C2\", \"black\": [2]}")).jobs[0].family == Family::C);
    CHECK(parse_config(wrap("{\"group\": \"D4\", \"black\": [1]}")).jobs[0].family == Family::D);
    CHECK(parse_config(wrap("{\"group\": \"A7\", \"black\": [3]}")).jobs[0].d == 8);
}

TEST_CASE("config errors carry the offending field path") {
    CHECK(parse_error("{\"nope\": 1}").find("unknown key 'nope'") != std::string::npos);
    CHECK(parse_error("[1,2]").find("top level") != std::string::npos);
    CHECK(parse_error(wrap("{\"group\": \"A2\"}")).find("black") != std::string::npos);

    std::string e = parse_error(wrap("{\"group\": \"A2\", \"black\": [1, 5]}"));
    CHECK(e.find("jobs[0]") != std::string::npos);
    CHECK(e.find("black") != std::string::npos);

    e = parse_error(wrap("{\"group\": \"E8\", \"black\": [1]}"));
    CHECK(e.find("group") != std::string::npos);

    e = parse_error(wrap("{\"group\": \"D1\", \"black\": [1]}"));
    CHECK(e.find("group") != std::string::npos);

    e = parse_error(wrap("{\"group\": \"A2\", \"black\": [2, 1]}"));
    CHECK(e.find("increasing") != std::string::npos);

    e = parse_error(wrap("{\"group\": \"A2\", \"black\": [1], \"xi\": [1, 2]}"));
    CHECK(e.find("xi") != std::string::npos);  // wrong length

    e = parse_error(wrap("{\"group\": \"A2\", \"black\": [1], \"checks\": [\"bogus\"]}"));
    CHECK(e.find("checks[0]") != std::string::npos);

    e = parse_error(wrap("{\"group\": \"A2\", \"black\": [1], \"seed\": -1}"));
    CHECK(e.find("seed") != std::string::npos);

    e = parse_error(wrap("{\"group\": \"A2\", \"black\": [1], \"samples\": 0}"));
    CHECK(e.find("samples") != std::string::npos);
}

TEST_CASE("explicit coefficient vectors parse as exact rationals") {
    RunConfig cfg =
        parse_config(wrap("{\"group\": \"A3\", \"black\": [1, 2], \"xi\": [2, \"3/2\"]}"));
    const JobConfig& j = cfg.jobs[0];
    CHECK_FALSE(j.xi_ke);
    REQUIRE(j.xi.size() == 2);
    CHECK(j.xi[0] == 2);
    CHECK(j.xi[1] == make_rat(3, 2));
    CHECK(parse_config(wrap("{\"group\": \"A3\", \"black\": [1], \"xi\": \"KE\"}"))
              .jobs[0]
              .xi_ke);
}

TEST_CASE("duplicate check names are rejected with their position") {
    std::string e = parse_error(
        wrap("{\"group\": \"A2\", \"black\": [1], \"checks\": [\"q\", \"roots\", \"q\"]}"));
    CHECK(e.find("checks[2]") != std::string::npos);
    CHECK(e.find("duplicate") != std::string::npos);
}

TEST_CASE("a full run of the projective line passes every check") {
    RunConfig cfg = parse_config(wrap("{\"group\": \"A1\", \"black\": [1], \"samples\": 3}"));
    Report rep = run(cfg);
    REQUIRE(rep.jobs.size() == 1);
    CHECK(rep.version == std::string(FLAGBERG_VERSION));
    CHECK(rep.all_passed());
    REQUIRE(rep.jobs[0].checks.size() == known_checks().size());
    for (const auto& c : rep.jobs[0].checks) {
        INFO(c.name << ": " << c.witness);
        CHECK(c.passed());
    }
    // spot-check frozen constants through the JSON surface
    nlohmann::ordered_json js = report_to_json(rep);
    const auto& checks = js["jobs"][0]["checks"];
    CHECK(checks["dims"]["constants"]["d"] ==
          nlohmann::ordered_json::array({"-1", "2"}));
    CHECK(checks["q"]["constants"]["c_KE"] == nlohmann::ordered_json::array({"2"}));
    CHECK(checks["kernel"]["constants"]["boundary_coef"] == "4/pi");
}

TEST_CASE("non-distinguished coefficients fail the curvature check and skip the kernel") {
    RunConfig cfg = parse_config(
        wrap("{\"group\": \"A2\", \"black\": [1, 2], \"xi\": [2, 1], "
             "\"checks\": [\"diastasis\", \"einstein\", \"kernel\"], \"samples\": 2}"));
    Report rep = run(cfg);
    REQUIRE(rep.jobs.size() == 1);
    const auto& cs = rep.jobs[0].checks;
    REQUIRE(cs.size() == 3);
    CHECK(cs[0].name == "diastasis");
    CHECK(cs[0].passed());
    CHECK(cs[1].name == "einstein");
    CHECK(cs[1].failed());
    CHECK(cs[1].witness.find("curvature defect") != std::string::npos);
    CHECK(cs[2].name == "kernel");
    CHECK(cs[2].status == "skipped");
    CHECK(cs[2].witness == "prerequisite failed");
    CHECK_FALSE(rep.all_passed());
}

TEST_CASE("kernel without an explicit curvature check still verifies the coefficients") {
    RunConfig cfg = parse_config(
        wrap("{\"group\": \"A1\", \"black\": [1], \"xi\": [3], "
             "\"checks\": [\"kernel\"], \"samples\": 1}"));
    Report rep = run(cfg);
    REQUIRE(rep.jobs[0].checks.size() == 1);
    CHECK(rep.jobs[0].checks[0].failed());
    CHECK(rep.jobs[0].checks[0].witness.find("Einstein") != std::string::npos);
}

TEST_CASE("checks run in canonical order regardless of request order") {
    RunConfig cfg = parse_config(
        wrap("{\"group\": \"A1\", \"black\": [1], \"checks\": [\"dims\", \"roots\"]}"));
    Report rep = run(cfg);
    REQUIRE(rep.jobs[0].checks.size() == 2);
    CHECK(rep.jobs[0].checks[0].name == "roots");
    CHECK(rep.jobs[0].checks[1].name == "dims");
}

TEST_CASE("an empty job list yields an empty passing report") {
    Report rep = run(parse_config("{\"jobs\": []}"));
    CHECK(rep.jobs.empty());
    CHECK(rep.all_passed());
    CHECK(emit_json(rep).find("\"jobs\": []") != std::string::npos);
}

TEST_CASE("JSON emission is deterministic and round-trips") {
    RunConfig cfg = parse_config(
        wrap("{\"group\": \"A1\", \"black\": [1], \"samples\": 2, \"seed\": 7}") + "");
    Report r1 = run(cfg);
    Report r2 = run(cfg);
    std::string s1 = emit_json(r1), s2 = emit_json(r2);
    CHECK(s1 == s2);
    CHECK(s1.back() == '\n');

    Report back = parse_report(s1);
    REQUIRE(back.jobs.size() == r1.jobs.size());
    CHECK(back.version == r1.version);
    for (std::size_t i = 0; i < back.jobs.size(); ++i) {
        REQUIRE(back.jobs[i].checks.size() == r1.jobs[i].checks.size());
        for (std::size_t k = 0; k < back.jobs[i].checks.size(); ++k) {
            CHECK(back.jobs[i].checks[k].name == r1.jobs[i].checks[k].name);
            CHECK(back.jobs[i].checks[k].status == r1.jobs[i].checks[k].status);
        }
    }
    // timing fields are zeroed unless explicitly requested
    CHECK(s1.find("\"ms\": 0") != std::string::npos);
    nlohmann::ordered_json js = nlohmann::ordered_json::parse(emit_json(r1, true));
    long total_ms = 0;
    for (const auto& [name, c] : js["jobs"][0]["checks"].items())
        total_ms += c["ms"].get<long>();
    CHECK(total_ms >= 0);
}

TEST_CASE("table output carries one row per check and a verdict") {
    RunConfig cfg = parse_config(
        wrap("{\"group\": \"A1\", \"black\": [1], \"checks\": [\"roots\", \"q\"]}"));
    Report rep = run(cfg);
    std::string tab = emit_table(rep);
    CHECK(tab.find("roots") != std::string::npos);
    CHECK(tab.find("pass") != std::string::npos);
    CHECK(tab.find("A1") != std::string::npos);
    CHECK(tab.find("result: all non-skipped checks passed") != std::string::npos);

    // failing table ends with the failure verdict
    RunConfig bad = parse_config(
        wrap("{\"group\": \"A1\", \"black\": [1], \"xi\": [1], \"checks\": [\"einstein\"], "
             "\"samples\": 1}"));
    std::string tab2 = emit_table(run(bad));
    CHECK(tab2.find("result: FAILURES present") != std::string::npos);
}

TEST_CASE("thread budget respects the environment override") {
    setenv("FLAGBERG_THREADS", "3", 1);
    CHECK(thread_budget(8) == 3u);
    CHECK(thread_budget(2) == 2u);  // never more threads than jobs
    setenv("FLAGBERG_THREADS", "junk", 1);
    CHECK(thread_budget(1) == 1u);
    unsetenv("FLAGBERG_THREADS");
    CHECK(thread_budget(0) == 1u);
}

TEST_CASE("multi-job runs keep job order and ids stable under threading") {
    setenv("FLAGBERG_THREADS", "4", 1);
    RunConfig cfg = parse_config(
        "{\"jobs\": ["
        "{\"group\": \"A1\", \"black\": [1], \"checks\": [\"roots\"]},"
        "{\"group\": \"B2\", \"black\": [1], \"checks\": [\"roots\"]},"
        "{\"group\": \"C2\", \"black\": [2], \"checks\": [\"roots\"]}]}");
    Report rep = run(cfg);
    unsetenv("FLAGBERG_THREADS");
    REQUIRE(rep.jobs.size() == 3);
    CHECK(rep.jobs[0].group == "A1");
    CHECK(rep.jobs[1].group == "B2");
    CHECK(rep.jobs[2].group == "C2");
    for (int i = 0; i < 3; ++i) CHECK(rep.jobs[static_cast<std::size_t>(i)].id == i);
    CHECK(rep.all_passed());
}
