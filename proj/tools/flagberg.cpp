// Command-line front end: `flagberg run` executes a JSON config of check
// jobs, `flagberg describe` prints the root-space data of a single painted
// diagram.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "flagberg/flagberg.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string root_list(const std::vector<flagberg::RootVec>& roots) {
    std::string s;
    for (std::size_t i = 0; i < roots.size(); ++i) s += (i ? ", " : "") + roots[i].str();
    return s.empty() ? "(none)" : s;
}

void describe(const flagberg::JobConfig& jc) {
    using namespace flagberg;
    FlagManifold fm = build_flag(jc.family, jc.d, jc.black);
    KEData ke = ke_coeffs(fm);

    std::cout << "flag " << fm.name() << "  (complex dimension n = " << fm.n() << ")\n\n";
    std::cout << "simple roots:\n";
    for (int k = 1; k <= fm.rd.rank(); ++k) {
        bool is_black = false;
        for (int b : fm.black) is_black = is_black || b == k;
        std::cout << "  alpha_" << k << " = " << fm.rd.simple[k - 1].str()
                  << (is_black ? "   [black]" : "") << "\n";
    }
    std::cout << "\nR_K (roots of the isotropy part, " << fm.r_k.size() << "):\n  "
              << root_list(fm.r_k) << "\n";
    std::cout << "R_M (complementary roots, " << fm.r_m.size() << "):\n  " << root_list(fm.r_m)
              << "\n";
    std::cout << "Q (canonical positive choice, " << fm.q.size() << "):\n  " << root_list(fm.q)
              << "\n\n";
    std::cout << "fundamental weights of black nodes:\n";
    for (std::size_t j = 0; j < fm.black.size(); ++j) {
        auto w = fundamental_weight(fm.rd, fm.black[j]);
        std::cout << "  Lambda_" << fm.black[j] << " = (";
        for (std::size_t i = 0; i < w.size(); ++i) std::cout << (i ? ", " : "") << rat_str(w[i]);
        std::cout << ")\n";
    }
    std::cout << "\ndistinguished coefficients c = (";
    for (std::size_t j = 0; j < ke.coeffs.size(); ++j)
        std::cout << (j ? ", " : "") << rat_str(ke.coeffs[j]);
    std::cout << ")\nprincipal minor indices: ";
    auto idx = admissible_minor_indices(fm);
    for (std::size_t j = 0; j < idx.size(); ++j) std::cout << (j ? ", " : "") << idx[j];
    std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact geometry of flag-manifold disc bundles"};
    app.require_subcommand(1);

    auto* run_cmd = app.add_subcommand("run", "execute the checks listed in a JSON config");
    std::string config_path;
    std::string format = "json";
    std::string out_path;
    bool timings = false;
    run_cmd->add_option("--config", config_path, "path to the JSON run configuration")
        ->required();
    run_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    run_cmd->add_option("--out", out_path, "write the report here instead of stdout");
    run_cmd->add_flag("--timings", timings,
                      "include real wall times in JSON output (breaks byte reproducibility)");

    auto* desc_cmd =
        app.add_subcommand("describe", "print root and weight data for one painted diagram");
    std::string group;
    std::vector<int> black_nodes;
    desc_cmd->add_option("group", group, "group token, e.g. A2 or C3")->required();
    desc_cmd->add_option("--black", black_nodes, "comma-separated painted node indices")
        ->required()
        ->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) {
            flagberg::RunConfig cfg = flagberg::parse_config(read_file(config_path));
            flagberg::Report rep = flagberg::run(cfg);
            std::string text = format == "table" ? flagberg::emit_table(rep)
                                                 : flagberg::emit_json(rep, timings);
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                if (!f) throw std::runtime_error("cannot write " + out_path);
                f << text;
            } else {
                std::cout << text;
            }
            return rep.all_passed() ? 0 : 1;
        }
        flagberg::JobConfig jc;
        flagberg::parse_group_token(group, "group", jc);
        for (int b : black_nodes) {
            if (b < 1 || b > jc.rank)
                throw flagberg::ConfigError("--black: node " + std::to_string(b) +
                                            " outside 1.." + std::to_string(jc.rank));
            jc.black.push_back(b);
        }
        describe(jc);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
