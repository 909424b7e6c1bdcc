// Command-line front end: `tyb check ...` runs a verification suite from a
// JSON config or from flags, `tyb families list` prints the supported
// builders and checkers.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tyb/suite.hpp"

namespace {

tyb::cplx parse_complex_flag(const std::string& text) {
    // Accepts "2.0", "0.6+0.3i", "0.6-0.3i".
    std::size_t pos = text.find_first_of("+-", 1);
    while (pos != std::string::npos && (text[pos - 1] == 'e' || text[pos - 1] == 'E'))
        pos = text.find_first_of("+-", pos + 1);
    if (pos == std::string::npos || text.back() != 'i')
        return tyb::cplx(std::stod(text), 0.0);
    const double re = std::stod(text.substr(0, pos));
    const double im = std::stod(text.substr(pos, text.size() - pos - 1));
    return tyb::cplx(re, im);
}

nlohmann::json complex_to_json(tyb::cplx z) {
    if (z.imag() == 0.0) return nlohmann::json(z.real());
    return nlohmann::json::array({z.real(), z.imag()});
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"twisted Yang-Baxter R-matrix verification suite"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    // check
    CLI::App* check = app.add_subcommand("check", "run a verification suite");
    check->set_help_flag("--help", "print help");
    std::string config_path, group = "glq", gauge = "unitary", b0 = "canonical", q_text = "2.0";
    std::string out_path, checks_csv;
    int n = 2, k = 0, count = 20;
    double h = 0.1, tol = 1e-9, scale = 1.0;
    std::uint64_t seed = 1;
    check->add_option("--config", config_path, "JSON config file (overrides other flags)");
    check->add_option("--group", group, "glq | slq | slq_super");
    check->add_option("--n", n, "local dimension N");
    check->add_option("--k", k, "even subspace dimension K (slq_super)");
    check->add_option("--q", q_text, "deformation parameter, e.g. 2.0 or 0.6+0.3i");
    check->add_option("--h", h, "Planck constant");
    check->add_option("--seed", seed, "momentum seed");
    check->add_option("--count", count, "number of random momenta");
    check->add_option("--scale", scale, "momentum scale");
    check->add_option("--gauge", gauge, "unitary | upper_triangular");
    check->add_option("--b0", b0, "canonical | beta:v1,v2,... (N real values)");
    check->add_option("--checks", checks_csv, "comma-separated checker names (default all)");
    check->add_option("--tol", tol, "relative tolerance");
    check->add_option("--out", out_path, "write the JSON report here");

    // families
    CLI::App* families = app.add_subcommand("families", "describe supported objects");
    std::string families_what = "list";
    families->add_option("what", families_what, "list")->required();

    CLI11_PARSE(app, argc, argv);

    if (families->parsed()) {
        if (families_what != "list") {
            std::fprintf(stderr, "unknown families subcommand '%s'\n", families_what.c_str());
            return 2;
        }
        std::printf("builders:\n");
        for (const std::string& b : tyb::known_builders()) std::printf("  %s\n", b.c_str());
        std::printf("checkers:\n");
        for (const std::string& c : tyb::known_checks()) std::printf("  %s\n", c.c_str());
        return 0;
    }

    try {
        nlohmann::json doc;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) {
                std::fprintf(stderr, "config error: cannot open '%s'\n", config_path.c_str());
                return 2;
            }
            std::stringstream ss;
            ss << in.rdbuf();
            doc = nlohmann::json::parse(ss.str());
        } else {
            doc["group"] = group;
            doc["N"] = n;
            if (group == "slq_super") doc["K"] = k;
            doc["q"] = complex_to_json(parse_complex_flag(q_text));
            doc["h"] = h;
            doc["gauge"] = gauge;
            if (b0.rfind("beta:", 0) == 0) {
                nlohmann::json beta = nlohmann::json::array();
                std::stringstream ss(b0.substr(5));
                std::string tok;
                while (std::getline(ss, tok, ',')) beta.push_back(std::stod(tok));
                doc["b0"] = nlohmann::json{{"beta", beta}};
            } else {
                doc["b0"] = b0;
            }
            doc["momenta"] = nlohmann::json{{"seed", seed}, {"count", count}, {"scale", scale}};
            if (!checks_csv.empty()) {
                nlohmann::json arr = nlohmann::json::array();
                std::stringstream ss(checks_csv);
                std::string tok;
                while (std::getline(ss, tok, ',')) arr.push_back(tok);
                doc["checks"] = arr;
            }
            doc["tolerance"] = tol;
            if (!out_path.empty()) doc["output"] = out_path;
        }

        const tyb::RunConfig cfg = tyb::parse_config(doc);
        const tyb::SuiteReport rep = tyb::run_suite(cfg);
        std::fputs(tyb::render_table(rep).c_str(), stdout);
        if (!cfg.output.empty()) {
            std::ofstream out(cfg.output);
            if (!out) {
                std::fprintf(stderr, "error: cannot write report to '%s'\n", cfg.output.c_str());
                return 2;
            }
            out << tyb::report_to_json(rep).dump(2) << "\n";
        }
        return tyb::suite_exit_code(rep);
    } catch (const tyb::ConfigError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
