#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "z3orb/suite.hpp"

using namespace z3orb;

int main(int argc, char** argv) {
    CLI::App app{"Exact verification driver for the Z3 orbifold computations"};
    std::string suite = "all", format, out, config_path, q_trunc, numeric_trunc;
    int max_weight = 0;
    double tolerance = 0;
    app.add_option("--suite", suite, "fock | quotient | characters-leech | characters-e6 | fusion | glue | all");
    app.add_option("--max-weight", max_weight, "weight cutoff for quotient checks (default 14)");
    app.add_option("--q-trunc", q_trunc, "q truncation for exact character suites (default 12)");
    app.add_option("--numeric-trunc", numeric_trunc, "q truncation for numeric transform checks (default 60)");
    app.add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out, "write the report to PATH instead of stdout");
    app.add_option("--tolerance", tolerance, "relative tolerance for numeric checks (default 1e-8)");
    app.add_option("--config", config_path, "JSON config file (default: $Z3ORB_CONFIG)");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    SuiteConfig cfg;
    try {
        if (config_path.empty())
            if (const char* env = std::getenv("Z3ORB_CONFIG")) config_path = env;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw ConfigError("cannot read config file " + config_path);
            nlohmann::json j;
            try {
                in >> j;
            } catch (const nlohmann::json::exception& e) {
                throw ConfigError(std::string("malformed config file: ") + e.what());
            }
            cfg = config_from_json(j, cfg);
        }
        if (app.count("--suite") || config_path.empty()) {
            auto s = parse_suite(suite);
            if (!s) throw ConfigError("unknown suite '" + suite + "'");
            cfg.suite = *s;
        }
        if (app.count("--max-weight")) cfg.max_weight = max_weight;
        if (!q_trunc.empty()) cfg.q_truncation = Rational::parse(q_trunc);
        if (!numeric_trunc.empty()) cfg.numeric_truncation = Rational::parse(numeric_trunc);
        if (!format.empty()) cfg.format = format == "json" ? Format::Json : Format::Text;
        if (!out.empty()) cfg.output_path = out;
        if (app.count("--tolerance")) cfg.tolerance = tolerance;
        cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    RunReport rep;
    try {
        rep = run_suite(cfg);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    const std::string text = emit_report(rep, cfg.format);
    if (cfg.output_path) {
        std::ofstream f(*cfg.output_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << *cfg.output_path << "\n";
            return 2;
        }
        f << text;
    } else {
        std::cout << text;
    }
    return rep.exit_code;
}
