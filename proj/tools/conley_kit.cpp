// conley-kit: cellular homology, zig-zag connecting maps, and connection
// matrix search from JSON descriptions. Exit codes: 0 success, 1 usage or
// input error, 2 no admissible connection matrix, 3 variable budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "conley/connection_solver.hpp"
#include "conley/errors.hpp"
#include "conley/io.hpp"
#include "conley/scenarios.hpp"
#include "conley/zigzag.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNoAdmissible = 2;
constexpr int kExitBudget = 3;

int run_homology(const std::string& path, const std::string& format) {
    conley::CwComplex cw = conley::io::complex_from_json(conley::io::load_json_file(path));
    conley::HomologyData h = conley::homology(conley::from_cw(cw));
    if (format == "json")
        std::cout << conley::io::homology_json(h).dump(2) << "\n";
    else
        std::cout << conley::io::homology_text(h);
    return kExitOk;
}

int run_zigzag(const std::string& path, const std::string& format) {
    conley::ShortExactSequence s = conley::io::ses_from_json(conley::io::load_json_file(path));
    if (format == "json")
        std::cout << conley::io::zigzag_json(s).dump(2) << "\n";
    else
        std::cout << conley::io::zigzag_text(s);
    return kExitOk;
}

int run_connect(const std::string& path, const std::string& format, int max_vars, bool no_symmetry,
                bool list_admissible) {
    conley::Scenario scenario = conley::io::scenario_from_json(conley::io::load_json_file(path));
    conley::MorseValidation v = conley::validate(scenario.decomposition);
    if (!v.ok) {
        for (const std::string& p : v.problems) std::cerr << "error: " << p << "\n";
        return kExitUsage;
    }
    conley::SolverOptions options;
    options.max_vars = max_vars;
    options.use_symmetry = !no_symmetry;
    conley::SolverReport report = conley::solve(scenario.decomposition, scenario.constraints, options);

    if (format == "json")
        std::cout << conley::io::solver_report_json(scenario.decomposition, report, list_admissible)
                         .dump(2)
                  << "\n";
    else if (format == "dot")
        std::cout << conley::io::solver_report_dot(scenario.decomposition, report);
    else
        std::cout << conley::io::solver_report_text(scenario.decomposition, report, list_admissible);
    return report.consistent ? kExitOk : kExitNoAdmissible;
}

int run_scenario_gen(const std::string& name, std::optional<int> n, const std::string& out_path) {
    conley::Scenario scenario;
    if (name == "delay") {
        if (n) throw conley::ParseError("the delay scenario takes no --n parameter");
        scenario = conley::delay_scenario();
    } else if (name == "chafee-infante") {
        int levels = n.value_or(1);
        if (levels < 0) throw conley::ParseError("--n must be non-negative");
        scenario = conley::chafee_infante(levels);
    } else {
        throw conley::ParseError("unknown scenario '" + name + "' (expected delay or chafee-infante)");
    }
    std::string text = conley::io::scenario_to_json(scenario).dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw conley::ParseError("cannot write '" + out_path + "'");
        out << text;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conley index and connection matrix toolkit"};
    app.require_subcommand(1);

    std::string path, format = "text", out_path, scenario_name;
    int max_vars = 24;
    bool no_symmetry = false, list_admissible = false;
    std::optional<int> n;

    CLI::App* homology = app.add_subcommand("homology", "Betti numbers of a complex file");
    homology->add_option("file", path, "complex JSON file")->required();
    homology->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* zigzag = app.add_subcommand("zigzag", "connecting homomorphisms of a short exact sequence");
    zigzag->add_option("file", path, "short exact sequence JSON file")->required();
    zigzag->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    CLI::App* connect = app.add_subcommand("connect", "enumerate admissible connection matrices");
    connect->add_option("file", path, "scenario JSON file")->required();
    connect->add_option("--format", format, "text, json, or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    connect->add_option("--max-vars", max_vars, "budget on free matrix entries");
    connect->add_flag("--no-symmetry", no_symmetry, "ignore the scenario's symmetry pairs");
    connect->add_flag("--list-admissible", list_admissible, "print the admissible matrices");

    CLI::App* scenario = app.add_subcommand("scenario", "built-in scenario generators");
    CLI::App* gen = scenario->add_subcommand("gen", "write a scenario file");
    gen->add_option("name", scenario_name, "delay or chafee-infante")->required();
    gen->add_option("--n", n, "bifurcation count for chafee-infante");
    gen->add_option("-o,--output", out_path, "output file (stdout when omitted)");

    try {
        app.parse(argc, argv);
        if (homology->parsed()) return run_homology(path, format);
        if (zigzag->parsed()) return run_zigzag(path, format);
        if (connect->parsed()) return run_connect(path, format, max_vars, no_symmetry, list_admissible);
        if (scenario->parsed() && gen->parsed()) return run_scenario_gen(scenario_name, n, out_path);
        std::cerr << "error: missing subcommand\n";
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const conley::VariableBudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
