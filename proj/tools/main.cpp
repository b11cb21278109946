#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "inexp/commands.hpp"
#include "inexp/version.hpp"

namespace {

using inexp::cli::CommandResult;
using inexp::cli::CommonOptions;

void write_output(const CommandResult& result, const std::optional<std::string>& csv_path) {
    std::cout << result.report.dump(2) << "\n";
    if (csv_path) {
        if (!result.csv) throw inexp::DomainError("this command has no CSV form");
        std::ofstream out(*csv_path, std::ios::binary);
        if (!out) throw inexp::DomainError("cannot write CSV file '" + *csv_path + "'");
        out << *result.csv;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"diagrams of initial exponents, Hilbert-Samuel functions and jet-sweep "
                 "determinacy checks for ideals of local rings"};
    app.set_version_flag("--version", inexp::kVersion);
    app.require_subcommand(1);

    CommonOptions common;
    std::optional<std::uint64_t> seed_flag;
    unsigned threads = 0;
    app.add_option("--seed", seed_flag, "seed for randomized normalization (overrides INEXP_SEED)");
    app.add_option("--threads", threads, "worker threads (default: machine parallelism)");

    std::string file_path;
    std::optional<std::string> csv_path;
    std::optional<std::size_t> k_flag;
    bool trace = false, oracle = false;
    std::uint64_t eta_max = 8, mu_min = 0, mu_max = 0, mu = 5;
    std::optional<unsigned> trials;

    auto* cmd_diagram = app.add_subcommand("diagram", "standard basis and diagram vertices");
    cmd_diagram->add_option("file", file_path, "ideal file (JSON)")->required();
    cmd_diagram->add_flag("--trace", trace, "include reduction-audit records");

    auto* cmd_hs = app.add_subcommand("hs", "Hilbert-Samuel table and eventual polynomial");
    cmd_hs->add_option("file", file_path, "ideal file (JSON)")->required();
    cmd_hs->add_option("--eta-max", eta_max, "tabulate H(eta) for eta = 0..E")->required();
    cmd_hs->add_flag("--oracle", oracle, "cross-check against the linear-algebra oracle");
    cmd_hs->add_option("--csv", csv_path, "also write eta,H rows to this path");

    auto* cmd_mult = app.add_subcommand("mult", "three-route multiplicity consistency report");
    cmd_mult->add_option("file", file_path, "ideal file (JSON)")->required();
    cmd_mult->add_option("--k", k_flag, "codimension (defaults to the file's k)");

    auto* cmd_sweep = app.add_subcommand("jet-sweep", "diagram stabilization across jet orders");
    cmd_sweep->add_option("file", file_path, "ideal file (JSON)")->required();
    cmd_sweep->add_option("--k", k_flag, "codimension for certification");
    cmd_sweep->add_option("--mu-min", mu_min, "first truncation order")->required();
    cmd_sweep->add_option("--mu-max", mu_max, "last truncation order")->required();
    cmd_sweep->add_option("--trials", trials, "perturbation trials at the certified bound");
    cmd_sweep->add_option("--csv", csv_path, "also write mu,stabilized,certified_mu0 rows");

    auto* cmd_regseq = app.add_subcommand("check-regseq", "regular-sequence certificate");
    cmd_regseq->add_option("file", file_path, "ideal file (JSON)")->required();
    cmd_regseq->add_option("--k", k_flag, "codimension (defaults to the file's k)");

    auto* cmd_repro = app.add_subcommand("repro", "rebuild reference examples");
    std::string example;
    cmd_repro->add_option("example", example, "example name (ex-5-5)")->required();
    cmd_repro->add_option("--mu", mu, "truncation order")->required();

    CLI11_PARSE(app, argc, argv);
    common.seed = seed_flag;
    common.threads = threads;

    try {
        CommandResult result;
        if (*cmd_diagram) {
            result = inexp::cli::run_diagram(inexp::load_ideal_file(file_path), common, trace);
        } else if (*cmd_hs) {
            result = inexp::cli::run_hs(inexp::load_ideal_file(file_path), common, eta_max, oracle);
        } else if (*cmd_mult) {
            result = inexp::cli::run_mult(inexp::load_ideal_file(file_path), common, k_flag);
        } else if (*cmd_sweep) {
            result = inexp::cli::run_jet_sweep(inexp::load_ideal_file(file_path), common, k_flag,
                                               mu_min, mu_max, trials);
        } else if (*cmd_regseq) {
            result = inexp::cli::run_check_regseq(inexp::load_ideal_file(file_path), common, k_flag);
        } else if (*cmd_repro) {
            if (example != "ex-5-5")
                throw inexp::DomainError("unknown example '" + example + "' (try ex-5-5)");
            result = inexp::cli::run_repro_ex55(common, mu);
        }
        write_output(result, csv_path);
        return result.exit_code;
    } catch (const inexp::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const inexp::DomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const inexp::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
