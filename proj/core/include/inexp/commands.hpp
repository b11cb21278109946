#ifndef INEXP_COMMANDS_HPP
#define INEXP_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "inexp/ideal_file.hpp"
#include "inexp/report.hpp"

namespace inexp::cli {

/// Output of one CLI command: the full JSON report, the process exit code
/// (0 ok, 2 falsified mathematical assertion; input errors throw and become
/// exit 1), and CSV rows for commands that have a tabular form.
struct CommandResult {
    Json report;
    int exit_code = 0;
    std::optional<std::string> csv;
};

struct CommonOptions {
    std::optional<std::uint64_t> seed; // --seed; overrides file seed and INEXP_SEED
    unsigned threads = 0;              // 0 = machine parallelism
};

/// --seed flag, then the file's seed field, then INEXP_SEED, then 0.
std::uint64_t resolve_seed(const CommonOptions& common,
                           const std::optional<std::uint64_t>& file_seed);

CommandResult run_diagram(const IdealFile& file, const CommonOptions& common, bool trace);

CommandResult run_hs(const IdealFile& file, const CommonOptions& common, std::uint64_t eta_max,
                     bool oracle);

CommandResult run_mult(const IdealFile& file, const CommonOptions& common,
                       std::optional<std::size_t> k_flag);

CommandResult run_jet_sweep(const IdealFile& file, const CommonOptions& common,
                            std::optional<std::size_t> k_flag, std::uint64_t mu_min,
                            std::uint64_t mu_max, std::optional<unsigned> trials);

CommandResult run_check_regseq(const IdealFile& file, const CommonOptions& common,
                               std::optional<std::size_t> k_flag);

/// Rebuilds the reference two-generator family whose jet ideals acquire the
/// transient vertex (1, mu+1), and checks its presence at mu and absence at
/// later truncation orders.
CommandResult run_repro_ex55(const CommonOptions& common, std::uint64_t mu);

} // namespace inexp::cli

#endif
