#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "batrel/appbat.hpp"
#include "batrel/bat.hpp"
#include "batrel/network.hpp"

namespace batrel::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 1,
    kInputError = 2,
    kCapability = 3,
};

enum class OutputFormat { table, csv };

/// Everything a subcommand needs, filled from the command line.
struct RunConfig {
    std::string subcommand;
    std::string network_path;
    std::optional<double> p;  // uniform override of the file's probabilities
    std::optional<int> min_ones;
    std::optional<int> max_failed;
    std::optional<double> delta_threshold;
    std::optional<double> time_limit_seconds;
    Direction direction = Direction::descending;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::table;
    int workers = 1;

    int exact_cap = 28;
    std::optional<int> ones;  // enumerate one level
    bool all = false;         // enumerate everything
    BatOrder order = BatOrder::forward;
    bool with_probability = false;
    std::string state;  // check

    int gen_nodes = 0;
    int gen_arcs = 0;
    bool gen_undirected = false;
    double gen_p = 0.9;
    std::string output_path;
};

int cmd_exact(const RunConfig& config, std::ostream& out);
int cmd_appbat(const RunConfig& config, std::ostream& out);
int cmd_enumerate(const RunConfig& config, std::ostream& out);
int cmd_check(const RunConfig& config, std::ostream& out);
int cmd_mcs(const RunConfig& config, std::ostream& out);
int cmd_gen(const RunConfig& config, std::ostream& out);

/// Parses `args` (without the program name), runs the subcommand and maps
/// errors to exit codes: 1 usage, 2 input, 3 capability.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace batrel::cli
