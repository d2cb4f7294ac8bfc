#pragma once

#include "semiflow/report_io.hpp"

#include <optional>
#include <string>

namespace semiflow {

/// Exit-code contract, stable for CI use.
enum ExitCode : int {
    exit_ok = 0,
    exit_unverified = 2,  // refuted claims, or bounded evidence without --allow-bounded
    exit_usage = 64,
    exit_cap = 65,
    exit_io = 66,
};

enum class Command { verify, series, classify, schedule };
enum class OutputFormat { human, json, csv };

struct RunConfig {
    Command command = Command::verify;
    std::string target;  // example1 | example2 | system name | (unused for classify/schedule)

    Rational epsilon{1, 2};
    std::uint64_t horizon = 272153;
    std::uint64_t k_max = 3;
    bool strict = true;
    bool allow_bounded = false;
    bool no_timestamp = false;
    OutputFormat format = OutputFormat::human;
    std::optional<std::string> output_path;

    // series
    std::optional<std::string> seed;  // "[p/q, r/s]"
    std::uint64_t from = 0;
    std::uint64_t to = 32;

    // classify
    std::string subset_spec;

    // schedule
    std::optional<std::uint64_t> growth_index;
    std::optional<std::uint32_t> block;
    std::string space = "X";
};

/// Dispatches a parsed configuration, writes the requested artifact to the
/// output path (or stdout), and returns a process exit code.
int run_command(const RunConfig& cfg);

}  // namespace semiflow
