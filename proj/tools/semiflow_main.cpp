#include "semiflow/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

semiflow::OutputFormat parse_format(const std::string& f) {
    if (f == "json") return semiflow::OutputFormat::json;
    if (f == "csv") return semiflow::OutputFormat::csv;
    if (f == "human") return semiflow::OutputFormat::human;
    throw CLI::ValidationError("--format must be human, json, or csv");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of sensitivity properties of two piecewise-linear "
                 "systems: the tent map under the one-point monoid extension, and the "
                 "two-axis block-space cascade"};
    app.require_subcommand(1);

    std::string epsilon = "1/2";
    std::uint64_t horizon = 272153;
    std::uint64_t k_max = 3;
    bool strict = true;
    bool allow_bounded = false;
    bool no_timestamp = false;
    std::string format = "human";
    std::string out;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--epsilon", epsilon, "threshold as a rational p/q (decimals rejected)");
        cmd->add_option("--horizon", horizon, "largest orbit index examined exactly");
        cmd->add_option("--kmax", k_max, "windows certified symbolically");
        cmd->add_flag("--strict,!--no-strict", strict, "use diam > eps (default) vs diam >= eps");
        cmd->add_option("--format", format, "human, json, or csv");
        cmd->add_option("--out", out, "write the artifact to this path");
        cmd->add_flag("--allow-bounded", allow_bounded,
                      "treat bounded-evidence verdicts as success");
        cmd->add_flag("--no-timestamp", no_timestamp, "omit the timestamp for byte-stable output");
    };

    auto* verify = app.add_subcommand("verify", "run a claim verifier and emit its report");
    std::string verify_target;
    verify->add_option("target", verify_target, "example1 or example2")->required();
    add_common(verify);

    auto* series = app.add_subcommand("series", "emit exact orbit diameters for a seed");
    std::string series_target, seed;
    std::uint64_t from = 0, to = 32;
    series->add_option("target", series_target, "example1, example2-X, or example2-Y")->required();
    series->add_option("--seed", seed, "seed interval \"[p/q, r/s]\"");
    series->add_option("--from", from, "first index");
    series->add_option("--to", to, "last index");
    add_common(series);

    auto* classify = app.add_subcommand("classify", "classify a finitely-described subset");
    std::string subset;
    classify->add_option("--subset", subset,
                         "\"ambient=G|N; finite={..}; T=..; p=..; R={..}; inf=yes|no\"")
        ->required();
    add_common(classify);

    auto* schedule = app.add_subcommand("schedule", "inspect growth terms and block geometry");
    std::uint64_t growth_n = 3;
    bool growth_given = false;
    std::uint32_t block_n = 0;
    bool block_given = false;
    std::string space = "X";
    schedule->add_option("--n", growth_n, "growth index")->each([&](const std::string&) {
        growth_given = true;
    });
    schedule->add_option("--block", block_n, "block descriptor to print")->each(
        [&](const std::string&) { block_given = true; });
    schedule->add_option("--space", space, "X or Y (with --block)");
    add_common(schedule);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return semiflow::exit_usage;
    }

    semiflow::RunConfig cfg;
    try {
        cfg.epsilon = semiflow::Rational::parse(epsilon);
        cfg.horizon = horizon;
        cfg.k_max = k_max;
        cfg.strict = strict;
        cfg.allow_bounded = allow_bounded;
        cfg.no_timestamp = no_timestamp;
        cfg.format = parse_format(format);
        if (!out.empty()) cfg.output_path = out;

        if (verify->parsed()) {
            cfg.command = semiflow::Command::verify;
            cfg.target = verify_target;
        } else if (series->parsed()) {
            cfg.command = semiflow::Command::series;
            cfg.target = series_target;
            if (!seed.empty()) cfg.seed = seed;
            cfg.from = from;
            cfg.to = to;
        } else if (classify->parsed()) {
            cfg.command = semiflow::Command::classify;
            cfg.subset_spec = subset;
        } else {
            cfg.command = semiflow::Command::schedule;
            if (growth_given) cfg.growth_index = growth_n;
            if (block_given) cfg.block = block_n;
            cfg.space = space;
        }
    } catch (const std::exception& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return semiflow::exit_usage;
    }

    return semiflow::run_command(cfg);
}
