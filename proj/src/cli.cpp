#include "semiflow/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>

namespace semiflow {

namespace {

std::string now_utc() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

int with_output(const std::optional<std::string>& path, const std::function<void(std::ostream&)>& fn) {
    if (!path) {
        fn(std::cout);
        return exit_ok;
    }
    std::ofstream os(*path, std::ios::binary);
    if (!os) {
        std::cerr << "cannot open output file: " << *path << "\n";
        return exit_io;
    }
    fn(os);
    os.flush();
    if (!os) {
        std::cerr << "write failed: " << *path << "\n";
        return exit_io;
    }
    return exit_ok;
}

int emit_report(const RunConfig& cfg, const SensitivityReport& rep) {
    std::string stamp = cfg.no_timestamp ? "" : now_utc();
    int io = with_output(cfg.output_path, [&](std::ostream& os) {
        switch (cfg.format) {
            case OutputFormat::json: os << to_json(rep, stamp).dump(2) << '\n'; break;
            case OutputFormat::csv: write_report_csv(os, rep); break;
            case OutputFormat::human: write_report_human(os, rep, stamp); break;
        }
    });
    if (io != exit_ok) return io;
    if (rep.any_refuted()) return exit_unverified;
    if (!rep.all_verified() && !cfg.allow_bounded) return exit_unverified;
    return exit_ok;
}

int run_verify(const RunConfig& cfg) {
    if (cfg.target == "example1") {
        Example1Options opt;
        opt.epsilon = cfg.epsilon;
        opt.horizon = cfg.horizon;
        opt.strict = cfg.strict;
        return emit_report(cfg, verify_example1(opt));
    }
    if (cfg.target == "example2") {
        Example2Options opt;
        opt.epsilon = cfg.epsilon;
        opt.horizon = cfg.horizon;
        opt.k_max = cfg.k_max;
        opt.strict = cfg.strict;
        auto s = GrowthSchedule::paper();
        return emit_report(cfg, verify_example2(s, opt));
    }
    std::cerr << "verify target must be example1 or example2\n";
    return exit_usage;
}

int run_series(const RunConfig& cfg) {
    System sys = system_parse(cfg.target);
    ClosedInterval seed = cfg.seed ? ClosedInterval::parse(*cfg.seed)
                                   : (sys == System::example1
                                          ? ClosedInterval(Rational(0), Rational(1))
                                          : ClosedInterval(Rational(1, 2), Rational(3, 2)));
    auto s = GrowthSchedule::paper();
    DiamSeries series =
        diam_series(sys, s, seed, cfg.from, cfg.to, Execution::parallel, cfg.horizon);
    return with_output(cfg.output_path, [&](std::ostream& os) {
        if (cfg.format == OutputFormat::json) os << to_json(series).dump(2) << '\n';
        else write_series_csv(os, series);
    });
}

int run_classify(const RunConfig& cfg) {
    SubsetDesc desc = SubsetDesc::parse(cfg.subset_spec);
    auto verdict = subset_classify(desc);
    return with_output(cfg.output_path, [&](std::ostream& os) {
        if (cfg.format == OutputFormat::human) {
            auto mark = [](bool b) { return b ? "yes" : "no"; };
            os << desc.str() << '\n'
               << "  compact:          " << mark(verdict.compact) << '\n'
               << "  syndetic:         " << mark(verdict.syndetic) << '\n'
               << "  thick:            " << mark(verdict.thick) << '\n'
               << "  thickly syndetic: " << mark(verdict.thickly_syndetic) << '\n'
               << "  periodic:         " << mark(verdict.periodic) << '\n'
               << "  thickly periodic: " << mark(verdict.thickly_periodic) << '\n';
        } else {
            os << to_json(verdict, desc).dump(2) << '\n';
        }
    });
}

int run_schedule(const RunConfig& cfg) {
    auto s = GrowthSchedule::paper();
    return with_output(cfg.output_path, [&](std::ostream& os) {
        if (cfg.block) {
            Space sp = cfg.space == "Y" ? Space::Y : Space::X;
            BlockDescriptor d = block_descriptor(s, sp, *cfg.block);
            os << to_json(d).dump(2) << '\n';
            return;
        }
        std::uint64_t n = cfg.growth_index.value_or(3);
        auto [ln, sum] = s.growth_values(n);
        if (cfg.format == OutputFormat::json) {
            ordered_json j;
            j["n"] = n;
            j["L"] = ln.get_str();
            j["prefix_sum"] = sum.get_str();
            os << j.dump(2) << '\n';
        } else {
            os << "L_" << n << " = " << ln.get_str() << '\n'
               << "prefix sum through " << n << " = " << sum.get_str() << '\n';
        }
    });
}

}  // namespace

int run_command(const RunConfig& cfg) {
    try {
        switch (cfg.command) {
            case Command::verify: return run_verify(cfg);
            case Command::series: return run_series(cfg);
            case Command::classify: return run_classify(cfg);
            case Command::schedule: return run_schedule(cfg);
        }
        return exit_usage;
    } catch (const CapError& e) {
        std::cerr << "cap: " << e.what() << "\n";
        return exit_cap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "domain: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io: " << e.what() << "\n";
        return exit_io;
    }
}

}  // namespace semiflow
