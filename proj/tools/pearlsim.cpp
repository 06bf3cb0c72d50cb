// Command-line front end: single runs, power sweeps, trace generation, and
// report comparison for the intermittent-computing simulator.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "pearlsim/engine.hpp"

using namespace pearlsim;

namespace {

PolicyKind parse_policy(const std::string& s) {
    if (s == "pearl") return PolicyKind::pearl;
    if (s == "adamica") return PolicyKind::adamica;
    if (s == "rockclimb") return PolicyKind::rockclimb;
    throw ConfigError("unknown policy '" + s + "' (pearl, adamica, rockclimb)");
}

ModeSetting parse_mode(const std::string& s) {
    if (s == "1c") return ModeSetting::fixed_1c;
    if (s == "2c") return ModeSetting::fixed_2c;
    if (s == "adaptive") return ModeSetting::adaptive;
    throw ConfigError("unknown mode '" + s + "' (1c, 2c, adaptive)");
}

// "1..100" expands to the inclusive range; otherwise comma-separated values.
std::vector<std::uint64_t> parse_seeds(const std::string& s) {
    std::vector<std::uint64_t> seeds;
    const auto dots = s.find("..");
    if (dots != std::string::npos) {
        const std::uint64_t lo = std::stoull(s.substr(0, dots));
        const std::uint64_t hi = std::stoull(s.substr(dots + 2));
        if (hi < lo) throw ConfigError("seed range is inverted");
        for (std::uint64_t v = lo; v <= hi; ++v) seeds.push_back(v);
        return seeds;
    }
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) seeds.push_back(std::stoull(item));
    if (seeds.empty()) throw ConfigError("no seeds given");
    return seeds;
}

struct RunSpec {
    SimulationConfig cfg;
    PowerTrace trace;
};

int cmd_simulate(CLI::App& app) {
    std::string config_path, policy = "pearl", mode = "adaptive";
    std::string trace_path, out_path = "report.json", events_path, workload_dump;
    double power_mw = -1.0;
    std::optional<std::uint64_t> seed;
    bool with_phat = false;

    app.add_option("--config", config_path, "JSON config file (defaults used when absent)");
    app.add_option("--policy", policy, "pearl | adamica | rockclimb");
    app.add_option("--mode", mode, "1c | 2c | adaptive");
    app.add_option("--power", power_mw, "constant ambient power in mW");
    app.add_option("--trace", trace_path, "ambient power trace file");
    app.add_option("--seed", seed, "workload seed override");
    app.add_option("--out", out_path, "report JSON path");
    app.add_option("--events", events_path, "also write the event log CSV here");
    app.add_option("--dump-workload", workload_dump, "write the generated block list here");
    app.add_flag("--phat", with_phat, "include the prediction trajectory in the report");

    app.callback([&]() {
        if (!trace_path.empty() && power_mw >= 0.0)
            throw ConfigError("--power and --trace are mutually exclusive");
        SimulationConfig cfg =
            config_path.empty() ? default_config() : load_config(config_path);
        cfg.policy.kind = parse_policy(policy);
        cfg.policy.mode = parse_mode(mode);
        if (seed) cfg.seed = *seed;
        cfg.collect_event_log = !events_path.empty();
        cfg.collect_p_hat_trajectory = with_phat;

        PowerTrace trace;
        if (!trace_path.empty())
            trace = load_trace(trace_path);
        else
            trace = constant_trace((power_mw >= 0.0 ? power_mw : 5.0) * 1e-3);

        validate(cfg);
        auto report = run_simulation(cfg, trace);
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
        out << report_to_json(report) << '\n';
        if (!events_path.empty()) write_event_log_csv(report, events_path);
        if (!workload_dump.empty()) {
            auto w = generate_workload(cfg.seed, cfg.workload.total_instructions,
                                       cfg.workload.parallel_fraction,
                                       cfg.workload.mean_block_size, cfg.instruction_cost(),
                                       cfg.workload.basis);
            dump_workload(w, workload_dump);
        }
        std::cout << "wrote " << out_path << " (" << report.policy << " "
                  << report.mode_setting << ", " << report.instructions_completed
                  << " instructions in " << report.wall_clock_s * 1e3 << " ms"
                  << (report.truncated ? ", truncated" : "") << ")\n";
    });
    return 0;
}

int cmd_sweep(CLI::App& app) {
    std::string config_path, out_path = "sweep.csv";
    std::vector<double> powers_mw;
    std::vector<std::string> policies, modes;
    std::string seeds_spec = "42";
    std::string trace_path;
    unsigned jobs = 1;

    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--powers", powers_mw, "constant power grid in mW")->delimiter(',');
    app.add_option("--trace", trace_path, "trace file (replaces the power grid)");
    app.add_option("--policies", policies, "policies to run")->delimiter(',')->required();
    app.add_option("--modes", modes, "modes to run")->delimiter(',')->required();
    app.add_option("--seeds", seeds_spec, "seed list '1,2,3' or range '1..100'");
    app.add_option("--jobs", jobs, "concurrent runs");
    app.add_option("--out", out_path, "output CSV path");

    app.callback([&]() {
        if (powers_mw.empty() && trace_path.empty())
            throw ConfigError("give --powers or --trace");
        if (!powers_mw.empty() && !trace_path.empty())
            throw ConfigError("--powers and --trace are mutually exclusive");
        SimulationConfig base =
            config_path.empty() ? default_config() : load_config(config_path);
        const auto seeds = parse_seeds(seeds_spec);

        std::vector<PowerTrace> traces;
        if (!trace_path.empty())
            traces.push_back(load_trace(trace_path));
        else
            for (double mw : powers_mw) traces.push_back(constant_trace(mw * 1e-3));

        std::vector<RunSpec> runs;
        for (const auto& policy : policies) {
            for (const auto& mode : modes) {
                for (const auto& trace : traces) {
                    for (auto seed : seeds) {
                        RunSpec spec{base, trace};
                        spec.cfg.policy.kind = parse_policy(policy);
                        spec.cfg.policy.mode = parse_mode(mode);
                        spec.cfg.seed = seed;
                        validate(spec.cfg);
                        runs.push_back(std::move(spec));
                    }
                }
            }
        }

        std::vector<SimulationReport> reports(runs.size());
        if (jobs <= 1) {
            for (std::size_t i = 0; i < runs.size(); ++i)
                reports[i] = run_simulation(runs[i].cfg, runs[i].trace);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::future<void>> workers;
            for (unsigned w = 0; w < jobs; ++w) {
                workers.push_back(std::async(std::launch::async, [&]() {
                    for (;;) {
                        const std::size_t i = next.fetch_add(1);
                        if (i >= runs.size()) return;
                        reports[i] = run_simulation(runs[i].cfg, runs[i].trace);
                    }
                }));
            }
            for (auto& w : workers) w.get();
        }

        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
        out << report_csv_header() << '\n';
        for (const auto& r : reports) out << report_csv_row(r) << '\n';
        std::cout << "wrote " << out_path << " (" << reports.size() << " runs)\n";
    });
    return 0;
}

int cmd_gen_trace(CLI::App& app) {
    std::string kind, variant = "long", out_path = "trace.csv";
    double power_mw = 5.0, base_mw = 5.0, attenuated_mw = 0.5;
    double period_s = 15.0, hold_s = 5.0, total_s = 60.0;
    double peak_base_mw = 21.0, day_base_s = 35.0, step_s = 0.05;

    app.add_option("--kind", kind, "constant | daylight | rf-obstacle")->required();
    app.add_option("--power", power_mw, "constant power in mW");
    app.add_option("--variant", variant, "daylight variant: short | middle | long");
    app.add_option("--peak-base", peak_base_mw, "daylight base peak in mW");
    app.add_option("--day-base", day_base_s, "daylight base day length in s");
    app.add_option("--step", step_s, "daylight sampling step in s");
    app.add_option("--base", base_mw, "rf-obstacle clear power in mW");
    app.add_option("--attenuated", attenuated_mw, "rf-obstacle attenuated power in mW");
    app.add_option("--period", period_s, "rf-obstacle period in s");
    app.add_option("--hold", hold_s, "rf-obstacle hold (obstacle) duration in s");
    app.add_option("--total", total_s, "rf-obstacle total duration in s");
    app.add_option("--out", out_path, "output trace path");

    app.callback([&]() {
        PowerTrace t;
        if (kind == "constant") {
            t = constant_trace(power_mw * 1e-3);
        } else if (kind == "daylight") {
            DaylightKind k;
            if (variant == "short") k = DaylightKind::short_day;
            else if (variant == "middle") k = DaylightKind::middle_day;
            else if (variant == "long") k = DaylightKind::long_day;
            else throw ConfigError("unknown daylight variant '" + variant + "'");
            t = daylight_trace(k, peak_base_mw * 1e-3, day_base_s, step_s);
        } else if (kind == "rf-obstacle") {
            t = rf_obstacle_trace(base_mw * 1e-3, attenuated_mw * 1e-3, period_s, hold_s,
                                  total_s);
        } else {
            throw ConfigError("unknown trace kind '" + kind + "'");
        }
        save_trace(t, out_path);
        std::cout << "wrote " << out_path << " (" << t.segments.size() << " segments)\n";
    });
    return 0;
}

struct CompareRow {
    std::string label;
    double energy_mj = 0.0;
    double time_ms = 0.0;
    double throughput = 0.0;
    std::uint64_t checkpoints = 0;
    std::uint64_t seed = 0;
};

int cmd_compare(CLI::App& app) {
    std::vector<std::string> report_paths;
    std::string out_path;

    app.add_option("reports", report_paths, "two or more report JSON files");
    app.add_option("--out", out_path, "also write the ratio table as CSV");

    app.callback([&]() {
        if (report_paths.size() < 2)
            throw ConfigError("compare needs at least two reports");
        std::vector<CompareRow> rows;
        for (const auto& path : report_paths) {
            std::ifstream in(path);
            if (!in) throw std::runtime_error("cannot open " + path);
            std::stringstream ss;
            ss << in.rdbuf();
            auto r = report_from_json(ss.str());
            rows.push_back({r.policy + "/" + r.mode_setting, r.consumed_energy_j() * 1e3,
                            r.wall_clock_s * 1e3, r.throughput_ips, r.checkpoint_count,
                            r.seed});
        }
        bool seeds_differ = false;
        for (const auto& row : rows) seeds_differ |= row.seed != rows.front().seed;
        if (seeds_differ)
            std::cerr << "warning: reports use different workload seeds; "
                         "the comparison is flagged\n";

        std::ostringstream table;
        table << "label,energy_mj,time_ms,throughput,checkpoints,"
                 "energy_ratio,time_ratio,throughput_ratio,checkpoint_ratio\n";
        const auto& base = rows.front();
        auto ratio = [](double a, double b) { return b != 0.0 ? a / b : 0.0; };
        char buf[256];
        for (const auto& row : rows) {
            std::snprintf(buf, sizeof buf, "%s,%.6g,%.6g,%.6g,%llu,%.4g,%.4g,%.4g,%.4g\n",
                          row.label.c_str(), row.energy_mj, row.time_ms, row.throughput,
                          static_cast<unsigned long long>(row.checkpoints),
                          ratio(row.energy_mj, base.energy_mj),
                          ratio(row.time_ms, base.time_ms),
                          ratio(row.throughput, base.throughput),
                          ratio(double(row.checkpoints), double(base.checkpoints)));
            table << buf;
        }
        std::cout << table.str();
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out) throw std::runtime_error("cannot open " + out_path);
            out << table.str();
        }
    });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete-event simulator for batteryless multicore intermittent computing"};
    app.require_subcommand(1);

    auto* sim = app.add_subcommand("simulate", "run one simulation and write a JSON report");
    cmd_simulate(*sim);
    auto* sweep = app.add_subcommand("sweep", "run a policy/power/seed grid into a CSV");
    cmd_sweep(*sweep);
    auto* gen = app.add_subcommand("gen-trace", "generate an ambient power trace file");
    cmd_gen_trace(*gen);
    auto* cmp = app.add_subcommand("compare", "tabulate ratios between reports");
    cmd_compare(*cmp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
