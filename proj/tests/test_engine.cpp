#include "doctest.h"

#include <cmath>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "pearlsim/engine.hpp"

using namespace pearlsim;

namespace {

SimulationConfig small_config(PolicyKind kind, ModeSetting mode, std::uint64_t instr = 50000) {
    auto cfg = default_config();
    cfg.policy = {kind, mode};
    cfg.workload.total_instructions = instr;
    cfg.workload.mean_block_size = 5000;
    cfg.collect_event_log = true;
    cfg.collect_p_hat_trajectory = true;
    return cfg;
}

void check_ledger(const SimulationReport& r) {
    const double scale = std::max({1.0e-3, r.ledger.harvested_j, r.ledger.consumed_j});
    CHECK(std::abs(r.ledger.imbalance_j()) <= 1e-9 * scale);
    CHECK(r.ledger.consumed_j == doctest::Approx(r.consumed_energy_j()).epsilon(1e-9));
    CHECK(r.total_time_s() == doctest::Approx(r.wall_clock_s).epsilon(1e-9));
}

}  // namespace

TEST_CASE("saturating power runs to completion with no overhead") {
    auto cfg = small_config(PolicyKind::pearl, ModeSetting::fixed_1c);
    auto r = run_simulation(cfg, constant_trace(25e-3));
    CHECK_FALSE(r.truncated);
    CHECK(r.instructions_completed == 50000);
    CHECK(r.checkpoint_count == 0);
    CHECK(r.restore_count == 0);
    CHECK(r.hit_medium_count == 0);
    CHECK(r.off_charging_time_s == 0.0);
    CHECK(r.wall_clock_s == doctest::Approx(0.5));  // 50000 x 10us
    CHECK(compute_throughput(r) == doctest::Approx(1e5));
    check_ledger(r);
}

TEST_CASE("dual-core completes a parallel workload twice as fast at saturation") {
    auto c1 = small_config(PolicyKind::pearl, ModeSetting::fixed_1c);
    auto c2 = small_config(PolicyKind::pearl, ModeSetting::fixed_2c);
    auto r1 = run_simulation(c1, constant_trace(30e-3));
    auto r2 = run_simulation(c2, constant_trace(30e-3));
    CHECK_FALSE(r2.truncated);
    CHECK(r2.instructions_2c == 50000);
    const double ratio = r1.wall_clock_s / r2.wall_clock_s;
    CHECK(ratio == doctest::Approx(2.0).epsilon(0.01));  // up to ceil effects
    check_ledger(r2);
}

TEST_CASE("mid power sleeps and resumes without ever checkpointing") {
    auto cfg = small_config(PolicyKind::pearl, ModeSetting::fixed_1c);
    auto r = run_simulation(cfg, constant_trace(5e-3));
    CHECK_FALSE(r.truncated);
    CHECK(r.hit_medium_count > 0);
    CHECK(r.checkpoint_count == 0);
    CHECK(r.hit_low_count == 0);
    CHECK(r.sleep_charging_time_s > 0.0);
    CHECK(r.instructions_completed == 50000);
    // every sleep ends in a resume: equal medium and high hits
    CHECK(r.hit_medium_count == r.hit_high_count);
    check_ledger(r);
}

TEST_CASE("sub-retention power forces checkpoint cycles that preserve progress") {
    auto cfg = small_config(PolicyKind::pearl, ModeSetting::fixed_1c, 60000);
    cfg.max_sim_time_s = 2e6;
    auto r = run_simulation(cfg, constant_trace(0.02e-3));
    CHECK_FALSE(r.truncated);
    CHECK(r.instructions_completed == 60000);
    CHECK(r.checkpoint_count > 0);
    CHECK(r.checkpoint_count == r.hit_low_count);
    CHECK(r.restore_count == r.checkpoint_count);
    CHECK(r.boot_count == r.restore_count);
    CHECK(r.off_charging_time_s > 0.0);
    check_ledger(r);
}

TEST_CASE("zero power from an empty capacitor never boots") {
    auto cfg = small_config(PolicyKind::pearl, ModeSetting::fixed_1c);
    cfg.start_charged = false;
    cfg.max_sim_time_s = 1000.0;
    auto r = run_simulation(cfg, constant_trace(0.0));
    CHECK(r.truncated);
    CHECK(r.boot_count == 0);
    CHECK(r.instructions_completed == 0);
    CHECK(r.compute_time_s == 0.0);
    CHECK(r.compute_energy_j == 0.0);
    CHECK(r.wall_clock_s == doctest::Approx(1000.0));
    check_ledger(r);
}

TEST_CASE("identical configs produce byte-identical reports") {
    auto cfg = small_config(PolicyKind::pearl, ModeSetting::adaptive);
    cfg.workload.parallel_fraction = 0.8;
    auto a = run_simulation(cfg, constant_trace(5e-3));
    auto b = run_simulation(cfg, constant_trace(5e-3));
    CHECK(report_to_json(a) == report_to_json(b));

    auto tr = rf_obstacle_trace(5e-3, 0.5e-3, 15.0, 5.0, 60.0);
    auto c = run_simulation(cfg, tr);
    auto d = run_simulation(cfg, tr);
    CHECK(report_to_json(c) == report_to_json(d));
}

TEST_CASE("threshold events land exactly on the configured energies") {
    auto cfg = small_config(PolicyKind::pearl, ModeSetting::fixed_1c, 60000);
    cfg.max_sim_time_s = 2e6;
    auto thr = cfg.thresholds(Mode::single_core);
    auto r = run_simulation(cfg, constant_trace(0.02e-3));
    int seen = 0;
    for (const auto& e : r.event_log) {
        if (e.event == Event::hit_medium) {
            CHECK(std::abs(e.energy_j - thr.e_mid_j) <= 1e-12);
            ++seen;
        } else if (e.event == Event::hit_low) {
            CHECK(std::abs(e.energy_j - thr.e_low_j) <= 1e-12);
            ++seen;
        } else if (e.event == Event::hit_high && e.from == Phase::lpmrm) {
            CHECK(std::abs(e.energy_j - thr.e_high_j) <= 1e-12);
            ++seen;
        }
    }
    CHECK(seen > 3);
}

TEST_CASE("the event log never leaves the legal transition set") {
    using Edge = std::tuple<Phase, Event, Phase>;
    const std::set<Edge> legal = {
        {Phase::active, Event::hit_medium, Phase::lpmrm},
        {Phase::lpmrm, Event::hit_high, Phase::lpmrm},     // predictor update marker
        {Phase::lpmrm, Event::hit_high, Phase::active},
        {Phase::lpmrm, Event::hit_low, Phase::backing_up},
        {Phase::backing_up, Event::hit_low, Phase::off_charging},
        {Phase::active, Event::hit_backup, Phase::backing_up},
        {Phase::active, Event::region_boundary, Phase::active},
        {Phase::active, Event::region_boundary, Phase::lpmrm},
        {Phase::lpmrm, Event::power_died, Phase::off_charging},
        {Phase::off_charging, Event::hit_high, Phase::off_charging},  // update marker
        {Phase::off_charging, Event::hit_high, Phase::booting},
        {Phase::booting, Event::hit_high, Phase::restoring},
        {Phase::booting, Event::hit_high, Phase::active},
        {Phase::restoring, Event::hit_high, Phase::active},
        {Phase::active, Event::timer_expiry, Phase::active},
        {Phase::active, Event::adc_sample, Phase::active},
        {Phase::active, Event::workload_complete, Phase::done},
    };
    for (PolicyKind kind : {PolicyKind::pearl, PolicyKind::adamica, PolicyKind::rockclimb}) {
        for (double p_mw : {0.02, 0.5, 5.0, 25.0}) {
            auto cfg = small_config(kind, ModeSetting::fixed_1c, 20000);
            cfg.max_sim_time_s = 2e6;
            auto r = run_simulation(cfg, constant_trace(p_mw * 1e-3));
            for (const auto& e : r.event_log)
                CHECK_MESSAGE(legal.count({e.from, e.event, e.to}) == 1,
                              to_string(e.from) << " --" << to_string(e.event) << "--> "
                                                << to_string(e.to));
        }
    }
}

TEST_CASE("every restore follows a checkpoint taken since the previous restore") {
    for (PolicyKind kind : {PolicyKind::pearl, PolicyKind::adamica, PolicyKind::rockclimb}) {
        auto cfg = small_config(kind, ModeSetting::fixed_1c, 30000);
        cfg.max_sim_time_s = 2e6;
        auto r = run_simulation(cfg, constant_trace(0.02e-3));
        REQUIRE(r.restore_count > 0);
        std::uint64_t ckpts = 0, restores = 0;
        for (const auto& e : r.event_log) {
            if (e.note == "checkpoint" || e.note == "jit checkpoint" ||
                e.note == "region checkpoint")
                ++ckpts;
            if (e.note == "restore") {
                ++restores;
                CHECK(ckpts >= restores);
            }
        }
        CHECK(ckpts == r.checkpoint_count);
        CHECK(restores == r.restore_count);
    }
}

TEST_CASE("rockclimb checkpoints every region regardless of power") {
    std::uint64_t counts[2] = {0, 0};
    int i = 0;
    for (double p_mw : {5.0, 25.0}) {
        auto cfg = small_config(PolicyKind::rockclimb, ModeSetting::fixed_1c, 40000);
        cfg.rockclimb.region_instructions = 4000;
        cfg.max_sim_time_s = 2e6;
        auto r = run_simulation(cfg, constant_trace(p_mw * 1e-3));
        CHECK_FALSE(r.truncated);
        CHECK(r.instructions_completed == 40000);
        CHECK(r.checkpoint_count == 10);  // completed regions
        counts[i++] = r.checkpoint_count;
        check_ledger(r);
    }
    CHECK(counts[0] == counts[1]);
}

TEST_CASE("adamica checkpoints at its backup level and restores the full image") {
    auto cfg = small_config(PolicyKind::adamica, ModeSetting::fixed_1c, 30000);
    cfg.max_sim_time_s = 2e6;
    auto r = run_simulation(cfg, constant_trace(0.02e-3));
    CHECK_FALSE(r.truncated);
    CHECK(r.instructions_completed == 30000);
    CHECK(r.checkpoint_count > 0);
    // full-SRAM checkpoints: each one costs the dual-core figure
    CHECK(r.checkpoint_energy_j ==
          doctest::Approx(r.checkpoint_count * cfg.checkpoint.energy_2c_j));
    CHECK(r.adc_sample_count > 0);
    CHECK(r.adc_energy_j > 0.0);
    check_ledger(r);
}

TEST_CASE("adaptive pearl switches modes when the prediction warrants it") {
    auto cfg = small_config(PolicyKind::pearl, ModeSetting::adaptive, 200000);
    cfg.workload.mean_block_size = 10000;
    auto r = run_simulation(cfg, constant_trace(30e-3));
    CHECK_FALSE(r.truncated);
    // constant saturating power: the bump ladder reaches the switch level
    CHECK(r.instructions_2c > 0);
    CHECK(r.mode_switch_count > 0);
    check_ledger(r);
}

TEST_CASE("the prediction changes only at wakeups and timer expiries") {
    auto cfg = small_config(PolicyKind::pearl, ModeSetting::adaptive, 100000);
    auto r = run_simulation(cfg, constant_trace(5e-3));
    REQUIRE(r.p_hat_trajectory.size() > 2);
    std::vector<double> event_times;
    for (const auto& e : r.event_log)
        if (e.event == Event::timer_expiry ||
            (e.event == Event::hit_high && (e.note == "wake" || e.note == "reboot")))
            event_times.push_back(e.t_s);
    // every trajectory point after the initial one coincides with an update event
    for (std::size_t i = 1; i < r.p_hat_trajectory.size(); ++i) {
        const double t = r.p_hat_trajectory[i].first;
        bool matched = false;
        for (double et : event_times)
            if (std::abs(et - t) < 1e-12) matched = true;
        CHECK(matched);
    }
}

// Independent reference: a 10us fixed-step integrator for the single-core
// three-threshold loop. It re-implements the phase physics by brute force and
// reports the times of every threshold event it sees.
namespace {

struct StepEvent {
    Event kind;
    double t_s;
};

std::vector<StepEvent> fixed_step_reference(const SimulationConfig& cfg,
                                            const PowerTrace& trace, double horizon_s,
                                            double step_s = 10e-6) {
    const auto thr = cfg.thresholds(Mode::single_core);
    const auto ckpt = checkpoint_cost(Mode::single_core, cfg.checkpoint);
    const auto rest = restore_cost(Mode::single_core, cfg.checkpoint);
    std::vector<StepEvent> events;
    double e = thr.e_high_j;
    double t = 0.0;
    int phase = 0;  // 0 active, 1 sleep, 2 off, 3 timed action
    int after_action = 0;
    double action_left = 0.0, action_draw = 0.0;
    bool have_ckpt = false;

    while (t < horizon_s) {
        const double p = trace.power_at(t);
        double draw = 0.0;
        switch (phase) {
            case 0: draw = cfg.costs.p_active_1c_w; break;
            case 1: draw = cfg.costs.p_lpm_w; break;
            case 2: draw = 0.0; break;
            case 3: draw = action_draw; break;
        }
        e = std::min(e + (p - draw) * step_s, cfg.capacitor.max_energy_j());
        t += step_s;
        switch (phase) {
            case 0:
                if (e <= thr.e_mid_j) {
                    events.push_back({Event::hit_medium, t});
                    phase = 3;
                    action_left = cfg.costs.sleep_transition_time_s;
                    action_draw = cfg.costs.sleep_transition_energy_j /
                                  cfg.costs.sleep_transition_time_s;
                    after_action = 1;
                }
                break;
            case 1:
                if (e >= thr.e_high_j) {
                    events.push_back({Event::hit_high, t});
                    phase = 0;
                } else if (e <= thr.e_low_j) {
                    events.push_back({Event::hit_low, t});
                    phase = 3;
                    action_left = ckpt.time_s;
                    action_draw = ckpt.energy_j / ckpt.time_s;
                    after_action = 2;
                    have_ckpt = true;
                }
                break;
            case 2:
                if (e >= thr.e_high_j) {
                    events.push_back({Event::hit_high, t});
                    phase = 3;
                    action_left = cfg.costs.boot_time_s +
                                  (have_ckpt ? rest.time_s : 0.0);
                    action_draw = (cfg.costs.boot_energy_j +
                                   (have_ckpt ? rest.energy_j : 0.0)) /
                                  action_left;
                    after_action = 0;
                }
                break;
            case 3:
                action_left -= step_s;
                if (action_left <= 0.0) {
                    if (after_action == 2) e = cfg.off_floor_j;
                    phase = after_action;
                }
                break;
        }
    }
    return events;
}

}  // namespace

TEST_CASE("event times match a 10us fixed-step reference integrator") {
    std::mt19937_64 eng(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        auto cfg = default_config();
        cfg.policy = {PolicyKind::pearl, ModeSetting::fixed_1c};
        cfg.capacitor.capacitance_f = 0.05e-3 + 0.1e-3 * u(eng);
        cfg.capacitor.v_max = 2.9;
        cfg.thresholds_1c = {2.0 + 0.3 * u(eng), 1.6 + 0.2 * u(eng)};
        cfg.thresholds_2c = {cfg.thresholds_1c.v_mid + 0.35, cfg.thresholds_1c.v_low + 0.35};
        cfg.checkpoint.time_2c_s = 3e-3;
        cfg.checkpoint.energy_2c_j = 30e-6;
        cfg.checkpoint.restore_time_2c_s = 3e-3;
        cfg.checkpoint.restore_energy_2c_j = 30e-6;
        cfg.workload.total_instructions = 100000000;  // keep it busy
        cfg.collect_event_log = true;
        cfg.max_sim_time_s = 3.0;

        // piecewise power with levels straddling sleep and active draws
        PowerTrace trace;
        double tt = 0.0;
        for (int s = 0; s < 6; ++s) {
            const double level =
                (s % 2 == 0) ? 0.5e-3 + 8e-3 * u(eng) : 0.02e-3 + 0.5e-3 * u(eng);
            trace.segments.push_back({tt, level});
            tt += 0.3 + 0.4 * u(eng);
        }

        auto r = run_simulation(cfg, trace);
        auto ref = fixed_step_reference(cfg, trace, cfg.max_sim_time_s);

        std::vector<StepEvent> engine_events;
        for (const auto& e : r.event_log) {
            if (e.event == Event::hit_medium || e.event == Event::hit_low ||
                (e.event == Event::hit_high &&
                 (e.from == Phase::lpmrm || e.from == Phase::off_charging) &&
                 (e.to == Phase::active || e.to == Phase::booting)))
                engine_events.push_back({e.event, e.t_s});
        }
        const std::size_t n = std::min(engine_events.size(), ref.size());
        REQUIRE(n > 0);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(engine_events[i].kind == ref[i].kind);
            CHECK(std::abs(engine_events[i].t_s - ref[i].t_s) <= 10e-6 + 1e-12);
        }
    }
}
