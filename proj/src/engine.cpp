#include "pearlsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace pearlsim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Candidate {
    double t_s = kInf;
    Event event = Event::watchdog;
    int priority = 99;
    bool snap = false;       // event is an exact crossing; snap energy to target
    double target_j = 0.0;
};

// Tie-break order at equal timestamps: trace segment first, then threshold
// crossings, then region/block boundaries, then timers and sampling.
int event_priority(Event e) {
    switch (e) {
        case Event::trace_segment: return 0;
        case Event::hit_high:
        case Event::hit_medium:
        case Event::hit_low:
        case Event::hit_backup:
        case Event::power_died: return 1;
        case Event::region_boundary: return 2;
        case Event::block_boundary:
        case Event::workload_complete: return 3;
        case Event::timer_expiry: return 4;
        case Event::adc_sample: return 5;
        default: return 9;
    }
}

class Engine {
public:
    Engine(const SimulationConfig& cfg, const PowerTrace& trace)
        : cfg_(cfg),
          trace_(trace),
          thr_1c_(cfg.thresholds(Mode::single_core)),
          thr_2c_(cfg.thresholds(Mode::dual_core)) {}

    SimulationReport run();

private:
    const SimulationConfig& cfg_;
    const PowerTrace& trace_;
    ThresholdConfig thr_1c_;
    ThresholdConfig thr_2c_;
    Workload workload_;
    SimulationReport rep_;

    double t_ = 0.0;
    double energy_j_ = 0.0;
    Phase phase_ = Phase::active;
    Mode mode_ = Mode::single_core;
    bool first_activation_done_ = false;

    ExecutionCursor cursor_;
    std::uint64_t committed_in_block_ = 0;

    PredictorState pred_;
    double active_accum_s_ = 0.0;          // active time since the last timer reset
    std::optional<double> est1_stash_w_;   // active-phase estimate held until wake
    double sleep_gap_j_ = 0.0;             // energy gap of the pending recharge
    double off_start_s_ = 0.0;
    double off_floor_j_ = 0.0;

    std::deque<double> adc_history_w_;
    double adc_accum_s_ = 0.0;

    std::uint64_t region_done_instr_ = 0;  // completed instructions, region counting

    const ThresholdConfig& thr() const {
        return mode_ == Mode::single_core ? thr_1c_ : thr_2c_;
    }
    double e_hm() const { return thr().e_high_mid_j(); }
    const Block& block() const { return workload_.blocks[cursor_.block_index]; }

    // --- integration -------------------------------------------------------

    void integrate(double dt_s, double draw_w, double* time_bucket, double* energy_bucket);
    void run_action(const ActionCost& cost, double* time_bucket, double* energy_bucket,
                    bool counts_as_active = false);
    void advance_active(double dt_s);

    // --- event machinery ----------------------------------------------------

    Candidate next_event() const;
    void apply(const Candidate& c);

    void on_hit_medium();
    void on_hit_high();
    void on_hit_low();
    void on_hit_backup();
    void on_power_died();
    void on_region_boundary();
    void on_block_boundary();
    void on_timer_expiry();
    void on_adc_sample();

    void begin_block(bool charge_switch_costs);
    Mode desired_mode_for(const Block& b) const;
    void power_off();
    void wake_from_off();
    void predictor_update(double est2_w, const char* where);
    void reset_timer();
    void record_p_hat();
    void log(Phase from, Event ev, Phase to, const char* note);
    void finish(bool truncated);
};

void Engine::integrate(double dt_s, double draw_w, double* time_bucket,
                       double* energy_bucket) {
    if (dt_s <= 0.0) return;
    const double p_amb = trace_.power_at(t_);
    const auto adv = advance_capacitor({energy_j_}, p_amb - draw_w, dt_s, cfg_.capacitor);
    if (adv.state.energy_j <= 0.0 && energy_j_ + (p_amb - draw_w) * dt_s < -1e-15)
        throw std::runtime_error("capacitor depleted mid-action; config validation "
                                 "should have rejected this setup");
    energy_j_ = adv.state.energy_j;
    rep_.ledger.harvested_j += p_amb * dt_s;
    rep_.ledger.consumed_j += draw_w * dt_s;
    rep_.ledger.overflow_j += adv.overflow_j;
    if (time_bucket) *time_bucket += dt_s;
    if (energy_bucket) *energy_bucket += draw_w * dt_s;
    t_ += dt_s;
}

void Engine::run_action(const ActionCost& cost, double* time_bucket, double* energy_bucket,
                        bool counts_as_active) {
    if (cost.time_s <= 0.0) return;
    const double draw = cost.energy_j / cost.time_s;
    double remaining = cost.time_s;
    while (remaining > 0.0) {
        const double seg_end = trace_.next_change_after(t_);
        const double step = std::min(remaining, seg_end - t_);
        integrate(step, draw, time_bucket, energy_bucket);
        remaining -= step;
    }
    if (counts_as_active && cfg_.policy.kind == PolicyKind::pearl) {
        active_accum_s_ += cost.time_s;
        (mode_ == Mode::single_core ? pred_.dt_1c_s : pred_.dt_2c_s) += cost.time_s;
    }
}

void Engine::advance_active(double dt_s) {
    if (dt_s <= 0.0) return;
    integrate(dt_s, active_power(cfg_.costs, mode_), &rep_.compute_time_s,
              &rep_.compute_energy_j);
    cursor_.elapsed_in_block_s += dt_s;
    const std::uint64_t now_done = instructions_at(block(), mode_, cursor_.elapsed_in_block_s);
    if (now_done > committed_in_block_) {
        const std::uint64_t delta = now_done - committed_in_block_;
        committed_in_block_ = now_done;
        cursor_.instructions_done_in_block = now_done;
        rep_.instructions_completed += delta;
        (mode_ == Mode::single_core ? rep_.instructions_1c : rep_.instructions_2c) += delta;
        region_done_instr_ += delta;
    }
    active_accum_s_ += dt_s;
    adc_accum_s_ += dt_s;
    (mode_ == Mode::single_core ? pred_.dt_1c_s : pred_.dt_2c_s) += dt_s;
}

Candidate Engine::next_event() const {
    Candidate best;
    auto offer = [&best](double t_s, Event ev, bool snap = false, double target = 0.0) {
        if (t_s == kInf) return;
        Candidate c{t_s, ev, event_priority(ev), snap, target};
        if (c.t_s < best.t_s || (c.t_s == best.t_s && c.priority < best.priority)) best = c;
    };

    offer(trace_.next_change_after(t_), Event::trace_segment);
    const double p_amb = trace_.power_at(t_);

    switch (phase_) {
        case Phase::active: {
            const double draw = active_power(cfg_.costs, mode_);
            const double net = p_amb - draw;
            if (cfg_.policy.kind == PolicyKind::pearl) {
                const double e_mid = thr().e_mid_j;
                if (energy_j_ <= e_mid) {
                    offer(t_, Event::hit_medium);
                } else if (net < 0.0) {
                    auto dt = time_to_cross({energy_j_}, net, e_mid);
                    if (dt) offer(t_ + *dt, Event::hit_medium, true, e_mid);
                }
            } else if (cfg_.policy.kind == PolicyKind::adamica) {
                const double e_bk = cfg_.adamica.backup_threshold_j;
                if (energy_j_ <= e_bk) {
                    offer(t_, Event::hit_backup);
                } else if (net < 0.0) {
                    auto dt = time_to_cross({energy_j_}, net, e_bk);
                    if (dt) offer(t_ + *dt, Event::hit_backup, true, e_bk);
                }
            }
            // block boundary / completion
            const double remain = block_duration_s(block(), mode_) - cursor_.elapsed_in_block_s;
            offer(t_ + std::max(0.0, remain), Event::block_boundary);
            // region boundary (may precede the block boundary)
            if (cfg_.policy.kind == PolicyKind::rockclimb) {
                const std::uint64_t region = cfg_.rockclimb.region_instructions;
                const std::uint64_t next_mark = (region_done_instr_ / region + 1) * region;
                const std::uint64_t in_block_target =
                    committed_in_block_ + (next_mark - region_done_instr_);
                if (in_block_target <= block().instruction_count) {
                    const bool paired = mode_ == Mode::dual_core && block().parallelizable;
                    const std::uint64_t slots = paired ? (in_block_target + 1) / 2 : in_block_target;
                    const double at = static_cast<double>(slots) * block().cost.time_s;
                    offer(t_ + std::max(0.0, at - cursor_.elapsed_in_block_s),
                          Event::region_boundary);
                }
            }
            if (cfg_.policy.kind == PolicyKind::pearl) {
                const double left = pred_.timer_deadline_s - active_accum_s_;
                offer(t_ + std::max(0.0, left), Event::timer_expiry);
            }
            if (cfg_.policy.kind == PolicyKind::adamica) {
                const double left = cfg_.adamica.sample_period_s - adc_accum_s_;
                offer(t_ + std::max(0.0, left), Event::adc_sample);
            }
            break;
        }
        case Phase::lpmrm: {
            const double net = p_amb - cfg_.costs.p_lpm_w;
            const double floor = cfg_.policy.kind == PolicyKind::rockclimb
                                     ? 0.0
                                     : thr().e_low_j;
            if (net > 0.0) {
                auto dt = time_to_cross({energy_j_}, net, thr().e_high_j);
                if (dt) offer(t_ + *dt, Event::hit_high, true, thr().e_high_j);
            } else if (net < 0.0) {
                auto dt = time_to_cross({energy_j_}, net, floor);
                const Event ev = cfg_.policy.kind == PolicyKind::rockclimb
                                     ? Event::power_died
                                     : Event::hit_low;
                if (dt) offer(t_ + *dt, ev, true, floor);
            }
            break;
        }
        case Phase::off_charging: {
            if (p_amb > 0.0) {
                auto dt = time_to_cross({energy_j_}, p_amb, thr().e_high_j);
                if (dt) offer(t_ + *dt, Event::hit_high, true, thr().e_high_j);
            }
            break;
        }
        default:
            break;
    }
    return best;
}

void Engine::apply(const Candidate& c) {
    const double dt = c.t_s - t_;
    switch (phase_) {
        case Phase::active:
            advance_active(dt);
            break;
        case Phase::lpmrm: {
            const double net = trace_.power_at(t_) - cfg_.costs.p_lpm_w;
            integrate(dt, cfg_.costs.p_lpm_w,
                      net > 0.0 ? &rep_.sleep_charging_time_s : &rep_.sleep_discharging_time_s,
                      &rep_.sleep_energy_j);
            break;
        }
        case Phase::off_charging:
            integrate(dt, 0.0, &rep_.off_charging_time_s, nullptr);
            break;
        default:
            throw std::logic_error("event scheduled in a non-live phase");
    }
    if (c.snap) energy_j_ = c.target_j;

    switch (c.event) {
        case Event::trace_segment: break;
        case Event::hit_medium: on_hit_medium(); break;
        case Event::hit_high: on_hit_high(); break;
        case Event::hit_low: on_hit_low(); break;
        case Event::hit_backup: on_hit_backup(); break;
        case Event::power_died: on_power_died(); break;
        case Event::region_boundary: on_region_boundary(); break;
        case Event::block_boundary: on_block_boundary(); break;
        case Event::timer_expiry: on_timer_expiry(); break;
        case Event::adc_sample: on_adc_sample(); break;
        default:
            throw std::logic_error("unexpected event kind");
    }
}

void Engine::on_hit_medium() {
    ++rep_.hit_medium_count;
    log(Phase::active, Event::hit_medium, Phase::lpmrm, "sleep transition");
    if (pred_.dt_1c_s + pred_.dt_2c_s > 0.0) {
        est1_stash_w_ = std::min(
            estimate_active_power(pred_.dt_1c_s, pred_.dt_2c_s, cfg_.costs.p_active_1c_w,
                                  cfg_.costs.p_active_2c_w, e_hm()),
            cfg_.predictor.p_clamp_max_w);
    } else {
        est1_stash_w_.reset();
    }
    pred_.t_mid_hit_s = t_;
    sleep_gap_j_ = e_hm();
    run_action({cfg_.costs.sleep_transition_time_s, cfg_.costs.sleep_transition_energy_j},
               &rep_.sleep_transition_time_s, &rep_.sleep_transition_energy_j);
    phase_ = Phase::lpmrm;
}

void Engine::on_hit_high() {
    ++rep_.hit_high_count;
    if (phase_ == Phase::lpmrm) {
        if (cfg_.policy.kind == PolicyKind::pearl) {
            const double charge_s = t_ - *pred_.t_mid_hit_s;
            const double est2 = charge_s > 0.0
                                    ? std::min(estimate_charging_power(charge_s, sleep_gap_j_),
                                               cfg_.predictor.p_clamp_max_w)
                                    : pred_.p_hat_w;
            predictor_update(est2, "wake");
        }
        log(Phase::lpmrm, Event::hit_high, Phase::active, "resume");
        phase_ = Phase::active;
        return;
    }
    // off_charging
    wake_from_off();
}

void Engine::on_hit_low() {
    ++rep_.hit_low_count;
    log(Phase::lpmrm, Event::hit_low, Phase::backing_up, "checkpoint");
    phase_ = Phase::backing_up;
    const ActionCost ckpt = checkpoint_cost(mode_, cfg_.checkpoint);
    run_action(ckpt, &rep_.checkpoint_time_s, &rep_.checkpoint_energy_j);
    ++rep_.checkpoint_count;
    power_off();
}

void Engine::on_hit_backup() {
    ++rep_.hit_low_count;
    log(Phase::active, Event::hit_backup, Phase::backing_up, "jit checkpoint");
    phase_ = Phase::backing_up;
    // The whole SRAM goes out regardless of the running mode.
    const ActionCost ckpt = checkpoint_cost(Mode::dual_core, cfg_.checkpoint);
    run_action(ckpt, &rep_.checkpoint_time_s, &rep_.checkpoint_energy_j);
    ++rep_.checkpoint_count;
    power_off();
}

void Engine::on_power_died() {
    log(Phase::lpmrm, Event::power_died, Phase::off_charging, "wait drained out");
    off_start_s_ = t_;
    off_floor_j_ = energy_j_;
    phase_ = Phase::off_charging;
}

void Engine::on_region_boundary() {
    ActionCost ckpt = checkpoint_cost(mode_, cfg_.checkpoint);
    ckpt.time_s *= cfg_.rockclimb.checkpoint_lightness;
    ckpt.energy_j *= cfg_.rockclimb.checkpoint_lightness;
    log(Phase::active, Event::region_boundary, Phase::active, "region checkpoint");
    run_action(ckpt, &rep_.checkpoint_time_s, &rep_.checkpoint_energy_j);
    ++rep_.checkpoint_count;

    // With the program finished there is nothing left to budget for.
    const bool more_work = !(cursor_.block_index + 1 >= workload_.blocks.size() &&
                             committed_in_block_ >= block().instruction_count);
    if (!more_work) return;

    const double slot = block().cost.time_s;
    const std::uint64_t region = cfg_.rockclimb.region_instructions;
    const std::uint64_t slots = mode_ == Mode::dual_core ? (region + 1) / 2 : region;
    const double region_cost = static_cast<double>(slots) * slot * active_power(cfg_.costs, mode_);
    const double need = region_cost + ckpt.energy_j;
    if (energy_j_ < need) {
        ++rep_.power_down_wait_count;
        log(Phase::active, Event::region_boundary, Phase::lpmrm, "power-down wait");
        phase_ = Phase::lpmrm;
    }
}

void Engine::on_block_boundary() {
    // Land exactly on the block end before switching.
    cursor_.elapsed_in_block_s = block_duration_s(block(), mode_);
    const std::uint64_t n = block().instruction_count;
    if (committed_in_block_ < n) {
        const std::uint64_t delta = n - committed_in_block_;
        rep_.instructions_completed += delta;
        (mode_ == Mode::single_core ? rep_.instructions_1c : rep_.instructions_2c) += delta;
        region_done_instr_ += delta;
        committed_in_block_ = n;
    }
    if (mode_ == Mode::dual_core && block().parallelizable) {
        run_action({cfg_.costs.core_msg_time_s, cfg_.costs.core_msg_energy_j},
                   &rep_.msg_time_s, &rep_.msg_energy_j, true);
    }
    ++cursor_.block_index;
    cursor_.instructions_done_in_block = 0;
    cursor_.elapsed_in_block_s = 0.0;
    committed_in_block_ = 0;
    if (cursor_.finished(workload_)) {
        log(Phase::active, Event::workload_complete, Phase::done, "");
        phase_ = Phase::done;
        return;
    }
    begin_block(true);
}

Mode Engine::desired_mode_for(const Block& b) const {
    if (!b.parallelizable) return Mode::single_core;
    switch (cfg_.policy.mode) {
        case ModeSetting::fixed_1c: return Mode::single_core;
        case ModeSetting::fixed_2c: return Mode::dual_core;
        case ModeSetting::adaptive: break;
    }
    if (cfg_.policy.kind == PolicyKind::adamica) {
        double sum = 0.0;
        for (double p : adc_history_w_) sum += p;
        const double mean = adc_history_w_.empty() ? 0.0 : sum / adc_history_w_.size();
        return mean >= cfg_.costs.p_active_2c_w ? Mode::dual_core : Mode::single_core;
    }
    DecisionInputs in{pred_.p_hat_w, cfg_.costs.p_active_1c_w, cfg_.costs.p_active_2c_w,
                      e_hm()};
    return select_mode(in);
}

void Engine::begin_block(bool charge_switch_costs) {
    const Mode desired = desired_mode_for(block());
    if (desired != mode_) {
        ++rep_.mode_switch_count;
        if (charge_switch_costs && cfg_.policy.kind == PolicyKind::pearl) {
            run_action({cfg_.costs.threshold_reconfig_time_s,
                        cfg_.costs.threshold_reconfig_energy_j},
                       &rep_.reconfig_time_s, &rep_.reconfig_energy_j, true);
        }
        mode_ = desired;
        if (cfg_.policy.kind == PolicyKind::pearl) reset_timer();
    }
    if (mode_ == Mode::dual_core && block().parallelizable) {
        run_action({cfg_.costs.core_msg_time_s, cfg_.costs.core_msg_energy_j},
                   &rep_.msg_time_s, &rep_.msg_energy_j, true);
    }
}

void Engine::on_timer_expiry() {
    pred_ = optimistic_bump(pred_, mode_, cfg_.costs, cfg_.predictor);
    pred_.timer_deadline_s += timer_period(mode_, e_hm(), cfg_.costs);
    record_p_hat();
    log(Phase::active, Event::timer_expiry, Phase::active, "optimistic bump");
}

void Engine::on_adc_sample() {
    run_action({cfg_.adamica.adc_sample_time_s, cfg_.adamica.adc_sample_energy_j},
               &rep_.adc_time_s, &rep_.adc_energy_j);
    adc_history_w_.push_back(trace_.power_at(t_));
    while (adc_history_w_.size() > cfg_.adamica.history_len) adc_history_w_.pop_front();
    adc_accum_s_ = 0.0;
    ++rep_.adc_sample_count;
    log(Phase::active, Event::adc_sample, Phase::active, "");
}

void Engine::power_off() {
    rep_.ledger.off_drop_j += energy_j_ - cfg_.off_floor_j;
    energy_j_ = cfg_.off_floor_j;
    off_start_s_ = t_;
    off_floor_j_ = energy_j_;
    log(Phase::backing_up, Event::hit_low, Phase::off_charging, "power off");
    phase_ = Phase::off_charging;
}

void Engine::wake_from_off() {
    if (cfg_.policy.kind == PolicyKind::pearl) {
        const double charge_s = t_ - off_start_s_;
        const double gap = thr().e_high_j - off_floor_j_;
        const double est2 = charge_s > 0.0
                                ? std::min(estimate_charging_power(charge_s, gap),
                                           cfg_.predictor.p_clamp_max_w)
                                : pred_.p_hat_w;
        predictor_update(est2, "reboot");
    }
    log(Phase::off_charging, Event::hit_high, Phase::booting, "boot");
    phase_ = Phase::booting;
    run_action({cfg_.costs.boot_time_s, cfg_.costs.boot_energy_j}, &rep_.boot_time_s,
               &rep_.boot_energy_j);
    ++rep_.boot_count;
    if (rep_.checkpoint_count > 0) {
        log(Phase::booting, Event::hit_high, Phase::restoring, "restore");
        phase_ = Phase::restoring;
        // AdaMICA always moved the whole SRAM out, so it moves it all back.
        const Mode restore_mode =
            cfg_.policy.kind == PolicyKind::adamica ? Mode::dual_core : mode_;
        run_action(restore_cost(restore_mode, cfg_.checkpoint), &rep_.restore_time_s,
                   &rep_.restore_energy_j);
        ++rep_.restore_count;
    }
    // The checkpoint was taken at (or after) the last instruction boundary the
    // cursor had reached, so execution resumes without losing progress.
    log(phase_, Event::hit_high, Phase::active, "resume");
    phase_ = Phase::active;
    if (!first_activation_done_) {
        begin_block(false);
        first_activation_done_ = true;
        if (cfg_.policy.kind == PolicyKind::pearl) reset_timer();
    }
}

void Engine::predictor_update(double est2_w, const char* where) {
    const double est1 = est1_stash_w_.value_or(est2_w);
    pred_ = ewma_update(pred_, est1, est2_w, cfg_.predictor);
    est1_stash_w_.reset();
    reset_timer();
    record_p_hat();
    log(phase_, Event::hit_high, phase_, where);
}

void Engine::reset_timer() {
    active_accum_s_ = 0.0;
    pred_.timer_deadline_s = timer_period(mode_, e_hm(), cfg_.costs);
}

void Engine::record_p_hat() {
    if (cfg_.collect_p_hat_trajectory) rep_.p_hat_trajectory.emplace_back(t_, pred_.p_hat_w);
}

void Engine::log(Phase from, Event ev, Phase to, const char* note) {
    if (!cfg_.collect_event_log) return;
    rep_.event_log.push_back({t_, from, ev, to, mode_, energy_j_, note});
}

void Engine::finish(bool truncated) {
    rep_.truncated = truncated;
    rep_.wall_clock_s = t_;
    rep_.ledger.final_j = energy_j_;
    rep_.throughput_ips =
        t_ > 0.0 ? static_cast<double>(rep_.instructions_completed) / t_ : 0.0;
}

SimulationReport Engine::run() {
    validate(cfg_);
    workload_ = generate_workload(cfg_.seed, cfg_.workload.total_instructions,
                                  cfg_.workload.parallel_fraction,
                                  cfg_.workload.mean_block_size, cfg_.instruction_cost(),
                                  cfg_.workload.basis);

    rep_.policy = to_string(cfg_.policy.kind);
    rep_.mode_setting = to_string(cfg_.policy.mode);
    rep_.seed = cfg_.seed;
    rep_.constant_power_w =
        trace_.segments.size() == 1 ? trace_.segments.front().power_mw * 1e-3 : -1.0;

    pred_.p_hat_w = cfg_.costs.p_active_1c_w;
    mode_ = Mode::single_core;
    if (cfg_.start_charged) {
        energy_j_ = thr_1c_.e_high_j;
        phase_ = Phase::active;
        mode_ = desired_mode_for(workload_.blocks.front());
        begin_block(false);  // the initial configuration is free
        first_activation_done_ = true;
    } else {
        energy_j_ = 0.0;
        phase_ = Phase::off_charging;
        off_start_s_ = 0.0;
        off_floor_j_ = 0.0;
    }
    rep_.ledger.initial_j = energy_j_;
    reset_timer();
    record_p_hat();

    while (phase_ != Phase::done) {
        if (t_ >= cfg_.max_sim_time_s) {
            finish(true);
            return rep_;
        }
        Candidate c = next_event();
        if (c.t_s > cfg_.max_sim_time_s) {
            // Nothing else will happen before the watchdog; coast to it.
            const double horizon = cfg_.max_sim_time_s;
            switch (phase_) {
                case Phase::active: advance_active(horizon - t_); break;
                case Phase::lpmrm: {
                    const double net = trace_.power_at(t_) - cfg_.costs.p_lpm_w;
                    integrate(horizon - t_, cfg_.costs.p_lpm_w,
                              net > 0.0 ? &rep_.sleep_charging_time_s
                                        : &rep_.sleep_discharging_time_s,
                              &rep_.sleep_energy_j);
                    break;
                }
                case Phase::off_charging:
                    integrate(horizon - t_, 0.0, &rep_.off_charging_time_s, nullptr);
                    break;
                default: break;
            }
            finish(true);
            return rep_;
        }
        apply(c);
    }
    finish(false);
    return rep_;
}

}  // namespace

double SimulationReport::consumed_energy_j() const {
    return compute_energy_j + sleep_energy_j + checkpoint_energy_j + restore_energy_j +
           boot_energy_j + adc_energy_j + msg_energy_j + reconfig_energy_j +
           sleep_transition_energy_j;
}

double SimulationReport::total_time_s() const {
    return compute_time_s + sleep_charging_time_s + sleep_discharging_time_s +
           off_charging_time_s + checkpoint_time_s + restore_time_s + boot_time_s +
           adc_time_s + msg_time_s + reconfig_time_s + sleep_transition_time_s;
}

double compute_throughput(const SimulationReport& report) {
    if (report.wall_clock_s <= 0.0)
        throw std::invalid_argument("throughput needs a positive wall clock");
    return static_cast<double>(report.instructions_completed) / report.wall_clock_s;
}

const char* to_string(Phase p) {
    switch (p) {
        case Phase::off_charging: return "off_charging";
        case Phase::booting: return "booting";
        case Phase::restoring: return "restoring";
        case Phase::active: return "active";
        case Phase::lpmrm: return "lpmrm";
        case Phase::backing_up: return "backing_up";
        case Phase::done: return "done";
    }
    return "?";
}

const char* to_string(Event e) {
    switch (e) {
        case Event::trace_segment: return "trace_segment";
        case Event::hit_high: return "hit_high";
        case Event::hit_medium: return "hit_medium";
        case Event::hit_low: return "hit_low";
        case Event::hit_backup: return "hit_backup";
        case Event::region_boundary: return "region_boundary";
        case Event::block_boundary: return "block_boundary";
        case Event::timer_expiry: return "timer_expiry";
        case Event::adc_sample: return "adc_sample";
        case Event::power_died: return "power_died";
        case Event::workload_complete: return "workload_complete";
        case Event::watchdog: return "watchdog";
    }
    return "?";
}

SimulationReport run_simulation(const SimulationConfig& cfg, const PowerTrace& trace) {
    Engine engine(cfg, trace);
    return engine.run();
}

}  // namespace pearlsim
