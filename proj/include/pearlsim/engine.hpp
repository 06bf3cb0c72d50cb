#ifndef PEARLSIM_ENGINE_HPP
#define PEARLSIM_ENGINE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pearlsim/config.hpp"
#include "pearlsim/trace.hpp"

namespace pearlsim {

enum class Phase {
    off_charging,
    booting,
    restoring,
    active,
    lpmrm,
    backing_up,
    done,
};

enum class Event {
    trace_segment,
    hit_high,
    hit_medium,
    hit_low,
    hit_backup,       // AdaMICA's single backup level
    region_boundary,  // RockClimb
    block_boundary,
    timer_expiry,
    adc_sample,
    power_died,  // capacitor drained to zero in a power-down wait
    workload_complete,
    watchdog,
};

const char* to_string(Phase p);
const char* to_string(Event e);

struct LogEntry {
    double t_s = 0.0;
    Phase from = Phase::active;
    Event event = Event::trace_segment;
    Phase to = Phase::active;
    Mode mode = Mode::single_core;
    double energy_j = 0.0;  // capacitor level when the event fired
    std::string note;
};

struct Ledger {
    double initial_j = 0.0;
    double harvested_j = 0.0;
    double consumed_j = 0.0;
    double overflow_j = 0.0;  // harvest discarded at the full capacitor
    double off_drop_j = 0.0;  // residual discarded when the device powers off
    double final_j = 0.0;

    double imbalance_j() const {
        return initial_j + harvested_j - consumed_j - overflow_j - off_drop_j - final_j;
    }
};

struct SimulationReport {
    // identity
    std::string policy;
    std::string mode_setting;
    std::uint64_t seed = 0;
    double constant_power_w = -1.0;  // -1 when driven by a non-constant trace

    double wall_clock_s = 0.0;
    bool truncated = false;

    // time breakdown (seconds); the categories partition the wall clock
    double compute_time_s = 0.0;
    double sleep_charging_time_s = 0.0;
    double sleep_discharging_time_s = 0.0;
    double off_charging_time_s = 0.0;
    double checkpoint_time_s = 0.0;
    double restore_time_s = 0.0;
    double boot_time_s = 0.0;
    double adc_time_s = 0.0;
    double msg_time_s = 0.0;
    double reconfig_time_s = 0.0;
    double sleep_transition_time_s = 0.0;

    // energy breakdown (joules); the categories partition consumed energy
    double compute_energy_j = 0.0;
    double sleep_energy_j = 0.0;
    double checkpoint_energy_j = 0.0;
    double restore_energy_j = 0.0;
    double boot_energy_j = 0.0;
    double adc_energy_j = 0.0;
    double msg_energy_j = 0.0;
    double reconfig_energy_j = 0.0;
    double sleep_transition_energy_j = 0.0;

    // counts
    std::uint64_t checkpoint_count = 0;
    std::uint64_t restore_count = 0;
    std::uint64_t boot_count = 0;
    std::uint64_t hit_high_count = 0;
    std::uint64_t hit_medium_count = 0;
    std::uint64_t hit_low_count = 0;
    std::uint64_t mode_switch_count = 0;
    std::uint64_t adc_sample_count = 0;
    std::uint64_t power_down_wait_count = 0;

    std::uint64_t instructions_completed = 0;
    std::uint64_t instructions_1c = 0;
    std::uint64_t instructions_2c = 0;
    double throughput_ips = 0.0;

    Ledger ledger;
    std::vector<std::pair<double, double>> p_hat_trajectory;
    std::vector<LogEntry> event_log;

    double sleep_time_s() const { return sleep_charging_time_s + sleep_discharging_time_s; }
    double charging_time_s() const { return off_charging_time_s + sleep_charging_time_s; }
    double consumed_energy_j() const;
    double total_time_s() const;
};

// Instructions per second of wall clock, charging and off time included.
double compute_throughput(const SimulationReport& report);

SimulationReport run_simulation(const SimulationConfig& cfg, const PowerTrace& trace);

// Report serialization: full JSON, one-line CSV (with matching header), and
// an optional event-log CSV for debugging.
std::string report_to_json(const SimulationReport& r);
SimulationReport report_from_json(const std::string& text);
std::string report_csv_header();
std::string report_csv_row(const SimulationReport& r);
void write_event_log_csv(const SimulationReport& r, const std::string& path);

}  // namespace pearlsim

#endif
