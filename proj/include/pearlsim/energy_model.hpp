#ifndef PEARLSIM_ENERGY_MODEL_HPP
#define PEARLSIM_ENERGY_MODEL_HPP

#include <optional>

namespace pearlsim {

// Storage capacitor, ideal (no leakage, no ESR). All threshold logic runs in
// the energy domain; voltages are converted once at configuration time.
struct CapacitorSpec {
    double capacitance_f = 1e-3;
    double v_max = 2.9;

    double max_energy_j() const { return 0.5 * capacitance_f * v_max * v_max; }
};

struct CapacitorState {
    double energy_j = 0.0;
};

// Per-mode voltage thresholds with their derived energy levels.
struct ThresholdConfig {
    double v_high = 0.0;
    double v_mid = 0.0;
    double v_low = 0.0;
    double e_high_j = 0.0;
    double e_mid_j = 0.0;
    double e_low_j = 0.0;

    // Energy stored between the high/mid and mid/low thresholds.
    double e_high_mid_j() const { return e_high_j - e_mid_j; }
    double e_mid_low_j() const { return e_mid_j - e_low_j; }

    // Throws std::invalid_argument unless v_low < v_mid < v_high.
    static ThresholdConfig from_voltages(const CapacitorSpec& spec, double v_high,
                                         double v_mid, double v_low);
};

// Fixed time/energy prices of the platform's runtime actions.
struct PlatformCosts {
    double p_active_1c_w = 10e-3;
    double p_active_2c_w = 24e-3;
    double p_lpm_w = 0.033e-3;
    double boot_time_s = 500e-6;
    double boot_energy_j = 5450e-9;
    double checkpoint_time_2c_s = 96350e-6;
    double checkpoint_energy_2c_j = 829610e-9;
    double restore_time_2c_s = 96350e-6;
    double restore_energy_2c_j = 829610e-9;
    double single_core_backup_fraction = 2.0 / 3.0;
    double core_msg_time_s = 0.052e-6;
    double core_msg_energy_j = 0.576e-9;
    double threshold_reconfig_time_s = 100e-6;
    double threshold_reconfig_energy_j = 1e-6;
    double sleep_transition_time_s = 14e-6;
    double sleep_transition_energy_j = 0.112e-9;
};

// 1/2 C (v_hi^2 - v_lo^2). Throws std::invalid_argument unless v_hi >= v_lo >= 0.
double energy_between(const CapacitorSpec& spec, double v_hi, double v_lo);

// Time for the capacitor to climb the high/mid gap while sleeping, nullopt
// when the ambient power cannot outpace the retention drain.
std::optional<double> time_to_reach_high(double e_high_mid_j, double p_amb_w,
                                         double p_lpm_w);

// Time to fall through the mid/low gap while sleeping, nullopt when the
// ambient power keeps the capacitor from discharging.
std::optional<double> time_to_reach_low(double e_mid_low_j, double p_amb_w,
                                        double p_lpm_w);

struct AdvanceResult {
    CapacitorState state;
    double overflow_j = 0.0;  // harvested energy discarded at the ceiling
};

// Linear energy integration over an interval of constant net power, clamped
// to [0, max_energy]; the clamped-off surplus is reported as overflow.
AdvanceResult advance_capacitor(CapacitorState state, double net_power_w,
                                double duration_s, const CapacitorSpec& spec);

// Smallest t >= 0 with energy + net_power * t == target, nullopt when the
// trajectory moves away from (or never reaches) the target.
std::optional<double> time_to_cross(CapacitorState state, double net_power_w,
                                    double target_energy_j);

}  // namespace pearlsim

#endif
