#ifndef PEARLSIM_POLICY_HPP
#define PEARLSIM_POLICY_HPP

#include <cstdint>
#include <string>

#include "pearlsim/decision.hpp"
#include "pearlsim/energy_model.hpp"

namespace pearlsim {

enum class PolicyKind { pearl, adamica, rockclimb };

// Fixed pins the mode for parallelizable blocks; serial blocks always run
// single-core. Adaptive decides per parallelizable block boundary.
enum class ModeSetting { fixed_1c, fixed_2c, adaptive };

const char* to_string(PolicyKind k);
const char* to_string(ModeSetting m);

struct PolicySpec {
    PolicyKind kind = PolicyKind::pearl;
    ModeSetting mode = ModeSetting::adaptive;
};

// SRAM is split three ways (two per-core sections plus one shared), so a
// single-core backup touches two thirds of it by default.
struct CheckpointModel {
    double time_2c_s = 96350e-6;
    double energy_2c_j = 829610e-9;
    double restore_time_2c_s = 96350e-6;
    double restore_energy_2c_j = 829610e-9;
    double single_core_fraction = 2.0 / 3.0;
};

struct ActionCost {
    double time_s = 0.0;
    double energy_j = 0.0;
};

ActionCost checkpoint_cost(Mode mode, const CheckpointModel& model);
ActionCost restore_cost(Mode mode, const CheckpointModel& model);

// Two-threshold just-in-time baseline: wake at V_H, full-SRAM checkpoint at a
// single backup level, ambient power tracked by periodic ADC samples.
struct AdamicaConfig {
    std::uint32_t history_len = 16;
    double sample_period_s = 10e-3;
    double adc_sample_time_s = 130e-6;
    double adc_sample_energy_j = 89.7e-9;
    double backup_threshold_j = 2.02005e-3;  // energy at 2.01 V on a 1 mF cap
};

// Region-checkpointing baseline: a mandatory checkpoint at every region
// boundary, power-down wait (memory retained) when the stored energy cannot
// cover the next region plus its checkpoint.
struct RockClimbConfig {
    std::uint64_t region_instructions = 5000;
    double checkpoint_lightness = 1.0;
};

struct ThresholdOverrides {
    double v_mid = 0.0;
    double v_low = 0.0;
};

// Build the mode's threshold set and verify it can fund the mode's backup
// (with a safety margin) and the sleep transition. Throws std::invalid_argument
// with the offending field named.
ThresholdConfig configure_thresholds(Mode mode, const CapacitorSpec& spec, double v_high,
                                     const ThresholdOverrides& overrides,
                                     const CheckpointModel& checkpoint,
                                     const PlatformCosts& costs,
                                     double checkpoint_margin = 0.05);

}  // namespace pearlsim

#endif
