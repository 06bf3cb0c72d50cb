#include "pearlsim/policy.hpp"

#include <stdexcept>

namespace pearlsim {

const char* to_string(PolicyKind k) {
    switch (k) {
        case PolicyKind::pearl: return "pearl";
        case PolicyKind::adamica: return "adamica";
        case PolicyKind::rockclimb: return "rockclimb";
    }
    return "?";
}

const char* to_string(ModeSetting m) {
    switch (m) {
        case ModeSetting::fixed_1c: return "1c";
        case ModeSetting::fixed_2c: return "2c";
        case ModeSetting::adaptive: return "adaptive";
    }
    return "?";
}

ActionCost checkpoint_cost(Mode mode, const CheckpointModel& model) {
    if (mode == Mode::dual_core) return {model.time_2c_s, model.energy_2c_j};
    return {model.time_2c_s * model.single_core_fraction,
            model.energy_2c_j * model.single_core_fraction};
}

ActionCost restore_cost(Mode mode, const CheckpointModel& model) {
    if (mode == Mode::dual_core) return {model.restore_time_2c_s, model.restore_energy_2c_j};
    return {model.restore_time_2c_s * model.single_core_fraction,
            model.restore_energy_2c_j * model.single_core_fraction};
}

ThresholdConfig configure_thresholds(Mode mode, const CapacitorSpec& spec, double v_high,
                                     const ThresholdOverrides& overrides,
                                     const CheckpointModel& checkpoint,
                                     const PlatformCosts& costs,
                                     double checkpoint_margin) {
    ThresholdConfig t = ThresholdConfig::from_voltages(spec, v_high, overrides.v_mid,
                                                       overrides.v_low);
    const ActionCost ckpt = checkpoint_cost(mode, checkpoint);
    if (t.e_low_j < ckpt.energy_j * (1.0 + checkpoint_margin))
        throw std::invalid_argument(std::string("v_low too small: the ") + to_string(mode) +
                                    " backup cannot complete below it");
    if (t.e_mid_low_j() < costs.sleep_transition_energy_j)
        throw std::invalid_argument("v_mid too close to v_low: the sleep transition "
                                    "does not fit in the mid/low gap");
    return t;
}

}  // namespace pearlsim
