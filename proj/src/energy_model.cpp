#include "pearlsim/energy_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pearlsim {

ThresholdConfig ThresholdConfig::from_voltages(const CapacitorSpec& spec, double v_high,
                                               double v_mid, double v_low) {
    if (!(v_low < v_mid && v_mid < v_high))
        throw std::invalid_argument("thresholds must satisfy v_low < v_mid < v_high");
    if (v_low < 0.0)
        throw std::invalid_argument("thresholds must be non-negative");
    ThresholdConfig t;
    t.v_high = v_high;
    t.v_mid = v_mid;
    t.v_low = v_low;
    const double half_c = 0.5 * spec.capacitance_f;
    t.e_high_j = half_c * v_high * v_high;
    t.e_mid_j = half_c * v_mid * v_mid;
    t.e_low_j = half_c * v_low * v_low;
    return t;
}

double energy_between(const CapacitorSpec& spec, double v_hi, double v_lo) {
    if (v_lo < 0.0 || v_hi < v_lo)
        throw std::invalid_argument("energy_between requires v_hi >= v_lo >= 0");
    return 0.5 * spec.capacitance_f * (v_hi * v_hi - v_lo * v_lo);
}

std::optional<double> time_to_reach_high(double e_high_mid_j, double p_amb_w,
                                         double p_lpm_w) {
    if (e_high_mid_j < 0.0)
        throw std::invalid_argument("energy gap must be non-negative");
    if (p_amb_w <= p_lpm_w) return std::nullopt;
    return e_high_mid_j / (p_amb_w - p_lpm_w);
}

std::optional<double> time_to_reach_low(double e_mid_low_j, double p_amb_w,
                                        double p_lpm_w) {
    if (e_mid_low_j < 0.0)
        throw std::invalid_argument("energy gap must be non-negative");
    if (p_amb_w >= p_lpm_w) return std::nullopt;
    return e_mid_low_j / (p_lpm_w - p_amb_w);
}

AdvanceResult advance_capacitor(CapacitorState state, double net_power_w,
                                double duration_s, const CapacitorSpec& spec) {
    if (duration_s < 0.0)
        throw std::invalid_argument("duration must be non-negative");
    AdvanceResult r;
    const double e_max = spec.max_energy_j();
    const double raw = state.energy_j + net_power_w * duration_s;
    if (raw > e_max) {
        r.overflow_j = raw - e_max;
        r.state.energy_j = e_max;
    } else if (raw < 0.0) {
        r.state.energy_j = 0.0;
    } else {
        r.state.energy_j = raw;
    }
    return r;
}

std::optional<double> time_to_cross(CapacitorState state, double net_power_w,
                                    double target_energy_j) {
    const double gap = target_energy_j - state.energy_j;
    if (gap == 0.0) return 0.0;
    if (net_power_w == 0.0) return std::nullopt;
    const double t = gap / net_power_w;
    if (t < 0.0) return std::nullopt;
    return t;
}

}  // namespace pearlsim
