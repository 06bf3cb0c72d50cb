#include "pearlsim/predictor.hpp"

#include <algorithm>
#include <stdexcept>

namespace pearlsim {

double estimate_active_power(double dt_1c_s, double dt_2c_s, double p_1c_w,
                             double p_2c_w, double e_high_mid_j) {
    const double total = dt_1c_s + dt_2c_s;
    if (total <= 0.0)
        throw std::invalid_argument("estimate_active_power requires elapsed active time");
    const double consumed = dt_1c_s * p_1c_w + dt_2c_s * p_2c_w;
    return std::max(0.0, (consumed - e_high_mid_j) / total);
}

double estimate_charging_power(double charge_duration_s, double e_high_mid_j) {
    if (charge_duration_s <= 0.0)
        throw std::invalid_argument("estimate_charging_power requires a positive duration");
    return e_high_mid_j / charge_duration_s;
}

PredictorState ewma_update(PredictorState state, double est_1_w, double est_2_w,
                           const PredictorConfig& cfg) {
    const double blended = 0.5 * (est_1_w + est_2_w);
    double p = (1.0 - cfg.alpha) * state.p_hat_w + cfg.alpha * blended;
    state.p_hat_w = std::clamp(p, 0.0, cfg.p_clamp_max_w);
    state.dt_1c_s = 0.0;
    state.dt_2c_s = 0.0;
    state.t_mid_hit_s.reset();
    return state;
}

double timer_period(Mode mode, double e_high_mid_j, const PlatformCosts& costs) {
    return e_high_mid_j / active_power(costs, mode);
}

PredictorState optimistic_bump(PredictorState state, Mode mode,
                               const PlatformCosts& costs, const PredictorConfig& cfg) {
    const double target = cfg.bump_headroom * costs.p_active_1c_w;
    double stepped = (1.0 - cfg.alpha) * state.p_hat_w + cfg.alpha * target;
    stepped = std::clamp(stepped, 0.0, cfg.p_clamp_max_w);
    state.p_hat_w = std::max(state.p_hat_w, stepped);
    (void)mode;
    return state;
}

}  // namespace pearlsim
