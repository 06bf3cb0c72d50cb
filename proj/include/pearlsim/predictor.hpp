#ifndef PEARLSIM_PREDICTOR_HPP
#define PEARLSIM_PREDICTOR_HPP

#include <optional>

#include "pearlsim/decision.hpp"

namespace pearlsim {

struct PredictorConfig {
    double alpha = 0.2;           // EWMA weight, (0, 1]
    double p_clamp_max_w = 0.1;   // upper clamp for every estimate
    // The timer step drives the prediction toward bump_headroom * p_1c; a
    // target above p_1c lets repeated expiries eventually justify trying
    // the dual-core mode instead of stalling at the decision boundary.
    double bump_headroom = 1.5;
};

// Ambient-power prediction state. The timer deadline is expressed on the
// accumulated-active-time clock: an expiry fires when active time since the
// last reset reaches timer_deadline.
struct PredictorState {
    double p_hat_w = 0.0;
    double dt_1c_s = 0.0;
    double dt_2c_s = 0.0;
    std::optional<double> t_mid_hit_s;
    double timer_deadline_s = 0.0;
};

// Average ambient power over a full high-to-mid discharge, inferred from the
// active time split between modes and the known energy gap. Clamped to
// [0, inf); negative raw values mean the model edges, not physics.
// Throws std::invalid_argument when no active time elapsed.
double estimate_active_power(double dt_1c_s, double dt_2c_s, double p_1c_w,
                             double p_2c_w, double e_high_mid_j);

// Average ambient power over a mid-to-high recharge of known gap.
// Throws std::invalid_argument for non-positive durations.
double estimate_charging_power(double charge_duration_s, double e_high_mid_j);

// Blend the pair of fresh estimates into the running prediction and reset
// the per-window time accounting.
PredictorState ewma_update(PredictorState state, double est_1_w, double est_2_w,
                           const PredictorConfig& cfg);

// Active time the mode needs to burn the high/mid gap with no harvest; the
// period after which a missing mid-threshold hit carries information.
double timer_period(Mode mode, double e_high_mid_j, const PlatformCosts& costs);

// Timer-driven optimistic step: move the prediction toward
// bump_headroom * p_active_1c, never downward.
PredictorState optimistic_bump(PredictorState state, Mode mode,
                               const PlatformCosts& costs, const PredictorConfig& cfg);

}  // namespace pearlsim

#endif
