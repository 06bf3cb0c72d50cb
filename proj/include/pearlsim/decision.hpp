#ifndef PEARLSIM_DECISION_HPP
#define PEARLSIM_DECISION_HPP

#include <optional>
#include <string>

#include "pearlsim/energy_model.hpp"

namespace pearlsim {

enum class Mode { single_core, dual_core };

inline const char* to_string(Mode m) {
    return m == Mode::single_core ? "1C" : "2C";
}

inline double active_power(const PlatformCosts& c, Mode m) {
    return m == Mode::single_core ? c.p_active_1c_w : c.p_active_2c_w;
}

struct DecisionInputs {
    double p_hat_w = 0.0;
    double p_1c_w = 10e-3;
    double p_2c_w = 24e-3;
    double e_high_mid_j = 1.08e-3;
};

// Dual-vs-single core throughput ratio. nullopt means the predicted power
// covers dual-core draw outright and no comparison is needed.
//   p_hat >= p_2c            -> unconditional dual-core
//   p_hat <  p_1c            -> 2*(p_1c - p_hat) / (p_2c - p_hat)
//   p_1c <= p_hat < p_2c     -> ratio of active-only throughput to the
//                               sleep-interleaved single run; reduces to
//                               2*p_hat / p_2c
std::optional<double> throughput_ratio(const DecisionInputs& in);

// Dual-core iff the ratio is unconditional or >= 1 (ties go dual-core).
Mode select_mode(const DecisionInputs& in);

}  // namespace pearlsim

#endif
