#ifndef PEARLSIM_CONFIG_HPP
#define PEARLSIM_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "pearlsim/energy_model.hpp"
#include "pearlsim/policy.hpp"
#include "pearlsim/predictor.hpp"
#include "pearlsim/workload.hpp"

namespace pearlsim {

// Configuration problems surface before a run starts; the CLI maps this to
// exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WorkloadParams {
    std::uint64_t total_instructions = 1000000;
    double parallel_fraction = 1.0;
    std::uint64_t mean_block_size = 10000;
    double instr_time_s = 10e-6;
    ParallelBasis basis = ParallelBasis::instructions;
};

struct DaylightParams {
    double peak_base_mw = 21.0;
    double day_base_s = 35.0;
    double step_s = 0.05;
};

struct SimulationConfig {
    CapacitorSpec capacitor;
    double v_high = 2.9;
    ThresholdOverrides thresholds_1c{2.00, 1.89};
    ThresholdOverrides thresholds_2c{2.01, 2.00};
    PlatformCosts costs;
    CheckpointModel checkpoint;
    PredictorConfig predictor;
    PolicySpec policy;
    AdamicaConfig adamica;
    RockClimbConfig rockclimb;
    WorkloadParams workload;
    DaylightParams daylight;
    std::uint64_t seed = 42;
    double max_sim_time_s = 1e6;
    double off_floor_j = 0.0;
    bool start_charged = true;
    bool collect_event_log = false;
    bool collect_p_hat_trajectory = false;

    ThresholdConfig thresholds(Mode mode) const;
    InstructionCost instruction_cost() const;
};

SimulationConfig default_config();

// Full consistency check; throws ConfigError naming the offending field.
void validate(const SimulationConfig& cfg);

SimulationConfig load_config(const std::string& path);
void save_config(const SimulationConfig& cfg, const std::string& path);
std::string config_to_json(const SimulationConfig& cfg);
SimulationConfig config_from_json(const std::string& text);

}  // namespace pearlsim

#endif
