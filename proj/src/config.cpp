#include "pearlsim/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pearlsim {

using nlohmann::json;

ThresholdConfig SimulationConfig::thresholds(Mode mode) const {
    const ThresholdOverrides& o =
        mode == Mode::single_core ? thresholds_1c : thresholds_2c;
    return configure_thresholds(mode, capacitor, v_high, o, checkpoint, costs);
}

InstructionCost SimulationConfig::instruction_cost() const {
    return {workload.instr_time_s, workload.instr_time_s * costs.p_active_1c_w};
}

SimulationConfig default_config() { return SimulationConfig{}; }

void validate(const SimulationConfig& cfg) {
    auto fail = [](const std::string& msg) { throw ConfigError(msg); };

    if (cfg.capacitor.capacitance_f <= 0.0) fail("capacitor.capacitance must be positive");
    if (cfg.capacitor.v_max <= 0.0) fail("capacitor.v_max must be positive");
    if (cfg.v_high > cfg.capacitor.v_max + 1e-12)
        fail("thresholds.v_high exceeds capacitor.v_max");

    const PlatformCosts& c = cfg.costs;
    if (c.p_lpm_w <= 0.0 || c.p_active_1c_w <= 0.0 || c.p_active_2c_w <= 0.0)
        fail("platform powers must be positive");
    if (!(c.p_lpm_w < c.p_active_1c_w && c.p_active_1c_w < c.p_active_2c_w))
        fail("platform powers must satisfy p_lpm < p_active_1c < p_active_2c");
    if (c.single_core_backup_fraction <= 0.0 || c.single_core_backup_fraction > 1.0)
        fail("platform.single_core_backup_fraction must lie in (0, 1]");

    ThresholdConfig t1c, t2c;
    try {
        t1c = cfg.thresholds(Mode::single_core);
        t2c = cfg.thresholds(Mode::dual_core);
    } catch (const std::invalid_argument& e) {
        fail(std::string("thresholds: ") + e.what());
    }
    if (cfg.thresholds_1c.v_low >= cfg.thresholds_2c.v_low ||
        cfg.thresholds_1c.v_mid >= cfg.thresholds_2c.v_mid)
        fail("single-core thresholds must sit below the dual-core ones");

    // Progress guarantee: a full charge must cover reboot plus restore and
    // still leave the capacitor above the sleep threshold.
    for (Mode m : {Mode::single_core, Mode::dual_core}) {
        const ThresholdConfig& t = m == Mode::single_core ? t1c : t2c;
        const double reboot = cfg.costs.boot_energy_j + restore_cost(m, cfg.checkpoint).energy_j;
        if (t.e_high_mid_j() <= reboot)
            fail(std::string("thresholds: the ") + to_string(m) +
                 " high/mid gap cannot fund boot plus restore");
    }
    const double slot_j = cfg.workload.instr_time_s * c.p_active_2c_w;
    if (slot_j > std::min(t1c.e_high_mid_j(), t2c.e_high_mid_j()))
        fail("workload: a single instruction slot exceeds the usable capacitor energy");

    if (cfg.workload.total_instructions == 0) fail("workload.total_instructions must be positive");
    if (cfg.workload.mean_block_size == 0) fail("workload.mean_block_size must be at least 1");
    if (cfg.workload.parallel_fraction < 0.0 || cfg.workload.parallel_fraction > 1.0)
        fail("workload.parallel_fraction must lie in [0, 1]");
    if (cfg.workload.instr_time_s <= 0.0) fail("workload.instr_time must be positive");

    if (cfg.predictor.alpha <= 0.0 || cfg.predictor.alpha > 1.0)
        fail("predictor.alpha must lie in (0, 1]");
    if (cfg.predictor.p_clamp_max_w <= 0.0) fail("predictor.p_clamp_max must be positive");
    if (cfg.predictor.bump_headroom <= 0.0) fail("predictor.bump_headroom must be positive");

    if (cfg.policy.kind == PolicyKind::rockclimb && cfg.policy.mode == ModeSetting::adaptive)
        fail("policy: rockclimb has no adaptive variant");

    if (cfg.policy.kind == PolicyKind::adamica) {
        const AdamicaConfig& a = cfg.adamica;
        if (a.history_len == 0) fail("adamica.history_len must be at least 1");
        if (a.sample_period_s <= 0.0) fail("adamica.sample_period must be positive");
        if (a.backup_threshold_j < checkpoint_cost(Mode::dual_core, cfg.checkpoint).energy_j)
            fail("adamica.backup_threshold cannot fund the full checkpoint");
        if (a.backup_threshold_j >= t1c.e_high_j)
            fail("adamica.backup_threshold must sit below the wake threshold");
        const double reboot = cfg.costs.boot_energy_j +
                              restore_cost(Mode::dual_core, cfg.checkpoint).energy_j;
        if (t1c.e_high_j - reboot <= a.backup_threshold_j)
            fail("adamica.backup_threshold leaves no room to resume after reboot");
    }

    if (cfg.policy.kind == PolicyKind::rockclimb) {
        const RockClimbConfig& r = cfg.rockclimb;
        if (r.region_instructions == 0) fail("rockclimb.region_instructions must be at least 1");
        if (r.checkpoint_lightness <= 0.0) fail("rockclimb.checkpoint_lightness must be positive");
        for (Mode m : {Mode::single_core, Mode::dual_core}) {
            const ThresholdConfig& t = m == Mode::single_core ? t1c : t2c;
            const std::uint64_t slots = m == Mode::dual_core
                                            ? (r.region_instructions + 1) / 2
                                            : r.region_instructions;
            const double region_j =
                static_cast<double>(slots) * cfg.workload.instr_time_s * active_power(c, m);
            if (region_j > t.e_high_j - t.e_low_j)
                fail(std::string("rockclimb.region_instructions: a ") + to_string(m) +
                     " region does not fit between the wake and backup thresholds");
            const double ckpt_j = checkpoint_cost(m, cfg.checkpoint).energy_j *
                                  r.checkpoint_lightness;
            if (region_j + ckpt_j > t.e_high_j)
                fail(std::string("rockclimb.region_instructions: a ") + to_string(m) +
                     " region plus its checkpoint exceeds a full charge");
        }
    }

    if (cfg.off_floor_j < 0.0 || cfg.off_floor_j >= std::min(t1c.e_low_j, t2c.e_low_j))
        fail("off_floor must lie in [0, e_low)");
    if (cfg.max_sim_time_s <= 0.0) fail("max_sim_time must be positive");
}

namespace {

constexpr int kSchemaVersion = 1;

json to_json(const SimulationConfig& c) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["capacitor"] = {{"capacitance_f", c.capacitor.capacitance_f},
                      {"v_max", c.capacitor.v_max}};
    j["thresholds"] = {
        {"v_high", c.v_high},
        {"single_core", {{"v_mid", c.thresholds_1c.v_mid}, {"v_low", c.thresholds_1c.v_low}}},
        {"dual_core", {{"v_mid", c.thresholds_2c.v_mid}, {"v_low", c.thresholds_2c.v_low}}}};
    j["platform"] = {{"p_active_1c_mw", c.costs.p_active_1c_w * 1e3},
                     {"p_active_2c_mw", c.costs.p_active_2c_w * 1e3},
                     {"p_lpm_mw", c.costs.p_lpm_w * 1e3},
                     {"boot_time_ms", c.costs.boot_time_s * 1e3},
                     {"boot_energy_mj", c.costs.boot_energy_j * 1e3},
                     {"core_msg_time_ms", c.costs.core_msg_time_s * 1e3},
                     {"core_msg_energy_mj", c.costs.core_msg_energy_j * 1e3},
                     {"threshold_reconfig_time_ms", c.costs.threshold_reconfig_time_s * 1e3},
                     {"threshold_reconfig_energy_mj", c.costs.threshold_reconfig_energy_j * 1e3},
                     {"sleep_transition_time_ms", c.costs.sleep_transition_time_s * 1e3},
                     {"sleep_transition_energy_mj", c.costs.sleep_transition_energy_j * 1e3}};
    j["checkpoint"] = {{"time_2c_ms", c.checkpoint.time_2c_s * 1e3},
                       {"energy_2c_mj", c.checkpoint.energy_2c_j * 1e3},
                       {"restore_time_2c_ms", c.checkpoint.restore_time_2c_s * 1e3},
                       {"restore_energy_2c_mj", c.checkpoint.restore_energy_2c_j * 1e3},
                       {"single_core_fraction", c.checkpoint.single_core_fraction}};
    j["predictor"] = {{"alpha", c.predictor.alpha},
                      {"p_clamp_max_mw", c.predictor.p_clamp_max_w * 1e3},
                      {"bump_headroom", c.predictor.bump_headroom}};
    j["policy"] = {{"kind", to_string(c.policy.kind)}, {"mode", to_string(c.policy.mode)}};
    j["adamica"] = {{"history_len", c.adamica.history_len},
                    {"sample_period_ms", c.adamica.sample_period_s * 1e3},
                    {"adc_sample_time_ms", c.adamica.adc_sample_time_s * 1e3},
                    {"adc_sample_energy_mj", c.adamica.adc_sample_energy_j * 1e3},
                    {"backup_threshold_mj", c.adamica.backup_threshold_j * 1e3}};
    j["rockclimb"] = {{"region_instructions", c.rockclimb.region_instructions},
                      {"checkpoint_lightness", c.rockclimb.checkpoint_lightness}};
    j["workload"] = {{"total_instructions", c.workload.total_instructions},
                     {"parallel_fraction", c.workload.parallel_fraction},
                     {"mean_block_size", c.workload.mean_block_size},
                     {"instr_time_ms", c.workload.instr_time_s * 1e3},
                     {"parallel_basis",
                      c.workload.basis == ParallelBasis::instructions ? "instructions" : "blocks"}};
    j["daylight"] = {{"peak_base_mw", c.daylight.peak_base_mw},
                     {"day_base_s", c.daylight.day_base_s},
                     {"step_s", c.daylight.step_s}};
    j["sim"] = {{"seed", c.seed},
                {"max_sim_time_s", c.max_sim_time_s},
                {"off_floor_mj", c.off_floor_j * 1e3},
                {"start_charged", c.start_charged}};
    return j;
}

template <typename T>
void read_field(const json& j, const char* section, const char* key, T& out) {
    if (!j.contains(key)) return;
    try {
        out = j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(std::string(section) + "." + key + " has the wrong type");
    }
}

void read_scaled(const json& j, const char* section, const char* key, double scale,
                 double& out_si) {
    if (!j.contains(key)) return;
    if (!j.at(key).is_number())
        throw ConfigError(std::string(section) + "." + key + " must be a number");
    out_si = j.at(key).get<double>() * scale;
}

SimulationConfig from_json(const json& j) {
    SimulationConfig c = default_config();
    if (j.contains("schema_version") && j.at("schema_version").get<int>() != kSchemaVersion)
        throw ConfigError("unsupported schema_version");

    if (j.contains("capacitor")) {
        const json& s = j.at("capacitor");
        read_field(s, "capacitor", "capacitance_f", c.capacitor.capacitance_f);
        read_field(s, "capacitor", "v_max", c.capacitor.v_max);
    }
    if (j.contains("thresholds")) {
        const json& s = j.at("thresholds");
        read_field(s, "thresholds", "v_high", c.v_high);
        if (s.contains("single_core")) {
            read_field(s.at("single_core"), "thresholds.single_core", "v_mid",
                       c.thresholds_1c.v_mid);
            read_field(s.at("single_core"), "thresholds.single_core", "v_low",
                       c.thresholds_1c.v_low);
        }
        if (s.contains("dual_core")) {
            read_field(s.at("dual_core"), "thresholds.dual_core", "v_mid", c.thresholds_2c.v_mid);
            read_field(s.at("dual_core"), "thresholds.dual_core", "v_low", c.thresholds_2c.v_low);
        }
    }
    if (j.contains("platform")) {
        const json& s = j.at("platform");
        read_scaled(s, "platform", "p_active_1c_mw", 1e-3, c.costs.p_active_1c_w);
        read_scaled(s, "platform", "p_active_2c_mw", 1e-3, c.costs.p_active_2c_w);
        read_scaled(s, "platform", "p_lpm_mw", 1e-3, c.costs.p_lpm_w);
        read_scaled(s, "platform", "boot_time_ms", 1e-3, c.costs.boot_time_s);
        read_scaled(s, "platform", "boot_energy_mj", 1e-3, c.costs.boot_energy_j);
        read_scaled(s, "platform", "core_msg_time_ms", 1e-3, c.costs.core_msg_time_s);
        read_scaled(s, "platform", "core_msg_energy_mj", 1e-3, c.costs.core_msg_energy_j);
        read_scaled(s, "platform", "threshold_reconfig_time_ms", 1e-3,
                    c.costs.threshold_reconfig_time_s);
        read_scaled(s, "platform", "threshold_reconfig_energy_mj", 1e-3,
                    c.costs.threshold_reconfig_energy_j);
        read_scaled(s, "platform", "sleep_transition_time_ms", 1e-3,
                    c.costs.sleep_transition_time_s);
        read_scaled(s, "platform", "sleep_transition_energy_mj", 1e-3,
                    c.costs.sleep_transition_energy_j);
    }
    if (j.contains("checkpoint")) {
        const json& s = j.at("checkpoint");
        read_scaled(s, "checkpoint", "time_2c_ms", 1e-3, c.checkpoint.time_2c_s);
        read_scaled(s, "checkpoint", "energy_2c_mj", 1e-3, c.checkpoint.energy_2c_j);
        read_scaled(s, "checkpoint", "restore_time_2c_ms", 1e-3, c.checkpoint.restore_time_2c_s);
        read_scaled(s, "checkpoint", "restore_energy_2c_mj", 1e-3,
                    c.checkpoint.restore_energy_2c_j);
        read_field(s, "checkpoint", "single_core_fraction", c.checkpoint.single_core_fraction);
        c.costs.checkpoint_time_2c_s = c.checkpoint.time_2c_s;
        c.costs.checkpoint_energy_2c_j = c.checkpoint.energy_2c_j;
        c.costs.restore_time_2c_s = c.checkpoint.restore_time_2c_s;
        c.costs.restore_energy_2c_j = c.checkpoint.restore_energy_2c_j;
        c.costs.single_core_backup_fraction = c.checkpoint.single_core_fraction;
    }
    if (j.contains("predictor")) {
        const json& s = j.at("predictor");
        read_field(s, "predictor", "alpha", c.predictor.alpha);
        read_scaled(s, "predictor", "p_clamp_max_mw", 1e-3, c.predictor.p_clamp_max_w);
        read_field(s, "predictor", "bump_headroom", c.predictor.bump_headroom);
    }
    if (j.contains("policy")) {
        const json& s = j.at("policy");
        std::string kind = to_string(c.policy.kind), mode = to_string(c.policy.mode);
        read_field(s, "policy", "kind", kind);
        read_field(s, "policy", "mode", mode);
        if (kind == "pearl") c.policy.kind = PolicyKind::pearl;
        else if (kind == "adamica") c.policy.kind = PolicyKind::adamica;
        else if (kind == "rockclimb") c.policy.kind = PolicyKind::rockclimb;
        else throw ConfigError("policy.kind must be pearl, adamica, or rockclimb");
        if (mode == "1c") c.policy.mode = ModeSetting::fixed_1c;
        else if (mode == "2c") c.policy.mode = ModeSetting::fixed_2c;
        else if (mode == "adaptive") c.policy.mode = ModeSetting::adaptive;
        else throw ConfigError("policy.mode must be 1c, 2c, or adaptive");
    }
    if (j.contains("adamica")) {
        const json& s = j.at("adamica");
        read_field(s, "adamica", "history_len", c.adamica.history_len);
        read_scaled(s, "adamica", "sample_period_ms", 1e-3, c.adamica.sample_period_s);
        read_scaled(s, "adamica", "adc_sample_time_ms", 1e-3, c.adamica.adc_sample_time_s);
        read_scaled(s, "adamica", "adc_sample_energy_mj", 1e-3, c.adamica.adc_sample_energy_j);
        read_scaled(s, "adamica", "backup_threshold_mj", 1e-3, c.adamica.backup_threshold_j);
    }
    if (j.contains("rockclimb")) {
        const json& s = j.at("rockclimb");
        read_field(s, "rockclimb", "region_instructions", c.rockclimb.region_instructions);
        read_field(s, "rockclimb", "checkpoint_lightness", c.rockclimb.checkpoint_lightness);
    }
    if (j.contains("workload")) {
        const json& s = j.at("workload");
        read_field(s, "workload", "total_instructions", c.workload.total_instructions);
        read_field(s, "workload", "parallel_fraction", c.workload.parallel_fraction);
        read_field(s, "workload", "mean_block_size", c.workload.mean_block_size);
        read_scaled(s, "workload", "instr_time_ms", 1e-3, c.workload.instr_time_s);
        std::string basis = "instructions";
        read_field(s, "workload", "parallel_basis", basis);
        if (basis == "instructions") c.workload.basis = ParallelBasis::instructions;
        else if (basis == "blocks") c.workload.basis = ParallelBasis::blocks;
        else throw ConfigError("workload.parallel_basis must be instructions or blocks");
    }
    if (j.contains("daylight")) {
        const json& s = j.at("daylight");
        read_field(s, "daylight", "peak_base_mw", c.daylight.peak_base_mw);
        read_field(s, "daylight", "day_base_s", c.daylight.day_base_s);
        read_field(s, "daylight", "step_s", c.daylight.step_s);
    }
    if (j.contains("sim")) {
        const json& s = j.at("sim");
        read_field(s, "sim", "seed", c.seed);
        read_field(s, "sim", "max_sim_time_s", c.max_sim_time_s);
        read_scaled(s, "sim", "off_floor_mj", 1e-3, c.off_floor_j);
        read_field(s, "sim", "start_charged", c.start_charged);
    }
    return c;
}

}  // namespace

std::string config_to_json(const SimulationConfig& cfg) { return to_json(cfg).dump(2); }

SimulationConfig config_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return from_json(j);
}

SimulationConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return config_from_json(ss.str());
}

void save_config(const SimulationConfig& cfg, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open " + path + " for writing");
    out << config_to_json(cfg) << '\n';
}

}  // namespace pearlsim
