#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "pearlsim/engine.hpp"

namespace pearlsim {

using nlohmann::json;

std::string report_to_json(const SimulationReport& r) {
    json j;
    j["policy"] = r.policy;
    j["mode"] = r.mode_setting;
    j["seed"] = r.seed;
    j["constant_power_mw"] = r.constant_power_w >= 0.0 ? json(r.constant_power_w * 1e3) : json();
    j["wall_clock_ms"] = r.wall_clock_s * 1e3;
    j["truncated"] = r.truncated;
    j["time_ms"] = {{"compute", r.compute_time_s * 1e3},
                    {"sleep_charging", r.sleep_charging_time_s * 1e3},
                    {"sleep_discharging", r.sleep_discharging_time_s * 1e3},
                    {"off_charging", r.off_charging_time_s * 1e3},
                    {"checkpoint", r.checkpoint_time_s * 1e3},
                    {"restore", r.restore_time_s * 1e3},
                    {"boot", r.boot_time_s * 1e3},
                    {"adc", r.adc_time_s * 1e3},
                    {"msg", r.msg_time_s * 1e3},
                    {"reconfig", r.reconfig_time_s * 1e3},
                    {"sleep_transition", r.sleep_transition_time_s * 1e3},
                    {"charging_total", r.charging_time_s() * 1e3}};
    j["energy_mj"] = {{"compute", r.compute_energy_j * 1e3},
                      {"sleep", r.sleep_energy_j * 1e3},
                      {"checkpoint", r.checkpoint_energy_j * 1e3},
                      {"restore", r.restore_energy_j * 1e3},
                      {"boot", r.boot_energy_j * 1e3},
                      {"adc", r.adc_energy_j * 1e3},
                      {"msg", r.msg_energy_j * 1e3},
                      {"reconfig", r.reconfig_energy_j * 1e3},
                      {"sleep_transition", r.sleep_transition_energy_j * 1e3},
                      {"consumed_total", r.consumed_energy_j() * 1e3}};
    j["counts"] = {{"checkpoint", r.checkpoint_count},
                   {"restore", r.restore_count},
                   {"boot", r.boot_count},
                   {"hit_high", r.hit_high_count},
                   {"hit_medium", r.hit_medium_count},
                   {"hit_low", r.hit_low_count},
                   {"mode_switch", r.mode_switch_count},
                   {"adc_sample", r.adc_sample_count},
                   {"power_down_wait", r.power_down_wait_count}};
    j["instructions"] = {{"completed", r.instructions_completed},
                         {"single_core", r.instructions_1c},
                         {"dual_core", r.instructions_2c}};
    j["throughput_instr_per_s"] = r.throughput_ips;
    j["ledger_mj"] = {{"initial", r.ledger.initial_j * 1e3},
                      {"harvested", r.ledger.harvested_j * 1e3},
                      {"consumed", r.ledger.consumed_j * 1e3},
                      {"overflow", r.ledger.overflow_j * 1e3},
                      {"off_drop", r.ledger.off_drop_j * 1e3},
                      {"final", r.ledger.final_j * 1e3}};
    if (!r.p_hat_trajectory.empty()) {
        json traj = json::array();
        for (const auto& [t, p] : r.p_hat_trajectory) traj.push_back({t * 1e3, p * 1e3});
        j["p_hat_trajectory_ms_mw"] = traj;
    }
    return j.dump(2);
}

SimulationReport report_from_json(const std::string& text) {
    json j = json::parse(text);
    SimulationReport r;
    r.policy = j.at("policy").get<std::string>();
    r.mode_setting = j.at("mode").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.constant_power_w =
        j.at("constant_power_mw").is_null() ? -1.0 : j.at("constant_power_mw").get<double>() * 1e-3;
    r.wall_clock_s = j.at("wall_clock_ms").get<double>() * 1e-3;
    r.truncated = j.at("truncated").get<bool>();
    const json& tm = j.at("time_ms");
    r.compute_time_s = tm.at("compute").get<double>() * 1e-3;
    r.sleep_charging_time_s = tm.at("sleep_charging").get<double>() * 1e-3;
    r.sleep_discharging_time_s = tm.at("sleep_discharging").get<double>() * 1e-3;
    r.off_charging_time_s = tm.at("off_charging").get<double>() * 1e-3;
    r.checkpoint_time_s = tm.at("checkpoint").get<double>() * 1e-3;
    r.restore_time_s = tm.at("restore").get<double>() * 1e-3;
    r.boot_time_s = tm.at("boot").get<double>() * 1e-3;
    r.adc_time_s = tm.at("adc").get<double>() * 1e-3;
    r.msg_time_s = tm.at("msg").get<double>() * 1e-3;
    r.reconfig_time_s = tm.at("reconfig").get<double>() * 1e-3;
    r.sleep_transition_time_s = tm.at("sleep_transition").get<double>() * 1e-3;
    const json& em = j.at("energy_mj");
    r.compute_energy_j = em.at("compute").get<double>() * 1e-3;
    r.sleep_energy_j = em.at("sleep").get<double>() * 1e-3;
    r.checkpoint_energy_j = em.at("checkpoint").get<double>() * 1e-3;
    r.restore_energy_j = em.at("restore").get<double>() * 1e-3;
    r.boot_energy_j = em.at("boot").get<double>() * 1e-3;
    r.adc_energy_j = em.at("adc").get<double>() * 1e-3;
    r.msg_energy_j = em.at("msg").get<double>() * 1e-3;
    r.reconfig_energy_j = em.at("reconfig").get<double>() * 1e-3;
    r.sleep_transition_energy_j = em.at("sleep_transition").get<double>() * 1e-3;
    const json& cn = j.at("counts");
    r.checkpoint_count = cn.at("checkpoint").get<std::uint64_t>();
    r.restore_count = cn.at("restore").get<std::uint64_t>();
    r.boot_count = cn.at("boot").get<std::uint64_t>();
    r.hit_high_count = cn.at("hit_high").get<std::uint64_t>();
    r.hit_medium_count = cn.at("hit_medium").get<std::uint64_t>();
    r.hit_low_count = cn.at("hit_low").get<std::uint64_t>();
    r.mode_switch_count = cn.at("mode_switch").get<std::uint64_t>();
    r.adc_sample_count = cn.at("adc_sample").get<std::uint64_t>();
    r.power_down_wait_count = cn.at("power_down_wait").get<std::uint64_t>();
    const json& ins = j.at("instructions");
    r.instructions_completed = ins.at("completed").get<std::uint64_t>();
    r.instructions_1c = ins.at("single_core").get<std::uint64_t>();
    r.instructions_2c = ins.at("dual_core").get<std::uint64_t>();
    r.throughput_ips = j.at("throughput_instr_per_s").get<double>();
    const json& lg = j.at("ledger_mj");
    r.ledger.initial_j = lg.at("initial").get<double>() * 1e-3;
    r.ledger.harvested_j = lg.at("harvested").get<double>() * 1e-3;
    r.ledger.consumed_j = lg.at("consumed").get<double>() * 1e-3;
    r.ledger.overflow_j = lg.at("overflow").get<double>() * 1e-3;
    r.ledger.off_drop_j = lg.at("off_drop").get<double>() * 1e-3;
    r.ledger.final_j = lg.at("final").get<double>() * 1e-3;
    return r;
}

std::string report_csv_header() {
    return "policy,mode,power_mw,seed,truncated,wall_clock_ms,"
           "compute_time_ms,sleep_charging_time_ms,sleep_discharging_time_ms,"
           "off_charging_time_ms,charging_time_ms,checkpoint_time_ms,restore_time_ms,"
           "boot_time_ms,adc_time_ms,"
           "compute_energy_mj,sleep_energy_mj,checkpoint_energy_mj,restore_energy_mj,"
           "boot_energy_mj,adc_energy_mj,msg_energy_mj,reconfig_energy_mj,"
           "sleep_transition_energy_mj,consumed_energy_mj,"
           "checkpoint_count,restore_count,boot_count,hit_high,hit_medium,hit_low,"
           "mode_switches,power_down_waits,instructions,instructions_1c,instructions_2c,"
           "throughput_instr_per_s,harvested_mj,overflow_mj,off_drop_mj,final_mj";
}

namespace {
std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}
}  // namespace

std::string report_csv_row(const SimulationReport& r) {
    std::string s;
    s += r.policy;
    s += ',';
    s += r.mode_setting;
    s += ',';
    s += r.constant_power_w >= 0.0 ? num(r.constant_power_w * 1e3) : std::string("trace");
    s += ',' + std::to_string(r.seed);
    s += ',' + std::string(r.truncated ? "1" : "0");
    s += ',' + num(r.wall_clock_s * 1e3);
    s += ',' + num(r.compute_time_s * 1e3);
    s += ',' + num(r.sleep_charging_time_s * 1e3);
    s += ',' + num(r.sleep_discharging_time_s * 1e3);
    s += ',' + num(r.off_charging_time_s * 1e3);
    s += ',' + num(r.charging_time_s() * 1e3);
    s += ',' + num(r.checkpoint_time_s * 1e3);
    s += ',' + num(r.restore_time_s * 1e3);
    s += ',' + num(r.boot_time_s * 1e3);
    s += ',' + num(r.adc_time_s * 1e3);
    s += ',' + num(r.compute_energy_j * 1e3);
    s += ',' + num(r.sleep_energy_j * 1e3);
    s += ',' + num(r.checkpoint_energy_j * 1e3);
    s += ',' + num(r.restore_energy_j * 1e3);
    s += ',' + num(r.boot_energy_j * 1e3);
    s += ',' + num(r.adc_energy_j * 1e3);
    s += ',' + num(r.msg_energy_j * 1e3);
    s += ',' + num(r.reconfig_energy_j * 1e3);
    s += ',' + num(r.sleep_transition_energy_j * 1e3);
    s += ',' + num(r.consumed_energy_j() * 1e3);
    s += ',' + std::to_string(r.checkpoint_count);
    s += ',' + std::to_string(r.restore_count);
    s += ',' + std::to_string(r.boot_count);
    s += ',' + std::to_string(r.hit_high_count);
    s += ',' + std::to_string(r.hit_medium_count);
    s += ',' + std::to_string(r.hit_low_count);
    s += ',' + std::to_string(r.mode_switch_count);
    s += ',' + std::to_string(r.power_down_wait_count);
    s += ',' + std::to_string(r.instructions_completed);
    s += ',' + std::to_string(r.instructions_1c);
    s += ',' + std::to_string(r.instructions_2c);
    s += ',' + num(r.throughput_ips);
    s += ',' + num(r.ledger.harvested_j * 1e3);
    s += ',' + num(r.ledger.overflow_j * 1e3);
    s += ',' + num(r.ledger.off_drop_j * 1e3);
    s += ',' + num(r.ledger.final_j * 1e3);
    return s;
}

void write_event_log_csv(const SimulationReport& r, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << "t_ms,from,event,to,mode,energy_mj,note\n";
    for (const auto& e : r.event_log) {
        out << num(e.t_s * 1e3) << ',' << to_string(e.from) << ',' << to_string(e.event) << ','
            << to_string(e.to) << ',' << to_string(e.mode) << ',' << num(e.energy_j * 1e3) << ','
            << e.note << '\n';
    }
}

}  // namespace pearlsim
