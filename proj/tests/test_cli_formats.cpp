#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "pearlsim/engine.hpp"

using namespace pearlsim;

TEST_CASE("reports round-trip through JSON") {
    auto cfg = default_config();
    cfg.policy = {PolicyKind::pearl, ModeSetting::fixed_1c};
    cfg.workload.total_instructions = 20000;
    auto r = run_simulation(cfg, constant_trace(5e-3));
    auto text = report_to_json(r);
    auto back = report_from_json(text);
    CHECK(back.policy == r.policy);
    CHECK(back.seed == r.seed);
    CHECK(back.wall_clock_s == doctest::Approx(r.wall_clock_s).epsilon(1e-12));
    CHECK(back.checkpoint_count == r.checkpoint_count);
    CHECK(back.instructions_completed == r.instructions_completed);
    CHECK(back.ledger.harvested_j == doctest::Approx(r.ledger.harvested_j).epsilon(1e-12));
    CHECK(report_to_json(back) == text);
}

TEST_CASE("csv rows line up with the header") {
    auto cfg = default_config();
    cfg.policy = {PolicyKind::rockclimb, ModeSetting::fixed_1c};
    cfg.workload.total_instructions = 20000;
    auto r = run_simulation(cfg, constant_trace(5e-3));
    const auto header = report_csv_header();
    const auto row = report_csv_row(r);
    const auto count = [](const std::string& s) {
        std::size_t n = 1;
        for (char c : s) n += c == ',';
        return n;
    };
    CHECK(count(header) == count(row));
    CHECK(row.substr(0, 9) == "rockclimb");
}

TEST_CASE("event log export writes one line per entry") {
    auto cfg = default_config();
    cfg.policy = {PolicyKind::pearl, ModeSetting::fixed_1c};
    cfg.workload.total_instructions = 20000;
    cfg.collect_event_log = true;
    auto r = run_simulation(cfg, constant_trace(5e-3));
    REQUIRE(!r.event_log.empty());
    const std::string path = "pearlsim_test_events.csv";
    write_event_log_csv(r, path);
    std::ifstream in(path);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == r.event_log.size() + 1);
    std::remove(path.c_str());
}
