#include "doctest.h"

#include <stdexcept>

#include <cstdint>

#include "pearlsim/workload.hpp"

using namespace pearlsim;

namespace {
const InstructionCost kCost{10e-6, 100e-9};
const PlatformCosts kCosts{};
}  // namespace

TEST_CASE("generate_workload hits the boundary fractions exactly") {
    auto all = generate_workload(42, 1000000, 1.0, 10000, kCost);
    std::uint64_t sum = 0;
    for (const auto& b : all.blocks) {
        CHECK(b.parallelizable);
        CHECK(b.instruction_count > 0);
        sum += b.instruction_count;
    }
    CHECK(sum == 1000000);
    CHECK(all.total_instructions == 1000000);

    auto none = generate_workload(42, 1000000, 0.0, 10000, kCost);
    for (const auto& b : none.blocks) CHECK_FALSE(b.parallelizable);
}

TEST_CASE("generate_workload lands the parallel share within two percent") {
    for (std::uint64_t seed : {7ull, 13ull, 101ull}) {
        auto w = generate_workload(seed, 1000000, 0.8, 10000, kCost);
        std::uint64_t par = 0;
        for (const auto& b : w.blocks) par += b.parallelizable ? b.instruction_count : 0;
        const double share = double(par) / 1e6;
        CHECK(share >= 0.78);
        CHECK(share <= 0.82);
    }
}

TEST_CASE("generate_workload is a pure function of its arguments") {
    auto a = generate_workload(7, 200000, 0.8, 5000, kCost);
    auto b = generate_workload(7, 200000, 0.8, 5000, kCost);
    REQUIRE(a.blocks.size() == b.blocks.size());
    for (std::size_t i = 0; i < a.blocks.size(); ++i) {
        CHECK(a.blocks[i].instruction_count == b.blocks[i].instruction_count);
        CHECK(a.blocks[i].parallelizable == b.blocks[i].parallelizable);
    }
    auto c = generate_workload(8, 200000, 0.8, 5000, kCost);
    bool identical = a.blocks.size() == c.blocks.size();
    if (identical) {
        identical = false;
        for (std::size_t i = 0; i < a.blocks.size(); ++i)
            if (a.blocks[i].instruction_count != c.blocks[i].instruction_count) identical = false;
    }
    CHECK_FALSE(identical);
}

TEST_CASE("block sizes stay within the uniform band") {
    auto w = generate_workload(3, 500000, 0.5, 10000, kCost);
    for (std::size_t i = 0; i + 1 < w.blocks.size(); ++i) {
        CHECK(w.blocks[i].instruction_count >= 5000);
        CHECK(w.blocks[i].instruction_count <= 15000);
    }
}

TEST_CASE("split_block halves evenly with the larger half first") {
    Block b{0, true, 1000, kCost};
    CHECK(split_block(b) == std::pair<std::uint64_t, std::uint64_t>{500, 500});
    b.instruction_count = 1001;
    CHECK(split_block(b) == std::pair<std::uint64_t, std::uint64_t>{501, 500});
    b.instruction_count = 1;
    CHECK(split_block(b) == std::pair<std::uint64_t, std::uint64_t>{1, 0});
    b.parallelizable = false;
    CHECK_THROWS_AS(split_block(b), std::invalid_argument);
}

TEST_CASE("remaining_cost prices a block per mode") {
    Workload w;
    w.blocks.push_back({0, true, 1000, kCost});
    w.total_instructions = 1000;
    ExecutionCursor cur;

    auto c1 = remaining_cost(cur, w, Mode::single_core, kCosts);
    CHECK(c1.time_s == doctest::Approx(10e-3));
    CHECK(c1.energy_j == doctest::Approx(100e-6));

    auto c2 = remaining_cost(cur, w, Mode::dual_core, kCosts);
    CHECK(c2.time_s == doctest::Approx(5e-3));
    // energy scales with the dual-core power over half the time
    CHECK(c2.energy_j == doctest::Approx(5e-3 * kCosts.p_active_2c_w));

    cur.elapsed_in_block_s = 10e-3;
    auto done = remaining_cost(cur, w, Mode::single_core, kCosts);
    CHECK(done.time_s == 0.0);
    CHECK(done.energy_j == 0.0);
}

TEST_CASE("dual-core runtime and energy follow the ceil split") {
    Block b{0, true, 999, kCost};
    const double t1 = block_duration_s(b, Mode::single_core);
    const double t2 = block_duration_s(b, Mode::dual_core);
    CHECK(t1 == doctest::Approx(999 * 10e-6));
    CHECK(t2 == doctest::Approx(500 * 10e-6));
    CHECK(t2 / t1 == doctest::Approx(double((999 + 1) / 2) / 999.0));

    const double e1 = t1 * kCosts.p_active_1c_w;
    const double e2 = t2 * kCosts.p_active_2c_w;
    const double expected_factor =
        (kCosts.p_active_2c_w * 500.0) / (kCosts.p_active_1c_w * 999.0);
    CHECK(e2 / e1 == doctest::Approx(expected_factor));
}

TEST_CASE("instruction progress is monotone and lands exactly on the block") {
    Block serial{0, false, 1000, kCost};
    CHECK(instructions_at(serial, Mode::single_core, 0.0) == 0);
    CHECK(instructions_at(serial, Mode::single_core, 10e-6) == 1);
    CHECK(instructions_at(serial, Mode::single_core, 15e-6) == 1);
    CHECK(instructions_at(serial, Mode::single_core, 10e-3) == 1000);

    Block par{1, true, 1001, kCost};
    CHECK(instructions_at(par, Mode::dual_core, 10e-6) == 2);
    CHECK(instructions_at(par, Mode::dual_core, block_duration_s(par, Mode::dual_core)) == 1001);

    std::uint64_t prev = 0;
    for (int i = 0; i <= 100; ++i) {
        const auto now = instructions_at(par, Mode::dual_core, i * 67e-6);
        CHECK(now >= prev);
        prev = now;
    }
}
