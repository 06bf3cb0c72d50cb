#include "pearlsim/workload.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>

namespace pearlsim {

namespace {

// Raw engine draws instead of std::uniform_int_distribution keep the block
// layout identical across standard library implementations.
std::uint64_t draw_in_range(std::mt19937_64& eng, std::uint64_t lo, std::uint64_t hi) {
    return lo + eng() % (hi - lo + 1);
}

}  // namespace

Workload generate_workload(std::uint64_t seed, std::uint64_t total_instructions,
                           double parallel_fraction, std::uint64_t mean_block_size,
                           InstructionCost cost, ParallelBasis basis) {
    if (total_instructions == 0)
        throw std::invalid_argument("total_instructions must be positive");
    if (mean_block_size == 0)
        throw std::invalid_argument("mean_block_size must be at least 1");
    if (parallel_fraction < 0.0 || parallel_fraction > 1.0)
        throw std::invalid_argument("parallel_fraction must lie in [0, 1]");

    std::mt19937_64 eng(seed);
    const std::uint64_t lo = std::max<std::uint64_t>(1, mean_block_size / 2);
    const std::uint64_t hi = std::max<std::uint64_t>(lo, mean_block_size + mean_block_size / 2);

    Workload w;
    std::uint64_t remaining = total_instructions;
    while (remaining > 0) {
        std::uint64_t n = std::min(remaining, draw_in_range(eng, lo, hi));
        Block b;
        b.id = static_cast<std::uint32_t>(w.blocks.size());
        b.instruction_count = n;
        b.cost = cost;
        b.parallelizable = false;
        w.blocks.push_back(b);
        remaining -= n;
    }
    w.total_instructions = total_instructions;

    if (parallel_fraction >= 1.0) {
        for (auto& b : w.blocks) b.parallelizable = true;
        return w;
    }
    if (parallel_fraction <= 0.0) return w;

    // First pass: independent coin flips, then flip whole blocks in a
    // shuffled order until the share lands within the tolerance band.
    auto share = [&]() {
        if (basis == ParallelBasis::blocks) {
            std::uint64_t k = 0;
            for (const auto& b : w.blocks) k += b.parallelizable ? 1 : 0;
            return static_cast<double>(k) / static_cast<double>(w.blocks.size());
        }
        std::uint64_t k = 0;
        for (const auto& b : w.blocks) k += b.parallelizable ? b.instruction_count : 0;
        return static_cast<double>(k) / static_cast<double>(total_instructions);
    };

    for (auto& b : w.blocks)
        b.parallelizable = (eng() % 1000000) < static_cast<std::uint64_t>(parallel_fraction * 1000000.0);

    std::vector<std::size_t> order(w.blocks.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), eng);

    const double tol = 0.02;
    for (std::size_t i : order) {
        const double s = share();
        if (std::abs(s - parallel_fraction) <= tol) break;
        if (s < parallel_fraction && !w.blocks[i].parallelizable)
            w.blocks[i].parallelizable = true;
        else if (s > parallel_fraction && w.blocks[i].parallelizable)
            w.blocks[i].parallelizable = false;
    }
    return w;
}

std::pair<std::uint64_t, std::uint64_t> split_block(const Block& block) {
    if (!block.parallelizable)
        throw std::invalid_argument("split_block requires a parallelizable block");
    const std::uint64_t half_a = (block.instruction_count + 1) / 2;
    return {half_a, block.instruction_count - half_a};
}

double block_duration_s(const Block& block, Mode mode) {
    const std::uint64_t slots = (mode == Mode::dual_core && block.parallelizable)
                                    ? (block.instruction_count + 1) / 2
                                    : block.instruction_count;
    return static_cast<double>(slots) * block.cost.time_s;
}

std::uint64_t instructions_at(const Block& block, Mode mode, double elapsed_s) {
    if (elapsed_s <= 0.0) return 0;
    if (elapsed_s >= block_duration_s(block, mode)) return block.instruction_count;
    // Guard against a crossing time landing one ulp under a slot boundary.
    const double slots = std::floor(elapsed_s / block.cost.time_s + 1e-9);
    const std::uint64_t done = (mode == Mode::dual_core && block.parallelizable)
                                   ? static_cast<std::uint64_t>(slots) * 2
                                   : static_cast<std::uint64_t>(slots);
    return std::min(done, block.instruction_count);
}

RemainingCost remaining_cost(const ExecutionCursor& cursor, const Workload& workload,
                             Mode mode, const PlatformCosts& costs) {
    RemainingCost rc;
    if (cursor.finished(workload)) return rc;
    const Block& b = workload.blocks[cursor.block_index];
    const double remaining = block_duration_s(b, mode) - cursor.elapsed_in_block_s;
    if (remaining <= 0.0) return rc;
    rc.time_s = remaining;
    rc.energy_j = remaining * active_power(costs, mode);
    return rc;
}

void dump_workload(const Workload& w, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    for (const auto& b : w.blocks)
        out << b.id << ',' << (b.parallelizable ? 1 : 0) << ',' << b.instruction_count << '\n';
}

}  // namespace pearlsim
