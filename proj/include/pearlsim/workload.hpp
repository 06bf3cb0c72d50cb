#ifndef PEARLSIM_WORKLOAD_HPP
#define PEARLSIM_WORKLOAD_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pearlsim/decision.hpp"

namespace pearlsim {

struct InstructionCost {
    double time_s = 10e-6;
    double energy_j = 1e-7;  // time * p_active_1c when derived from platform costs
};

struct Block {
    std::uint32_t id = 0;
    bool parallelizable = false;
    std::uint64_t instruction_count = 0;
    InstructionCost cost;
};

struct Workload {
    std::vector<Block> blocks;
    std::uint64_t total_instructions = 0;
};

// Resume point; what a checkpoint logically preserves. elapsed_in_block_s is
// the wall time already spent executing the current block in its running
// mode, so progress survives sleeps and checkpoint/restore exactly.
struct ExecutionCursor {
    std::size_t block_index = 0;
    std::uint64_t instructions_done_in_block = 0;
    double elapsed_in_block_s = 0.0;

    bool finished(const Workload& w) const { return block_index >= w.blocks.size(); }
};

// How the parallel share is interpreted when flagging blocks.
enum class ParallelBasis { instructions, blocks };

// Deterministic synthetic program: block sizes uniform in [mean/2, 3*mean/2],
// last block truncated to fit, parallel flags hitting the requested share
// within 2% (exact at 0 and 1).
Workload generate_workload(std::uint64_t seed, std::uint64_t total_instructions,
                           double parallel_fraction, std::uint64_t mean_block_size,
                           InstructionCost cost,
                           ParallelBasis basis = ParallelBasis::instructions);

// Even two-way split of a parallelizable block, larger half first.
// Throws std::invalid_argument for non-parallelizable blocks.
std::pair<std::uint64_t, std::uint64_t> split_block(const Block& block);

// Wall time a block occupies in a mode: every instruction sequentially in
// single-core, ceil(n/2) paired slots in dual-core.
double block_duration_s(const Block& block, Mode mode);

// Whole instructions finished after `elapsed` seconds inside a block.
std::uint64_t instructions_at(const Block& block, Mode mode, double elapsed_s);

struct RemainingCost {
    double time_s = 0.0;
    double energy_j = 0.0;
};

// Time/energy to finish the cursor's current block in the given mode,
// assuming no interruption.
RemainingCost remaining_cost(const ExecutionCursor& cursor, const Workload& workload,
                             Mode mode, const PlatformCosts& costs);

// One `id,parallelizable,count` line per block.
void dump_workload(const Workload& w, const std::string& path);

}  // namespace pearlsim

#endif
