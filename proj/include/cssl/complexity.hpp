#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cssl {

// Iteration counts for one training run: ceil(N * E / B).
int64_t iterations(int64_t instances, int64_t epochs, int64_t batch_size);

// Total pretraining budget of a K-task curriculum pipeline:
//   I_1 + 2 * (I_2 + ... + I_K) + K * I_transfer.
// Task 1 is trained once while establishing the curriculum; every later task
// is trained twice (once individually, once inside the chain); each of the K
// single-source probes plus the final chain costs one downstream transfer.
int64_t curriculum_iterations(const std::vector<int64_t>& task_iterations,
                              int64_t transfer_iterations, int num_tasks);

struct CostLine {
  std::string name;
  int64_t instances = 0;
  int64_t epochs = 0;
  int64_t batch_size = 0;
  int64_t stated_iterations = 0;  // the value used in the composition
};

struct CostTable {
  std::vector<CostLine> tasks;    // curriculum order
  int64_t transfer_iterations = 0;
  int64_t curriculum_total = 0;
  int64_t baseline_iterations = 0;  // reference budget to compare against
  double ratio = 0.0;               // baseline / curriculum_total
  std::vector<std::string> eq1_flags;  // strict mode: stated vs recomputed mismatches
};

// Builds the cost table from per-task stated iteration counts. When strict is
// set, each line is recomputed from (N, E, B) and mismatches are flagged.
CostTable build_cost_table(const std::vector<CostLine>& tasks, int64_t transfer_iterations,
                           int64_t baseline_iterations, bool strict);

std::string render_cost_table(const CostTable& table);
std::string cost_table_tsv(const CostTable& table);

}  // namespace cssl
