#include "cssl/complexity.hpp"

#include <cstdio>
#include <sstream>

#include "cssl/common.hpp"

namespace cssl {

int64_t iterations(int64_t instances, int64_t epochs, int64_t batch_size) {
  if (instances <= 0 || epochs <= 0 || batch_size <= 0)
    throw Error::invalid("iterations: instances, epochs and batch_size must be positive");
  int64_t total = instances * epochs;
  return (total + batch_size - 1) / batch_size;  // ceil
}

int64_t curriculum_iterations(const std::vector<int64_t>& task_iterations,
                              int64_t transfer_iterations, int num_tasks) {
  if (num_tasks < 1) throw Error::invalid("curriculum_iterations: K must be >= 1");
  if (static_cast<int>(task_iterations.size()) != num_tasks)
    throw Error::invalid("curriculum_iterations: task list length must equal K");
  for (int64_t it : task_iterations)
    if (it <= 0) throw Error::invalid("curriculum_iterations: iteration counts must be positive");
  if (transfer_iterations <= 0)
    throw Error::invalid("curriculum_iterations: transfer iterations must be positive");
  int64_t total = task_iterations[0];
  for (size_t k = 1; k < task_iterations.size(); ++k) total += 2 * task_iterations[k];
  total += static_cast<int64_t>(num_tasks) * transfer_iterations;
  return total;
}

CostTable build_cost_table(const std::vector<CostLine>& tasks, int64_t transfer_iterations,
                           int64_t baseline_iterations, bool strict) {
  CostTable table;
  table.tasks = tasks;
  table.transfer_iterations = transfer_iterations;
  table.baseline_iterations = baseline_iterations;

  std::vector<int64_t> its;
  for (const auto& line : tasks) {
    its.push_back(line.stated_iterations);
    if (strict && line.instances > 0 && line.epochs > 0 && line.batch_size > 0) {
      int64_t recomputed = iterations(line.instances, line.epochs, line.batch_size);
      if (recomputed != line.stated_iterations) {
        std::ostringstream os;
        os << line.name << ": stated " << line.stated_iterations << " but N*E/B gives "
           << recomputed;
        table.eq1_flags.push_back(os.str());
      }
    }
  }
  table.curriculum_total =
      curriculum_iterations(its, transfer_iterations, static_cast<int>(its.size()));
  if (baseline_iterations > 0)
    table.ratio = static_cast<double>(baseline_iterations) / table.curriculum_total;
  return table;
}

std::string render_cost_table(const CostTable& t) {
  std::ostringstream os;
  char buf[160];
  os << "Pretraining cost model (iterations = ceil(N*E/B))\n";
  std::snprintf(buf, sizeof(buf), "%-14s %10s %7s %6s %12s\n", "task", "N", "E", "B",
                "iterations");
  os << buf;
  for (const auto& l : t.tasks) {
    std::snprintf(buf, sizeof(buf), "%-14s %10lld %7lld %6lld %12lld\n", l.name.c_str(),
                  static_cast<long long>(l.instances), static_cast<long long>(l.epochs),
                  static_cast<long long>(l.batch_size),
                  static_cast<long long>(l.stated_iterations));
    os << buf;
  }
  os << "transfer iterations per fine-tune: " << t.transfer_iterations << "\n";
  os << "curriculum total: " << t.curriculum_total << "\n";
  if (t.baseline_iterations > 0) {
    std::snprintf(buf, sizeof(buf), "baseline: %lld  (baseline/curriculum = %.2fx cheaper)\n",
                  static_cast<long long>(t.baseline_iterations), t.ratio);
    os << buf;
  }
  for (const auto& f : t.eq1_flags) os << "WARNING " << f << "\n";
  return os.str();
}

std::string cost_table_tsv(const CostTable& t) {
  std::ostringstream os;
  os << "task\tinstances\tepochs\tbatch_size\titerations\n";
  for (const auto& l : t.tasks)
    os << l.name << "\t" << l.instances << "\t" << l.epochs << "\t" << l.batch_size << "\t"
       << l.stated_iterations << "\n";
  os << "transfer\t\t\t\t" << t.transfer_iterations << "\n";
  os << "curriculum_total\t\t\t\t" << t.curriculum_total << "\n";
  if (t.baseline_iterations > 0) {
    os << "baseline\t\t\t\t" << t.baseline_iterations << "\n";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", t.ratio);
    os << "ratio\t\t\t\t" << buf << "\n";
  }
  return os.str();
}

}  // namespace cssl
