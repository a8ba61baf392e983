#include "cssl/core.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace cssl {

const char* to_string(TaskId id) {
  switch (id) {
    case TaskId::relative_location: return "relative_location";
    case TaskId::odc: return "odc";
    case TaskId::moco_v2: return "moco_v2";
    case TaskId::downstream_classification: return "downstream_classification";
  }
  return "?";
}

TaskId task_from_string(const std::string& name) {
  if (name == "relative_location" || name == "rel_loc" || name == "rl")
    return TaskId::relative_location;
  if (name == "odc") return TaskId::odc;
  if (name == "moco_v2" || name == "moco") return TaskId::moco_v2;
  if (name == "downstream_classification" || name == "classifier" || name == "downstream")
    return TaskId::downstream_classification;
  throw Error::invalid("unknown task id: '" + name + "'");
}

std::string display_name(TaskId id) {
  switch (id) {
    case TaskId::relative_location: return "Rel. loc.";
    case TaskId::odc: return "ODC";
    case TaskId::moco_v2: return "MoCo v2";
    case TaskId::downstream_classification: return "Classifier";
  }
  return "?";
}

std::vector<TaskId> pretext_task_ids() {
  return {TaskId::relative_location, TaskId::odc, TaskId::moco_v2};
}

double lr_at_epoch(const LrPolicy& policy, double base_lr, int epoch, int total_epochs) {
  if (epoch < 0 || total_epochs <= 0) throw Error::invalid("lr_at_epoch: bad epoch");
  if (policy.warmup_epochs > 0 && epoch < policy.warmup_epochs) {
    double t = static_cast<double>(epoch) / policy.warmup_epochs;
    return base_lr * (policy.warmup_ratio + (1.0 - policy.warmup_ratio) * t);
  }
  switch (policy.kind) {
    case LrPolicy::Kind::step: {
      int decays = 0;
      for (int m : policy.milestones)
        if (epoch >= m) ++decays;
      return base_lr * std::pow(policy.gamma, decays);
    }
    case LrPolicy::Kind::cosine_annealing:
      return base_lr * 0.5 * (1.0 + std::cos(M_PI * epoch / total_epochs));
  }
  return base_lr;
}

TaskSpec default_task_spec(TaskId id) {
  TaskSpec s;
  s.task_id = id;
  switch (id) {
    case TaskId::relative_location:
      s.epochs = 70;
      s.batch_size = 64;
      s.learning_rate = 0.2;
      s.lr_policy.kind = LrPolicy::Kind::step;
      s.lr_policy.milestones = {30, 50};
      s.head = {HeadDescriptor::Kind::patch_pair_classifier, 8, 0, 0, 0};
      break;
    case TaskId::moco_v2:
      s.epochs = 200;
      s.batch_size = 32;
      s.learning_rate = 0.03;
      s.lr_policy.kind = LrPolicy::Kind::cosine_annealing;
      s.head = {HeadDescriptor::Kind::projection_mlp, 0, 2048, 128, 0};
      break;
    case TaskId::odc:
      s.epochs = 200;
      s.batch_size = 100;
      s.learning_rate = 0.06;
      s.lr_policy.kind = LrPolicy::Kind::step;
      s.lr_policy.milestones = {170};
      s.head = {HeadDescriptor::Kind::cluster_classifier, 100, 0, 0, 0};
      s.odc.clusters = 100;
      break;
    case TaskId::downstream_classification:
      s.epochs = 90;
      s.batch_size = 100;
      s.learning_rate = 0.1;
      s.lr_policy.kind = LrPolicy::Kind::step;
      s.lr_policy.milestones = {30, 60, 80};
      s.lr_policy.warmup_epochs = 10;
      s.lr_policy.warmup_ratio = 0.0001;
      s.head = {HeadDescriptor::Kind::linear_classifier, 8, 0, 0, 0};
      break;
  }
  return s;
}

const char* to_string(Split s) {
  switch (s) {
    case Split::train: return "train";
    case Split::val: return "val";
    case Split::test: return "test";
  }
  return "?";
}

std::vector<int> DatasetHandle::indices_of(Split s) const {
  std::vector<int> out;
  for (size_t i = 0; i < samples.size(); ++i)
    if (i < split.size() && split[i] == s) out.push_back(static_cast<int>(i));
  return out;
}

int64_t DatasetHandle::labeled_count() const {
  int64_t n = 0;
  for (const auto& s : samples)
    if (s.label >= 0) ++n;
  return n;
}

const char* to_string(Taxonomy t) {
  switch (t) {
    case Taxonomy::single: return "single";
    case Taxonomy::curriculum: return "curriculum";
    case Taxonomy::anti_curriculum: return "anti_curriculum";
    case Taxonomy::mixed_curriculum: return "mixed_curriculum";
  }
  return "?";
}

std::string taxonomy_label(Taxonomy t) {
  switch (t) {
    case Taxonomy::single: return "-";
    case Taxonomy::curriculum: return "(C)";
    case Taxonomy::anti_curriculum: return "(AC)";
    case Taxonomy::mixed_curriculum: return "(MC)";
  }
  return "?";
}

const char* to_string(SelectionRule r) {
  return r == SelectionRule::best_val ? "best_val" : "last_epoch";
}

std::map<std::string, Tensor> CheckpointBundle::backbone_parameters() const {
  std::map<std::string, Tensor> out;
  for (const auto& [name, t] : parameters)
    if (name.rfind("backbone.", 0) == 0) out.emplace(name, t);
  return out;
}

std::vector<std::string> EncoderConfig::tap_names() const {
  std::vector<std::string> names = {"stem"};
  for (int i = 0; i < num_stages(); ++i) names.push_back("stage" + std::to_string(i + 1));
  names.push_back("gap");
  return names;
}

std::string EncoderConfig::final_conv_tap() const { return "stage" + std::to_string(num_stages()); }

EncoderConfig EncoderConfig::tiny() {
  EncoderConfig c;
  c.architecture_id = "tiny";
  c.stem_width = 16;
  c.stage_widths = {16, 16, 16, 16};
  c.stage_depths = {1, 1, 1, 1};
  return c;
}

EncoderConfig EncoderConfig::resnet50() {
  EncoderConfig c;
  c.architecture_id = "resnet50";
  c.stem_width = 64;
  c.stage_widths = {256, 512, 1024, 2048};
  c.stage_depths = {3, 4, 6, 3};
  return c;
}

EncoderConfig EncoderConfig::by_name(const std::string& id) {
  if (id == "tiny") return tiny();
  if (id == "resnet50") return resnet50();
  throw Error::invalid("unknown encoder architecture: '" + id + "'");
}

TaskSpec ExperimentManifest::task_spec(TaskId id) const {
  for (const auto& t : tasks)
    if (t.task_id == id) return t;
  return default_task_spec(id);
}

namespace {

void check_task(const TaskSpec& t, const std::string& prefix, std::vector<Diagnostic>& out) {
  if (t.epochs < 1) out.push_back({prefix + ".epochs", "epochs must be >= 1"});
  if (t.batch_size < 1) out.push_back({prefix + ".batch_size", "batch_size must be >= 1"});
  if (!(t.learning_rate > 0.0))
    out.push_back({prefix + ".learning_rate", "learning_rate must be > 0"});
  if (t.lr_policy.kind == LrPolicy::Kind::step) {
    const auto& ms = t.lr_policy.milestones;
    for (size_t i = 0; i < ms.size(); ++i) {
      if (ms[i] >= t.epochs) {
        out.push_back({prefix + ".lr_policy.milestones",
                       "milestone " + std::to_string(ms[i]) + " must be < epochs"});
        break;
      }
      if (i > 0 && ms[i] <= ms[i - 1]) {
        out.push_back({prefix + ".lr_policy.milestones", "milestones must be strictly increasing"});
        break;
      }
    }
  }
  if (t.lr_policy.warmup_epochs < 0)
    out.push_back({prefix + ".lr_policy.warmup_epochs", "warmup_epochs must be >= 0"});
  if (t.lr_policy.warmup_ratio < 0.0)
    out.push_back({prefix + ".lr_policy.warmup_ratio", "warmup_ratio must be >= 0"});
  if (t.task_id == TaskId::odc) {
    if (t.odc.memory_momentum <= 0.0 || t.odc.memory_momentum >= 1.0)
      out.push_back({prefix + ".odc.memory_momentum", "memory momentum must be in (0,1)"});
    if (t.odc.clusters < 0) out.push_back({prefix + ".odc.clusters", "clusters must be >= 0"});
  }
  if (t.task_id == TaskId::moco_v2) {
    if (t.moco.queue < 1) out.push_back({prefix + ".moco.queue", "queue length must be >= 1"});
    if (t.moco.momentum <= 0.0 || t.moco.momentum >= 1.0)
      out.push_back({prefix + ".moco.momentum", "momentum must be in (0,1)"});
    if (!(t.moco.temperature > 0.0))
      out.push_back({prefix + ".moco.temperature", "temperature must be > 0"});
  }
}

}  // namespace

std::vector<Diagnostic> validate_manifest(const ExperimentManifest& m) {
  std::vector<Diagnostic> out;

  if (m.dataset.train_fraction <= 0.0 || m.dataset.train_fraction >= 1.0)
    out.push_back({"dataset.train_fraction", "train_fraction must be in (0,1)"});
  if (m.dataset.image_size < 8) out.push_back({"dataset.image_size", "image_size must be >= 8"});
  if (m.dataset.kind == DatasetProfile::Kind::isic_csv) {
    if (m.dataset.csv_path.empty()) out.push_back({"dataset.csv_path", "csv_path is required"});
    if (m.dataset.image_dir.empty()) out.push_back({"dataset.image_dir", "image_dir is required"});
  } else {
    const auto& g = m.dataset.synthetic;
    if (g.classes < 1) out.push_back({"dataset.synthetic.classes", "classes must be >= 1"});
    if (g.samples_per_class < 1)
      out.push_back({"dataset.synthetic.samples_per_class", "samples_per_class must be >= 1"});
    if (g.image_size < 16)
      out.push_back({"dataset.synthetic.image_size", "image_size must be >= 16"});
    if (g.min_axis_frac <= 0.0 || g.max_axis_frac < g.min_axis_frac ||
        g.max_axis_frac > 0.45)
      out.push_back({"dataset.synthetic.axis_frac", "axis fractions must satisfy 0 < min <= max <= 0.45"});
  }

  if (m.encoder.stage_widths.empty() ||
      m.encoder.stage_widths.size() != m.encoder.stage_depths.size())
    out.push_back({"encoder.stages", "stage_widths and stage_depths must be non-empty and equal length"});
  for (int w : m.encoder.stage_widths)
    if (w < 1) out.push_back({"encoder.stage_widths", "stage width must be >= 1"});
  if (m.encoder.stem_width < 1) out.push_back({"encoder.stem_width", "stem width must be >= 1"});

  std::set<TaskId> seen_tasks;
  for (size_t i = 0; i < m.tasks.size(); ++i) {
    const std::string prefix = "tasks[" + std::to_string(i) + "]";
    if (!seen_tasks.insert(m.tasks[i].task_id).second)
      out.push_back({prefix + ".task_id", "task listed more than once"});
    check_task(m.tasks[i], prefix, out);
  }

  for (size_t i = 0; i < m.orderings.size(); ++i) {
    const std::string prefix = "orderings[" + std::to_string(i) + "]";
    const auto& seq = m.orderings[i];
    if (seq.empty() || seq.size() > 3) {
      out.push_back({prefix, "sequence length must be 1..3"});
      continue;
    }
    std::set<TaskId> seen;
    for (TaskId t : seq) {
      if (t == TaskId::downstream_classification)
        out.push_back({prefix, "downstream task cannot appear in a pretext sequence"});
      if (!seen.insert(t).second) out.push_back({prefix, "duplicate task in sequence"});
    }
  }

  return out;
}

}  // namespace cssl
