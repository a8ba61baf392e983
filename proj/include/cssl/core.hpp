#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cssl/tensor.hpp"

namespace cssl {

// ---------------------------------------------------------------------------
// Tasks
// ---------------------------------------------------------------------------

enum class TaskId { relative_location, odc, moco_v2, downstream_classification };

const char* to_string(TaskId id);
TaskId task_from_string(const std::string& name);
// Human-facing name used in reports ("Rel. loc.", "ODC", "MoCo v2", ...).
std::string display_name(TaskId id);
// The three pretext tasks, in canonical (enum) order.
std::vector<TaskId> pretext_task_ids();

struct LrPolicy {
  enum class Kind { step, cosine_annealing };
  Kind kind = Kind::step;
  std::vector<int> milestones;  // epoch indices, strictly increasing, < epochs
  double gamma = 0.1;
  int warmup_epochs = 0;      // 0 disables warmup
  double warmup_ratio = 1.0;  // starting fraction of the base lr
};

// Epochs are 0-indexed. Warmup ramps linearly from ratio*lr to lr over
// warmup_epochs, then the base policy takes over.
double lr_at_epoch(const LrPolicy& policy, double base_lr, int epoch, int total_epochs);

struct HeadDescriptor {
  enum class Kind { linear_classifier, patch_pair_classifier, projection_mlp, cluster_classifier };
  Kind kind = Kind::linear_classifier;
  int classes = 0;    // linear_classifier(C) / cluster_classifier(K); patch_pair is fixed 8-way
  int hidden = 0;     // projection_mlp
  int out = 0;        // projection_mlp
  int input_dim = 0;  // encoder feature dim (2x for patch_pair); 0 = derive from encoder
};

struct RlOptions {
  int grid = 3;               // 3x3 patch layout
  double gap_frac = 0.125;    // gap = patch_size / 8
  double jitter_frac = 0.0625;  // jitter <= patch_size / 16
  int pairs_per_image = 2;
};

struct OdcOptions {
  int clusters = 0;             // 0 = auto (2x class count at desk scale, 100 full scale)
  double memory_momentum = 0.5;  // mu
  double min_cluster_frac = 0.02;  // min size = max(1, frac * N / K)
};

struct MocoOptions {
  int queue = 1024;          // 65536 at full scale
  double momentum = 0.999;   // m
  double temperature = 0.2;  // tau
};

struct TaskSpec {
  TaskId task_id = TaskId::downstream_classification;
  int epochs = 1;
  int batch_size = 1;
  double learning_rate = 0.1;
  LrPolicy lr_policy;
  HeadDescriptor head;
  RlOptions rl;
  OdcOptions odc;
  MocoOptions moco;
};

// Published training schedule for each task (the full-scale defaults).
TaskSpec default_task_spec(TaskId id);

// ---------------------------------------------------------------------------
// Datasets
// ---------------------------------------------------------------------------

enum class Split { train, val, test };
const char* to_string(Split s);

struct DatasetHandle {
  struct Sample {
    std::string image_ref;  // path to the image file
    int label = -1;         // index into class_names, -1 = unlabeled
  };

  std::vector<Sample> samples;
  std::vector<std::string> class_names;
  std::vector<Split> split;          // parallel to samples
  std::vector<int64_t> class_counts;  // per class index
  std::string mask_dir;  // ground-truth lesion masks when generated synthetically

  std::vector<int> indices_of(Split s) const;
  int64_t labeled_count() const;
  int num_classes() const { return static_cast<int>(class_names.size()); }
};

struct SyntheticLesionConfig {
  int image_size = 64;
  int classes = 4;
  int samples_per_class = 50;
  uint64_t seed = 0;
  bool vignette = true;
  double noise_amplitude = 0.05;  // texture noise added to lesion and skin
  double hue_jitter_deg = 14.0;   // per-sample jitter around the class hue
  double min_axis_frac = 0.14;    // ellipse semi-axis range, fraction of image size
  double max_axis_frac = 0.30;
};

struct DatasetProfile {
  enum class Kind { isic_csv, synthetic };
  Kind kind = Kind::synthetic;
  std::string image_dir;  // isic_csv
  std::string csv_path;   // isic_csv
  SyntheticLesionConfig synthetic;
  int image_size = 224;         // network input size after augmentation
  double train_fraction = 0.8;  // remainder split evenly into val / test
};

// ---------------------------------------------------------------------------
// Orderings and checkpoints
// ---------------------------------------------------------------------------

enum class Taxonomy { single, curriculum, anti_curriculum, mixed_curriculum };
const char* to_string(Taxonomy t);
// Table-style label: "-", "(C)", "(AC)", "(MC)".
std::string taxonomy_label(Taxonomy t);

struct OrderingRecord {
  std::vector<TaskId> sequence;  // pretext tasks, length 1..3, no repeats
  Taxonomy taxonomy = Taxonomy::single;
  bool is_full = false;  // sequence uses every available pretext task
  std::optional<double> downstream_balanced_accuracy;
  bool failed = false;  // chain aborted; partial artifacts retained
};

enum class SelectionRule { best_val, last_epoch };
const char* to_string(SelectionRule r);

struct CheckpointBundle {
  std::map<std::string, Tensor> parameters;  // "backbone.*" / "head.*"
  std::vector<TaskId> provenance;            // completed tasks, in order
  int epoch = 0;
  SelectionRule selection_rule = SelectionRule::last_epoch;
  uint64_t seed = 0;

  std::map<std::string, Tensor> backbone_parameters() const;
};

// ---------------------------------------------------------------------------
// Encoder configuration
// ---------------------------------------------------------------------------

struct EncoderConfig {
  std::string architecture_id = "tiny";
  int input_channels = 3;
  int stem_width = 16;
  std::vector<int> stage_widths = {16, 16, 16, 16};
  std::vector<int> stage_depths = {1, 1, 1, 1};

  int feature_dim() const { return stage_widths.empty() ? stem_width : stage_widths.back(); }
  int num_stages() const { return static_cast<int>(stage_widths.size()); }
  // "stem", "stage1".."stageN" (conv feature maps), then "gap".
  std::vector<std::string> tap_names() const;
  std::string final_conv_tap() const;

  static EncoderConfig tiny();      // 4 residual stages, width 16
  static EncoderConfig resnet50();  // the full-scale profile (never trained here)
  static EncoderConfig by_name(const std::string& id);
};

// ---------------------------------------------------------------------------
// Experiment manifest
// ---------------------------------------------------------------------------

struct ExperimentManifest {
  DatasetProfile dataset;
  EncoderConfig encoder;
  std::vector<TaskSpec> tasks;  // at most one per TaskId; absent tasks use defaults
  std::vector<std::vector<TaskId>> orderings;  // planned; empty = enumerate all
  uint64_t seed = 0;
  std::string output_dir = "outputs";

  // Returns the manifest spec for the task, or the Table defaults when absent.
  TaskSpec task_spec(TaskId id) const;
};

struct Diagnostic {
  std::string path;  // manifest field path, e.g. "tasks[1].batch_size"
  std::string message;
};

std::vector<Diagnostic> validate_manifest(const ExperimentManifest& manifest);

// JSON (de)serialization. load_manifest throws Error::invalid with file/line
// context on parse failure.
ExperimentManifest load_manifest(const std::string& path);
void save_manifest(const ExperimentManifest& manifest, const std::string& path);
std::string manifest_to_json_text(const ExperimentManifest& manifest);
ExperimentManifest manifest_from_json_text(const std::string& text);

}  // namespace cssl
