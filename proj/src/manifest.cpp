#include <fstream>
#include <sstream>

#include "cssl/core.hpp"
#include "json.hpp"

namespace cssl {

using nlohmann::json;

namespace {

json lr_policy_to_json(const LrPolicy& p) {
  json j;
  j["kind"] = p.kind == LrPolicy::Kind::step ? "step" : "cosine_annealing";
  if (p.kind == LrPolicy::Kind::step) {
    j["milestones"] = p.milestones;
    j["gamma"] = p.gamma;
  }
  if (p.warmup_epochs > 0) {
    j["warmup_epochs"] = p.warmup_epochs;
    j["warmup_ratio"] = p.warmup_ratio;
  }
  return j;
}

LrPolicy lr_policy_from_json(const json& j) {
  LrPolicy p;
  std::string kind = j.value("kind", "step");
  if (kind == "step")
    p.kind = LrPolicy::Kind::step;
  else if (kind == "cosine_annealing")
    p.kind = LrPolicy::Kind::cosine_annealing;
  else
    throw Error::invalid("lr_policy.kind: unknown kind '" + kind + "'");
  p.milestones = j.value("milestones", std::vector<int>{});
  p.gamma = j.value("gamma", 0.1);
  p.warmup_epochs = j.value("warmup_epochs", 0);
  p.warmup_ratio = j.value("warmup_ratio", 1.0);
  return p;
}

json head_to_json(const HeadDescriptor& h) {
  json j;
  switch (h.kind) {
    case HeadDescriptor::Kind::linear_classifier:
      j["kind"] = "linear_classifier";
      j["classes"] = h.classes;
      break;
    case HeadDescriptor::Kind::patch_pair_classifier:
      j["kind"] = "patch_pair_classifier";
      break;
    case HeadDescriptor::Kind::projection_mlp:
      j["kind"] = "projection_mlp";
      j["hidden"] = h.hidden;
      j["out"] = h.out;
      break;
    case HeadDescriptor::Kind::cluster_classifier:
      j["kind"] = "cluster_classifier";
      j["classes"] = h.classes;
      break;
  }
  return j;
}

HeadDescriptor head_from_json(const json& j, HeadDescriptor fallback) {
  HeadDescriptor h = fallback;
  std::string kind = j.value("kind", "");
  if (kind == "linear_classifier")
    h.kind = HeadDescriptor::Kind::linear_classifier;
  else if (kind == "patch_pair_classifier")
    h.kind = HeadDescriptor::Kind::patch_pair_classifier;
  else if (kind == "projection_mlp")
    h.kind = HeadDescriptor::Kind::projection_mlp;
  else if (kind == "cluster_classifier")
    h.kind = HeadDescriptor::Kind::cluster_classifier;
  else if (!kind.empty())
    throw Error::invalid("head.kind: unknown kind '" + kind + "'");
  h.classes = j.value("classes", h.classes);
  h.hidden = j.value("hidden", h.hidden);
  h.out = j.value("out", h.out);
  return h;
}

json task_to_json(const TaskSpec& t) {
  json j;
  j["task"] = to_string(t.task_id);
  j["epochs"] = t.epochs;
  j["batch_size"] = t.batch_size;
  j["learning_rate"] = t.learning_rate;
  j["lr_policy"] = lr_policy_to_json(t.lr_policy);
  j["head"] = head_to_json(t.head);
  if (t.task_id == TaskId::relative_location) {
    j["rl"] = {{"grid", t.rl.grid},
               {"gap_frac", t.rl.gap_frac},
               {"jitter_frac", t.rl.jitter_frac},
               {"pairs_per_image", t.rl.pairs_per_image}};
  } else if (t.task_id == TaskId::odc) {
    j["odc"] = {{"clusters", t.odc.clusters},
                {"memory_momentum", t.odc.memory_momentum},
                {"min_cluster_frac", t.odc.min_cluster_frac}};
  } else if (t.task_id == TaskId::moco_v2) {
    j["moco"] = {{"queue", t.moco.queue},
                 {"momentum", t.moco.momentum},
                 {"temperature", t.moco.temperature}};
  }
  return j;
}

TaskSpec task_from_json(const json& j) {
  TaskSpec t = default_task_spec(task_from_string(j.at("task").get<std::string>()));
  t.epochs = j.value("epochs", t.epochs);
  t.batch_size = j.value("batch_size", t.batch_size);
  t.learning_rate = j.value("learning_rate", t.learning_rate);
  if (j.contains("lr_policy")) t.lr_policy = lr_policy_from_json(j["lr_policy"]);
  if (j.contains("head")) t.head = head_from_json(j["head"], t.head);
  if (j.contains("rl")) {
    const auto& r = j["rl"];
    t.rl.grid = r.value("grid", t.rl.grid);
    t.rl.gap_frac = r.value("gap_frac", t.rl.gap_frac);
    t.rl.jitter_frac = r.value("jitter_frac", t.rl.jitter_frac);
    t.rl.pairs_per_image = r.value("pairs_per_image", t.rl.pairs_per_image);
  }
  if (j.contains("odc")) {
    const auto& o = j["odc"];
    t.odc.clusters = o.value("clusters", t.odc.clusters);
    t.odc.memory_momentum = o.value("memory_momentum", t.odc.memory_momentum);
    t.odc.min_cluster_frac = o.value("min_cluster_frac", t.odc.min_cluster_frac);
  }
  if (j.contains("moco")) {
    const auto& m = j["moco"];
    t.moco.queue = m.value("queue", t.moco.queue);
    t.moco.momentum = m.value("momentum", t.moco.momentum);
    t.moco.temperature = m.value("temperature", t.moco.temperature);
  }
  return t;
}

json dataset_to_json(const DatasetProfile& d) {
  json j;
  j["kind"] = d.kind == DatasetProfile::Kind::isic_csv ? "isic_csv" : "synthetic";
  j["image_size"] = d.image_size;
  j["train_fraction"] = d.train_fraction;
  if (d.kind == DatasetProfile::Kind::isic_csv) {
    j["image_dir"] = d.image_dir;
    j["csv_path"] = d.csv_path;
  } else {
    const auto& g = d.synthetic;
    j["synthetic"] = {{"image_size", g.image_size},
                      {"classes", g.classes},
                      {"samples_per_class", g.samples_per_class},
                      {"seed", g.seed},
                      {"vignette", g.vignette},
                      {"noise_amplitude", g.noise_amplitude},
                      {"hue_jitter_deg", g.hue_jitter_deg},
                      {"min_axis_frac", g.min_axis_frac},
                      {"max_axis_frac", g.max_axis_frac}};
  }
  return j;
}

DatasetProfile dataset_from_json(const json& j) {
  DatasetProfile d;
  std::string kind = j.value("kind", "synthetic");
  if (kind == "isic_csv")
    d.kind = DatasetProfile::Kind::isic_csv;
  else if (kind == "synthetic")
    d.kind = DatasetProfile::Kind::synthetic;
  else
    throw Error::invalid("dataset.kind: unknown kind '" + kind + "'");
  d.image_size = j.value("image_size", d.image_size);
  d.train_fraction = j.value("train_fraction", d.train_fraction);
  d.image_dir = j.value("image_dir", "");
  d.csv_path = j.value("csv_path", "");
  if (j.contains("synthetic")) {
    const auto& g = j["synthetic"];
    d.synthetic.image_size = g.value("image_size", d.synthetic.image_size);
    d.synthetic.classes = g.value("classes", d.synthetic.classes);
    d.synthetic.samples_per_class = g.value("samples_per_class", d.synthetic.samples_per_class);
    d.synthetic.seed = g.value("seed", d.synthetic.seed);
    d.synthetic.vignette = g.value("vignette", d.synthetic.vignette);
    d.synthetic.noise_amplitude = g.value("noise_amplitude", d.synthetic.noise_amplitude);
    d.synthetic.hue_jitter_deg = g.value("hue_jitter_deg", d.synthetic.hue_jitter_deg);
    d.synthetic.min_axis_frac = g.value("min_axis_frac", d.synthetic.min_axis_frac);
    d.synthetic.max_axis_frac = g.value("max_axis_frac", d.synthetic.max_axis_frac);
  }
  return d;
}

json encoder_to_json(const EncoderConfig& e) {
  return json{{"architecture", e.architecture_id},
              {"input_channels", e.input_channels},
              {"stem_width", e.stem_width},
              {"stage_widths", e.stage_widths},
              {"stage_depths", e.stage_depths}};
}

EncoderConfig encoder_from_json(const json& j) {
  EncoderConfig e = EncoderConfig::by_name(j.value("architecture", "tiny"));
  e.input_channels = j.value("input_channels", e.input_channels);
  e.stem_width = j.value("stem_width", e.stem_width);
  e.stage_widths = j.value("stage_widths", e.stage_widths);
  e.stage_depths = j.value("stage_depths", e.stage_depths);
  return e;
}

json manifest_to_json(const ExperimentManifest& m) {
  json j;
  j["dataset"] = dataset_to_json(m.dataset);
  j["encoder"] = encoder_to_json(m.encoder);
  j["tasks"] = json::array();
  for (const auto& t : m.tasks) j["tasks"].push_back(task_to_json(t));
  j["orderings"] = json::array();
  for (const auto& seq : m.orderings) {
    json s = json::array();
    for (TaskId t : seq) s.push_back(to_string(t));
    j["orderings"].push_back(s);
  }
  j["seed"] = m.seed;
  j["output_dir"] = m.output_dir;
  return j;
}

ExperimentManifest manifest_from_json(const json& j) {
  ExperimentManifest m;
  if (j.contains("dataset")) m.dataset = dataset_from_json(j["dataset"]);
  if (j.contains("encoder")) m.encoder = encoder_from_json(j["encoder"]);
  if (j.contains("tasks"))
    for (const auto& t : j["tasks"]) m.tasks.push_back(task_from_json(t));
  if (j.contains("orderings"))
    for (const auto& s : j["orderings"]) {
      std::vector<TaskId> seq;
      for (const auto& name : s) seq.push_back(task_from_string(name.get<std::string>()));
      m.orderings.push_back(std::move(seq));
    }
  m.seed = j.value("seed", uint64_t{0});
  m.output_dir = j.value("output_dir", "outputs");
  return m;
}

}  // namespace

std::string manifest_to_json_text(const ExperimentManifest& m) {
  return manifest_to_json(m).dump(2) + "\n";
}

ExperimentManifest manifest_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error::invalid(std::string("manifest parse error: ") + e.what());
  }
  try {
    return manifest_from_json(j);
  } catch (const json::exception& e) {
    throw Error::invalid(std::string("manifest field error: ") + e.what());
  }
}

ExperimentManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error::invalid("cannot open manifest file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return manifest_from_json_text(ss.str());
  } catch (const Error& e) {
    throw Error::invalid(path + ": " + e.what());
  }
}

void save_manifest(const ExperimentManifest& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error::failure("cannot write manifest file: " + path);
  out << manifest_to_json_text(m);
}

}  // namespace cssl
