#include "cssl/data.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "cssl/image.hpp"

namespace fs = std::filesystem;

namespace cssl {

// ---------------------------------------------------------------------------
// Augmentation
// ---------------------------------------------------------------------------

int AugmentationPolicy::output_size() const {
  int size = 0;
  for (const auto& t : ops)
    if (t.kind == Transform::Kind::resize || t.kind == Transform::Kind::random_crop)
      size = t.size;
  return size;
}

AugmentationPolicy contrastive_policy(int size) {
  AugmentationPolicy p;
  p.mode = AugmentationPolicy::Mode::contrastive;
  Transform crop{Transform::Kind::random_crop};
  crop.size = size;
  crop.scale_min = 0.4;
  crop.scale_max = 1.0;
  Transform flip{Transform::Kind::horizontal_flip};
  flip.p = 0.5;
  Transform jitter{Transform::Kind::color_jitter};
  jitter.brightness = 0.4;
  jitter.contrast = 0.4;
  jitter.saturation = 0.4;
  Transform gray{Transform::Kind::grayscale};
  gray.p = 0.2;
  Transform blur{Transform::Kind::gaussian_blur};
  blur.p = 0.5;
  blur.sigma_min = 0.1;
  blur.sigma_max = 2.0;
  Transform norm{Transform::Kind::normalize};
  norm.mean = {0.5, 0.5, 0.5};
  norm.std = {0.25, 0.25, 0.25};
  p.ops = {crop, flip, jitter, gray, blur, norm};
  return p;
}

AugmentationPolicy classification_policy(int size) {
  AugmentationPolicy p;
  p.mode = AugmentationPolicy::Mode::classification;
  Transform crop{Transform::Kind::random_crop};
  crop.size = size;
  crop.scale_min = 0.7;
  crop.scale_max = 1.0;
  Transform flip{Transform::Kind::horizontal_flip};
  flip.p = 0.5;
  Transform norm{Transform::Kind::normalize};
  norm.mean = {0.5, 0.5, 0.5};
  norm.std = {0.25, 0.25, 0.25};
  p.ops = {crop, flip, norm};
  return p;
}

AugmentationPolicy eval_policy(int size) {
  AugmentationPolicy p;
  p.mode = AugmentationPolicy::Mode::classification;
  Transform resize{Transform::Kind::resize};
  resize.size = size;
  Transform norm{Transform::Kind::normalize};
  norm.mean = {0.5, 0.5, 0.5};
  norm.std = {0.25, 0.25, 0.25};
  p.ops = {resize, norm};
  return p;
}

namespace {

Tensor apply_normalize(const Tensor& img, const std::vector<double>& mean,
                       const std::vector<double>& std) {
  Tensor out = img;
  const int c = img.dim(0), hw = img.dim(1) * img.dim(2);
  for (int k = 0; k < c; ++k) {
    double m = mean[static_cast<size_t>(k) % mean.size()];
    double s = std[static_cast<size_t>(k) % std.size()];
    double* p = out.data() + static_cast<int64_t>(k) * hw;
    for (int i = 0; i < hw; ++i) p[i] = (p[i] - m) / s;
  }
  return out;
}

Tensor apply_color_jitter(const Tensor& img, const Transform& t, Rng& rng) {
  Tensor out = img;
  const int64_t n = img.numel();
  const int hw = img.dim(1) * img.dim(2);

  double fb = 1.0 + rng.uniform(-t.brightness, t.brightness);
  for (int64_t i = 0; i < n; ++i) out[i] *= fb;

  double fc = 1.0 + rng.uniform(-t.contrast, t.contrast);
  double mean = out.vec().mean();
  for (int64_t i = 0; i < n; ++i) out[i] = mean + fc * (out[i] - mean);

  double fs = 1.0 + rng.uniform(-t.saturation, t.saturation);
  for (int i = 0; i < hw; ++i) {
    double r = out[i], g = out[hw + i], b = out[2 * hw + i];
    double gray = 0.299 * r + 0.587 * g + 0.114 * b;
    out[i] = gray + fs * (r - gray);
    out[hw + i] = gray + fs * (g - gray);
    out[2 * hw + i] = gray + fs * (b - gray);
  }
  for (int64_t i = 0; i < n; ++i) out[i] = std::clamp(out[i], 0.0, 1.0);
  return out;
}

Tensor apply_grayscale(const Tensor& img) {
  Tensor out = img;
  const int hw = img.dim(1) * img.dim(2);
  for (int i = 0; i < hw; ++i) {
    double gray = 0.299 * img[i] + 0.587 * img[hw + i] + 0.114 * img[2 * hw + i];
    out[i] = gray;
    out[hw + i] = gray;
    out[2 * hw + i] = gray;
  }
  return out;
}

Tensor apply_gaussian_blur(const Tensor& img, double sigma) {
  const int radius = std::max(1, static_cast<int>(std::ceil(2.5 * sigma)));
  std::vector<double> kernel(static_cast<size_t>(2 * radius + 1));
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    double v = std::exp(-0.5 * (i * i) / (sigma * sigma));
    kernel[static_cast<size_t>(i + radius)] = v;
    sum += v;
  }
  for (double& v : kernel) v /= sum;

  const int c = img.dim(0), h = img.dim(1), w = img.dim(2);
  Tensor tmp(img.shape()), out(img.shape());
  for (int k = 0; k < c; ++k)
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) {
        double acc = 0.0;
        for (int i = -radius; i <= radius; ++i) {
          int xx = std::clamp(x + i, 0, w - 1);
          acc += kernel[static_cast<size_t>(i + radius)] * img.at(k, y, xx);
        }
        tmp.at(k, y, x) = acc;
      }
  for (int k = 0; k < c; ++k)
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) {
        double acc = 0.0;
        for (int i = -radius; i <= radius; ++i) {
          int yy = std::clamp(y + i, 0, h - 1);
          acc += kernel[static_cast<size_t>(i + radius)] * tmp.at(k, yy, x);
        }
        out.at(k, y, x) = acc;
      }
  return out;
}

Tensor apply_random_crop(const Tensor& img, const Transform& t, Rng& rng) {
  Tensor src = img;
  if (src.dim(1) < t.size || src.dim(2) < t.size) {
    static bool warned = false;
    if (!warned) {
      std::fprintf(stderr, "[data] image smaller than crop size, resizing first\n");
      warned = true;
    }
    src = resize_bilinear(src, std::max(t.size, src.dim(1)), std::max(t.size, src.dim(2)));
  }
  const int h = src.dim(1), w = src.dim(2);
  const double area = static_cast<double>(h) * w;

  // Sample area scale and log-uniform aspect; fall back to center crop when
  // the sampled box does not fit.
  for (int attempt = 0; attempt < 10; ++attempt) {
    double target = area * rng.uniform(t.scale_min, t.scale_max);
    double aspect = std::exp(rng.uniform(std::log(3.0 / 4.0), std::log(4.0 / 3.0)));
    int cw = static_cast<int>(std::lround(std::sqrt(target * aspect)));
    int ch = static_cast<int>(std::lround(std::sqrt(target / aspect)));
    if (cw < 1 || ch < 1 || cw > w || ch > h) continue;
    int top = static_cast<int>(rng.uniform_int(0, h - ch));
    int left = static_cast<int>(rng.uniform_int(0, w - cw));
    return resize_bilinear(crop(src, top, left, ch, cw), t.size, t.size);
  }
  int side = std::min(h, w);
  return resize_bilinear(crop(src, (h - side) / 2, (w - side) / 2, side, side), t.size, t.size);
}

Tensor apply_ops(const Tensor& image, const std::vector<Transform>& ops, Rng& rng) {
  Tensor out = image;
  for (const auto& t : ops) {
    switch (t.kind) {
      case Transform::Kind::resize:
        out = resize_bilinear(out, t.size, t.size);
        break;
      case Transform::Kind::random_crop:
        out = apply_random_crop(out, t, rng);
        break;
      case Transform::Kind::horizontal_flip:
        if (rng.bernoulli(t.p)) out = hflip(out);
        break;
      case Transform::Kind::color_jitter:
        out = apply_color_jitter(out, t, rng);
        break;
      case Transform::Kind::grayscale:
        if (rng.bernoulli(t.p)) out = apply_grayscale(out);
        break;
      case Transform::Kind::gaussian_blur:
        if (rng.bernoulli(t.p)) out = apply_gaussian_blur(out, rng.uniform(t.sigma_min, t.sigma_max));
        break;
      case Transform::Kind::normalize:
        out = apply_normalize(out, t.mean, t.std);
        break;
    }
  }
  return out;
}

}  // namespace

std::vector<Tensor> make_augmented_views(const Tensor& image, const AugmentationPolicy& policy,
                                         Rng& rng) {
  if (image.rank() != 3) throw Error::invalid("make_augmented_views expects a [C,H,W] image");
  std::vector<Tensor> views;
  views.push_back(apply_ops(image, policy.ops, rng));
  if (policy.mode == AugmentationPolicy::Mode::contrastive)
    views.push_back(apply_ops(image, policy.ops, rng));
  return views;
}

Tensor normalize_only(const Tensor& image, const AugmentationPolicy& policy) {
  for (const auto& t : policy.ops)
    if (t.kind == Transform::Kind::normalize) return apply_normalize(image, t.mean, t.std);
  return image;
}

Tensor denormalize(const Tensor& image, const AugmentationPolicy& policy) {
  for (const auto& t : policy.ops)
    if (t.kind == Transform::Kind::normalize) {
      Tensor out = image;
      const int c = image.dim(0), hw = image.dim(1) * image.dim(2);
      for (int k = 0; k < c; ++k) {
        double m = t.mean[static_cast<size_t>(k) % t.mean.size()];
        double s = t.std[static_cast<size_t>(k) % t.std.size()];
        double* p = out.data() + static_cast<int64_t>(k) * hw;
        for (int i = 0; i < hw; ++i) p[i] = p[i] * s + m;
      }
      return out;
    }
  return image;
}

// ---------------------------------------------------------------------------
// CSV loading
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
    size_t start = cell.find_first_not_of(' ');
    cells.push_back(start == std::string::npos ? "" : cell.substr(start));
  }
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

std::string resolve_image_path(const std::string& image_dir, const std::string& name) {
  fs::path base = fs::path(image_dir) / name;
  if (base.has_extension()) return base.string();
  for (const char* ext : {".png", ".jpg", ".jpeg", ".PNG", ".JPG"}) {
    fs::path candidate = base;
    candidate += ext;
    if (fs::exists(candidate)) return candidate.string();
  }
  return (base += ".jpg").string();
}

}  // namespace

DatasetHandle load_isic_csv(const std::string& image_dir, const std::string& csv_path,
                            const LoadOptions& options) {
  std::ifstream in(csv_path);
  if (!in) throw Error::invalid("cannot open ground-truth csv: " + csv_path);

  std::string line;
  if (!std::getline(in, line)) throw Error::invalid(csv_path + ": empty csv");
  auto header = split_csv_line(line);
  if (header.size() < 2 || header[0] != "image")
    throw Error::invalid(csv_path + ": header must be `image,<class names...>`");

  DatasetHandle ds;
  ds.class_names.assign(header.begin() + 1, header.end());
  ds.class_counts.assign(ds.class_names.size(), 0);

  std::vector<std::string> missing;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    auto cells = split_csv_line(line);
    if (cells.size() != header.size())
      throw Error::invalid(csv_path + ": row " + std::to_string(row) + " has " +
                           std::to_string(cells.size()) + " cells, expected " +
                           std::to_string(header.size()));
    int label = -1;
    for (size_t c = 1; c < cells.size(); ++c) {
      double v = 0.0;
      try {
        v = std::stod(cells[c]);
      } catch (...) {
        throw Error::invalid(csv_path + ": row " + std::to_string(row) +
                             " has a non-numeric label cell");
      }
      if (v > 0.5) {
        if (label >= 0)
          throw Error::invalid(csv_path + ": row " + std::to_string(row) + " (" + cells[0] +
                               "): malformed one-hot label (multiple ones)");
        label = static_cast<int>(c) - 1;
      }
    }
    if (label < 0)
      throw Error::invalid(csv_path + ": row " + std::to_string(row) + " (" + cells[0] +
                           "): malformed one-hot label (all zeros)");

    std::string path = resolve_image_path(image_dir, cells[0]);
    if (options.verify_files && !fs::exists(path)) missing.push_back(path);
    ds.samples.push_back({path, label});
    ds.class_counts[static_cast<size_t>(label)] += 1;
  }

  if (!missing.empty()) {
    std::ostringstream os;
    os << "missing " << missing.size() << " image file(s):";
    for (size_t i = 0; i < missing.size() && i < 10; ++i) os << "\n  " << missing[i];
    if (missing.size() > 10) os << "\n  ...";
    throw Error::failure(os.str());
  }

  ds.split.assign(ds.samples.size(), Split::train);
  return ds;
}

std::vector<Diagnostic> check_isic2019_profile(const DatasetHandle& ds) {
  std::vector<Diagnostic> out;
  if (ds.num_classes() != 8)
    out.push_back({"class_names", "ISIC-2019 profile expects 8 diagnostic classes, got " +
                                      std::to_string(ds.num_classes())});
  for (size_t c = 0; c < ds.class_counts.size(); ++c) {
    int64_t n = ds.class_counts[c];
    if (n < 239 || n > 12875)
      out.push_back({"class_counts[" + std::to_string(c) + "]",
                     "count " + std::to_string(n) + " outside the ISIC-2019 range [239, 12875]"});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Stratified split
// ---------------------------------------------------------------------------

DatasetHandle stratified_split(const DatasetHandle& ds, double train_fraction, uint64_t seed) {
  if (train_fraction <= 0.0 || train_fraction >= 1.0)
    throw Error::invalid("stratified_split: train_fraction must be in (0,1)");

  const int classes = ds.num_classes();
  std::vector<std::vector<int>> by_class(static_cast<size_t>(classes));
  for (size_t i = 0; i < ds.samples.size(); ++i) {
    int l = ds.samples[i].label;
    if (l >= 0) by_class[static_cast<size_t>(l)].push_back(static_cast<int>(i));
  }

  int64_t labeled = 0;
  for (const auto& v : by_class) labeled += static_cast<int64_t>(v.size());

  std::vector<int64_t> train_count(static_cast<size_t>(classes));
  std::vector<double> frac(static_cast<size_t>(classes));
  int64_t floor_total = 0;
  for (int c = 0; c < classes; ++c) {
    auto n = static_cast<int64_t>(by_class[static_cast<size_t>(c)].size());
    if (n < 2)
      throw Error::invalid("cannot stratify class '" + ds.class_names[static_cast<size_t>(c)] +
                           "' with " + std::to_string(n) + " sample(s)");
    double exact = train_fraction * static_cast<double>(n);
    train_count[static_cast<size_t>(c)] = static_cast<int64_t>(std::floor(exact));
    frac[static_cast<size_t>(c)] = exact - std::floor(exact);
    floor_total += train_count[static_cast<size_t>(c)];
  }

  // Largest-remainder top-up toward round(fraction * labeled).
  auto target = static_cast<int64_t>(std::llround(train_fraction * static_cast<double>(labeled)));
  int64_t deficit = target - floor_total;
  std::vector<int> order(static_cast<size_t>(classes));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return frac[static_cast<size_t>(a)] > frac[static_cast<size_t>(b)];
  });
  for (int64_t k = 0; k < deficit && k < classes; ++k) {
    int c = order[static_cast<size_t>(k)];
    auto n = static_cast<int64_t>(by_class[static_cast<size_t>(c)].size());
    if (train_count[static_cast<size_t>(c)] < n - 1) train_count[static_cast<size_t>(c)] += 1;
  }

  DatasetHandle out = ds;
  out.split.assign(ds.samples.size(), Split::train);
  for (int c = 0; c < classes; ++c) {
    auto indices = by_class[static_cast<size_t>(c)];
    Rng rng(derive_seed(seed, "stratified_split", static_cast<uint64_t>(c)));
    std::shuffle(indices.begin(), indices.end(), rng.engine());
    int64_t t = train_count[static_cast<size_t>(c)];
    int64_t rest = static_cast<int64_t>(indices.size()) - t;
    int64_t val = rest / 2;
    for (int64_t i = 0; i < static_cast<int64_t>(indices.size()); ++i) {
      Split s = i < t ? Split::train : (i < t + val ? Split::val : Split::test);
      out.split[static_cast<size_t>(indices[static_cast<size_t>(i)])] = s;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Synthetic lesion generator
// ---------------------------------------------------------------------------

namespace {

double class_hue_deg(int class_id, int classes) {
  return std::fmod(360.0 * class_id / std::max(1, classes) + 15.0, 360.0);
}

double class_axis_ratio(int class_id, int classes) {
  if (classes <= 1) return 0.9;
  double t = static_cast<double>(class_id) / (classes - 1);
  return 0.92 - 0.55 * t;  // near-circular for class 0, elongated for the last
}

}  // namespace

SyntheticSample render_synthetic_sample(const SyntheticLesionConfig& cfg, int class_id,
                                        int index_in_class) {
  const int s = cfg.image_size;
  Rng rng(derive_seed(cfg.seed, "synthetic", static_cast<uint64_t>(class_id),
                      static_cast<uint64_t>(index_in_class)));

  SyntheticSample sample;
  sample.label = class_id;
  sample.image = Tensor({3, s, s});
  sample.mask = Tensor({1, s, s});

  // Skin background: warm hue with a gentle illumination gradient.
  double skin_h = 22.0 + rng.uniform(-6.0, 6.0);
  double skin_s = 0.32 + rng.uniform(-0.08, 0.08);
  double skin_v = 0.84 + rng.uniform(-0.06, 0.06);
  double skin_r, skin_g, skin_b;
  hsv_to_rgb(skin_h, skin_s, skin_v, &skin_r, &skin_g, &skin_b);
  double gx = rng.uniform(-0.06, 0.06), gy = rng.uniform(-0.06, 0.06);

  // Lesion geometry: jittered class hue, class-dependent eccentricity.
  double hue = class_hue_deg(class_id, cfg.classes) +
               rng.uniform(-cfg.hue_jitter_deg, cfg.hue_jitter_deg);
  double ratio = class_axis_ratio(class_id, cfg.classes) + rng.uniform(-0.04, 0.04);
  double a = rng.uniform(cfg.min_axis_frac, cfg.max_axis_frac) * s;
  double b = std::max(2.0, a * ratio);
  double cx = s / 2.0 + rng.uniform(-0.12, 0.12) * s;
  double cy = s / 2.0 + rng.uniform(-0.12, 0.12) * s;
  double theta = rng.uniform(0.0, M_PI);
  double les_r, les_g, les_b;
  hsv_to_rgb(hue, 0.55 + rng.uniform(-0.1, 0.1), 0.42 + rng.uniform(-0.08, 0.08), &les_r, &les_g,
             &les_b);

  // Irregular border: low-order radial modulation.
  double m2 = rng.uniform(0.0, 0.08), m3 = rng.uniform(0.0, 0.08), m4 = rng.uniform(0.0, 0.06);
  double p2 = rng.uniform(0.0, 2 * M_PI), p3 = rng.uniform(0.0, 2 * M_PI),
         p4 = rng.uniform(0.0, 2 * M_PI);

  const double ct = std::cos(theta), st = std::sin(theta);
  for (int y = 0; y < s; ++y) {
    for (int x = 0; x < s; ++x) {
      double r = skin_r + gx * (x / static_cast<double>(s) - 0.5) +
                 gy * (y / static_cast<double>(s) - 0.5);
      double g = skin_g + 0.8 * gx * (x / static_cast<double>(s) - 0.5);
      double bl = skin_b + 0.8 * gy * (y / static_cast<double>(s) - 0.5);

      double dx = x - cx, dy = y - cy;
      double u = (ct * dx + st * dy) / a;
      double v = (-st * dx + ct * dy) / b;
      double phi = std::atan2(v, u);
      double mod = 1.0 + m2 * std::sin(2 * phi + p2) + m3 * std::sin(3 * phi + p3) +
                   m4 * std::sin(4 * phi + p4);
      double d = (u * u + v * v) / (mod * mod);

      bool inside = d <= 1.0;
      if (inside) {
        // Soft edge over the outer 15% of the radius.
        double alpha = std::clamp((1.0 - d) / 0.15, 0.0, 1.0);
        r = (1 - alpha) * r + alpha * les_r;
        g = (1 - alpha) * g + alpha * les_g;
        bl = (1 - alpha) * bl + alpha * les_b;
        sample.mask.at(0, y, x) = 1.0;
      }

      double noise = cfg.noise_amplitude;
      r += rng.uniform(-noise, noise);
      g += rng.uniform(-noise, noise);
      bl += rng.uniform(-noise, noise);

      sample.image.at(0, y, x) = std::clamp(r, 0.0, 1.0);
      sample.image.at(1, y, x) = std::clamp(g, 0.0, 1.0);
      sample.image.at(2, y, x) = std::clamp(bl, 0.0, 1.0);
    }
  }

  if (cfg.vignette) {
    // Circular dermatoscope field of view; outside is exactly black.
    double radius = 0.52 * s;
    double c0 = (s - 1) / 2.0;
    for (int y = 0; y < s; ++y)
      for (int x = 0; x < s; ++x) {
        double dx = x - c0, dy = y - c0;
        if (dx * dx + dy * dy > radius * radius) {
          sample.image.at(0, y, x) = 0.0;
          sample.image.at(1, y, x) = 0.0;
          sample.image.at(2, y, x) = 0.0;
          sample.mask.at(0, y, x) = 0.0;
        }
      }
  }
  return sample;
}

DatasetHandle generate_synthetic(const SyntheticLesionConfig& cfg, const std::string& out_dir) {
  if (cfg.classes < 1 || cfg.samples_per_class < 1 || cfg.image_size < 16)
    throw Error::invalid("generate_synthetic: invalid config");

  fs::create_directories(fs::path(out_dir) / "images");
  fs::create_directories(fs::path(out_dir) / "masks");

  std::string csv_path = (fs::path(out_dir) / "ground_truth.csv").string();
  std::ofstream csv(csv_path);
  if (!csv) throw Error::failure("cannot write " + csv_path);
  csv << "image";
  for (int c = 0; c < cfg.classes; ++c) csv << ",class_" << c;
  csv << "\n";

  char name[64];
  for (int c = 0; c < cfg.classes; ++c) {
    for (int i = 0; i < cfg.samples_per_class; ++i) {
      SyntheticSample sample = render_synthetic_sample(cfg, c, i);
      std::snprintf(name, sizeof(name), "synth_c%02d_%04d.png", c, i);
      save_image_png(sample.image, (fs::path(out_dir) / "images" / name).string());
      Tensor mask3({3, cfg.image_size, cfg.image_size});
      for (int k = 0; k < 3; ++k)
        for (int64_t j = 0; j < sample.mask.numel(); ++j)
          mask3[k * sample.mask.numel() + j] = sample.mask[j];
      save_image_png(mask3, (fs::path(out_dir) / "masks" / name).string());
      csv << "images/" << name;
      for (int k = 0; k < cfg.classes; ++k) csv << (k == c ? ",1.0" : ",0.0");
      csv << "\n";
    }
  }
  csv.close();

  DatasetHandle ds = load_isic_csv(out_dir, csv_path);
  ds.mask_dir = (fs::path(out_dir) / "masks").string();
  return ds;
}

// ---------------------------------------------------------------------------
// Image store
// ---------------------------------------------------------------------------

ImageStore::ImageStore(const DatasetHandle& ds, int target_size) {
  images_.reserve(ds.samples.size());
  for (const auto& s : ds.samples) {
    Tensor img = load_image(s.image_ref);
    if (img.dim(1) != target_size || img.dim(2) != target_size)
      img = resize_bilinear(img, target_size, target_size);
    images_.push_back(std::move(img));
  }
}

}  // namespace cssl
