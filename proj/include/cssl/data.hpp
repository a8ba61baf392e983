#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cssl/core.hpp"

namespace cssl {

// ---------------------------------------------------------------------------
// Augmentation
// ---------------------------------------------------------------------------

struct Transform {
  enum class Kind {
    resize,         // size
    random_crop,    // size, scale range (area fraction), resized back to size
    horizontal_flip,  // p
    color_jitter,   // strengths: brightness, contrast, saturation
    grayscale,      // p
    gaussian_blur,  // p, sigma range
    normalize       // per-channel mean/std
  };
  Kind kind;
  int size = 0;
  double p = 0.0;
  double scale_min = 1.0, scale_max = 1.0;
  double brightness = 0.0, contrast = 0.0, saturation = 0.0;
  double sigma_min = 0.1, sigma_max = 2.0;
  std::vector<double> mean, std;
};

struct AugmentationPolicy {
  enum class Mode { classification, contrastive };
  Mode mode = Mode::classification;
  std::vector<Transform> ops;

  // Final spatial size the policy delivers, 0 if it never resizes.
  int output_size() const;
};

// The standard recipes. `size` is the network input size.
AugmentationPolicy contrastive_policy(int size);     // crop/flip/jitter/gray/blur/normalize
AugmentationPolicy classification_policy(int size);  // light crop/flip/normalize
AugmentationPolicy eval_policy(int size);            // resize/normalize only

// One view (classification mode) or two independently augmented views
// (contrastive mode). Deterministic given the rng state.
std::vector<Tensor> make_augmented_views(const Tensor& image, const AugmentationPolicy& policy,
                                         Rng& rng);

Tensor normalize_only(const Tensor& image, const AugmentationPolicy& policy);
Tensor denormalize(const Tensor& image, const AugmentationPolicy& policy);

// ---------------------------------------------------------------------------
// Loading and splitting
// ---------------------------------------------------------------------------

struct LoadOptions {
  bool verify_files = true;  // fail listing missing image paths
};

// ISIC ground-truth convention: header `image,<class names...>`, one-hot rows.
DatasetHandle load_isic_csv(const std::string& image_dir, const std::string& csv_path,
                            const LoadOptions& options = {});

// Checks the 8-class ISIC-2019 shape (counts between 239 and 12875).
std::vector<Diagnostic> check_isic2019_profile(const DatasetHandle& ds);

// Per-class train counts: floor(fraction * count), remainders distributed to
// the largest fractional parts (ties by class index). Remaining samples split
// val/test with val = floor(half), test the rest. Pure in (ds, fraction, seed).
DatasetHandle stratified_split(const DatasetHandle& ds, double train_fraction, uint64_t seed);

// ---------------------------------------------------------------------------
// Synthetic lesion generator
// ---------------------------------------------------------------------------

// Writes images/, masks/ and ground_truth.csv under out_dir, then loads the
// result through the same CSV path as real data.
DatasetHandle generate_synthetic(const SyntheticLesionConfig& cfg, const std::string& out_dir);

// In-memory variant used by the generator and by tests.
struct SyntheticSample {
  Tensor image;  // [3,S,S]
  Tensor mask;   // [1,S,S] 0/1 lesion mask
  int label = 0;
};
SyntheticSample render_synthetic_sample(const SyntheticLesionConfig& cfg, int class_id,
                                        int index_in_class);

// ---------------------------------------------------------------------------
// In-memory image store
// ---------------------------------------------------------------------------

// Desk-scale datasets are decoded once up front; delivery order is defined by
// index so the pipeline stays deterministic regardless of prefetching.
class ImageStore {
 public:
  ImageStore() = default;
  explicit ImageStore(const DatasetHandle& ds, int target_size);

  const Tensor& image(int index) const { return images_[static_cast<size_t>(index)]; }
  int size() const { return static_cast<int>(images_.size()); }

 private:
  std::vector<Tensor> images_;
};

}  // namespace cssl
