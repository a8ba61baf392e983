#pragma once

#include <map>
#include <string>
#include <vector>

#include "cssl/core.hpp"
#include "cssl/nn.hpp"

namespace cssl {

struct Features {
  Tensor pooled;                       // [N, D] global-average-pooled features
  Tensor logits;                       // [N, O] when a head was applied
  std::map<std::string, Tensor> taps;  // tap name -> [N, flattened] matrix
};

// Activation caches for one forward pass; required for backward.
struct BlockTrace {
  Tensor input;
  nn::ConvCache c1, c2, proj;
  Tensor h1;   // post-relu inner activation
  Tensor out;  // post-relu block output
  bool has_proj = false;
};

struct EncoderTrace {
  nn::ConvCache stem_cache;
  Tensor stem_out;
  std::vector<BlockTrace> blocks;
  Tensor final_map;  // pre-pooling feature map [N, D, h, w]
  Tensor pooled;     // [N, D]
};

// Residual conv net with named parameters. All heads share the backbone
// parameter names and shapes, which is what makes chain transfer a plain
// head swap.
class EncoderNet {
 public:
  explicit EncoderNet(EncoderConfig cfg);

  const EncoderConfig& config() const { return cfg_; }

  ParamMap init_backbone(uint64_t seed) const;
  ParamMap init_head(const HeadDescriptor& head, uint64_t seed) const;
  // Resolves head.input_dim == 0 against the encoder feature dim.
  HeadDescriptor resolve_head(HeadDescriptor head) const;

  // Backbone forward. `tap_requests` must name taps from cfg.tap_names();
  // activations are returned flattened per sample. trace may be null (eval).
  Features forward(const ParamMap& params, const Tensor& batch,
                   const std::vector<std::string>& tap_requests = {},
                   EncoderTrace* trace = nullptr) const;

  // Backward from dL/dpooled, accumulating into grads ("backbone.*").
  void backward(const ParamMap& params, const EncoderTrace& trace, const Tensor& dpooled,
                ParamMap* grads) const;

  // Head forward on pooled features ([N,D], or [N,2D] for patch pairs).
  Tensor head_forward(const ParamMap& params, const HeadDescriptor& head, const Tensor& features,
                      Tensor* hidden_cache = nullptr) const;
  // Returns dL/dfeatures, accumulating head gradients ("head.*").
  Tensor head_backward(const ParamMap& params, const HeadDescriptor& head, const Tensor& features,
                       const Tensor& hidden_cache, const Tensor& dlogits, ParamMap* grads) const;

  // Spatial feature map of the final conv tap for one image: [D, h, w].
  Tensor final_feature_map(const ParamMap& params, const Tensor& image) const;

 private:
  EncoderConfig cfg_;
};

// Backbone bit-identical, head freshly initialized, provenance preserved.
CheckpointBundle reinitialize_head(const EncoderNet& net, const CheckpointBundle& bundle,
                                   const HeadDescriptor& head, uint64_t seed);

// Fresh bundle: backbone + head, empty provenance.
CheckpointBundle fresh_bundle(const EncoderNet& net, const HeadDescriptor& head, uint64_t seed);

// Checkpoint container I/O: text metadata header + named raw tensors.
void save_checkpoint(const CheckpointBundle& bundle, const std::string& path);
CheckpointBundle load_checkpoint(const std::string& path);

}  // namespace cssl
