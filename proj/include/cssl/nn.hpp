#pragma once

#include <map>
#include <string>
#include <vector>

#include "cssl/tensor.hpp"

namespace cssl {

using ParamMap = std::map<std::string, Tensor>;

namespace nn {

struct ConvDims {
  int n, cin, h, w, cout, kh, kw, stride, pad, oh, ow;
};

ConvDims conv_dims(const std::vector<int>& x_shape, const std::vector<int>& w_shape, int stride,
                   int pad);

struct ConvCache {
  ConvDims dims;
  Tensor col;  // [N*OH*OW, Cin*KH*KW]
};

// x: [N,Cin,H,W], w: [Cout,Cin,KH,KW], b: [Cout] -> [N,Cout,OH,OW].
Tensor conv2d(const Tensor& x, const Tensor& w, const Tensor& b, int stride, int pad,
              ConvCache* cache = nullptr);
// Returns dx; accumulates into dw/db when non-null.
Tensor conv2d_backward(const Tensor& dy, const Tensor& w, const ConvCache& cache, Tensor* dw,
                       Tensor* db);

Tensor relu(const Tensor& x);
// Mask recovered from the forward output.
Tensor relu_backward(const Tensor& dy, const Tensor& y);

// [N,C,H,W] -> [N,C] spatial mean.
Tensor global_avg_pool(const Tensor& x);
Tensor global_avg_pool_backward(const Tensor& dy, int h, int w);

// x: [N,D], w: [O,D], b: [O] -> [N,O].
Tensor linear(const Tensor& x, const Tensor& w, const Tensor& b);
Tensor linear_backward(const Tensor& dy, const Tensor& x, const Tensor& w, Tensor* dw,
                       Tensor* db);

// Mean cross-entropy over rows; fills dlogits/probs when non-null.
double softmax_cross_entropy(const Tensor& logits, const std::vector<int>& labels,
                             Tensor* dlogits = nullptr, Tensor* probs = nullptr);

Tensor l2_normalize_rows(const Tensor& x, double eps = 1e-12);
Tensor l2_normalize_rows_backward(const Tensor& dy, const Tensor& x, double eps = 1e-12);

void he_normal_init(Tensor& w, int fan_in, Rng& rng);
void uniform_fanin_init(Tensor& t, int fan_in, Rng& rng);

void accumulate(ParamMap* grads, const std::string& name, const Tensor& g);

class SgdMomentum {
 public:
  explicit SgdMomentum(double momentum = 0.9) : momentum_(momentum) {}
  void step(ParamMap& params, const ParamMap& grads, double lr);
  void reset() { velocity_.clear(); }

 private:
  double momentum_;
  ParamMap velocity_;
};

}  // namespace nn
}  // namespace cssl
