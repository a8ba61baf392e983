#include "cssl/nn.hpp"

#include <cmath>

#include "cssl/common.hpp"

namespace cssl::nn {

ConvDims conv_dims(const std::vector<int>& xs, const std::vector<int>& ws, int stride, int pad) {
  ConvDims d;
  d.n = xs[0];
  d.cin = xs[1];
  d.h = xs[2];
  d.w = xs[3];
  d.cout = ws[0];
  d.kh = ws[2];
  d.kw = ws[3];
  d.stride = stride;
  d.pad = pad;
  if (ws[1] != d.cin) throw Error::invalid("conv2d: channel mismatch");
  d.oh = (d.h + 2 * pad - d.kh) / stride + 1;
  d.ow = (d.w + 2 * pad - d.kw) / stride + 1;
  if (d.oh < 1 || d.ow < 1) throw Error::invalid("conv2d: input too small");
  return d;
}

namespace {

Tensor im2col(const Tensor& x, const ConvDims& d) {
  const int kk = d.cin * d.kh * d.kw;
  Tensor col({d.n * d.oh * d.ow, kk});
  double* out = col.data();
  for (int n = 0; n < d.n; ++n) {
    const double* xn = x.data() + static_cast<int64_t>(n) * d.cin * d.h * d.w;
    for (int oy = 0; oy < d.oh; ++oy) {
      for (int ox = 0; ox < d.ow; ++ox) {
        double* row = out + (static_cast<int64_t>(n) * d.oh * d.ow + static_cast<int64_t>(oy) * d.ow + ox) * kk;
        int iy0 = oy * d.stride - d.pad;
        int ix0 = ox * d.stride - d.pad;
        for (int c = 0; c < d.cin; ++c) {
          const double* xc = xn + static_cast<int64_t>(c) * d.h * d.w;
          for (int ky = 0; ky < d.kh; ++ky) {
            int iy = iy0 + ky;
            for (int kx = 0; kx < d.kw; ++kx) {
              int ix = ix0 + kx;
              double v = 0.0;
              if (iy >= 0 && iy < d.h && ix >= 0 && ix < d.w)
                v = xc[static_cast<int64_t>(iy) * d.w + ix];
              *row++ = v;
            }
          }
        }
      }
    }
  }
  return col;
}

void col2im_accumulate(const Tensor& col, const ConvDims& d, Tensor* dx) {
  const int kk = d.cin * d.kh * d.kw;
  for (int n = 0; n < d.n; ++n) {
    double* xn = dx->data() + static_cast<int64_t>(n) * d.cin * d.h * d.w;
    for (int oy = 0; oy < d.oh; ++oy) {
      for (int ox = 0; ox < d.ow; ++ox) {
        const double* row =
            col.data() + (static_cast<int64_t>(n) * d.oh * d.ow + static_cast<int64_t>(oy) * d.ow + ox) * kk;
        int iy0 = oy * d.stride - d.pad;
        int ix0 = ox * d.stride - d.pad;
        for (int c = 0; c < d.cin; ++c) {
          double* xc = xn + static_cast<int64_t>(c) * d.h * d.w;
          for (int ky = 0; ky < d.kh; ++ky) {
            int iy = iy0 + ky;
            for (int kx = 0; kx < d.kw; ++kx) {
              int ix = ix0 + kx;
              if (iy >= 0 && iy < d.h && ix >= 0 && ix < d.w)
                xc[static_cast<int64_t>(iy) * d.w + ix] += *row;
              ++row;
            }
          }
        }
      }
    }
  }
}

}  // namespace

Tensor conv2d(const Tensor& x, const Tensor& w, const Tensor& b, int stride, int pad,
              ConvCache* cache) {
  ConvDims d = conv_dims(x.shape(), w.shape(), stride, pad);
  Tensor col = im2col(x, d);
  const int kk = d.cin * d.kh * d.kw;
  const int64_t rows = static_cast<int64_t>(d.n) * d.oh * d.ow;

  // y_mat = col * w^T, rows indexed by (n, oy, ox).
  RowMat y_mat = col.mat(rows, kk) * w.mat(d.cout, kk).transpose();
  for (int64_t r = 0; r < rows; ++r)
    for (int c = 0; c < d.cout; ++c) y_mat(r, c) += b[c];

  Tensor y({d.n, d.cout, d.oh, d.ow});
  for (int n = 0; n < d.n; ++n)
    for (int c = 0; c < d.cout; ++c)
      for (int oy = 0; oy < d.oh; ++oy)
        for (int ox = 0; ox < d.ow; ++ox)
          y.at(n, c, oy, ox) =
              y_mat(static_cast<int64_t>(n) * d.oh * d.ow + static_cast<int64_t>(oy) * d.ow + ox, c);

  if (cache) {
    cache->dims = d;
    cache->col = std::move(col);
  }
  return y;
}

Tensor conv2d_backward(const Tensor& dy, const Tensor& w, const ConvCache& cache, Tensor* dw,
                       Tensor* db) {
  const ConvDims& d = cache.dims;
  const int kk = d.cin * d.kh * d.kw;
  const int64_t rows = static_cast<int64_t>(d.n) * d.oh * d.ow;

  Tensor dy_mat({static_cast<int>(rows), d.cout});
  for (int n = 0; n < d.n; ++n)
    for (int c = 0; c < d.cout; ++c)
      for (int oy = 0; oy < d.oh; ++oy)
        for (int ox = 0; ox < d.ow; ++ox)
          dy_mat.mat(rows, d.cout)(
              static_cast<int64_t>(n) * d.oh * d.ow + static_cast<int64_t>(oy) * d.ow + ox, c) =
              dy.at(n, c, oy, ox);

  if (dw) {
    if (dw->empty()) *dw = Tensor({d.cout, d.cin, d.kh, d.kw});
    dw->mat(d.cout, kk) += dy_mat.mat(rows, d.cout).transpose() * cache.col.mat(rows, kk);
  }
  if (db) {
    if (db->empty()) *db = Tensor({d.cout});
    for (int c = 0; c < d.cout; ++c) (*db)[c] += dy_mat.mat(rows, d.cout).col(c).sum();
  }

  Tensor dcol({static_cast<int>(rows), kk});
  dcol.mat(rows, kk) = dy_mat.mat(rows, d.cout) * w.mat(d.cout, kk);
  Tensor dx({d.n, d.cin, d.h, d.w});
  col2im_accumulate(dcol, d, &dx);
  return dx;
}

Tensor relu(const Tensor& x) {
  Tensor y = x;
  for (int64_t i = 0; i < y.numel(); ++i)
    if (y[i] < 0.0) y[i] = 0.0;
  return y;
}

Tensor relu_backward(const Tensor& dy, const Tensor& y) {
  Tensor dx = dy;
  for (int64_t i = 0; i < dx.numel(); ++i)
    if (y[i] <= 0.0) dx[i] = 0.0;
  return dx;
}

Tensor global_avg_pool(const Tensor& x) {
  const int n = x.dim(0), c = x.dim(1), hw = x.dim(2) * x.dim(3);
  Tensor y({n, c});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < c; ++j) {
      const double* p = x.data() + (static_cast<int64_t>(i) * c + j) * hw;
      double s = 0.0;
      for (int k = 0; k < hw; ++k) s += p[k];
      y.at(i, j) = s / hw;
    }
  return y;
}

Tensor global_avg_pool_backward(const Tensor& dy, int h, int w) {
  const int n = dy.dim(0), c = dy.dim(1), hw = h * w;
  Tensor dx({n, c, h, w});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < c; ++j) {
      double g = dy.at(i, j) / hw;
      double* p = dx.data() + (static_cast<int64_t>(i) * c + j) * hw;
      for (int k = 0; k < hw; ++k) p[k] = g;
    }
  return dx;
}

Tensor linear(const Tensor& x, const Tensor& w, const Tensor& b) {
  const int n = x.dim(0), din = x.dim(1), dout = w.dim(0);
  if (w.dim(1) != din) throw Error::invalid("linear: input dim mismatch");
  Tensor y({n, dout});
  y.mat(n, dout) = x.mat(n, din) * w.mat(dout, din).transpose();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < dout; ++j) y.at(i, j) += b[j];
  return y;
}

Tensor linear_backward(const Tensor& dy, const Tensor& x, const Tensor& w, Tensor* dw,
                       Tensor* db) {
  const int n = x.dim(0), din = x.dim(1), dout = w.dim(0);
  if (dw) {
    if (dw->empty()) *dw = Tensor({dout, din});
    dw->mat(dout, din) += dy.mat(n, dout).transpose() * x.mat(n, din);
  }
  if (db) {
    if (db->empty()) *db = Tensor({dout});
    for (int j = 0; j < dout; ++j) (*db)[j] += dy.mat(n, dout).col(j).sum();
  }
  Tensor dx({n, din});
  dx.mat(n, din) = dy.mat(n, dout) * w.mat(dout, din);
  return dx;
}

double softmax_cross_entropy(const Tensor& logits, const std::vector<int>& labels,
                             Tensor* dlogits, Tensor* probs) {
  const int n = logits.dim(0), c = logits.dim(1);
  if (static_cast<int>(labels.size()) != n)
    throw Error::invalid("softmax_cross_entropy: labels length mismatch");
  Tensor p({n, c});
  double loss = 0.0;
  for (int i = 0; i < n; ++i) {
    int y = labels[static_cast<size_t>(i)];
    if (y < 0 || y >= c) throw Error::invalid("softmax_cross_entropy: label out of range");
    double mx = logits.at(i, 0);
    for (int j = 1; j < c; ++j) mx = std::max(mx, logits.at(i, j));
    double denom = 0.0;
    for (int j = 0; j < c; ++j) denom += std::exp(logits.at(i, j) - mx);
    for (int j = 0; j < c; ++j) p.at(i, j) = std::exp(logits.at(i, j) - mx) / denom;
    loss += mx + std::log(denom) - logits.at(i, y);
  }
  loss /= n;
  if (dlogits) {
    *dlogits = p;
    for (int i = 0; i < n; ++i) {
      dlogits->at(i, labels[static_cast<size_t>(i)]) -= 1.0;
      for (int j = 0; j < c; ++j) dlogits->at(i, j) /= n;
    }
  }
  if (probs) *probs = std::move(p);
  return loss;
}

Tensor l2_normalize_rows(const Tensor& x, double eps) {
  const int n = x.dim(0), d = x.dim(1);
  Tensor y = x;
  for (int i = 0; i < n; ++i) {
    double norm = std::sqrt(x.mat(n, d).row(i).squaredNorm() + eps);
    y.mat(n, d).row(i) /= norm;
  }
  return y;
}

Tensor l2_normalize_rows_backward(const Tensor& dy, const Tensor& x, double eps) {
  const int n = x.dim(0), d = x.dim(1);
  Tensor dx({n, d});
  for (int i = 0; i < n; ++i) {
    auto xi = x.mat(n, d).row(i);
    auto gi = dy.mat(n, d).row(i);
    double norm = std::sqrt(xi.squaredNorm() + eps);
    double dot = (gi.array() * xi.array()).sum();
    dx.mat(n, d).row(i) = gi / norm - xi * (dot / (norm * norm * norm));
  }
  return dx;
}

void he_normal_init(Tensor& w, int fan_in, Rng& rng) {
  double stddev = std::sqrt(2.0 / fan_in);
  for (int64_t i = 0; i < w.numel(); ++i) w[i] = rng.normal(0.0, stddev);
}

void uniform_fanin_init(Tensor& t, int fan_in, Rng& rng) {
  double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
  for (int64_t i = 0; i < t.numel(); ++i) t[i] = rng.uniform(-bound, bound);
}

void accumulate(ParamMap* grads, const std::string& name, const Tensor& g) {
  auto it = grads->find(name);
  if (it == grads->end()) {
    grads->emplace(name, g);
    return;
  }
  if (!it->second.same_shape(g)) throw Error::failure("gradient shape mismatch for " + name);
  it->second.vec() += g.vec();
}

void SgdMomentum::step(ParamMap& params, const ParamMap& grads, double lr) {
  for (auto& [name, p] : params) {
    auto git = grads.find(name);
    if (git == grads.end()) continue;
    auto vit = velocity_.find(name);
    if (vit == velocity_.end()) vit = velocity_.emplace(name, Tensor(p.shape())).first;
    vit->second.vec() = momentum_ * vit->second.vec() + git->second.vec();
    p.vec() -= lr * vit->second.vec();
  }
}

}  // namespace cssl::nn
