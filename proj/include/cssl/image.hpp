#pragma once

#include <string>

#include "cssl/tensor.hpp"

namespace cssl {

// Images are [C,H,W] tensors with values in [0,1], RGB channel order.

Tensor load_image(const std::string& path);
void save_image_png(const Tensor& chw, const std::string& path);

Tensor resize_bilinear(const Tensor& chw, int out_h, int out_w);
Tensor crop(const Tensor& chw, int top, int left, int height, int width);
Tensor hflip(const Tensor& chw);

// h in [0,360), s,v in [0,1].
void hsv_to_rgb(double h, double s, double v, double* r, double* g, double* b);
void rgb_to_hsv(double r, double g, double b, double* h, double* s, double* v);

}  // namespace cssl
