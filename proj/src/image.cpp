#include "cssl/image.hpp"

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include <algorithm>
#include <cmath>

#include "cssl/common.hpp"

namespace cssl {

Tensor load_image(const std::string& path) {
  cv::Mat bgr = cv::imread(path, cv::IMREAD_COLOR);
  if (bgr.empty()) throw Error::failure("cannot read image: " + path);
  Tensor out({3, bgr.rows, bgr.cols});
  for (int y = 0; y < bgr.rows; ++y) {
    const cv::Vec3b* row = bgr.ptr<cv::Vec3b>(y);
    for (int x = 0; x < bgr.cols; ++x) {
      out.at(0, y, x) = row[x][2] / 255.0;
      out.at(1, y, x) = row[x][1] / 255.0;
      out.at(2, y, x) = row[x][0] / 255.0;
    }
  }
  return out;
}

void save_image_png(const Tensor& chw, const std::string& path) {
  if (chw.rank() != 3 || chw.dim(0) != 3) throw Error::invalid("save_image_png expects [3,H,W]");
  const int h = chw.dim(1), w = chw.dim(2);
  cv::Mat bgr(h, w, CV_8UC3);
  for (int y = 0; y < h; ++y) {
    cv::Vec3b* row = bgr.ptr<cv::Vec3b>(y);
    for (int x = 0; x < w; ++x) {
      auto to_byte = [](double v) {
        return static_cast<unsigned char>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
      };
      row[x][2] = to_byte(chw.at(0, y, x));
      row[x][1] = to_byte(chw.at(1, y, x));
      row[x][0] = to_byte(chw.at(2, y, x));
    }
  }
  if (!cv::imwrite(path, bgr)) throw Error::failure("cannot write image: " + path);
}

Tensor resize_bilinear(const Tensor& chw, int out_h, int out_w) {
  const int c = chw.dim(0), in_h = chw.dim(1), in_w = chw.dim(2);
  if (in_h == out_h && in_w == out_w) return chw;
  Tensor out({c, out_h, out_w});
  const double sy = out_h > 1 ? static_cast<double>(in_h - 1) / (out_h - 1) : 0.0;
  const double sx = out_w > 1 ? static_cast<double>(in_w - 1) / (out_w - 1) : 0.0;
  for (int y = 0; y < out_h; ++y) {
    double fy = y * sy;
    int y0 = static_cast<int>(fy);
    int y1 = std::min(y0 + 1, in_h - 1);
    double wy = fy - y0;
    for (int x = 0; x < out_w; ++x) {
      double fx = x * sx;
      int x0 = static_cast<int>(fx);
      int x1 = std::min(x0 + 1, in_w - 1);
      double wx = fx - x0;
      for (int k = 0; k < c; ++k) {
        double v00 = chw.at(k, y0, x0), v01 = chw.at(k, y0, x1);
        double v10 = chw.at(k, y1, x0), v11 = chw.at(k, y1, x1);
        out.at(k, y, x) =
            (1 - wy) * ((1 - wx) * v00 + wx * v01) + wy * ((1 - wx) * v10 + wx * v11);
      }
    }
  }
  return out;
}

Tensor crop(const Tensor& chw, int top, int left, int height, int width) {
  if (top < 0 || left < 0 || top + height > chw.dim(1) || left + width > chw.dim(2))
    throw Error::invalid("crop out of bounds");
  Tensor out({chw.dim(0), height, width});
  for (int k = 0; k < chw.dim(0); ++k)
    for (int y = 0; y < height; ++y)
      for (int x = 0; x < width; ++x) out.at(k, y, x) = chw.at(k, top + y, left + x);
  return out;
}

Tensor hflip(const Tensor& chw) {
  Tensor out(chw.shape());
  const int w = chw.dim(2);
  for (int k = 0; k < chw.dim(0); ++k)
    for (int y = 0; y < chw.dim(1); ++y)
      for (int x = 0; x < w; ++x) out.at(k, y, x) = chw.at(k, y, w - 1 - x);
  return out;
}

void hsv_to_rgb(double h, double s, double v, double* r, double* g, double* b) {
  h = std::fmod(std::fmod(h, 360.0) + 360.0, 360.0);
  double c = v * s;
  double hp = h / 60.0;
  double x = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
  double rp = 0, gp = 0, bp = 0;
  if (hp < 1) {
    rp = c; gp = x;
  } else if (hp < 2) {
    rp = x; gp = c;
  } else if (hp < 3) {
    gp = c; bp = x;
  } else if (hp < 4) {
    gp = x; bp = c;
  } else if (hp < 5) {
    rp = x; bp = c;
  } else {
    rp = c; bp = x;
  }
  double m = v - c;
  *r = rp + m;
  *g = gp + m;
  *b = bp + m;
}

void rgb_to_hsv(double r, double g, double b, double* h, double* s, double* v) {
  double mx = std::max({r, g, b});
  double mn = std::min({r, g, b});
  double d = mx - mn;
  *v = mx;
  *s = mx > 0 ? d / mx : 0.0;
  if (d <= 0) {
    *h = 0.0;
    return;
  }
  double hh;
  if (mx == r)
    hh = std::fmod((g - b) / d, 6.0);
  else if (mx == g)
    hh = (b - r) / d + 2.0;
  else
    hh = (r - g) / d + 4.0;
  *h = std::fmod(hh * 60.0 + 360.0, 360.0);
}

}  // namespace cssl
