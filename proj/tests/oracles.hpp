// Independent brute-force oracles used by the unit and acceptance suites.
// These deliberately avoid the library's implementation paths.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

namespace oracles {

// P(score+ > score-) + 0.5 P(equal), by exhaustive pair counting.
inline double roc_auc_pairs(const std::vector<double>& scores, const std::vector<int>& labels) {
  double wins = 0.0;
  long long pairs = 0;
  for (size_t i = 0; i < scores.size(); ++i) {
    if (labels[i] != 1) continue;
    for (size_t j = 0; j < scores.size(); ++j) {
      if (labels[j] != 0) continue;
      ++pairs;
      if (scores[i] > scores[j])
        wins += 1.0;
      else if (scores[i] == scores[j])
        wins += 0.5;
    }
  }
  return wins / static_cast<double>(pairs);
}

// Step integration of the precision envelope over recall, enumerating every
// distinct score as a threshold (predict positive when score >= t).
inline double pr_auc_thresholds(const std::vector<double>& scores,
                                const std::vector<int>& labels) {
  std::set<double, std::greater<double>> thresholds(scores.begin(), scores.end());
  long long total_pos = 0;
  for (int l : labels) total_pos += l;

  struct Pt {
    double recall, precision;
  };
  std::vector<Pt> pts;
  for (double t : thresholds) {
    long long tp = 0, fp = 0;
    for (size_t i = 0; i < scores.size(); ++i) {
      if (scores[i] >= t) {
        if (labels[i] == 1)
          ++tp;
        else
          ++fp;
      }
    }
    pts.push_back({static_cast<double>(tp) / static_cast<double>(total_pos),
                   static_cast<double>(tp) / static_cast<double>(tp + fp)});
  }

  std::vector<double> recalls;
  for (const auto& p : pts) recalls.push_back(p.recall);
  std::sort(recalls.begin(), recalls.end());
  recalls.erase(std::unique(recalls.begin(), recalls.end()), recalls.end());

  double area = 0.0, prev = 0.0;
  for (double r : recalls) {
    double env = 0.0;
    for (const auto& p : pts)
      if (p.recall >= r) env = std::max(env, p.precision);
    area += (r - prev) * env;
    prev = r;
  }
  return area;
}

// Per-class recall averaged by hand from raw counts.
inline double balanced_accuracy_counts(const std::vector<std::vector<long long>>& cm) {
  double sum = 0.0;
  for (size_t i = 0; i < cm.size(); ++i) {
    long long row = 0;
    for (long long v : cm[i]) row += v;
    sum += static_cast<double>(cm[i][i]) / static_cast<double>(row);
  }
  return sum / static_cast<double>(cm.size());
}

// Plain softmax cross-entropy, one log-sum-exp per row.
inline double softmax_ce(const std::vector<std::vector<double>>& logits,
                         const std::vector<int>& labels) {
  double total = 0.0;
  for (size_t n = 0; n < logits.size(); ++n) {
    double mx = *std::max_element(logits[n].begin(), logits[n].end());
    double lse = 0.0;
    for (double v : logits[n]) lse += std::exp(v - mx);
    lse = mx + std::log(lse);
    total += lse - logits[n][static_cast<size_t>(labels[n])];
  }
  return total / static_cast<double>(logits.size());
}

// Lloyd's k-means on raw points (Euclidean), run to convergence from the
// provided initial centroids. Returns assignments.
inline std::vector<int> kmeans_lloyd(const std::vector<Eigen::VectorXd>& points,
                                     std::vector<Eigen::VectorXd> centroids,
                                     int max_iters = 200) {
  const int k = static_cast<int>(centroids.size());
  std::vector<int> assign(points.size(), 0);
  for (int iter = 0; iter < max_iters; ++iter) {
    bool changed = false;
    for (size_t i = 0; i < points.size(); ++i) {
      int best = 0;
      double best_d = (points[i] - centroids[0]).squaredNorm();
      for (int c = 1; c < k; ++c) {
        double d = (points[i] - centroids[static_cast<size_t>(c)]).squaredNorm();
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      if (assign[i] != best) {
        assign[i] = best;
        changed = true;
      }
    }
    if (!changed && iter > 0) break;
    for (int c = 0; c < k; ++c) {
      Eigen::VectorXd sum = Eigen::VectorXd::Zero(points[0].size());
      int count = 0;
      for (size_t i = 0; i < points.size(); ++i)
        if (assign[i] == c) {
          sum += points[i];
          ++count;
        }
      if (count > 0) centroids[static_cast<size_t>(c)] = sum / count;
    }
  }
  return assign;
}

// CKA via the Gram-matrix / HSIC route: tr(KHLH) normalized, K = X X^T.
inline double cka_hsic(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  const auto n = x.rows();
  Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n) -
                      Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
  Eigen::MatrixXd k = x * x.transpose();
  Eigen::MatrixXd l = y * y.transpose();
  Eigen::MatrixXd kc = h * k * h;
  Eigen::MatrixXd lc = h * l * h;
  double hsic_kl = (kc.array() * lc.array()).sum();
  double hsic_kk = (kc.array() * kc.array()).sum();
  double hsic_ll = (lc.array() * lc.array()).sum();
  return hsic_kl / std::sqrt(hsic_kk * hsic_ll);
}

// Central finite difference of a scalar function of one coordinate.
template <typename F>
double central_diff(F f, double x, double h = 1e-6) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline double rel_err(double got, double want) {
  double denom = std::max({std::abs(got), std::abs(want), 1e-12});
  return std::abs(got - want) / denom;
}

}  // namespace oracles
