#include "cssl/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "cssl/common.hpp"

namespace cssl {

void ConfusionMatrix::add(int true_class, int predicted_class, int64_t count) {
  if (true_class < 0 || true_class >= classes_ || predicted_class < 0 ||
      predicted_class >= classes_)
    throw Error::invalid("confusion matrix: class index out of range");
  counts_[static_cast<size_t>(true_class) * classes_ + predicted_class] += count;
}

int64_t ConfusionMatrix::row_sum(int true_class) const {
  int64_t s = 0;
  for (int j = 0; j < classes_; ++j) s += at(true_class, j);
  return s;
}

int64_t ConfusionMatrix::total() const {
  int64_t s = 0;
  for (int i = 0; i < classes_; ++i) s += row_sum(i);
  return s;
}

std::vector<double> per_class_accuracy(const ConfusionMatrix& cm) {
  std::vector<double> out(static_cast<size_t>(cm.num_classes()));
  for (int c = 0; c < cm.num_classes(); ++c) {
    int64_t n = cm.row_sum(c);
    if (n == 0)
      throw Error::invalid("balanced accuracy undefined: class " + std::to_string(c) +
                           " has no samples");
    out[static_cast<size_t>(c)] = static_cast<double>(cm.at(c, c)) / static_cast<double>(n);
  }
  return out;
}

double balanced_accuracy(const ConfusionMatrix& cm) {
  auto per_class = per_class_accuracy(cm);
  double s = std::accumulate(per_class.begin(), per_class.end(), 0.0);
  return s / static_cast<double>(per_class.size());
}

namespace {

void check_binary_inputs(const std::vector<double>& scores, const std::vector<int>& labels) {
  if (scores.size() != labels.size())
    throw Error::invalid("scores and labels must have equal length");
  if (scores.empty()) throw Error::invalid("empty score list");
  for (int l : labels)
    if (l != 0 && l != 1) throw Error::invalid("labels must be binary 0/1");
}

}  // namespace

double roc_auc(const std::vector<double>& scores, const std::vector<int>& labels) {
  check_binary_inputs(scores, labels);
  int64_t pos = std::count(labels.begin(), labels.end(), 1);
  int64_t neg = static_cast<int64_t>(labels.size()) - pos;
  if (pos == 0 || neg == 0) throw Error::invalid("roc_auc requires both classes present");

  std::vector<size_t> order(scores.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return scores[a] < scores[b]; });

  // Rank sum of positives with average ranks for ties.
  double rank_sum_pos = 0.0;
  size_t i = 0;
  while (i < order.size()) {
    size_t j = i;
    while (j + 1 < order.size() && scores[order[j + 1]] == scores[order[i]]) ++j;
    double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (size_t k = i; k <= j; ++k)
      if (labels[order[k]] == 1) rank_sum_pos += avg_rank;
    i = j + 1;
  }
  double u = rank_sum_pos - static_cast<double>(pos) * (static_cast<double>(pos) + 1.0) / 2.0;
  return u / (static_cast<double>(pos) * static_cast<double>(neg));
}

namespace {

struct PrPoint {
  double recall;
  double precision;
};

std::vector<PrPoint> pr_points(const std::vector<double>& scores, const std::vector<int>& labels,
                               int64_t* total_pos) {
  std::vector<size_t> order(scores.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return scores[a] > scores[b]; });

  int64_t pos = std::count(labels.begin(), labels.end(), 1);
  *total_pos = pos;

  std::vector<PrPoint> points;
  int64_t tp = 0, fp = 0;
  size_t i = 0;
  while (i < order.size()) {
    size_t j = i;
    while (j + 1 < order.size() && scores[order[j + 1]] == scores[order[i]]) ++j;
    for (size_t k = i; k <= j; ++k) {
      if (labels[order[k]] == 1)
        ++tp;
      else
        ++fp;
    }
    points.push_back({static_cast<double>(tp) / static_cast<double>(pos),
                      static_cast<double>(tp) / static_cast<double>(tp + fp)});
    i = j + 1;
  }
  return points;
}

}  // namespace

double pr_auc(const std::vector<double>& scores, const std::vector<int>& labels) {
  check_binary_inputs(scores, labels);
  int64_t pos = 0;
  auto points = pr_points(scores, labels, &pos);
  if (pos == 0) throw Error::invalid("pr_auc requires at least one positive");

  // Envelope: max precision over all operating points with recall >= r,
  // integrated as steps between consecutive distinct recall levels.
  double area = 0.0;
  double prev_recall = 0.0;
  for (size_t i = 0; i < points.size(); ++i) {
    if (i + 1 < points.size() && points[i + 1].recall == points[i].recall) continue;
    double envelope = 0.0;
    for (const auto& p : points)
      if (p.recall >= points[i].recall) envelope = std::max(envelope, p.precision);
    area += (points[i].recall - prev_recall) * envelope;
    prev_recall = points[i].recall;
  }
  return area;
}

int argmax_prediction(const std::vector<double>& class_scores) {
  if (class_scores.empty()) throw Error::invalid("argmax over empty scores");
  int best = 0;
  for (int i = 1; i < static_cast<int>(class_scores.size()); ++i)
    if (class_scores[static_cast<size_t>(i)] > class_scores[static_cast<size_t>(best)]) best = i;
  return best;
}

std::vector<CurvePoint> roc_curve(const std::vector<double>& scores,
                                  const std::vector<int>& labels) {
  check_binary_inputs(scores, labels);
  int64_t pos = std::count(labels.begin(), labels.end(), 1);
  int64_t neg = static_cast<int64_t>(labels.size()) - pos;
  if (pos == 0 || neg == 0) throw Error::invalid("roc_curve requires both classes present");

  std::vector<size_t> order(scores.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return scores[a] > scores[b]; });

  std::vector<CurvePoint> curve{{0.0, 0.0}};
  int64_t tp = 0, fp = 0;
  size_t i = 0;
  while (i < order.size()) {
    size_t j = i;
    while (j + 1 < order.size() && scores[order[j + 1]] == scores[order[i]]) ++j;
    for (size_t k = i; k <= j; ++k) {
      if (labels[order[k]] == 1)
        ++tp;
      else
        ++fp;
    }
    curve.push_back({static_cast<double>(fp) / static_cast<double>(neg),
                     static_cast<double>(tp) / static_cast<double>(pos)});
    i = j + 1;
  }
  return curve;
}

std::vector<CurvePoint> pr_curve(const std::vector<double>& scores,
                                 const std::vector<int>& labels) {
  check_binary_inputs(scores, labels);
  int64_t pos = 0;
  auto points = pr_points(scores, labels, &pos);
  if (pos == 0) throw Error::invalid("pr_curve requires at least one positive");
  std::vector<CurvePoint> curve;
  for (const auto& p : points) curve.push_back({p.recall, p.precision});
  return curve;
}

std::string curve_tsv(const std::vector<CurvePoint>& curve, const std::string& x_name,
                      const std::string& y_name) {
  std::ostringstream os;
  os << x_name << "\t" << y_name << "\n";
  char buf[64];
  for (const auto& p : curve) {
    std::snprintf(buf, sizeof(buf), "%.6f\t%.6f\n", p.x, p.y);
    os << buf;
  }
  return os.str();
}

}  // namespace cssl
