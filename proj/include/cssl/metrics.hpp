#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cssl {

// Rows are true classes, columns predicted.
class ConfusionMatrix {
 public:
  ConfusionMatrix() = default;
  explicit ConfusionMatrix(int num_classes)
      : classes_(num_classes), counts_(static_cast<size_t>(num_classes) * num_classes, 0) {}

  void add(int true_class, int predicted_class, int64_t count = 1);
  int64_t at(int true_class, int predicted_class) const {
    return counts_[static_cast<size_t>(true_class) * classes_ + predicted_class];
  }
  int num_classes() const { return classes_; }
  int64_t row_sum(int true_class) const;
  int64_t total() const;

 private:
  int classes_ = 0;
  std::vector<int64_t> counts_;
};

// Mean per-class recall. Errors on an empty row, naming the class.
double balanced_accuracy(const ConfusionMatrix& cm);
std::vector<double> per_class_accuracy(const ConfusionMatrix& cm);

// Mann-Whitney normalization: P(score+ > score-) + 0.5 * P(equal).
double roc_auc(const std::vector<double>& scores, const std::vector<int>& labels);

// Area under the precision-recall step curve, integrating the precision
// envelope (max precision over recall >= r) across recall steps.
double pr_auc(const std::vector<double>& scores, const std::vector<int>& labels);

// argmax with ties broken by lowest class index.
int argmax_prediction(const std::vector<double>& class_scores);

struct CurvePoint {
  double x = 0.0;
  double y = 0.0;
};

// Threshold sweeps exported for external plotting: (FPR, TPR) / (recall, precision).
std::vector<CurvePoint> roc_curve(const std::vector<double>& scores, const std::vector<int>& labels);
std::vector<CurvePoint> pr_curve(const std::vector<double>& scores, const std::vector<int>& labels);
std::string curve_tsv(const std::vector<CurvePoint>& curve, const std::string& x_name,
                      const std::string& y_name);

}  // namespace cssl
