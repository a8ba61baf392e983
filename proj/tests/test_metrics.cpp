#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "cssl/common.hpp"
#include "cssl/metrics.hpp"
#include "oracles.hpp"

using namespace cssl;

namespace {

ConfusionMatrix from_counts(const std::vector<std::vector<long long>>& rows) {
  ConfusionMatrix cm(static_cast<int>(rows.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      cm.add(static_cast<int>(i), static_cast<int>(j), rows[i][j]);
  return cm;
}

}  // namespace

TEST_CASE("balanced accuracy basics") {
  CHECK(balanced_accuracy(from_counts({{7, 0}, {0, 9}})) == doctest::Approx(1.0));
  CHECK(balanced_accuracy(from_counts({{5, 5}, {0, 10}})) == doctest::Approx(0.75));
  // Uniform confusion over C classes sits at chance.
  CHECK(balanced_accuracy(from_counts({{2, 2, 2}, {3, 3, 3}, {1, 1, 1}})) ==
        doctest::Approx(1.0 / 3.0));
}

TEST_CASE("per-class accuracy and the definitional identity") {
  auto cm = from_counts({{5, 5}, {0, 10}});
  auto pc = per_class_accuracy(cm);
  REQUIRE(pc.size() == 2);
  CHECK(pc[0] == doctest::Approx(0.5));
  CHECK(pc[1] == doctest::Approx(1.0));
  CHECK(balanced_accuracy(cm) == doctest::Approx((pc[0] + pc[1]) / 2.0));
}

TEST_CASE("empty class row errors with the class name") {
  auto cm = from_counts({{3, 1}, {0, 0}});
  CHECK_THROWS_WITH_AS(balanced_accuracy(cm), doctest::Contains("class 1"), Error);
}

TEST_CASE("roc_auc fixed cases") {
  CHECK(roc_auc({0.1, 0.2, 0.8, 0.9}, {0, 0, 1, 1}) == doctest::Approx(1.0));
  CHECK(roc_auc({1, 2, 3, 4}, {0, 1, 0, 1}) == doctest::Approx(0.75));
  CHECK(roc_auc({0.5, 0.5, 0.5, 0.5}, {0, 1, 0, 1}) == doctest::Approx(0.5));
  CHECK_THROWS_AS(roc_auc({0.1, 0.2}, {1, 1}), Error);
}

TEST_CASE("pr_auc fixed cases") {
  CHECK(pr_auc({0.9, 0.8, 0.2, 0.1}, {1, 1, 0, 0}) == doctest::Approx(1.0));
  CHECK(pr_auc({0.3, 0.6, 0.9}, {1, 1, 1}) == doctest::Approx(1.0));
  // Frozen from the threshold-enumeration oracle: envelope 1 up to recall 0.5,
  // then 2/3 up to recall 1.
  double v = pr_auc({0.9, 0.8, 0.7, 0.6}, {1, 0, 1, 0});
  CHECK(v == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
  CHECK(v == doctest::Approx(oracles::pr_auc_thresholds({0.9, 0.8, 0.7, 0.6}, {1, 0, 1, 0}))
                 .epsilon(1e-12));
  CHECK_THROWS_AS(pr_auc({0.1, 0.2}, {0, 0}), Error);
}

TEST_CASE("roc/pr match brute-force oracles on all tiny inputs") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> size_d(2, 12);
  std::uniform_int_distribution<int> label_d(0, 1);
  std::uniform_int_distribution<int> score_d(0, 5);  // small range to force ties

  int checked = 0;
  while (checked < 1500) {
    int n = size_d(rng);
    std::vector<double> scores(static_cast<size_t>(n));
    std::vector<int> labels(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      scores[static_cast<size_t>(i)] = score_d(rng) / 4.0;
      labels[static_cast<size_t>(i)] = label_d(rng);
    }
    int pos = 0;
    for (int l : labels) pos += l;
    if (pos == 0 || pos == n) continue;
    ++checked;

    CHECK(roc_auc(scores, labels) == oracles::roc_auc_pairs(scores, labels));
    CHECK(pr_auc(scores, labels) ==
          doctest::Approx(oracles::pr_auc_thresholds(scores, labels)).epsilon(1e-12));
  }
}

TEST_CASE("balanced accuracy matches the hand oracle on random matrices") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> classes_d(2, 6);
  std::uniform_int_distribution<long long> count_d(0, 20);
  for (int trial = 0; trial < 300; ++trial) {
    int c = classes_d(rng);
    std::vector<std::vector<long long>> rows(static_cast<size_t>(c),
                                             std::vector<long long>(static_cast<size_t>(c)));
    for (auto& r : rows) {
      long long sum = 0;
      for (auto& v : r) {
        v = count_d(rng);
        sum += v;
      }
      if (sum == 0) r[0] = 1;
    }
    CHECK(balanced_accuracy(from_counts(rows)) == oracles::balanced_accuracy_counts(rows));
  }
}

TEST_CASE("roc_auc invariances") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 10;
    std::vector<double> scores(static_cast<size_t>(n));
    std::vector<int> labels(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      scores[static_cast<size_t>(i)] = u(rng);
      labels[static_cast<size_t>(i)] = i % 2;
    }
    double base = roc_auc(scores, labels);

    // Strictly monotone transform leaves the ranking unchanged.
    std::vector<double> transformed = scores;
    for (double& s : transformed) s = std::exp(3.0 * s) + 1.0;
    CHECK(roc_auc(transformed, labels) == doctest::Approx(base).epsilon(1e-12));

    // Negation flips the statistic (scores are all distinct w.p. 1).
    std::vector<double> negated = scores;
    for (double& s : negated) s = -s;
    CHECK(roc_auc(negated, labels) == doctest::Approx(1.0 - base).epsilon(1e-12));
  }
}

TEST_CASE("argmax prediction breaks ties toward the lowest class") {
  CHECK(argmax_prediction({0.2, 0.5, 0.3}) == 1);
  CHECK(argmax_prediction({0.5, 0.5, 0.3}) == 0);
  CHECK(argmax_prediction({0.1, 0.4, 0.4}) == 1);
}

TEST_CASE("curve exports are monotone sweeps") {
  std::vector<double> scores{0.9, 0.7, 0.6, 0.4, 0.2};
  std::vector<int> labels{1, 0, 1, 1, 0};
  auto roc = roc_curve(scores, labels);
  REQUIRE(roc.size() >= 2);
  CHECK(roc.front().x == doctest::Approx(0.0));
  CHECK(roc.back().y == doctest::Approx(1.0));
  for (size_t i = 1; i < roc.size(); ++i) {
    CHECK(roc[i].x >= roc[i - 1].x);
    CHECK(roc[i].y >= roc[i - 1].y);
  }
  auto pr = pr_curve(scores, labels);
  CHECK(pr.back().x == doctest::Approx(1.0));
  auto tsv = curve_tsv(pr, "recall", "precision");
  CHECK(tsv.find("recall\tprecision") == 0);
}
