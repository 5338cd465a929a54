#pragma once

#include "pib/engine/spec.hpp"
#include "pib/types.hpp"

namespace pib::engine {

// Adaptive-moment gradient descent state for one matrix-shaped parameter.
class Adam {
 public:
  Adam() = default;
  explicit Adam(const OptimizerConfig& cfg) : cfg_(cfg) {}

  void step(Mat& param, const Mat& grad);
  void step(Vec& param, const Vec& grad);

  void reset();

 private:
  OptimizerConfig cfg_;
  Mat m_, v_;
  long t_ = 0;
};

// Softmax cross-entropy over logits (one row per sample). Fills, when
// requested, dloss/dlogits = (softmax - onehot) / N.
double softmax_xent(const Mat& logits, const LabelBatch& labels, Mat* dlogits);

Mat softmax_rows(const Mat& logits);

double accuracy_from_logits(const Mat& logits, const LabelBatch& labels);

}  // namespace pib::engine
