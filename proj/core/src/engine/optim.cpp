#include "pib/engine/optim.hpp"

#include <cmath>

namespace pib::engine {

void Adam::step(Mat& param, const Mat& grad) {
  if (m_.size() == 0) {
    m_ = Mat::Zero(param.rows(), param.cols());
    v_ = Mat::Zero(param.rows(), param.cols());
  }
  ++t_;
  m_ = cfg_.beta1 * m_ + (1.0 - cfg_.beta1) * grad;
  v_ = cfg_.beta2 * v_ + (1.0 - cfg_.beta2) * grad.cwiseProduct(grad);
  const double bc1 = 1.0 - std::pow(cfg_.beta1, static_cast<double>(t_));
  const double bc2 = 1.0 - std::pow(cfg_.beta2, static_cast<double>(t_));
  Mat mhat = m_ / bc1;
  Mat vhat = v_ / bc2;
  param -= cfg_.lr * mhat.cwiseQuotient(vhat.cwiseSqrt() + Mat::Constant(param.rows(), param.cols(), cfg_.eps));
}

void Adam::step(Vec& param, const Vec& grad) {
  Mat p = param;
  step(p, Mat(grad));
  param = p.col(0);
}

void Adam::reset() {
  m_.resize(0, 0);
  v_.resize(0, 0);
  t_ = 0;
}

double softmax_xent(const Mat& logits, const LabelBatch& labels, Mat* dlogits) {
  const Eigen::Index n = logits.rows();
  if (static_cast<std::size_t>(n) != labels.size())
    fail(ErrKind::ShapeMismatch, "softmax_xent: logits/labels row mismatch");
  Mat p = softmax_rows(logits);
  double loss = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double q = std::max(p(i, labels[static_cast<std::size_t>(i)]), 1e-300);
    loss -= std::log(q);
  }
  loss /= static_cast<double>(n);
  if (dlogits) {
    *dlogits = p;
    for (Eigen::Index i = 0; i < n; ++i) (*dlogits)(i, labels[static_cast<std::size_t>(i)]) -= 1.0;
    *dlogits /= static_cast<double>(n);
  }
  return loss;
}

Mat softmax_rows(const Mat& logits) {
  Mat p = logits;
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    double mx = p.row(i).maxCoeff();
    p.row(i) = (p.row(i).array() - mx).exp();
    p.row(i) /= p.row(i).sum();
  }
  return p;
}

double accuracy_from_logits(const Mat& logits, const LabelBatch& labels) {
  const Eigen::Index n = logits.rows();
  if (static_cast<std::size_t>(n) != labels.size())
    fail(ErrKind::ShapeMismatch, "accuracy: logits/labels row mismatch");
  long correct = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index arg;
    logits.row(i).maxCoeff(&arg);
    if (arg == labels[static_cast<std::size_t>(i)]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(n);
}

}  // namespace pib::engine
