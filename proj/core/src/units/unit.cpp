#include "pib/units/unit.hpp"

namespace pib::units {

Mat apply_activation(Activation act, const Mat& pre) {
  switch (act) {
    case Activation::Identity:
      return pre;
    case Activation::ReLU:
      return pre.cwiseMax(0.0);
  }
  return pre;
}

Mat activation_derivative(Activation act, const Mat& pre) {
  switch (act) {
    case Activation::Identity:
      return Mat::Ones(pre.rows(), pre.cols());
    case Activation::ReLU:
      return (pre.array() > 0.0).cast<double>();
  }
  return Mat::Ones(pre.rows(), pre.cols());
}

DigitalReadout DigitalReadout::init(Eigen::Index d_out, Eigen::Index d_in, Activation act,
                                    Rng& rng) {
  DigitalReadout r;
  r.activation = act;
  r.w.resize(d_out, d_in);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d_in));
  for (Eigen::Index i = 0; i < d_out; ++i)
    for (Eigen::Index j = 0; j < d_in; ++j) r.w(i, j) = rng.gaussian() * scale;
  r.b = Vec::Zero(d_out);
  return r;
}

FeatureBatch DigitalReadout::forward(const FeatureBatch& s) const {
  if (s.cols() != w.cols())
    fail(ErrKind::ShapeMismatch, "DigitalReadout::forward: input dim " +
                                     std::to_string(s.cols()) + " != " + std::to_string(w.cols()));
  Mat pre = s * w.transpose();
  pre.rowwise() += b.transpose();
  return apply_activation(activation, pre);
}

Mat DigitalReadout::backward(const FeatureBatch& s, const Mat& dloss_dz, Mat& dw,
                             Vec& db) const {
  Mat pre = s * w.transpose();
  pre.rowwise() += b.transpose();
  Mat dpre = dloss_dz.cwiseProduct(activation_derivative(activation, pre));
  dw = dpre.transpose() * s;
  db = dpre.colwise().sum();
  return dpre * w;
}

}  // namespace pib::units
