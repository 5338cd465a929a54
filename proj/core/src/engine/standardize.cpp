#include "pib/engine/standardize.hpp"

#include <cmath>

namespace pib::engine {

Standardizer Standardizer::fit(const Mat& feats) {
  if (feats.rows() < 1) fail(ErrKind::EmptyBatch, "Standardizer::fit: empty batch");
  Standardizer s;
  const double n = static_cast<double>(feats.rows());
  s.mean = feats.colwise().mean();
  Vec var = (feats.rowwise() - s.mean.transpose()).array().square().colwise().sum() / n;
  s.inv_std = var.array().sqrt().max(1e-8).inverse();
  Mat z = (feats.rowwise() - s.mean.transpose()) * s.inv_std.asDiagonal();
  double mx = z.cwiseAbs().maxCoeff();
  s.inv_scale = 1.0 / std::max(mx, 1e-8);
  return s;
}

Mat Standardizer::apply(const Mat& feats) const {
  if (feats.cols() != mean.size())
    fail(ErrKind::ShapeMismatch, "Standardizer::apply: dim mismatch");
  Mat z = (feats.rowwise() - mean.transpose()) * inv_std.asDiagonal();
  z *= inv_scale;
  return z.cwiseMax(-1.0).cwiseMin(1.0);
}

}  // namespace pib::engine
