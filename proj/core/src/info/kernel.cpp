#include "pib/info/kernel.hpp"

#include <algorithm>
#include <cmath>

namespace pib::info {

BandwidthRule BandwidthRule::fixed(double sigma) {
  if (!(sigma > 0.0)) fail(ErrKind::NonFiniteInput, "fixed bandwidth must be > 0");
  BandwidthRule r;
  r.kind = Kind::Fixed;
  r.sigma = sigma;
  return r;
}

BandwidthRule BandwidthRule::median(double gamma) {
  if (!(gamma > 0.0)) fail(ErrKind::NonFiniteInput, "median-heuristic gamma must be > 0");
  BandwidthRule r;
  r.kind = Kind::MedianHeuristic;
  r.gamma = gamma;
  return r;
}

KernelSpec KernelSpec::gaussian_median(double gamma) {
  return KernelSpec{KernelKind::GaussianRBF, BandwidthRule::median(gamma)};
}

KernelSpec KernelSpec::gaussian_fixed(double sigma) {
  return KernelSpec{KernelKind::GaussianRBF, BandwidthRule::fixed(sigma)};
}

KernelSpec KernelSpec::label_delta() {
  return KernelSpec{KernelKind::LabelDelta, BandwidthRule{}};
}

void NormalizedGram::validate(const char* where) const {
  const Eigen::Index n = A.rows();
  if (n != A.cols()) fail(ErrKind::DimensionMismatch, std::string(where) + ": gram not square");
  if (!all_finite(A)) fail(ErrKind::NonFiniteInput, std::string(where) + ": non-finite gram entry");
  double max_asym = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      max_asym = std::max(max_asym, std::abs(A(i, j) - A(j, i)));
  if (max_asym > 1e-12)
    fail(ErrKind::NonFiniteInput, std::string(where) + ": gram asymmetry exceeds 1e-12");
  if (std::abs(A.trace() - 1.0) > 1e-10)
    fail(ErrKind::NonFiniteInput, std::string(where) + ": gram trace deviates from 1");
}

double median_bandwidth(const FeatureBatch& batch, double gamma) {
  check_feature_batch(batch, "median_bandwidth");
  if (!(gamma > 0.0)) fail(ErrKind::NonFiniteInput, "median_bandwidth: gamma must be > 0");
  const Eigen::Index n = batch.rows();
  std::vector<double> d;
  d.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      d.push_back((batch.row(i) - batch.row(j)).norm());
  std::sort(d.begin(), d.end());
  const std::size_t m = d.size();
  double med = (m % 2 == 1) ? d[m / 2] : 0.5 * (d[m / 2 - 1] + d[m / 2]);
  if (!(med > 0.0)) return gamma;  // degenerate batch: all (or most) points coincide
  return gamma * med;
}

double resolve_bandwidth(const FeatureBatch& batch, const BandwidthRule& rule) {
  if (rule.kind == BandwidthRule::Kind::Fixed) return rule.sigma;
  return median_bandwidth(batch, rule.gamma);
}

NormalizedGram gram_gaussian(const FeatureBatch& batch, double sigma) {
  check_feature_batch(batch, "gram_gaussian");
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    fail(ErrKind::NonFiniteInput, "gram_gaussian: sigma must be positive and finite");
  const Eigen::Index n = batch.rows();
  const double inv = 1.0 / (2.0 * sigma * sigma);
  const double inv_n = 1.0 / static_cast<double>(n);
  Mat a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    a(i, i) = inv_n;  // K_ii = 1 exactly
    for (Eigen::Index j = i + 1; j < n; ++j) {
      double d2 = (batch.row(i) - batch.row(j)).squaredNorm();
      double v = std::exp(-d2 * inv) * inv_n;
      a(i, j) = v;
      a(j, i) = v;
    }
  }
  return NormalizedGram{std::move(a)};
}

NormalizedGram gram_labels(const LabelBatch& labels) {
  const Eigen::Index n = static_cast<Eigen::Index>(labels.size());
  if (n < 2) fail(ErrKind::EmptyBatch, "gram_labels: need at least 2 labels");
  const double inv_n = 1.0 / static_cast<double>(n);
  Mat a = Mat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (labels[static_cast<std::size_t>(i)] == labels[static_cast<std::size_t>(j)])
        a(i, j) = inv_n;
  return NormalizedGram{std::move(a)};
}

NormalizedGram gram(const FeatureBatch& batch, const KernelSpec& spec) {
  if (spec.kind == KernelKind::LabelDelta)
    fail(ErrKind::NonFiniteInput, "gram: LabelDelta kernel requires a label batch");
  return gram_gaussian(batch, resolve_bandwidth(batch, spec.bandwidth));
}

}  // namespace pib::info
