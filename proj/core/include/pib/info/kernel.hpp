#pragma once

#include "pib/types.hpp"

namespace pib::info {

enum class KernelKind { GaussianRBF, LabelDelta };

struct BandwidthRule {
  enum class Kind { Fixed, MedianHeuristic } kind = Kind::MedianHeuristic;
  double sigma = 1.0;  // Fixed: the bandwidth itself
  double gamma = 1.0;  // MedianHeuristic: scale factor on the median distance

  static BandwidthRule fixed(double sigma);
  static BandwidthRule median(double gamma = 1.0);
};

struct KernelSpec {
  KernelKind kind = KernelKind::GaussianRBF;
  BandwidthRule bandwidth;  // ignored for LabelDelta

  static KernelSpec gaussian_median(double gamma = 1.0);
  static KernelSpec gaussian_fixed(double sigma);
  static KernelSpec label_delta();
};

// Trace-1 symmetric PSD kernel matrix; the input to every entropy call.
struct NormalizedGram {
  Mat A;

  Eigen::Index size() const { return A.rows(); }

  // Checks symmetry (1e-12), unit trace (1e-10) and finiteness. PSD is by
  // construction for the kernels used here; callers assembling grams by hand
  // can ask entropy() for the eigenvalue check.
  void validate(const char* where) const;
};

// gamma * median of the N(N-1)/2 pairwise Euclidean distances. Falls back to
// gamma when every distance is zero (or the median itself degenerates to 0).
double median_bandwidth(const FeatureBatch& batch, double gamma);

// Resolve a bandwidth rule against a concrete batch.
double resolve_bandwidth(const FeatureBatch& batch, const BandwidthRule& rule);

// Gaussian RBF gram: K_ij = exp(-|z_i - z_j|^2 / (2 sigma^2)), A = K / N.
NormalizedGram gram_gaussian(const FeatureBatch& batch, double sigma);

// 0/1 class-identity kernel: K_ij = [y_i == y_j], A = K / N.
NormalizedGram gram_labels(const LabelBatch& labels);

// Dispatch on KernelSpec (GaussianRBF path; LabelDelta requires labels).
NormalizedGram gram(const FeatureBatch& batch, const KernelSpec& spec);

}  // namespace pib::info
