#include "pib/info/objective.hpp"

#include <cmath>

namespace pib::info {

Mat gaussian_kernel_chain(const Mat& dloss_dk, const Mat& k, const FeatureBatch& z,
                          double sigma) {
  // dK_ij/dz_i = K_ij (z_j - z_i) / sigma^2, so with M = dL/dK o K:
  //   dL/dz_p = (2/sigma^2) sum_j M_pj (z_j - z_p)
  Mat m = dloss_dk.cwiseProduct(k);
  Vec row_sum = m.rowwise().sum();
  Mat g = m * z;
  g -= row_sum.asDiagonal() * z;
  g *= 2.0 / (sigma * sigma);
  return g;
}

PibEval pib_loss_and_grad(const FeatureBatch& z, const NormalizedGram& x_gram,
                          const NormalizedGram& y_gram, double beta, RenyiOrder alpha,
                          const KernelSpec& kernel) {
  check_feature_batch(z, "pib_loss_and_grad");
  if (kernel.kind != KernelKind::GaussianRBF)
    fail(ErrKind::NonFiniteInput, "pib_loss_and_grad: feature kernel must be GaussianRBF");
  if (x_gram.size() != z.rows() || y_gram.size() != z.rows())
    fail(ErrKind::DimensionMismatch, "pib_loss_and_grad: gram/batch row mismatch");
  if (beta < 0.0) fail(ErrKind::NonFiniteInput, "pib_loss_and_grad: beta must be >= 0");

  const double sigma = resolve_bandwidth(z, kernel.bandwidth);
  NormalizedGram az = gram_gaussian(z, sigma);

  const double s_z = entropy(az, alpha);
  const double s_x = entropy(x_gram, alpha);
  const double s_y = entropy(y_gram, alpha);
  const double s_yz = joint_entropy(y_gram, az, alpha);
  const double s_xz = joint_entropy(x_gram, az, alpha);

  PibEval out;
  out.i_yz_bits = s_y + s_z - s_yz;
  out.i_xz_bits = s_x + s_z - s_xz;
  out.loss = -(out.i_yz_bits - beta * out.i_xz_bits);

  // loss = -S_y - S_z + S_yz + beta (S_x + S_z - S_xz)
  Mat g_a = entropy_gradient(az, alpha) * (beta - 1.0);
  g_a += joint_entropy_gradient_wrt_a(az, y_gram, alpha);
  g_a -= beta * joint_entropy_gradient_wrt_a(az, x_gram, alpha);

  const double n = static_cast<double>(z.rows());
  Mat k = az.A * n;              // recover K from A = K/N
  Mat dloss_dk = g_a / n;        // dA/dK = 1/N
  out.grad = gaussian_kernel_chain(dloss_dk, k, z, sigma);
  if (!all_finite(out.grad) || !std::isfinite(out.loss))
    fail(ErrKind::NonFiniteLoss, "pib_loss_and_grad: non-finite loss or gradient");
  return out;
}

}  // namespace pib::info
