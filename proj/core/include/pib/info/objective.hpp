#pragma once

#include "pib/info/entropy.hpp"

namespace pib::info {

// One evaluation of the bottleneck Lagrangian in minimization form,
//   loss = -[ I(Y;Z) - beta I(X;Z) ],
// with the analytic gradient with respect to the feature entries of Z.
struct PibEval {
  double loss = 0.0;
  double i_xz_bits = 0.0;
  double i_yz_bits = 0.0;
  Mat grad;  // N x D, dloss/dZ
};

// X_gram and Y_gram are precomputed for the same batch rows as Z. The Z gram
// is Gaussian with the bandwidth resolved per call (median heuristic by
// default) and treated as a constant during differentiation.
PibEval pib_loss_and_grad(const FeatureBatch& z, const NormalizedGram& x_gram,
                          const NormalizedGram& y_gram, double beta, RenyiOrder alpha,
                          const KernelSpec& kernel);

// Chain rule through the Gaussian kernel: given dloss/dK (symmetric) for
// K_ij = exp(-|z_i - z_j|^2 / (2 sigma^2)), returns dloss/dZ.
Mat gaussian_kernel_chain(const Mat& dloss_dk, const Mat& k, const FeatureBatch& z,
                          double sigma);

}  // namespace pib::info
