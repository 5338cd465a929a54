#pragma once

#include "pib/info/kernel.hpp"
#include "pib/types.hpp"

namespace pib::info {

// Renyi order alpha; alpha > 0, alpha != 1. Order 2 has closed-form paths
// that avoid eigendecomposition entirely.
struct RenyiOrder {
  double alpha;

  explicit RenyiOrder(double a) : alpha(a) {
    if (!(a > 0.0) || a == 1.0)
      fail(ErrKind::NonFiniteInput, "RenyiOrder: alpha must be > 0 and != 1");
  }
  bool is_two() const { return alpha == 2.0; }
};

// Eigenvalue floor applied before fractional matrix powers.
inline constexpr double kEigClamp = 1e-12;

// S_alpha(A) = log2(sum_i lambda_i^alpha) / (1 - alpha), in bits.
// alpha = 2 uses -log2(|A|_F^2) without an eigendecomposition.
double entropy(const NormalizedGram& a, RenyiOrder alpha);

// Entropy of (A o B) / tr(A o B) (Hadamard product, renormalized).
double joint_entropy(const NormalizedGram& a, const NormalizedGram& b, RenyiOrder alpha);

// I = S(A) + S(B) - S(A,B); symmetric, >= -1e-9 on valid grams.
double mutual_information(const NormalizedGram& a, const NormalizedGram& b, RenyiOrder alpha);

// dS_alpha(A)/dA = alpha A^{alpha-1} / ((1-alpha) ln2 tr(A^alpha)), matrix
// power by eigendecomposition with eigenvalues clamped at kEigClamp. The
// alpha = 2 case reduces to -2A / (ln2 |A|_F^2) with no decomposition.
Mat entropy_gradient(const NormalizedGram& a, RenyiOrder alpha);

// Gradient of S_alpha((A o B)/tr(A o B)) with respect to A, holding B fixed.
Mat joint_entropy_gradient_wrt_a(const NormalizedGram& a, const NormalizedGram& b,
                                 RenyiOrder alpha);

}  // namespace pib::info
