#include "pib/info/entropy.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace pib::info {

namespace {

constexpr double kLn2 = 0.6931471805599453094172321214581766;

Eigen::SelfAdjointEigenSolver<Mat> decompose(const Mat& a) {
  Eigen::SelfAdjointEigenSolver<Mat> es(a);
  if (es.info() != Eigen::Success)
    fail(ErrKind::EigDecompositionFailure, "symmetric eigendecomposition failed");
  return es;
}

void check_same_size(const NormalizedGram& a, const NormalizedGram& b, const char* where) {
  if (a.A.rows() != b.A.rows())
    fail(ErrKind::DimensionMismatch,
         std::string(where) + ": gram sizes differ (" + std::to_string(a.A.rows()) + " vs " +
             std::to_string(b.A.rows()) + ")");
}

// Hadamard product renormalized to unit trace.
NormalizedGram hadamard_joint(const NormalizedGram& a, const NormalizedGram& b) {
  Mat c = a.A.cwiseProduct(b.A);
  double t = c.trace();
  if (!(t > 1e-300)) fail(ErrKind::DegenerateJoint, "joint gram trace underflow");
  c /= t;
  return NormalizedGram{std::move(c)};
}

}  // namespace

double entropy(const NormalizedGram& a, RenyiOrder alpha) {
  if (a.A.rows() != a.A.cols())
    fail(ErrKind::DimensionMismatch, "entropy: gram not square");
  if (alpha.is_two()) {
    // sum lambda^2 = tr(A^2) = |A|_F^2 for symmetric A
    return -std::log2(a.A.squaredNorm());
  }
  auto es = decompose(a.A);
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    double lam = es.eigenvalues()[i];
    if (lam <= 0.0) continue;  // clamp to [0, inf) before powering
    s += std::pow(lam, alpha.alpha);
  }
  return std::log2(s) / (1.0 - alpha.alpha);
}

double joint_entropy(const NormalizedGram& a, const NormalizedGram& b, RenyiOrder alpha) {
  check_same_size(a, b, "joint_entropy");
  return entropy(hadamard_joint(a, b), alpha);
}

double mutual_information(const NormalizedGram& a, const NormalizedGram& b, RenyiOrder alpha) {
  check_same_size(a, b, "mutual_information");
  return entropy(a, alpha) + entropy(b, alpha) - joint_entropy(a, b, alpha);
}

Mat entropy_gradient(const NormalizedGram& a, RenyiOrder alpha) {
  const double al = alpha.alpha;
  if (alpha.is_two()) {
    // S_2 = -log2 |A|_F^2  =>  dS/dA = -2A / (ln2 |A|_F^2)
    double f2 = a.A.squaredNorm();
    return a.A * (-2.0 / (kLn2 * f2));
  }
  auto es = decompose(a.A);
  Vec lam = es.eigenvalues().cwiseMax(kEigClamp);
  Vec pow_am1(lam.size());
  double tr_pow = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    pow_am1[i] = std::pow(lam[i], al - 1.0);
    tr_pow += pow_am1[i] * lam[i];
  }
  Mat a_pow = es.eigenvectors() * pow_am1.asDiagonal() * es.eigenvectors().transpose();
  return a_pow * (al / ((1.0 - al) * kLn2 * tr_pow));
}

Mat joint_entropy_gradient_wrt_a(const NormalizedGram& a, const NormalizedGram& b,
                                 RenyiOrder alpha) {
  check_same_size(a, b, "joint_entropy_gradient");
  Mat had = a.A.cwiseProduct(b.A);
  double t = had.trace();
  if (!(t > 1e-300)) fail(ErrKind::DegenerateJoint, "joint gram trace underflow");
  NormalizedGram c{had / t};
  Mat h = entropy_gradient(c, alpha);
  // dS = sum H o dC;  C = (A o B)/t, t = sum_k A_kk B_kk:
  //   dS/dA_pq = H_pq B_pq / t - [pq diagonal] (sum H o C) B_pp / t
  double hc = h.cwiseProduct(c.A).sum();
  Mat g = h.cwiseProduct(b.A) / t;
  for (Eigen::Index i = 0; i < g.rows(); ++i) g(i, i) -= hc * b.A(i, i) / t;
  return g;
}

}  // namespace pib::info
