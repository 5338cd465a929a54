#include "pib/units/optical.hpp"

#include <cmath>

namespace pib::units {

namespace {

Mat draw_component(Eigen::Index n_out, Eigen::Index n_in, Rng& rng) {
  // standard complex Gaussian entries (Re, Im each N(0, 1/2)), scaled 1/sqrt(n_in)
  const double scale = 1.0 / std::sqrt(2.0 * static_cast<double>(n_in));
  Mat m(n_out, n_in);
  for (Eigen::Index i = 0; i < n_out; ++i)
    for (Eigen::Index j = 0; j < n_in; ++j) m(i, j) = rng.gaussian() * scale;
  return m;
}

}  // namespace

OpticalUnit::OpticalUnit(const OpticalConfig& cfg)
    : cfg_(cfg), rng_(cfg.seed ^ 0x5eedU) {
  if (cfg_.n_in <= 0 || cfg_.n_out <= 0)
    fail(ErrKind::ShapeMismatch, "OpticalUnit: empty dimensions");
  Rng draw(cfg.seed);
  t_re_ = draw_component(cfg_.n_out, cfg_.n_in, draw);
  t_im_ = draw_component(cfg_.n_out, cfg_.n_in, draw);
}

OpticalUnit::OpticalUnit(const OpticalConfig& cfg, Mat t_re, Mat t_im)
    : cfg_(cfg), t_re_(std::move(t_re)), t_im_(std::move(t_im)), rng_(cfg.seed ^ 0x5eedU) {}

OpticalUnit OpticalUnit::with_transmission(Mat t_re, Mat t_im, const OpticalConfig& cfg) {
  if (t_re.rows() != cfg.n_out || t_re.cols() != cfg.n_in || t_im.rows() != cfg.n_out ||
      t_im.cols() != cfg.n_in)
    fail(ErrKind::ShapeMismatch, "OpticalUnit::with_transmission: matrix shape mismatch");
  return OpticalUnit(cfg, std::move(t_re), std::move(t_im));
}

Mat OpticalUnit::encode(const FeatureBatch& x) const {
  switch (cfg_.encoding) {
    case OpticalEncoding::Binary:
      return (x.array() > cfg_.binary_threshold).cast<double>();
    case OpticalEncoding::EightBit: {
      Mat c = x.cwiseMax(0.0).cwiseMin(1.0);
      return (c.array() * 255.0).round() / 255.0;
    }
    case OpticalEncoding::Raw:
      return x;
  }
  return x;
}

FeatureBatch OpticalUnit::forward(const FeatureBatch& x) {
  if (x.cols() != cfg_.n_in)
    fail(ErrKind::ShapeMismatch, "optical_forward: x cols " + std::to_string(x.cols()) +
                                     " != n_in " + std::to_string(cfg_.n_in));
  Mat e = encode(x);
  Mat re = e * t_re_.transpose();
  Mat im = e * t_im_.transpose();
  FeatureBatch z = re.cwiseProduct(re) + im.cwiseProduct(im);
  if (cfg_.shot_noise_rel > 0.0) {
    for (Eigen::Index i = 0; i < z.rows(); ++i)
      for (Eigen::Index j = 0; j < z.cols(); ++j)
        z(i, j) *= 1.0 + cfg_.shot_noise_rel * rng_.gaussian();
  }
  return z;
}

OpticalUnit OpticalUnit::clone_with_seed(std::uint64_t seed) const {
  OpticalUnit u = *this;
  u.cfg_.seed = seed;
  u.rng_ = Rng(seed ^ 0x5eedU);
  return u;
}

}  // namespace pib::units
