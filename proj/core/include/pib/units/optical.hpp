#pragma once

#include <cstdint>

#include "pib/units/unit.hpp"

namespace pib::units {

enum class OpticalEncoding { Binary, EightBit, Raw };

struct OpticalConfig {
  Eigen::Index n_in = 0;
  Eigen::Index n_out = 0;
  OpticalEncoding encoding = OpticalEncoding::EightBit;
  double binary_threshold = 0.5;
  double shot_noise_rel = 0.0;
  std::uint64_t seed = 0;
};

// Intensity measurement of a fixed random complex projection:
//   z_k = |sum_j T_kj x_j|^2, optionally with relative shot noise.
// The transmission matrix is drawn once at construction and is never
// exposed; forward() is the only query the trainer may use.
class OpticalUnit : public ForwardUnit {
 public:
  explicit OpticalUnit(const OpticalConfig& cfg);

  // Test-only construction with an explicit transmission matrix.
  static OpticalUnit with_transmission(Mat t_re, Mat t_im, const OpticalConfig& cfg);

  FeatureBatch forward(const FeatureBatch& x) override;

  Eigen::Index input_dim() const override { return cfg_.n_in; }
  Eigen::Index output_dim() const override { return cfg_.n_out; }
  const OpticalConfig& config() const { return cfg_; }

  OpticalUnit clone_with_seed(std::uint64_t seed) const;

 private:
  OpticalUnit(const OpticalConfig& cfg, Mat t_re, Mat t_im);

  Mat encode(const FeatureBatch& x) const;

  OpticalConfig cfg_;
  Mat t_re_;  // n_out x n_in
  Mat t_im_;
  Rng rng_;
};

}  // namespace pib::units
