#pragma once

#include <cstdint>
#include <set>

#include "pib/units/unit.hpp"

namespace pib::units {

struct MemristorConfig {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  double g_min = 2.0;    // uS
  double g_max = 40.0;   // uS
  int g_levels = 256;
  double read_noise_rel = 0.02;  // relative std of per-read conductance jitter
  int adc_bits = 8;
  double adc_range = 4.0;  // full-scale readout current, normalized units
  double w_max = 1.0;
  std::uint64_t seed = 0;

  void validate() const;
};

struct FaultSpec {
  enum class Kind { None, Stuck, RandomReplace } kind = Kind::None;
  std::set<Eigen::Index> columns;
  double stuck_value = 0.0;

  static FaultSpec none() { return {}; }
  static FaultSpec stuck(std::set<Eigen::Index> cols, double value);
  static FaultSpec random_replace(std::set<Eigen::Index> cols);
};

// Exact y = x W; the digital twin used for local gradient-based optimization.
FeatureBatch ideal_forward(const Mat& w, const FeatureBatch& x);

// Crossbar MVM with differential conductance pairs, per-read multiplicative
// conductance noise, ADC quantization with saturation, and column faults.
class MemristorUnit : public ForwardUnit {
 public:
  explicit MemristorUnit(const MemristorConfig& cfg);

  // Clips to [-w_max, w_max], maps to a differential conductance pair with
  // one device parked at g_min, quantizes to the conductance grid, and
  // updates the logical weights to what was effectively deployed.
  void deploy_weights(const Mat& w);

  FeatureBatch forward(const FeatureBatch& x) override;

  void inject_fault(const FaultSpec& fault);

  Eigen::Index input_dim() const override { return cfg_.rows; }
  Eigen::Index output_dim() const override { return cfg_.cols; }

  const MemristorConfig& config() const { return cfg_; }
  const Mat& logical_weights() const { return w_; }
  const Mat& conductance_plus() const { return g_plus_; }
  const Mat& conductance_minus() const { return g_minus_; }
  const FaultSpec& fault() const { return fault_; }

  // Same deployed state, independent noise stream.
  MemristorUnit clone_with_seed(std::uint64_t seed) const;

 private:
  double adc_quantize(double y) const;

  MemristorConfig cfg_;
  Mat w_;        // rows x cols, logical (deployed) weights
  Mat g_plus_;   // rows x cols, uS
  Mat g_minus_;  // rows x cols, uS
  FaultSpec fault_;
  Rng rng_;
};

}  // namespace pib::units
