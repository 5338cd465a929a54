#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "pib/info/kernel.hpp"
#include "pib/types.hpp"
#include "pib/units/optical.hpp"
#include "pib/units/unit.hpp"

namespace pib::engine {

struct MemristorLayerSpec {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
};

struct OpticalLayerSpec {
  Eigen::Index n_in = 0;
  Eigen::Index n_out = 0;
  Eigen::Index readout_dim = 0;
};

using LayerSpec = std::variant<MemristorLayerSpec, OpticalLayerSpec>;

Eigen::Index layer_input_dim(const LayerSpec& l);
Eigen::Index layer_output_dim(const LayerSpec& l);

struct FinalReadoutSpec {
  Eigen::Index dim_in = 0;
  int n_classes = 0;
};

struct NetworkSpec {
  std::vector<LayerSpec> layers;
  FinalReadoutSpec final_readout;

  void validate() const;
};

struct OptimizerConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

struct TrainConfig {
  double beta = 0.1;           // bottleneck multiplier
  double alpha = 2.0;          // Renyi order
  int batch_size = 100;        // gram batch size
  int iterations_per_unit = 200;
  OptimizerConfig optimizer;
  std::uint64_t seed = 0;
  info::KernelSpec kernel = info::KernelSpec::gaussian_median(1.0);

  // final-readout head training
  int readout_epochs = 40;
  int readout_batch = 128;
  double readout_lr = 1e-3;

  // PROGRESS frame cadence in distributed mode
  int progress_interval = 25;

  void validate() const;
};

// Physical parameters shared by every constructed unit of a network.
struct UnitPhysics {
  double g_min = 2.0;
  double g_max = 40.0;
  int g_levels = 256;
  double read_noise_rel = 0.02;
  int adc_bits = 8;
  double adc_range = 4.0;
  double w_max = 1.0;
  units::OpticalEncoding optical_encoding = units::OpticalEncoding::EightBit;
  double binary_threshold = 0.5;
  double shot_noise_rel = 0.01;
  units::Activation memristor_activation = units::Activation::ReLU;
  units::Activation optical_readout_activation = units::Activation::Identity;
};

// Deterministic seed derivation for sub-streams.
enum : std::uint64_t {
  kSeedUnit = 0x11,
  kSeedInit = 0x22,
  kSeedBatch = 0x33,
  kSeedReadout = 0x44,
  kSeedRetrain = 0x55,
  kSeedEval = 0x66,
  kSeedData = 0x77,
  kSeedAugment = 0x88,
};

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag, std::uint64_t index = 0);

}  // namespace pib::engine
