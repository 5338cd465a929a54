#include "pib/engine/spec.hpp"

namespace pib::engine {

Eigen::Index layer_input_dim(const LayerSpec& l) {
  if (const auto* m = std::get_if<MemristorLayerSpec>(&l)) return m->rows;
  return std::get<OpticalLayerSpec>(l).n_in;
}

Eigen::Index layer_output_dim(const LayerSpec& l) {
  if (const auto* m = std::get_if<MemristorLayerSpec>(&l)) return m->cols;
  return std::get<OpticalLayerSpec>(l).readout_dim;
}

void NetworkSpec::validate() const {
  if (layers.empty()) fail(ErrKind::ConfigError, "NetworkSpec: at least one hidden layer");
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (layer_input_dim(layers[i]) <= 0 || layer_output_dim(layers[i]) <= 0)
      fail(ErrKind::ConfigError, "NetworkSpec: layer " + std::to_string(i) + " has empty dims");
    if (i > 0 && layer_input_dim(layers[i]) != layer_output_dim(layers[i - 1]))
      fail(ErrKind::ConfigError,
           "NetworkSpec: layer " + std::to_string(i) + " input dim does not match layer " +
               std::to_string(i - 1) + " output dim");
  }
  if (final_readout.dim_in != layer_output_dim(layers.back()))
    fail(ErrKind::ConfigError, "NetworkSpec: final readout input dim mismatch");
  if (final_readout.n_classes < 2)
    fail(ErrKind::ConfigError, "NetworkSpec: need at least 2 classes");
}

void TrainConfig::validate() const {
  if (batch_size < 2) fail(ErrKind::ConfigError, "TrainConfig: batch_size must be >= 2");
  if (iterations_per_unit < 0)
    fail(ErrKind::ConfigError, "TrainConfig: iterations_per_unit must be >= 0");
  if (!(optimizer.lr > 0.0)) fail(ErrKind::ConfigError, "TrainConfig: lr must be > 0");
  if (beta < 0.0) fail(ErrKind::ConfigError, "TrainConfig: beta must be >= 0");
  if (!(alpha > 0.0) || alpha == 1.0)
    fail(ErrKind::ConfigError, "TrainConfig: alpha must be > 0 and != 1");
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag, std::uint64_t index) {
  // splitmix64 chain over (base, tag, index)
  auto mix = [](std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t s = base;
  std::uint64_t a = mix(s);
  s ^= tag * 0xd1342543de82ef95ULL;
  std::uint64_t b = mix(s);
  s ^= index * 0xaf251af3b0f025b5ULL;
  std::uint64_t c = mix(s);
  return a ^ (b << 1) ^ (c >> 1);
}

}  // namespace pib::engine
