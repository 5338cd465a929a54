#pragma once

#include "pib/types.hpp"

namespace pib::units {

// The only query trainers may issue against a physical unit. Keeping the
// training code compiled against this interface is what enforces the
// black-box contract (no access to transmission matrices, conductances or
// noise state) and makes call-count instrumentation trivial in tests.
class ForwardUnit {
 public:
  virtual ~ForwardUnit() = default;

  // One physical read per sample row; advances the unit's noise stream.
  virtual FeatureBatch forward(const FeatureBatch& x) = 0;

  virtual Eigen::Index input_dim() const = 0;
  virtual Eigen::Index output_dim() const = 0;
};

enum class Activation { Identity, ReLU };

Mat apply_activation(Activation act, const Mat& pre);
Mat activation_derivative(Activation act, const Mat& pre);

// Trainable digital layer: z = act(s W^T + b).
struct DigitalReadout {
  Mat w;  // d_out x d_in
  Vec b;  // d_out
  Activation activation = Activation::Identity;

  static DigitalReadout init(Eigen::Index d_out, Eigen::Index d_in, Activation act, Rng& rng);

  FeatureBatch forward(const FeatureBatch& s) const;

  // Backprop through the layer: fills dW/db and returns dloss/ds.
  Mat backward(const FeatureBatch& s, const Mat& dloss_dz, Mat& dw, Vec& db) const;
};

}  // namespace pib::units
