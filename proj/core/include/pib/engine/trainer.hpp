#pragma once

#include <functional>
#include <optional>

#include "pib/engine/optim.hpp"
#include "pib/engine/spec.hpp"
#include "pib/engine/standardize.hpp"
#include "pib/engine/trace.hpp"
#include "pib/info/objective.hpp"
#include "pib/units/memristor.hpp"
#include "pib/units/optical.hpp"

namespace pib::engine {

struct DatasetView {
  const Mat* x = nullptr;
  const LabelBatch* y = nullptr;
  int classes = 0;

  Eigen::Index rows() const { return x->rows(); }
};

// A deployed stage: the physical unit plus its digital attachments.
struct MemristorStage {
  units::MemristorUnit unit;
  units::Activation activation = units::Activation::ReLU;
};

struct OpticalStage {
  units::OpticalUnit unit;
  units::DigitalReadout readout;
};

using Stage = std::variant<MemristorStage, OpticalStage>;

Eigen::Index stage_output_dim(const Stage& s);

// Maps a standardized [-1,1] feature batch into the stage's native input
// domain (crossbar voltages stay as-is; optical encoders expect [0,1]).
Mat stage_native_input(const Stage& s, const Mat& v);

// Physical measured pass: unit forward (noise active) + digital attachments.
FeatureBatch stage_measured_forward(Stage& s, const Mat& native_in);

struct TrainedNetwork {
  NetworkSpec spec;
  UnitPhysics physics;
  std::vector<Stage> stages;
  // in_std[l] feeds stage l; in_std[L] feeds the final readout.
  std::vector<Standardizer> in_std;
  units::DigitalReadout final_readout;
  InfoPlaneTrace trace;
};

// Result of locally optimizing one unit: the trained digital parameters
// (bias unused for crossbar layers) and the unit's information-plane log.
struct UnitTrainResult {
  Mat w;
  Vec b;
  InfoPlaneTrace trace;
};

// What train_unit_local needs to know about the layer being optimized. For
// optical layers `unit` is the black-box to query (exactly one measurement);
// crossbar layers train against the ideal digital twin and leave it null.
struct LocalLayer {
  LayerSpec spec;
  units::Activation activation = units::Activation::ReLU;
  units::ForwardUnit* unit = nullptr;
};

// Local bottleneck optimization of a single unit on one measured batch.
// measured_input must be in the layer's native domain and row-aligned with
// the batches behind x_gram / y_gram. Runs cfg.iterations_per_unit steps of
// adaptive-moment descent on -[I(Y;Z) - beta I(X;Z)], logging I(X;Z), I(Y;Z)
// and the loss every iteration.
UnitTrainResult train_unit_local(const FeatureBatch& measured_input,
                                 const info::NormalizedGram& x_gram,
                                 const info::NormalizedGram& y_gram, const LocalLayer& layer,
                                 const TrainConfig& cfg, int unit_index,
                                 std::uint64_t init_seed);

// Draw batch_size distinct row indices with a seeded shuffler.
std::vector<Eigen::Index> draw_batch(Eigen::Index n, int batch_size, Rng& rng);

Mat take_rows(const Mat& m, const std::vector<Eigen::Index>& idx);
LabelBatch take_labels(const LabelBatch& y, const std::vector<Eigen::Index>& idx);

// Layer-wise cascade: train unit l on the measured (noisy) features of unit
// l-1, deploy, run the physical forward to produce the next stage's inputs,
// then fit the final softmax readout on measured penultimate features.
TrainedNetwork cascade_train(const NetworkSpec& spec, const DatasetView& train,
                             const TrainConfig& cfg, const UnitPhysics& phys);

// Measured forward through stages [0, upto); upto = stages.size() gives the
// penultimate (readout input) features, already standardized for the head.
FeatureBatch measured_features(TrainedNetwork& net, const Mat& x_raw, std::size_t upto);

Mat network_logits(TrainedNetwork& net, const Mat& x_raw);

// Physical forward through all units (noise active), argmax of the readout.
double evaluate(TrainedNetwork& net, const DatasetView& test);

// Freezes stages [0, faulted_unit_index] and re-runs the cascade from the
// next stage onward using the corrupted measured features.
TrainedNetwork retrain_downstream(const TrainedNetwork& net, const DatasetView& train,
                                  std::size_t faulted_unit_index, const TrainConfig& cfg);

// Copy with every unit's noise stream reseeded (deployed state unchanged).
TrainedNetwork reseed_noise(const TrainedNetwork& net, std::uint64_t seed);

// Softmax-cross-entropy training of a readout head on frozen features.
units::DigitalReadout train_softmax_head(const Mat& feats, const LabelBatch& labels,
                                         int n_classes, int epochs, int batch, double lr,
                                         std::uint64_t seed);

}  // namespace pib::engine
