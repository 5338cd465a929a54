#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pib {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

// A FeatureBatch is an N x D matrix, one sample per row.
using FeatureBatch = Mat;

// Class indices in [0, C).
using LabelBatch = std::vector<int>;

enum class ErrKind {
  // info_core
  EmptyBatch,
  NonFiniteInput,
  EigDecompositionFailure,
  DimensionMismatch,
  DegenerateJoint,
  // units / engine
  ShapeMismatch,
  IndexOutOfRange,
  NonFiniteLoss,
  EmptyHoldout,
  AllClassesHeldOut,
  DegenerateSplit,
  // wire protocol
  BadMagic,
  UnknownType,
  LengthMismatch,
  Truncated,
  ProtocolViolation,
  WorkerUnreachable,
  WorkerError,
  Timeout,
  // data / config
  TruncatedFile,
  DimMismatch,
  ConfigError,
  IoError,
};

// Exit-code classes for the CLI: 1 usage, 2 data, 3 numeric, 4 network.
int exit_code_for(ErrKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrKind kind() const { return kind_; }
  int exit_code() const { return exit_code_for(kind_); }

 private:
  ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

const char* err_name(ErrKind k);

// Deterministic PRNG (xoshiro256++ seeded via splitmix64). The standard
// <random> distributions are implementation-defined, so all stochastic
// behavior in the simulator goes through this generator to keep seeded runs
// reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) { reseed(seed); }

  void reseed(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform();

  // Uniform in [lo, hi).
  double uniform(double lo, double hi);

  // Standard normal via Box-Muller (one spare cached per pair).
  double gaussian();

  // Uniform integer in [0, n). n must be > 0.
  std::uint64_t bounded(std::uint64_t n);

  // Derive an independent stream; distinct labels give distinct streams.
  Rng fork(std::uint64_t label) const;

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(bounded(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t s_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
  std::uint64_t seed_origin_ = 0;
};

// Throws NonFiniteInput / EmptyBatch when the batch violates its invariants.
void check_feature_batch(const FeatureBatch& x, const char* where);

// Throws if any label is outside [0, num_classes) or fewer than 2 rows.
void check_label_batch(const LabelBatch& y, int num_classes, const char* where);

bool all_finite(const Mat& m);

}  // namespace pib
