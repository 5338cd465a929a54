#include "pib/types.hpp"

#include <cmath>

namespace pib {

int exit_code_for(ErrKind k) {
  switch (k) {
    case ErrKind::ConfigError:
      return 1;
    case ErrKind::EmptyBatch:
    case ErrKind::NonFiniteInput:
    case ErrKind::DimensionMismatch:
    case ErrKind::ShapeMismatch:
    case ErrKind::IndexOutOfRange:
    case ErrKind::EmptyHoldout:
    case ErrKind::AllClassesHeldOut:
    case ErrKind::DegenerateSplit:
    case ErrKind::TruncatedFile:
    case ErrKind::DimMismatch:
    case ErrKind::IoError:
      return 2;
    case ErrKind::EigDecompositionFailure:
    case ErrKind::DegenerateJoint:
    case ErrKind::NonFiniteLoss:
      return 3;
    case ErrKind::BadMagic:
    case ErrKind::UnknownType:
    case ErrKind::LengthMismatch:
    case ErrKind::Truncated:
    case ErrKind::ProtocolViolation:
    case ErrKind::WorkerUnreachable:
    case ErrKind::WorkerError:
    case ErrKind::Timeout:
      return 4;
  }
  return 3;
}

const char* err_name(ErrKind k) {
  switch (k) {
    case ErrKind::EmptyBatch: return "EmptyBatch";
    case ErrKind::NonFiniteInput: return "NonFiniteInput";
    case ErrKind::EigDecompositionFailure: return "EigDecompositionFailure";
    case ErrKind::DimensionMismatch: return "DimensionMismatch";
    case ErrKind::DegenerateJoint: return "DegenerateJoint";
    case ErrKind::ShapeMismatch: return "ShapeMismatch";
    case ErrKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrKind::NonFiniteLoss: return "NonFiniteLoss";
    case ErrKind::EmptyHoldout: return "EmptyHoldout";
    case ErrKind::AllClassesHeldOut: return "AllClassesHeldOut";
    case ErrKind::DegenerateSplit: return "DegenerateSplit";
    case ErrKind::BadMagic: return "BadMagic";
    case ErrKind::UnknownType: return "UnknownType";
    case ErrKind::LengthMismatch: return "LengthMismatch";
    case ErrKind::Truncated: return "Truncated";
    case ErrKind::ProtocolViolation: return "ProtocolViolation";
    case ErrKind::WorkerUnreachable: return "WorkerUnreachable";
    case ErrKind::WorkerError: return "WorkerError";
    case ErrKind::Timeout: return "Timeout";
    case ErrKind::TruncatedFile: return "TruncatedFile";
    case ErrKind::DimMismatch: return "DimMismatch";
    case ErrKind::ConfigError: return "ConfigError";
    case ErrKind::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

inline std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

void Rng::reseed(std::uint64_t seed) {
  seed_origin_ = seed;
  std::uint64_t sm = seed;
  for (auto& s : s_) s = splitmix64(sm);
  has_spare_ = false;
  spare_ = 0.0;
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller on (0,1] x [0,1).
  double u1 = 1.0 - uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 6.283185307179586476925286766559 * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

std::uint64_t Rng::bounded(std::uint64_t n) {
  // Lemire multiply-shift; bias < 2^-64 * n, negligible and deterministic.
  unsigned __int128 m =
      static_cast<unsigned __int128>(next_u64()) * static_cast<unsigned __int128>(n);
  return static_cast<std::uint64_t>(m >> 64);
}

Rng Rng::fork(std::uint64_t label) const {
  std::uint64_t mix = seed_origin_;
  std::uint64_t a = splitmix64(mix);
  mix ^= label * 0x9e3779b97f4a7c15ULL + 0x1234567u;
  std::uint64_t b = splitmix64(mix);
  return Rng(a ^ rotl(b, 17) ^ label);
}

void check_feature_batch(const FeatureBatch& x, const char* where) {
  if (x.rows() < 2) {
    fail(ErrKind::EmptyBatch,
         std::string(where) + ": feature batch needs at least 2 samples, got " +
             std::to_string(x.rows()));
  }
  if (!all_finite(x)) {
    fail(ErrKind::NonFiniteInput, std::string(where) + ": non-finite feature entry");
  }
}

void check_label_batch(const LabelBatch& y, int num_classes, const char* where) {
  if (y.size() < 2) {
    fail(ErrKind::EmptyBatch, std::string(where) + ": label batch needs at least 2 entries");
  }
  for (int v : y) {
    if (v < 0 || v >= num_classes) {
      fail(ErrKind::IndexOutOfRange,
           std::string(where) + ": label " + std::to_string(v) + " outside [0, " +
               std::to_string(num_classes) + ")");
    }
  }
}

bool all_finite(const Mat& m) { return m.allFinite(); }

}  // namespace pib
