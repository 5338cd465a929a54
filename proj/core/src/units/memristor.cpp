#include "pib/units/memristor.hpp"

#include <cmath>

namespace pib::units {

void MemristorConfig::validate() const {
  if (rows <= 0 || cols <= 0) fail(ErrKind::ShapeMismatch, "MemristorConfig: empty crossbar");
  if (rows > 1024 || cols > 128)
    fail(ErrKind::ShapeMismatch, "MemristorConfig: tile exceeds 1024 x 128");
  if (!(g_min < g_max)) fail(ErrKind::ConfigError, "MemristorConfig: g_min must be < g_max");
  if (g_levels < 2) fail(ErrKind::ConfigError, "MemristorConfig: g_levels must be >= 2");
  if (read_noise_rel < 0.0) fail(ErrKind::ConfigError, "MemristorConfig: negative noise");
  if (adc_bits < 1 || adc_bits > 31) fail(ErrKind::ConfigError, "MemristorConfig: adc_bits");
  if (!(adc_range > 0.0)) fail(ErrKind::ConfigError, "MemristorConfig: adc_range");
  if (!(w_max > 0.0)) fail(ErrKind::ConfigError, "MemristorConfig: w_max");
}

FaultSpec FaultSpec::stuck(std::set<Eigen::Index> cols, double value) {
  FaultSpec f;
  f.kind = Kind::Stuck;
  f.columns = std::move(cols);
  f.stuck_value = value;
  return f;
}

FaultSpec FaultSpec::random_replace(std::set<Eigen::Index> cols) {
  FaultSpec f;
  f.kind = Kind::RandomReplace;
  f.columns = std::move(cols);
  return f;
}

FeatureBatch ideal_forward(const Mat& w, const FeatureBatch& x) {
  if (x.cols() != w.rows())
    fail(ErrKind::ShapeMismatch, "ideal_forward: x cols " + std::to_string(x.cols()) +
                                     " != W rows " + std::to_string(w.rows()));
  return x * w;
}

MemristorUnit::MemristorUnit(const MemristorConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {
  cfg_.validate();
  w_ = Mat::Zero(cfg_.rows, cfg_.cols);
  g_plus_ = Mat::Constant(cfg_.rows, cfg_.cols, cfg_.g_min);
  g_minus_ = Mat::Constant(cfg_.rows, cfg_.cols, cfg_.g_min);
}

void MemristorUnit::deploy_weights(const Mat& w) {
  if (w.rows() != cfg_.rows || w.cols() != cfg_.cols)
    fail(ErrKind::ShapeMismatch, "deploy_weights: expected " + std::to_string(cfg_.rows) + "x" +
                                     std::to_string(cfg_.cols));
  const double span = cfg_.g_max - cfg_.g_min;
  const double step = span / static_cast<double>(cfg_.g_levels - 1);
  auto quant = [&](double g) {
    double k = std::round((g - cfg_.g_min) / step);
    return cfg_.g_min + k * step;
  };
  for (Eigen::Index r = 0; r < cfg_.rows; ++r) {
    for (Eigen::Index c = 0; c < cfg_.cols; ++c) {
      double v = std::clamp(w(r, c), -cfg_.w_max, cfg_.w_max);
      double mag = cfg_.g_min + std::abs(v) / cfg_.w_max * span;
      if (v >= 0.0) {
        g_plus_(r, c) = quant(mag);
        g_minus_(r, c) = cfg_.g_min;
      } else {
        g_plus_(r, c) = cfg_.g_min;
        g_minus_(r, c) = quant(mag);
      }
      w_(r, c) = (g_plus_(r, c) - g_minus_(r, c)) / span * cfg_.w_max;
    }
  }
}

double MemristorUnit::adc_quantize(double y) const {
  const double r = cfg_.adc_range;
  const double step = 2.0 * r / (std::pow(2.0, cfg_.adc_bits) - 1.0);
  double clipped = std::clamp(y, -r, r);
  return std::round((clipped + r) / step) * step - r;
}

FeatureBatch MemristorUnit::forward(const FeatureBatch& x) {
  if (x.cols() != cfg_.rows)
    fail(ErrKind::ShapeMismatch, "mvm_forward: x cols " + std::to_string(x.cols()) +
                                     " != crossbar rows " + std::to_string(cfg_.rows));
  const Eigen::Index n = x.rows();
  const Eigen::Index rows = cfg_.rows;
  const Eigen::Index cols = cfg_.cols;
  const double span = cfg_.g_max - cfg_.g_min;
  const double out_scale = cfg_.w_max / span;
  const double adc_r = cfg_.adc_range;
  const double adc_step = 2.0 * adc_r / (std::pow(2.0, cfg_.adc_bits) - 1.0);
  const bool noisy = cfg_.read_noise_rel > 0.0;
  const double rel = cfg_.read_noise_rel;
  FeatureBatch y(n, cols);

  std::vector<double> xrow(static_cast<std::size_t>(rows));
  for (Eigen::Index s = 0; s < n; ++s) {
    // one crossbar read per sample: fresh conductance jitter on every cell
    for (Eigen::Index r = 0; r < rows; ++r) xrow[static_cast<std::size_t>(r)] = x(s, r);
    for (Eigen::Index c = 0; c < cols; ++c) {
      const double* gp_col = g_plus_.col(c).data();
      const double* gm_col = g_minus_.col(c).data();
      double acc = 0.0;
      if (noisy) {
        for (Eigen::Index r = 0; r < rows; ++r) {
          double gp = gp_col[r] * (1.0 + rel * rng_.gaussian());
          double gm = gm_col[r] * (1.0 + rel * rng_.gaussian());
          acc += xrow[static_cast<std::size_t>(r)] * (gp - gm);
        }
      } else {
        for (Eigen::Index r = 0; r < rows; ++r)
          acc += xrow[static_cast<std::size_t>(r)] * (gp_col[r] - gm_col[r]);
      }
      double v = std::clamp(acc * out_scale, -adc_r, adc_r);
      y(s, c) = std::round((v + adc_r) / adc_step) * adc_step - adc_r;
    }
    if (fault_.kind == FaultSpec::Kind::Stuck) {
      for (Eigen::Index c : fault_.columns) y(s, c) = fault_.stuck_value;
    } else if (fault_.kind == FaultSpec::Kind::RandomReplace) {
      for (Eigen::Index c : fault_.columns) y(s, c) = rng_.uniform(-adc_r, adc_r);
    }
  }
  return y;
}

void MemristorUnit::inject_fault(const FaultSpec& fault) {
  for (Eigen::Index c : fault.columns) {
    if (c < 0 || c >= cfg_.cols)
      fail(ErrKind::IndexOutOfRange, "inject_fault: column " + std::to_string(c));
  }
  fault_ = fault;
}

MemristorUnit MemristorUnit::clone_with_seed(std::uint64_t seed) const {
  MemristorUnit u = *this;
  u.cfg_.seed = seed;
  u.rng_ = Rng(seed);
  return u;
}

}  // namespace pib::units
