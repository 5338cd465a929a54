#pragma once

#include "pib/types.hpp"

namespace pib::engine {

// Per-dimension z-score with statistics frozen at fit time, followed by a
// scalar rescale so the training batch lands in [-1, 1] (crossbar voltage
// range). Test-time values are clipped to the same interval.
struct Standardizer {
  Vec mean;
  Vec inv_std;
  double inv_scale = 1.0;

  static Standardizer fit(const Mat& feats);
  Mat apply(const Mat& feats) const;
};

}  // namespace pib::engine
