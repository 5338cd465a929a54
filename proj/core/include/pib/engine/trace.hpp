#pragma once

#include <string>
#include <vector>

#include "pib/types.hpp"

namespace pib::engine {

struct InfoPlaneRecord {
  int unit = 0;
  long iteration = 0;
  double i_xz_bits = 0.0;
  double i_yz_bits = 0.0;
  double loss = 0.0;
};

// Per-unit (iteration, I(X;Z), I(Y;Z), loss) history; iterations are
// strictly increasing within each unit.
struct InfoPlaneTrace {
  std::vector<InfoPlaneRecord> records;

  void append(int unit, long iteration, double i_xz, double i_yz, double loss);
  void merge(const InfoPlaneTrace& other);

  // CSV with header: unit,iteration,i_xz_bits,i_yz_bits,loss
  std::string to_csv() const;
  static InfoPlaneTrace from_csv(const std::string& text);
};

}  // namespace pib::engine
