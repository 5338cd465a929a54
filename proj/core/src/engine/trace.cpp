#include "pib/engine/trace.hpp"

#include <cstdio>
#include <sstream>

namespace pib::engine {

void InfoPlaneTrace::append(int unit, long iteration, double i_xz, double i_yz, double loss) {
  for (auto it = records.rbegin(); it != records.rend(); ++it) {
    if (it->unit == unit) {
      if (iteration <= it->iteration)
        fail(ErrKind::ConfigError, "InfoPlaneTrace: non-increasing iteration for unit " +
                                       std::to_string(unit));
      break;
    }
  }
  records.push_back({unit, iteration, i_xz, i_yz, loss});
}

void InfoPlaneTrace::merge(const InfoPlaneTrace& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

std::string InfoPlaneTrace::to_csv() const {
  std::string out = "unit,iteration,i_xz_bits,i_yz_bits,loss\n";
  char buf[160];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof(buf), "%d,%ld,%.17g,%.17g,%.17g\n", r.unit, r.iteration,
                  r.i_xz_bits, r.i_yz_bits, r.loss);
    out += buf;
  }
  return out;
}

InfoPlaneTrace InfoPlaneTrace::from_csv(const std::string& text) {
  InfoPlaneTrace t;
  std::istringstream is(text);
  std::string line;
  bool header = true;
  while (std::getline(is, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    InfoPlaneRecord r;
    if (std::sscanf(line.c_str(), "%d,%ld,%lg,%lg,%lg", &r.unit, &r.iteration, &r.i_xz_bits,
                    &r.i_yz_bits, &r.loss) != 5)
      fail(ErrKind::DimMismatch, "InfoPlaneTrace: malformed CSV line: " + line);
    t.records.push_back(r);
  }
  return t;
}

}  // namespace pib::engine
