#include "halfdepth/mass.hpp"

#include <cstdio>
#include <stdexcept>

namespace halfdepth {

const Rational& MassValue::rational() const {
  if (!exact_) throw std::logic_error("mass value is approximate; no exact rational available");
  return rat_;
}

std::string MassValue::to_string() const {
  if (exact_) return rational_to_string(rat_);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", approx_);
  return buf;
}

}  // namespace halfdepth
