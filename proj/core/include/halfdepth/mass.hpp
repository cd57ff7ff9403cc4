#pragma once

#include "halfdepth/rational.hpp"

#include <string>

namespace halfdepth {

/// A measure mass. Exact (rational) while only atomic components contributed;
/// collapses to double the moment a closed-form continuous term enters.
/// Closed-form terms are accurate to ~1e-12 absolute.
class MassValue {
 public:
  MassValue() : exact_(true), rat_(0), approx_(0.0) {}

  static MassValue exact(Rational q) {
    MassValue m;
    m.exact_ = true;
    m.approx_ = rational_to_double(q);
    m.rat_ = std::move(q);
    return m;
  }

  static MassValue approx(double v) {
    MassValue m;
    m.exact_ = false;
    m.rat_ = 0;
    m.approx_ = v;
    return m;
  }

  bool is_exact() const { return exact_; }

  /// Exact value; throws std::logic_error in approximate mode.
  const Rational& rational() const;

  double value() const { return approx_; }

  MassValue operator+(const MassValue& r) const {
    if (exact_ && r.exact_) return exact(rat_ + r.rat_);
    return approx(approx_ + r.approx_);
  }

  MassValue& operator+=(const MassValue& r) {
    *this = *this + r;
    return *this;
  }

  /// Exact comparison when both sides are exact, double comparison otherwise.
  bool operator<(const MassValue& r) const {
    if (exact_ && r.exact_) return rat_ < r.rat_;
    return approx_ < r.approx_;
  }
  bool operator==(const MassValue& r) const {
    if (exact_ && r.exact_) return rat_ == r.rat_;
    return approx_ == r.approx_;
  }

  /// "p/q" in exact mode, 12 significant digits otherwise.
  std::string to_string() const;

 private:
  bool exact_;
  Rational rat_;
  double approx_;
};

}  // namespace halfdepth
