#pragma once

#include <vector>

#include "scg/rational.hpp"

namespace scg {

/// Truncated power series in u with exact coefficients of u^0..u^order.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : coeffs_(order + 1) {}
  PowerSeries(std::size_t order, std::vector<Rational> coeffs);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  Rational& operator[](std::size_t k) { return coeffs_[k]; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

  /// Multiplicative inverse; requires a nonzero constant term.
  PowerSeries reciprocal() const;
  PowerSeries pow(unsigned e) const;

  /// sinh(u)/u = sum u^{2m} / (2m+1)!
  static PowerSeries sinhc(std::size_t order);

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace scg
