#include "scg/power_series.hpp"

#include <algorithm>

namespace scg {

PowerSeries::PowerSeries(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  PowerSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

PowerSeries PowerSeries::reciprocal() const {
  if (coeffs_[0] == 0) throw Error("series with zero constant term has no reciprocal");
  PowerSeries out(order());
  out[0] = 1 / coeffs_[0];
  for (std::size_t k = 1; k <= order(); ++k) {
    Rational s = 0;
    for (std::size_t j = 1; j <= k; ++j)
      if (coeffs_[j] != 0) s += coeffs_[j] * out[k - j];
    out[k] = -s * out[0];
  }
  return out;
}

PowerSeries PowerSeries::pow(unsigned e) const {
  PowerSeries result(order());
  result[0] = 1;
  PowerSeries base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

PowerSeries PowerSeries::sinhc(std::size_t order) {
  PowerSeries out(order);
  for (std::size_t k = 0; k <= order; k += 2) out[k] = Rational(Integer(1), factorial(static_cast<unsigned>(k + 1)));
  return out;
}

}  // namespace scg
