#pragma once

// Independent reference computations shared by the unit and acceptance tests.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "scg/element.hpp"
#include "scg/omega.hpp"
#include "scg/pbw.hpp"

namespace oracle {

using scg::Rational;

inline Rational q(const std::string& s) { return scg::parse_rational(s); }

// Reference Scasimir coefficients x_0..x_n for n = 1..5.
inline const std::vector<std::vector<std::string>>& reference_tables() {
  static const std::vector<std::vector<std::string>> t = {
      {"1", "-1/2"},
      {"1", "-5", "9/2"},
      {"1", "-35/2", "259/2", "-675/4"},
      {"1", "-42", "987", "-9687", "33075/2"},
      {"1", "-165/2", "4389", "-259215/2", "3171663/2", "-13395375/4"},
  };
  return t;
}

inline int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

// [a_1 .. a_p] as the literal signed sum over all p! orderings.
inline scg::Element bracket_by_permutations(int n, const std::vector<int>& indices) {
  scg::Element sum(n);
  std::vector<int> perm(indices.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    scg::Word w;
    for (int i : perm) w.push_back(scg::Generator::odd(indices[static_cast<std::size_t>(i)]));
    sum.add_term(w, permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

// Bernoulli numbers B_0..B_m from sum_{j<=k} C(k+1, j) B_j = 0.
inline std::vector<Rational> bernoulli(int m) {
  std::vector<Rational> b(static_cast<std::size_t>(m + 1));
  b[0] = 1;
  for (int k = 1; k <= m; ++k) {
    Rational s = 0;
    for (int j = 0; j < k; ++j)
      s += Rational(scg::binomial(static_cast<unsigned>(k + 1), static_cast<unsigned>(j))) * b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(k)] = -s / (k + 1);
  }
  return b;
}

// x_k from u/sinh u = sum_m (2 - 2^{2m}) B_{2m} u^{2m} / (2m)!, raised to the
// (2n+1)-th power by plain convolution.
inline std::vector<Rational> series_coeffs(int n) {
  const int order = 2 * n;
  auto b = bernoulli(order);
  std::vector<Rational> base(static_cast<std::size_t>(order + 1), Rational(0));
  for (int m = 0; 2 * m <= order; ++m) {
    Rational two_pow = 1;
    for (int i = 0; i < 2 * m; ++i) two_pow *= 2;
    base[static_cast<std::size_t>(2 * m)] =
        (2 - two_pow) * b[static_cast<std::size_t>(2 * m)] / Rational(scg::factorial(static_cast<unsigned>(2 * m)));
  }
  std::vector<Rational> power(static_cast<std::size_t>(order + 1), Rational(0));
  power[0] = 1;
  for (int e = 0; e < 2 * n + 1; ++e) {
    std::vector<Rational> next(power.size(), Rational(0));
    for (std::size_t i = 0; i < power.size(); ++i)
      for (std::size_t j = 0; i + j < power.size(); ++j) next[i + j] += power[i] * base[j];
    power = std::move(next);
  }
  std::vector<Rational> x;
  for (int k = 0; k <= n; ++k) {
    auto uk = static_cast<unsigned>(k);
    Rational v = power[2 * uk] * Rational(scg::factorial(2 * uk)) * Rational(scg::factorial(uk)) *
                 Rational(scg::binomial(static_cast<unsigned>(2 * n), 2 * uk));
    x.push_back(v * scg::pow2(-k));
  }
  return x;
}

}  // namespace oracle
