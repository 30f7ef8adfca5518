#pragma once

#include <cstdint>
#include <random>

#include "scg/element.hpp"

namespace scg {

/// Seeded generator of random words and elements for property checks.
class RandomElements {
 public:
  RandomElements(int n, std::uint64_t seed) : n_(n), rng_(seed) {}

  Generator generator();
  Word word(std::size_t max_length);
  /// Up to `max_terms` random words of length <= max_length with small
  /// nonzero rational coefficients.
  Element element(std::size_t max_terms, std::size_t max_length);
  Rational coefficient();

  std::mt19937_64& engine() { return rng_; }

 private:
  int n_;
  std::mt19937_64 rng_;
};

}  // namespace scg
