#include "scg/random.hpp"

namespace scg {

Generator RandomElements::generator() {
  std::uniform_int_distribution<int> pick(0, Generator::count(n_) - 1);
  return Generator::from_id(n_, pick(rng_));
}

Word RandomElements::word(std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  Word w(len(rng_));
  for (auto& g : w) g = generator();
  return w;
}

Rational RandomElements::coefficient() {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  int p = 0;
  while (p == 0) p = num(rng_);
  Rational q(p, den(rng_));
  q.canonicalize();
  return q;
}

Element RandomElements::element(std::size_t max_terms, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> terms(1, max_terms);
  Element x(n_);
  std::size_t k = terms(rng_);
  for (std::size_t i = 0; i < k; ++i) x.add_term(word(max_length), coefficient());
  return x;
}

}  // namespace scg
