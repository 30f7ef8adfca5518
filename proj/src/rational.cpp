#include "scg/rational.hpp"

#include <cctype>

namespace scg {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto digits = [&](std::size_t from) {
    std::size_t i = from;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return i;
  };
  if (pos < text.size() && text[pos] == '-') ++pos;
  std::size_t end = digits(pos);
  if (end == pos) throw Error("malformed rational: '" + std::string(text) + "'");
  if (end < text.size()) {
    if (text[end] != '/') throw Error("malformed rational: '" + std::string(text) + "'");
    std::size_t den_end = digits(end + 1);
    if (den_end == end + 1 || den_end != text.size()) {
      throw Error("malformed rational: '" + std::string(text) + "'");
    }
  }
  Rational q;
  q.set_str(std::string(text), 10);
  if (q.get_den() == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

Integer factorial(unsigned k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational pow2(int e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(p);
  Rational r(Integer(1), p);
  r.canonicalize();
  return r;
}

}  // namespace scg
