#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scg/rational.hpp"

namespace scg {

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class ParityError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Index conjugation: for 1 <= a <= n returns a + n, and back.
int conjugate(int n, int a);

/// Entry of the 2n x 2n block matrix [[0, -I], [I, 0]] (1-based).
Rational metric(int n, int a, int b);
/// Same value as a small integer; hot paths use this.
int metric_sign(int n, int a, int b);

/// An osp(1|2n) generator: odd sigma_a or even sigma_{ab} with a <= b.
/// The odd case stores b == 0.
class Generator {
 public:
  Generator() = default;
  static Generator odd(int a);
  /// Accepts either index order; stores a <= b.
  static Generator even(int a, int b);

  bool is_odd() const { return b_ == 0; }
  bool is_even() const { return b_ != 0; }
  int parity() const { return is_odd() ? 1 : 0; }
  int a() const { return a_; }
  /// Second index of an even generator.
  int b() const { return b_; }

  /// Throws IndexOutOfRange unless all indices lie in 1..2n.
  void check(int n) const;

  /// Dense id in [0, n(2n+3)): odd a -> a-1, even generators after.
  int id(int n) const;
  static Generator from_id(int n, int id);
  static int count(int n) { return n * (2 * n + 3); }
  static std::vector<Generator> all(int n);
  static std::vector<Generator> all_odd(int n);
  static std::vector<Generator> all_even(int n);

  friend auto operator<=>(const Generator&, const Generator&) = default;

 private:
  Generator(int a, int b) : a_(static_cast<unsigned char>(a)), b_(static_cast<unsigned char>(b)) {}
  unsigned char a_ = 0;
  unsigned char b_ = 0;
};

/// Human-readable "s(a)" / "s(a,b)".
std::string to_string(const Generator& g);

using Word = std::vector<Generator>;

int parity(const Word& w);

/// Graded bracket of two generators, [g,h} = gh - (-1)^{|g||h|} hg, as a
/// linear combination of generators. Encodes the defining relations.
std::vector<std::pair<Generator, Rational>> generator_bracket(int n, Generator g, Generator h);

/// Finitely supported map Word -> Rational over a fixed n. Zero coefficients
/// are never stored, so structural equality is algebraic equality in the
/// free algebra.
class Element {
 public:
  using Terms = std::map<Word, Rational>;

  explicit Element(int n);
  static Element unit(int n) { return scalar(n, 1); }
  static Element scalar(int n, const Rational& c);
  static Element generator(int n, Generator g, const Rational& c = 1);
  static Element monomial(int n, Word w, const Rational& c = 1);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of the word (0 when absent).
  Rational coeff(const Word& w) const;
  /// Scalar value if the element is a multiple of the unit.
  std::optional<Rational> as_scalar() const;

  void add_term(const Word& w, const Rational& c);
  void add_scaled(const Element& other, const Rational& c);

  /// 0 or 1 for homogeneous elements, nullopt for mixed ones; 0 for zero.
  std::optional<int> parity() const;
  Element even_part() const;
  Element odd_part() const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& c);
  Element operator-() const;

  friend Element operator+(Element x, const Element& y) { return x += y; }
  friend Element operator-(Element x, const Element& y) { return x -= y; }
  friend Element operator*(Element x, const Rational& c) { return x *= c; }
  friend Element operator*(const Rational& c, Element x) { return x *= c; }
  friend Element operator*(const Element& x, const Element& y);
  friend bool operator==(const Element&, const Element&) = default;

  /// Throws DimensionMismatch when other lives over a different n.
  void check_same_n(const Element& other) const;

 private:
  int n_;
  Terms terms_;
};

/// Free-algebra product: bilinear word concatenation, no relations applied.
Element multiply(const Element& x, const Element& y);

/// xy - (-1)^{p(x)p(y)} yx, unreduced. Throws ParityError on mixed input.
Element graded_commutator(const Element& x, const Element& y);

/// Plain xy - yx, unreduced.
Element commutator(const Element& x, const Element& y);

}  // namespace scg
