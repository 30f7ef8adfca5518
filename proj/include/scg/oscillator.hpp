#pragma once

#include <map>

#include "scg/element.hpp"
#include "scg/omega.hpp"
#include "scg/report.hpp"

namespace scg {

/// Element of the Weyl-algebra quotient: words of odd generators sorted
/// weakly ascending by index (squares survive).
class WeylElement {
 public:
  using Terms = std::map<Word, Rational>;

  explicit WeylElement(int n) : n_(n) {}
  static WeylElement scalar(int n, const Rational& c);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<Rational> as_scalar() const;

  void add_term(const Word& w, const Rational& c);
  void add_scaled(const WeylElement& other, const Rational& c);

  WeylElement& operator+=(const WeylElement& o) { add_scaled(o, 1); return *this; }
  WeylElement& operator-=(const WeylElement& o) { add_scaled(o, -1); return *this; }
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  int n_;
  Terms terms_;
};

/// Product in the quotient, using s_b s_a = s_a s_b + 1/2 g_ab for a < b.
WeylElement weyl_multiply(const WeylElement& x, const WeylElement& y);

/// Image of a generator: s_a itself, s_ab -> 2 s_a s_b + 1/2 g_ab.
WeylElement weyl_generator(int n, Generator g);

/// Algebra map U(osp(1|2n)) -> Weyl quotient, imposing [s_a, s_b] = -1/2 g_ab.
WeylElement weyl_reduce(const Element& x);

/// Image of an unreduced bracket through its first-position expansion
/// (memoized per call).
WeylElement weyl_bracket(int n, const Bracket& b);
WeylElement weyl_reduce(const OmegaElement& w);

/// Image of A^{(n)}_{2k}, the aggregate keeping k conjugate pairs; expected
/// to be the constant 2^-k n!/(n-k)!.
Rational a_value(int n, int k);
Rational a_value_expected(int n, int k);

/// The Scasimir maps to 0, and the constant sum_k x_k a_value(n, n-k)
/// agrees with sum_rule(n).
Report verify_vanishing(int n);

/// Images of all generators satisfy the defining relations.
Report verify_quotient_relations(int n);

}  // namespace scg
