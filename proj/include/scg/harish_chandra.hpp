#pragma once

#include <map>
#include <vector>

#include "scg/element.hpp"
#include "scg/pbw.hpp"
#include "scg/report.hpp"

namespace scg {

/// Commutative polynomial in H_1..H_n with H_alpha identified with
/// sigma_{alpha alpha-bar}. Terms are keyed by dense exponent vectors.
class CartanPolynomial {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Rational>;

  explicit CartanPolynomial(int vars) : vars_(vars) {}
  static CartanPolynomial constant(int vars, const Rational& c);
  static CartanPolynomial variable(int vars, int alpha);
  /// H_1 H_2 ... H_n raised to `power`.
  static CartanPolynomial product_of_all(int vars, int power = 1);

  int vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Exponents& e, const Rational& c);

  /// Invariant under every permutation of the variables.
  bool is_symmetric() const;

  CartanPolynomial& operator+=(const CartanPolynomial& o);
  CartanPolynomial& operator-=(const CartanPolynomial& o);
  friend CartanPolynomial operator+(CartanPolynomial a, const CartanPolynomial& b) { return a += b; }
  friend CartanPolynomial operator-(CartanPolynomial a, const CartanPolynomial& b) { return a -= b; }
  friend CartanPolynomial operator*(const CartanPolynomial& a, const CartanPolynomial& b);
  friend bool operator==(const CartanPolynomial&, const CartanPolynomial&) = default;

 private:
  int vars_;
  Terms terms_;
};

std::string to_string(const CartanPolynomial& p);

/// Normal-orders x in `order` (a Borel order), keeps the monomials built only
/// from Cartan generators, and maps them to H-monomials.
CartanPolynomial hc_project(const Element& x, const GeneratorOrder& order);
CartanPolynomial hc_project(const Element& x);
/// Projection of an element already in Borel normal form.
CartanPolynomial hc_project_normal(const Element& normal);

enum class ShiftDirection { Forward, Inverse };

/// Forward: H_alpha -> H_alpha - (n - alpha + 1/2); Inverse: the opposite
/// shift. n is the number of variables.
CartanPolynomial gamma_shift(const CartanPolynomial& p, ShiftDirection dir);

/// Leading coefficient (2n)!/2^n of prod H_alpha in h(Sc): the full bracket
/// [1 1bar .. n nbar] is an unnormalized sum over (2n)! orderings.
Rational hc_normalization(int n);

/// gamma^{-1}(h(Sc)) = c_n H_1 ... H_n with c_n = hc_normalization(n).
Report verify_hc_scasimir(int n, const GeneratorOrder& order);
/// gamma^{-1}(h(Sc^2)) = c_n^2 H_1^2 ... H_n^2.
Report verify_hc_square(int n, const GeneratorOrder& order);

}  // namespace scg
