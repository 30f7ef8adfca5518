#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "scg/element.hpp"
#include "scg/linalg.hpp"
#include "scg/pbw.hpp"

namespace scg {

/// Raised when g |> w leaves a non-scalar U(sp(2n)) coefficient, i.e. the
/// result escapes Omega.
class NonScalarResidual : public Error {
 public:
  using Error::Error;
};

class NotAWeightVector : public Error {
 public:
  using Error::Error;
};

/// Fully antisymmetrized product of odd generators, identified by its
/// strictly increasing index list. The empty bracket is the unit.
class Bracket {
 public:
  Bracket() = default;
  /// Throws Error unless `indices` is strictly increasing and positive.
  explicit Bracket(std::vector<int> indices);

  /// Sorts an arbitrary index list. Returns the permutation sign, or 0 when
  /// an index repeats (the bracket vanishes).
  static std::pair<int, Bracket> canonical(std::vector<int> indices);

  const std::vector<int>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(int a) const;
  Bracket without(int a) const;
  void check(int n) const;

  friend auto operator<=>(const Bracket&, const Bracket&) = default;

 private:
  std::vector<int> indices_;
};

std::string to_string(const Bracket& b);

/// All 4^n brackets over n, ordered by length then lexicographically.
std::vector<Bracket> omega_basis(int n);

/// Rational combination of brackets: a member of Omega.
class OmegaElement {
 public:
  using Terms = std::map<Bracket, Rational>;

  explicit OmegaElement(int n) : n_(n) {}
  static OmegaElement bracket(int n, const Bracket& b, const Rational& c = 1);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Bracket& b) const;

  void add_term(const Bracket& b, const Rational& c);
  /// Adds c * [indices...] after sorting with the permutation sign.
  void add_indices(std::vector<int> indices, const Rational& c);
  void add_scaled(const OmegaElement& other, const Rational& c);

  OmegaElement& operator+=(const OmegaElement& o) { add_scaled(o, 1); return *this; }
  OmegaElement& operator-=(const OmegaElement& o) { add_scaled(o, -1); return *this; }
  OmegaElement& operator*=(const Rational& c);
  friend OmegaElement operator+(OmegaElement a, const OmegaElement& b) { return a += b; }
  friend OmegaElement operator-(OmegaElement a, const OmegaElement& b) { return a -= b; }
  friend OmegaElement operator*(OmegaElement a, const Rational& c) { return a *= c; }
  friend OmegaElement operator*(const Rational& c, OmegaElement a) { return a *= c; }
  friend bool operator==(const OmegaElement&, const OmegaElement&) = default;

 private:
  int n_;
  Terms terms_;
};

/// Coordinates in U(sp(2n)) (x) Omega: bracket -> purely even coefficient.
class TensorElement {
 public:
  using Terms = std::map<Bracket, Element>;

  explicit TensorElement(int n) : n_(n) {}
  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  void add(const Bracket& b, const Element& coeff);
  /// The coefficient at b (zero element when absent).
  Element at(const Bracket& b) const;

  friend bool operator==(const TensorElement&, const TensorElement&) = default;

 private:
  int n_;
  Terms terms_;
};

using WeightVector = std::vector<Rational>;

struct HighestWeightVector {
  WeightVector weight;
  OmegaElement vector;
};

/// Closed-form action of an even generator sigma_bc on a bracket:
///   -sum_i g_{b a_i} [.. c at i ..] - sum_i g_{c a_i} [.. b at i ..]
OmegaElement sp_action_on_bracket(int n, Generator g, const Bracket& b);
OmegaElement sp_action(int n, Generator g, const OmegaElement& w);

/// Simple positive root generators sigma_{1 2-bar}, ..., sigma_{n-1 n-bar}, sigma_n.
std::vector<Generator> simple_root_generators(int n);

/// Working context for computations in Omega over a fixed n. Owns a
/// STANDARD-order PBW engine plus memo tables for bracket expansions and
/// generator actions; not thread-safe.
class OmegaSpace {
 public:
  explicit OmegaSpace(int n);

  int n() const { return n_; }
  PbwEngine& engine() { return engine_; }

  /// PBW (standard order) form of a bracket, via the first-position expansion
  /// [a_1..a_p] = sum_i (-1)^(i-1) s_{a_i} [.. a_i omitted ..].
  const Element& bracket_expand(const Bracket& b);
  Element expand(const OmegaElement& w);

  /// Peels top fermionic degree: a term e * s_{a_1}..s_{a_p} contributes e/p!
  /// at [a_1..a_p], and e/p! * [a_1..a_p] is subtracted, until nothing is left.
  TensorElement project_to_tensor(const Element& x);
  Element reconstruct(const TensorElement& t);

  /// g |> b through expansion, normal ordering and projection. Throws
  /// NonScalarResidual if any coefficient is not a scalar. Memoized.
  const OmegaElement& triangle_on_bracket(Generator g, const Bracket& b);
  OmegaElement triangle_on_omega(Generator g, const OmegaElement& w);

  const std::vector<Bracket>& basis() const { return basis_; }
  std::size_t basis_index(const Bracket& b) const;
  Vector coordinates(const OmegaElement& w) const;
  OmegaElement from_coordinates(const Vector& v) const;

  /// Global sign s with weight = s * (raw eigenvalues of sigma_{alpha alpha-bar} |>),
  /// fixed by requiring weight([1]) = (1, 0, ..., 0).
  int weight_sign() const;
  /// Throws NotAWeightVector unless w is a nonzero joint eigenvector.
  WeightVector weight_vector(const OmegaElement& w) const;

  /// Joint kernel of the simple root generators, computed per weight space,
  /// each vector scaled so its longest bracket has coefficient 1. Sorted by
  /// the number of unit weight entries.
  std::vector<HighestWeightVector> highest_weight_vectors();

  /// Dimension of the span of v under repeated |> action of all generators.
  std::size_t submodule_dimension(const OmegaElement& v);

 private:
  int n_;
  PbwEngine engine_;
  std::vector<Bracket> basis_;
  std::map<Bracket, std::size_t> index_;
  std::map<Bracket, Element> expansions_;
  std::map<std::pair<int, Bracket>, OmegaElement> actions_;
};

/// Dimension identity for the osp(1|2) filtration:
/// dim(U_d (x) Omega) = sum_{j = 0, 1/2, ..., d + 1/2} (4j + 1) + dim(U_{d-2} (x) Omega)
/// with dim U_d = C(d+3, 3) and dim Omega = 4.
struct FiltrationCheck {
  Integer lhs;
  Integer representations;
  Integer lower;
  bool holds() const { return lhs == representations + lower; }
};
FiltrationCheck osp12_filtration_dimensions(int d);
bool check_osp12_filtration(int d);

}  // namespace scg
