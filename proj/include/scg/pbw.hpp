#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "scg/element.hpp"

namespace scg {

enum class RootClass { Negative, Cartan, Positive };

/// Borel split: Cartan = sigma_{alpha alpha-bar}; Positive = sigma_alpha,
/// sigma_{alpha beta} (alpha <= beta <= n), sigma_{alpha beta-bar} (alpha < beta);
/// Negative = the barred mirrors.
RootClass classify_root(int n, Generator g);

std::string to_string(RootClass c);

/// A strict total order on the generators of osp(1|2n).
class GeneratorOrder {
 public:
  /// Even generators (lexicographic in (a,b)) before odd ones (by index).
  static GeneratorOrder standard(int n);
  /// Negative odd < Negative even < Cartan < Positive even < Positive odd;
  /// inside each class by index (lexicographic for even generators).
  static GeneratorOrder borel(int n);
  /// Same class ordering as borel() with every internal order reversed and
  /// the odd/even sub-blocks swapped. Used to check order independence.
  static GeneratorOrder borel_alt(int n);
  static GeneratorOrder by_name(int n, const std::string& name);

  int n() const { return n_; }
  const std::string& name() const { return name_; }
  int rank(Generator g) const { return rank_[static_cast<std::size_t>(g.id(n_))]; }
  bool less(Generator g, Generator h) const { return rank(g) < rank(h); }

  /// Sorted non-decreasingly with no repeated odd generator.
  bool is_normal(const Word& w) const;
  /// Pairs i < j out of order, counting equal odd generators as inverted.
  std::size_t inversions(const Word& w) const;

 private:
  GeneratorOrder(int n, std::string name, const std::vector<Generator>& sequence);

  int n_;
  std::string name_;
  std::vector<int> rank_;
};

/// Rewrites free-algebra elements into PBW normal form for one generator
/// order. Holds a memo table keyed by (generator, normal monomial); one engine
/// must not be shared between threads.
class PbwEngine {
 public:
  explicit PbwEngine(GeneratorOrder order);

  int n() const { return order_.n(); }
  const GeneratorOrder& order() const { return order_; }

  Element normal_order(const Element& x);
  Element normal_order(const Word& w, const Rational& c = 1);

  /// Normal form of g * x where x is already normal.
  Element left_multiply(Generator g, const Element& x);
  /// Normal form of w * x where x is already normal.
  Element left_multiply(const Word& w, const Element& x);
  /// Normal form of x * y, both arbitrary.
  Element product(const Element& x, const Element& y);

  std::size_t cache_size() const { return cache_.size(); }

 private:
  using Key = std::pair<int, Word>;

  void insert_into(Element& out, Generator g, const Word& m, const Rational& c);
  const Element& insert(Generator g, const Word& m);

  GeneratorOrder order_;
  std::map<Key, Element> cache_;
};

/// Convenience wrapper with a private engine.
Element normal_order(const Element& x, const GeneratorOrder& order);

/// Reference oracle: rewrite the leftmost reducible adjacent pair of each word
/// until none is left. No memoization. Every rewrite is checked to strictly
/// decrease (length, inversions); a violation throws std::logic_error.
Element naive_normal_order(const Element& x, const GeneratorOrder& order);

}  // namespace scg
