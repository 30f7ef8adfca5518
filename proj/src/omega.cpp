#include "scg/omega.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "scg/actions.hpp"

namespace scg {

Bracket::Bracket(std::vector<int> indices) : indices_(std::move(indices)) {
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 1 || (i > 0 && indices_[i] <= indices_[i - 1])) {
      throw Error("bracket indices must be positive and strictly increasing: " + to_string(*this));
    }
  }
}

std::pair<int, Bracket> Bracket::canonical(std::vector<int> indices) {
  int sign = 1;
  // insertion sort, counting transpositions
  for (std::size_t i = 1; i < indices.size(); ++i) {
    for (std::size_t j = i; j > 0 && indices[j - 1] >= indices[j]; --j) {
      if (indices[j - 1] == indices[j]) return {0, Bracket()};
      std::swap(indices[j - 1], indices[j]);
      sign = -sign;
    }
  }
  return {sign, Bracket(std::move(indices))};
}

bool Bracket::contains(int a) const {
  return std::binary_search(indices_.begin(), indices_.end(), a);
}

Bracket Bracket::without(int a) const {
  Bracket out;
  for (int i : indices_)
    if (i != a) out.indices_.push_back(i);
  return out;
}

void Bracket::check(int n) const {
  if (!indices_.empty() && indices_.back() > 2 * n) {
    throw IndexOutOfRange("bracket " + to_string(*this) + " out of range for n=" + std::to_string(n));
  }
}

std::string to_string(const Bracket& b) {
  std::string s = "[";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(b.indices()[i]);
  }
  return s + "]";
}

std::vector<Bracket> omega_basis(int n) {
  const int m = 2 * n;
  std::vector<Bracket> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> idx;
    for (int a = 1; a <= m; ++a)
      if (mask & (1u << (a - 1))) idx.push_back(a);
    out.emplace_back(std::move(idx));
  }
  std::sort(out.begin(), out.end(), [](const Bracket& x, const Bracket& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

OmegaElement OmegaElement::bracket(int n, const Bracket& b, const Rational& c) {
  b.check(n);
  OmegaElement w(n);
  w.add_term(b, c);
  return w;
}

Rational OmegaElement::coeff(const Bracket& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

void OmegaElement::add_term(const Bracket& b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void OmegaElement::add_indices(std::vector<int> indices, const Rational& c) {
  auto [sign, b] = Bracket::canonical(std::move(indices));
  if (sign != 0) add_term(b, sign * c);
}

void OmegaElement::add_scaled(const OmegaElement& other, const Rational& c) {
  if (other.n_ != n_) throw DimensionMismatch("omega elements over different n");
  for (const auto& [b, q] : other.terms_) add_term(b, q * c);
}

OmegaElement& OmegaElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, q] : terms_) q *= c;
  return *this;
}

void TensorElement::add(const Bracket& b, const Element& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(b);
  if (it == terms_.end()) {
    terms_.emplace(b, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

Element TensorElement::at(const Bracket& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Element(n_) : it->second;
}

OmegaElement sp_action_on_bracket(int n, Generator g, const Bracket& b) {
  if (!g.is_even()) throw ParityError("sp_action_on_bracket needs an even generator");
  g.check(n);
  b.check(n);
  OmegaElement out(n);
  const auto& a = b.indices();
  auto replace = [&](std::size_t i, int x, int m) {
    std::vector<int> idx = a;
    idx[i] = x;
    out.add_indices(std::move(idx), -m);
  };
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (int m = metric_sign(n, g.a(), a[i])) replace(i, g.b(), m);
    if (int m = metric_sign(n, g.b(), a[i])) replace(i, g.a(), m);
  }
  return out;
}

OmegaElement sp_action(int n, Generator g, const OmegaElement& w) {
  OmegaElement out(n);
  for (const auto& [b, c] : w.terms()) out.add_scaled(sp_action_on_bracket(n, g, b), c);
  return out;
}

std::vector<Generator> simple_root_generators(int n) {
  std::vector<Generator> out;
  for (int alpha = 1; alpha < n; ++alpha) out.push_back(Generator::even(alpha, alpha + 1 + n));
  out.push_back(Generator::odd(n));
  return out;
}

OmegaSpace::OmegaSpace(int n)
    : n_(n), engine_(GeneratorOrder::standard(n)), basis_(omega_basis(n)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

const Element& OmegaSpace::bracket_expand(const Bracket& b) {
  if (auto it = expansions_.find(b); it != expansions_.end()) return it->second;
  b.check(n_);
  Element out(n_);
  if (b.empty()) {
    out = Element::unit(n_);
  } else {
    const auto& a = b.indices();
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Element& sub = bracket_expand(b.without(a[i]));
      out.add_scaled(engine_.left_multiply(Generator::odd(a[i]), sub), (i % 2 == 0) ? 1 : -1);
    }
  }
  return expansions_.emplace(b, std::move(out)).first->second;
}

Element OmegaSpace::expand(const OmegaElement& w) {
  Element out(n_);
  for (const auto& [b, c] : w.terms()) out.add_scaled(bracket_expand(b), c);
  return out;
}

TensorElement OmegaSpace::project_to_tensor(const Element& x) {
  Element rem = engine_.normal_order(x);
  TensorElement t(n_);
  while (!rem.is_zero()) {
    std::size_t top = 0;
    for (const auto& [w, c] : rem.terms()) {
      std::size_t odd = 0;
      for (const auto& g : w) odd += static_cast<std::size_t>(g.parity());
      top = std::max(top, odd);
    }
    const Rational inv_fact(Integer(1), factorial(static_cast<unsigned>(top)));
    Element sub(n_);
    for (const auto& [w, c] : rem.terms()) {
      std::size_t split = 0;
      while (split < w.size() && w[split].is_even()) ++split;
      if (w.size() - split != top) continue;
      Word even(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split));
      std::vector<int> idx;
      for (std::size_t i = split; i < w.size(); ++i) idx.push_back(w[i].a());
      Bracket b(std::move(idx));
      const Rational f = c * inv_fact;
      t.add(b, Element::monomial(n_, even, f));
      sub.add_scaled(engine_.left_multiply(even, bracket_expand(b)), f);
    }
    rem -= sub;
    for (const auto& [w, c] : rem.terms()) {
      std::size_t odd = 0;
      for (const auto& g : w) odd += static_cast<std::size_t>(g.parity());
      if (top > 0 && odd >= top) throw std::logic_error("projection failed to lower fermionic degree");
    }
    if (top == 0 && !rem.is_zero()) throw std::logic_error("projection left an even remainder");
  }
  return t;
}

Element OmegaSpace::reconstruct(const TensorElement& t) {
  Element out(n_);
  for (const auto& [b, coeff] : t.terms()) out += engine_.product(coeff, bracket_expand(b));
  return out;
}

const OmegaElement& OmegaSpace::triangle_on_bracket(Generator g, const Bracket& b) {
  g.check(n_);
  std::pair<int, Bracket> key{g.id(n_), b};
  if (auto it = actions_.find(key); it != actions_.end()) return it->second;
  Element image = triangle(engine_, g, bracket_expand(b));
  TensorElement t = project_to_tensor(image);
  OmegaElement out(n_);
  for (const auto& [br, coeff] : t.terms()) {
    auto s = coeff.as_scalar();
    if (!s) {
      throw NonScalarResidual(to_string(g) + " |> " + to_string(b) + " has a non-scalar coefficient at " +
                              to_string(br));
    }
    out.add_term(br, *s);
  }
  return actions_.emplace(std::move(key), std::move(out)).first->second;
}

OmegaElement OmegaSpace::triangle_on_omega(Generator g, const OmegaElement& w) {
  OmegaElement out(n_);
  for (const auto& [b, c] : w.terms()) out.add_scaled(triangle_on_bracket(g, b), c);
  return out;
}

std::size_t OmegaSpace::basis_index(const Bracket& b) const {
  auto it = index_.find(b);
  if (it == index_.end()) throw IndexOutOfRange("bracket " + to_string(b) + " not in basis");
  return it->second;
}

Vector OmegaSpace::coordinates(const OmegaElement& w) const {
  Vector v(basis_.size());
  for (const auto& [b, c] : w.terms()) v[basis_index(b)] = c;
  return v;
}

OmegaElement OmegaSpace::from_coordinates(const Vector& v) const {
  OmegaElement w(n_);
  for (std::size_t i = 0; i < v.size(); ++i) w.add_term(basis_[i], v[i]);
  return w;
}

int OmegaSpace::weight_sign() const {
  OmegaElement one = OmegaElement::bracket(n_, Bracket({1}));
  OmegaElement r = sp_action(n_, Generator::even(1, 1 + n_), one);
  Rational raw = r.coeff(Bracket({1}));
  if (r != raw * one || (raw != 1 && raw != -1)) throw std::logic_error("[1] is not a unit weight vector");
  return raw == 1 ? 1 : -1;
}

WeightVector OmegaSpace::weight_vector(const OmegaElement& w) const {
  if (w.is_zero()) throw NotAWeightVector("zero vector has no weight");
  const int s = weight_sign();
  const auto& [b0, c0] = *w.terms().begin();
  WeightVector out;
  for (int alpha = 1; alpha <= n_; ++alpha) {
    OmegaElement r = sp_action(n_, Generator::even(alpha, alpha + n_), w);
    Rational lambda = r.coeff(b0) / c0;
    if (r != lambda * w) {
      throw NotAWeightVector("not an eigenvector of sigma_{" + std::to_string(alpha) + "," +
                             std::to_string(alpha + n_) + "}");
    }
    out.push_back(s * lambda);
  }
  return out;
}

std::vector<HighestWeightVector> OmegaSpace::highest_weight_vectors() {
  std::map<WeightVector, std::vector<Bracket>> spaces;
  for (const auto& b : basis_) spaces[weight_vector(OmegaElement::bracket(n_, b))].push_back(b);
  const auto roots = simple_root_generators(n_);
  std::vector<HighestWeightVector> out;
  for (const auto& [weight, brackets] : spaces) {
    Matrix m(roots.size() * basis_.size(), brackets.size());
    for (std::size_t col = 0; col < brackets.size(); ++col) {
      for (std::size_t r = 0; r < roots.size(); ++r) {
        const OmegaElement& img = triangle_on_bracket(roots[r], brackets[col]);
        for (const auto& [b, c] : img.terms()) m(r * basis_.size() + basis_index(b), col) = c;
      }
    }
    for (const auto& v : nullspace(std::move(m))) {
      OmegaElement w(n_);
      for (std::size_t col = 0; col < brackets.size(); ++col) w.add_term(brackets[col], v[col]);
      // leading bracket: longest, then lexicographically first
      const Bracket* lead = nullptr;
      for (const auto& [b, c] : w.terms())
        if (!lead || b.size() > lead->size()) lead = &b;
      Rational scale = 1 / w.coeff(*lead);
      w *= scale;
      out.push_back({weight, std::move(w)});
    }
  }
  auto level = [](const WeightVector& wv) {
    Rational s = 0;
    for (const auto& q : wv) s += q;
    return s;
  };
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    return level(x.weight) < level(y.weight);
  });
  return out;
}

std::size_t OmegaSpace::submodule_dimension(const OmegaElement& v) {
  SpanBuilder span(basis_.size());
  std::deque<OmegaElement> queue;
  if (span.add(coordinates(v))) queue.push_back(v);
  const auto gens = Generator::all(n_);
  while (!queue.empty()) {
    OmegaElement w = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      OmegaElement u = triangle_on_omega(g, w);
      if (span.add(coordinates(u))) queue.push_back(std::move(u));
    }
  }
  return span.dimension();
}

FiltrationCheck osp12_filtration_dimensions(int d) {
  if (d < 0) throw Error("filtration degree must be >= 0");
  auto dim_u = [](int k) -> Integer {
    return k < 0 ? Integer(0) : binomial(static_cast<unsigned>(k + 3), 3);
  };
  FiltrationCheck out;
  out.lhs = 4 * dim_u(d);
  // j runs over 0, 1/2, ..., d + 1/2; dim R_j = 4j + 1
  Rational reps = 0;
  for (int twice_j = 0; twice_j <= 2 * d + 1; ++twice_j) reps += 2 * twice_j + 1;
  out.representations = reps.get_num();
  out.lower = 4 * dim_u(d - 2);
  return out;
}

bool check_osp12_filtration(int d) { return osp12_filtration_dimensions(d).holds(); }

}  // namespace scg
