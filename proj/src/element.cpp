#include "scg/element.hpp"

#include <algorithm>

namespace scg {

int conjugate(int n, int a) { return a <= n ? a + n : a - n; }

int metric_sign(int n, int a, int b) {
  if (a < 1 || b < 1 || a > 2 * n || b > 2 * n) {
    throw IndexOutOfRange("metric index out of range 1.." + std::to_string(2 * n) + ": (" +
                          std::to_string(a) + "," + std::to_string(b) + ")");
  }
  if (a <= n && b == a + n) return -1;
  if (a > n && b == a - n) return 1;
  return 0;
}

Rational metric(int n, int a, int b) { return metric_sign(n, a, b); }

Generator Generator::odd(int a) {
  if (a < 1) throw IndexOutOfRange("generator index must be >= 1");
  return Generator(a, 0);
}

Generator Generator::even(int a, int b) {
  if (a < 1 || b < 1) throw IndexOutOfRange("generator index must be >= 1");
  if (a > b) std::swap(a, b);
  return Generator(a, b);
}

void Generator::check(int n) const {
  if (a_ < 1 || a_ > 2 * n || (b_ != 0 && b_ > 2 * n)) {
    throw IndexOutOfRange("generator " + to_string(*this) + " out of range for n=" +
                          std::to_string(n));
  }
}

namespace {
int pair_offset(int n, int a) {
  // number of pairs (i, j), i <= j, with i < a
  return (a - 1) * (2 * n) - (a - 1) * (a - 2) / 2;
}
}  // namespace

int Generator::id(int n) const {
  if (is_odd()) return a_ - 1;
  return 2 * n + pair_offset(n, a_) + (b_ - a_);
}

Generator Generator::from_id(int n, int id) {
  if (id < 0 || id >= count(n)) throw IndexOutOfRange("generator id out of range");
  if (id < 2 * n) return odd(id + 1);
  int rest = id - 2 * n;
  for (int a = 1; a <= 2 * n; ++a) {
    int row = 2 * n - a + 1;
    if (rest < row) return even(a, a + rest);
    rest -= row;
  }
  throw IndexOutOfRange("generator id out of range");
}

std::vector<Generator> Generator::all_odd(int n) {
  std::vector<Generator> out;
  for (int a = 1; a <= 2 * n; ++a) out.push_back(odd(a));
  return out;
}

std::vector<Generator> Generator::all_even(int n) {
  std::vector<Generator> out;
  for (int a = 1; a <= 2 * n; ++a)
    for (int b = a; b <= 2 * n; ++b) out.push_back(even(a, b));
  return out;
}

std::vector<Generator> Generator::all(int n) {
  auto out = all_odd(n);
  auto ev = all_even(n);
  out.insert(out.end(), ev.begin(), ev.end());
  return out;
}

std::string to_string(const Generator& g) {
  if (g.is_odd()) return "s(" + std::to_string(g.a()) + ")";
  return "s(" + std::to_string(g.a()) + "," + std::to_string(g.b()) + ")";
}

int parity(const Word& w) {
  int p = 0;
  for (const auto& g : w) p ^= g.parity();
  return p;
}

std::vector<std::pair<Generator, Rational>> generator_bracket(int n, Generator g, Generator h) {
  std::map<Generator, int> acc;
  if (g.is_odd() && h.is_odd()) {
    acc[Generator::even(g.a(), h.a())] += 1;
  } else if (g.is_odd()) {
    // [s_a, s_bc] = -g_ab s_c - g_ac s_b
    int a = g.a(), b = h.a(), c = h.b();
    if (int m = metric_sign(n, a, b)) acc[Generator::odd(c)] -= m;
    if (int m = metric_sign(n, a, c)) acc[Generator::odd(b)] -= m;
  } else if (h.is_odd()) {
    int a = h.a(), b = g.a(), c = g.b();
    if (int m = metric_sign(n, a, b)) acc[Generator::odd(c)] += m;
    if (int m = metric_sign(n, a, c)) acc[Generator::odd(b)] += m;
  } else {
    // [s_ab, s_cd] = -g_ac s_bd - g_ad s_bc - g_bc s_ad - g_bd s_ac
    int a = g.a(), b = g.b(), c = h.a(), d = h.b();
    if (int m = metric_sign(n, a, c)) acc[Generator::even(b, d)] -= m;
    if (int m = metric_sign(n, a, d)) acc[Generator::even(b, c)] -= m;
    if (int m = metric_sign(n, b, c)) acc[Generator::even(a, d)] -= m;
    if (int m = metric_sign(n, b, d)) acc[Generator::even(a, c)] -= m;
  }
  std::vector<std::pair<Generator, Rational>> out;
  for (const auto& [gen, c] : acc)
    if (c != 0) out.emplace_back(gen, c);
  return out;
}

Element::Element(int n) : n_(n) {
  if (n < 1) throw Error("n must be >= 1");
}

Element Element::scalar(int n, const Rational& c) { return monomial(n, {}, c); }

Element Element::generator(int n, Generator g, const Rational& c) { return monomial(n, {g}, c); }

Element Element::monomial(int n, Word w, const Rational& c) {
  for (const auto& g : w) g.check(n);
  Element e(n);
  e.add_term(w, c);
  return e;
}

Rational Element::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Rational> Element::as_scalar() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

void Element::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Element::add_scaled(const Element& other, const Rational& c) {
  check_same_n(other);
  if (c == 0) return;
  for (const auto& [w, q] : other.terms_) add_term(w, q * c);
}

std::optional<int> Element::parity() const {
  std::optional<int> p;
  for (const auto& [w, c] : terms_) {
    int pw = scg::parity(w);
    if (p && *p != pw) return std::nullopt;
    p = pw;
  }
  return p.value_or(0);
}

Element Element::even_part() const {
  Element out(n_);
  for (const auto& [w, c] : terms_)
    if (scg::parity(w) == 0) out.terms_.emplace(w, c);
  return out;
}

Element Element::odd_part() const {
  Element out(n_);
  for (const auto& [w, c] : terms_)
    if (scg::parity(w) == 1) out.terms_.emplace(w, c);
  return out;
}

Element& Element::operator+=(const Element& other) {
  add_scaled(other, 1);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  add_scaled(other, -1);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, q] : terms_) q *= c;
  return *this;
}

Element Element::operator-() const {
  Element out = *this;
  return out *= -1;
}

void Element::check_same_n(const Element& other) const {
  if (other.n_ != n_) {
    throw DimensionMismatch("elements over different n (" + std::to_string(n_) + " vs " +
                            std::to_string(other.n_) + ")");
  }
}

Element operator*(const Element& x, const Element& y) { return multiply(x, y); }

Element multiply(const Element& x, const Element& y) {
  x.check_same_n(y);
  Element out(x.n());
  for (const auto& [u, p] : x.terms()) {
    for (const auto& [v, q] : y.terms()) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add_term(w, p * q);
    }
  }
  return out;
}

Element graded_commutator(const Element& x, const Element& y) {
  auto px = x.parity();
  auto py = y.parity();
  if (!px || !py) throw ParityError("graded commutator needs parity-homogeneous arguments");
  Element out = multiply(x, y);
  out.add_scaled(multiply(y, x), (*px & *py) ? 1 : -1);
  return out;
}

Element commutator(const Element& x, const Element& y) {
  return multiply(x, y) - multiply(y, x);
}

}  // namespace scg
