#include "scg/oscillator.hpp"

#include "scg/pbw.hpp"
#include "scg/scasimir.hpp"

namespace scg {

WeylElement WeylElement::scalar(int n, const Rational& c) {
  WeylElement w(n);
  w.add_term({}, c);
  return w;
}

std::optional<Rational> WeylElement::as_scalar() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

void WeylElement::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void WeylElement::add_scaled(const WeylElement& other, const Rational& c) {
  if (other.n_ != n_) throw DimensionMismatch("weyl elements over different n");
  for (const auto& [w, q] : other.terms_) add_term(w, q * c);
}

namespace {

// out += c * (s_a * m), m weakly ascending
void insert(int n, WeylElement& out, int a, const Word& m, const Rational& c) {
  if (m.empty() || a <= m.front().a()) {
    Word w;
    w.reserve(m.size() + 1);
    w.push_back(Generator::odd(a));
    w.insert(w.end(), m.begin(), m.end());
    out.add_term(w, c);
    return;
  }
  const Generator h = m.front();
  const Word rest(m.begin() + 1, m.end());
  // s_a s_h = s_h s_a - 1/2 g_ah
  WeylElement tail(n);
  insert(n, tail, a, rest, 1);
  for (const auto& [w, q] : tail.terms()) {
    Word v;
    v.reserve(w.size() + 1);
    v.push_back(h);
    v.insert(v.end(), w.begin(), w.end());
    out.add_term(v, c * q);
  }
  if (int g = metric_sign(n, a, h.a())) out.add_term(rest, c * Rational(-g, 2));
}

WeylElement left_multiply(int a, const WeylElement& x) {
  WeylElement out(x.n());
  for (const auto& [w, c] : x.terms()) insert(x.n(), out, a, w, c);
  return out;
}

}  // namespace

WeylElement weyl_multiply(const WeylElement& x, const WeylElement& y) {
  if (x.n() != y.n()) throw DimensionMismatch("weyl elements over different n");
  WeylElement out(x.n());
  for (const auto& [w, c] : x.terms()) {
    WeylElement acc = y;
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = left_multiply(it->a(), acc);
    out.add_scaled(acc, c);
  }
  return out;
}

WeylElement weyl_generator(int n, Generator g) {
  g.check(n);
  WeylElement out(n);
  if (g.is_odd()) {
    out.add_term({g}, 1);
  } else {
    out.add_term({Generator::odd(g.a()), Generator::odd(g.b())}, 2);
    if (int m = metric_sign(n, g.a(), g.b())) out.add_term({}, Rational(m, 2));
  }
  return out;
}

WeylElement weyl_reduce(const Element& x) {
  const int n = x.n();
  WeylElement out(n);
  for (const auto& [w, c] : x.terms()) {
    WeylElement acc = WeylElement::scalar(n, c);
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = weyl_multiply(weyl_generator(n, *it), acc);
    out += acc;
  }
  return out;
}

namespace {

const WeylElement& bracket_image(int n, const Bracket& b, std::map<Bracket, WeylElement>& memo) {
  if (auto it = memo.find(b); it != memo.end()) return it->second;
  WeylElement out(n);
  if (b.empty()) {
    out.add_term({}, 1);
  } else {
    const auto& a = b.indices();
    for (std::size_t i = 0; i < a.size(); ++i) {
      const WeylElement& sub = bracket_image(n, b.without(a[i]), memo);
      out.add_scaled(left_multiply(a[i], sub), (i % 2 == 0) ? 1 : -1);
    }
  }
  return memo.emplace(b, std::move(out)).first->second;
}

}  // namespace

WeylElement weyl_bracket(int n, const Bracket& b) {
  b.check(n);
  std::map<Bracket, WeylElement> memo;
  return bracket_image(n, b, memo);
}

WeylElement weyl_reduce(const OmegaElement& w) {
  std::map<Bracket, WeylElement> memo;
  WeylElement out(w.n());
  for (const auto& [b, c] : w.terms()) {
    b.check(w.n());
    out.add_scaled(bracket_image(w.n(), b, memo), c);
  }
  return out;
}

Rational a_value(int n, int k) {
  if (k < 0 || k > n) throw Error("a_value: k must lie in 0..n");
  WeylElement img = weyl_reduce(a_poly(n, n - k));
  auto s = img.as_scalar();
  if (!s) throw Error("A_{2k} does not reduce to a constant for n=" + std::to_string(n));
  return *s;
}

Rational a_value_expected(int n, int k) {
  Rational r(factorial(static_cast<unsigned>(n)), factorial(static_cast<unsigned>(n - k)));
  r.canonicalize();
  return pow2(-k) * r;
}

Report verify_vanishing(int n) {
  Report report{"oscillator n=" + std::to_string(n), true, {}, 0.0};
  ReportTimer timer(report);
  WeylElement img = weyl_reduce(scasimir(n));
  if (!img.is_zero()) report.fail("Sc maps to a nonzero element with " + std::to_string(img.terms().size()) + " terms");
  CoeffTable t = coeffs_series(n);
  Rational via_values = 0;
  for (int k = 0; k <= n; ++k) {
    Rational v = a_value(n, n - k);
    if (v != a_value_expected(n, n - k)) {
      report.fail("A_" + std::to_string(2 * (n - k)) + " = " + to_string(v) + ", expected " +
                  to_string(a_value_expected(n, n - k)));
    }
    via_values += t.x[static_cast<std::size_t>(k)] * v;
  }
  if (via_values != sum_rule(n)) report.fail("sum over A-values differs from the sum rule");
  report.note("n=" + std::to_string(n) + ": image of Sc is " + (img.is_zero() ? "0" : "nonzero"));
  return report;
}

Report verify_quotient_relations(int n) {
  Report report{"oscillator-relations n=" + std::to_string(n), true, {}, 0.0};
  ReportTimer timer(report);
  const auto gens = Generator::all(n);
  for (const auto& g : gens) {
    for (const auto& h : gens) {
      WeylElement gh = weyl_multiply(weyl_generator(n, g), weyl_generator(n, h));
      WeylElement hg = weyl_multiply(weyl_generator(n, h), weyl_generator(n, g));
      WeylElement lhs = gh;
      lhs.add_scaled(hg, (g.is_odd() && h.is_odd()) ? 1 : -1);
      WeylElement rhs(n);
      for (const auto& [k, c] : generator_bracket(n, g, h)) rhs.add_scaled(weyl_generator(n, k), c);
      if (lhs != rhs) report.fail("relation for (" + to_string(g) + ", " + to_string(h) + ") fails");
    }
  }
  return report;
}

}  // namespace scg
