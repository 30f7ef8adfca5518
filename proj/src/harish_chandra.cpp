#include "scg/harish_chandra.hpp"

#include <algorithm>
#include <numeric>

#include "scg/omega.hpp"
#include "scg/scasimir.hpp"

namespace scg {

CartanPolynomial CartanPolynomial::constant(int vars, const Rational& c) {
  CartanPolynomial p(vars);
  p.add_term(Exponents(static_cast<std::size_t>(vars), 0), c);
  return p;
}

CartanPolynomial CartanPolynomial::variable(int vars, int alpha) {
  if (alpha < 1 || alpha > vars) throw IndexOutOfRange("Cartan variable out of range");
  Exponents e(static_cast<std::size_t>(vars), 0);
  e[static_cast<std::size_t>(alpha - 1)] = 1;
  CartanPolynomial p(vars);
  p.add_term(e, 1);
  return p;
}

CartanPolynomial CartanPolynomial::product_of_all(int vars, int power) {
  CartanPolynomial p(vars);
  p.add_term(Exponents(static_cast<std::size_t>(vars), power), 1);
  return p;
}

void CartanPolynomial::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != vars_) throw DimensionMismatch("exponent vector has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool CartanPolynomial::is_symmetric() const {
  std::vector<std::size_t> perm(static_cast<std::size_t>(vars_));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    CartanPolynomial q(vars_);
    for (const auto& [e, c] : terms_) {
      Exponents f(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) f[perm[i]] = e[i];
      q.add_term(f, c);
    }
    if (q != *this) return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

CartanPolynomial& CartanPolynomial::operator+=(const CartanPolynomial& o) {
  if (o.vars_ != vars_) throw DimensionMismatch("polynomials over different variables");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CartanPolynomial& CartanPolynomial::operator-=(const CartanPolynomial& o) {
  if (o.vars_ != vars_) throw DimensionMismatch("polynomials over different variables");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

CartanPolynomial operator*(const CartanPolynomial& a, const CartanPolynomial& b) {
  if (a.vars_ != b.vars_) throw DimensionMismatch("polynomials over different variables");
  CartanPolynomial out(a.vars_);
  for (const auto& [e, c] : a.terms_)
    for (const auto& [f, d] : b.terms_) {
      CartanPolynomial::Exponents g(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) g[i] = e[i] + f[i];
      out.add_term(g, c * d);
    }
  return out;
}

std::string to_string(const CartanPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  // highest total degree first
  std::vector<std::pair<CartanPolynomial::Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    int dx = std::accumulate(x.first.begin(), x.first.end(), 0);
    int dy = std::accumulate(y.first.begin(), y.first.end(), 0);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  for (const auto& [e, c] : terms) {
    Rational mag = abs(c);
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "H" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      s += to_string(mag);
    } else {
      if (mag != 1) s += to_string(mag) + "*";
      s += mono;
    }
  }
  return s;
}

CartanPolynomial hc_project_normal(const Element& normal) {
  const int n = normal.n();
  CartanPolynomial out(n);
  for (const auto& [w, c] : normal.terms()) {
    CartanPolynomial::Exponents e(static_cast<std::size_t>(n), 0);
    bool cartan_only = true;
    for (const auto& g : w) {
      if (classify_root(n, g) != RootClass::Cartan) {
        cartan_only = false;
        break;
      }
      ++e[static_cast<std::size_t>(g.a() - 1)];
    }
    if (cartan_only) out.add_term(e, c);
  }
  return out;
}

CartanPolynomial hc_project(const Element& x, const GeneratorOrder& order) {
  PbwEngine engine(order);
  return hc_project_normal(engine.normal_order(x));
}

CartanPolynomial hc_project(const Element& x) { return hc_project(x, GeneratorOrder::borel(x.n())); }

Rational hc_normalization(int n) { return Rational(factorial(static_cast<unsigned>(2 * n))) / pow2(n); }

CartanPolynomial gamma_shift(const CartanPolynomial& p, ShiftDirection dir) {
  const int n = p.vars();
  std::vector<CartanPolynomial> images;
  for (int alpha = 1; alpha <= n; ++alpha) {
    Rational shift = Rational(2 * (n - alpha) + 1, 2);
    shift.canonicalize();
    if (dir == ShiftDirection::Forward) shift = -shift;
    images.push_back(CartanPolynomial::variable(n, alpha) + CartanPolynomial::constant(n, shift));
  }
  CartanPolynomial out(n);
  for (const auto& [e, c] : p.terms()) {
    CartanPolynomial term = CartanPolynomial::constant(n, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term = term * images[i];
    out += term;
  }
  return out;
}

namespace {

void compare(Report& report, int n, const GeneratorOrder& order, const Element& normal,
             const CartanPolynomial& expected) {
  CartanPolynomial image = gamma_shift(hc_project_normal(normal), ShiftDirection::Inverse);
  const std::string where = "n=" + std::to_string(n) + " (" + order.name() + "): ";
  if (image != expected) {
    report.fail(where + "got " + to_string(image) + ", expected " + to_string(expected));
  } else {
    report.note(where + to_string(image));
  }
  if (!image.is_symmetric()) report.fail(where + "image is not symmetric in H");
}

}  // namespace

Report verify_hc_scasimir(int n, const GeneratorOrder& order) {
  Report report{"hc n=" + std::to_string(n) + " " + order.name(), true, {}, 0.0};
  ReportTimer timer(report);
  OmegaSpace space(n);
  PbwEngine engine(order);
  compare(report, n, order, engine.normal_order(scasimir_pbw(space)),
          CartanPolynomial::constant(n, hc_normalization(n)) * CartanPolynomial::product_of_all(n));
  return report;
}

Report verify_hc_square(int n, const GeneratorOrder& order) {
  Report report{"hc-square n=" + std::to_string(n) + " " + order.name(), true, {}, 0.0};
  ReportTimer timer(report);
  OmegaSpace space(n);
  Element sc = scasimir_pbw(space);
  PbwEngine engine(order);
  const Rational c = hc_normalization(n);
  compare(report, n, order, engine.product(sc, sc), CartanPolynomial::constant(n, c * c) * CartanPolynomial::product_of_all(n, 2));
  return report;
}

}  // namespace scg
