#include "scg/matrix_rep.hpp"

#include "scg/scasimir.hpp"

namespace scg {

const Matrix& Representation::image(Generator g) const {
  auto it = images.find(g);
  if (it == images.end()) throw IndexOutOfRange("no image for generator " + to_string(g));
  return it->second;
}

namespace {

// Odd images from the ansatz with parameters t (row-major 2n x 2n); even
// images as anticommutators.
Representation build(int n, const Vector& t) {
  const std::size_t m = static_cast<std::size_t>(2 * n);
  Representation rep;
  rep.n = n;
  rep.dim = m + 1;
  rep.parity.assign(rep.dim, 1);
  rep.parity[0] = 0;
  for (std::size_t a = 1; a <= m; ++a) {
    Matrix s(rep.dim, rep.dim);
    s(a, 0) = 1;
    for (std::size_t b = 1; b <= m; ++b) s(0, b) = t[(a - 1) * m + (b - 1)];
    rep.images.emplace(Generator::odd(static_cast<int>(a)), std::move(s));
  }
  for (const auto& g : Generator::all_even(n)) {
    const Matrix& x = rep.images.at(Generator::odd(g.a()));
    const Matrix& y = rep.images.at(Generator::odd(g.b()));
    rep.images.emplace(g, x * y + y * x);
  }
  return rep;
}

Matrix relation_residual(const Representation& rep, Generator g, Generator h) {
  const Matrix& x = rep.image(g);
  const Matrix& y = rep.image(h);
  Matrix r = x * y;
  if (g.is_odd() && h.is_odd()) {
    r += y * x;
  } else {
    r -= y * x;
  }
  for (const auto& [k, c] : generator_bracket(rep.n, g, h)) r -= rep.image(k) * c;
  return r;
}

// Column e_0 of the odd/even relation residuals, stacked.
Vector constraint_vector(int n, const Vector& t) {
  Representation rep = build(n, t);
  Vector out;
  for (const auto& a : Generator::all_odd(n))
    for (const auto& bc : Generator::all_even(n)) {
      Matrix r = relation_residual(rep, a, bc);
      for (std::size_t i = 0; i < rep.dim; ++i) out.push_back(r(i, 0));
    }
  return out;
}

}  // namespace

Representation fundamental_rep(int n) {
  if (n < 1) throw Error("n must be >= 1");
  const std::size_t unknowns = static_cast<std::size_t>(4 * n * n);
  // The constraints are affine in t: probe the constant part and each unit direction.
  const Vector base = constraint_vector(n, Vector(unknowns));
  Matrix system(base.size(), unknowns);
  for (std::size_t j = 0; j < unknowns; ++j) {
    Vector t(unknowns);
    t[j] = 1;
    Vector col = constraint_vector(n, t);
    for (std::size_t i = 0; i < base.size(); ++i) system(i, j) = col[i] - base[i];
  }
  Vector rhs(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) rhs[i] = -base[i];
  Vector t;
  if (!solve(system, rhs, t)) throw Error("fundamental representation ansatz is inconsistent");
  Representation rep = build(n, t);
  Report check = check_relations(rep);
  if (!check.passed) throw Error("solved representation violates the relations: " + check.details.front());
  return rep;
}

Representation trivial_rep(int n) {
  Representation rep;
  rep.n = n;
  rep.dim = 1;
  rep.parity = {0};
  for (const auto& g : Generator::all(n)) rep.images.emplace(g, Matrix(1, 1));
  return rep;
}

Matrix evaluate(const Element& x, const Representation& rep) {
  if (x.n() != rep.n) throw DimensionMismatch("element and representation over different n");
  Matrix out(rep.dim, rep.dim);
  for (const auto& [w, c] : x.terms()) {
    Matrix prod = Matrix::identity(rep.dim);
    for (const auto& g : w) prod = prod * rep.image(g);
    out += prod * c;
  }
  return out;
}

namespace {

const Matrix& bracket_matrix(const Representation& rep, const Bracket& b, std::map<Bracket, Matrix>& memo) {
  if (auto it = memo.find(b); it != memo.end()) return it->second;
  Matrix out = Matrix::identity(rep.dim);
  if (!b.empty()) {
    out = Matrix(rep.dim, rep.dim);
    const auto& a = b.indices();
    for (std::size_t i = 0; i < a.size(); ++i) {
      Matrix term = rep.image(Generator::odd(a[i])) * bracket_matrix(rep, b.without(a[i]), memo);
      if (i % 2 == 0) {
        out += term;
      } else {
        out -= term;
      }
    }
  }
  return memo.emplace(b, std::move(out)).first->second;
}

}  // namespace

Matrix evaluate(const OmegaElement& w, const Representation& rep) {
  if (w.n() != rep.n) throw DimensionMismatch("element and representation over different n");
  std::map<Bracket, Matrix> memo;
  Matrix out(rep.dim, rep.dim);
  for (const auto& [b, c] : w.terms()) out += bracket_matrix(rep, b, memo) * c;
  return out;
}

Report check_relations(const Representation& rep) {
  Report report{"relations n=" + std::to_string(rep.n), true, {}, 0.0};
  ReportTimer timer(report);
  const auto gens = Generator::all(rep.n);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j)
      if (!relation_residual(rep, gens[i], gens[j]).is_zero()) {
        report.fail("relation (" + to_string(gens[i]) + ", " + to_string(gens[j]) + ") has a nonzero residual");
      }
  return report;
}

Report verify_rep_ghost(int n) {
  Report report{"rep-ghost n=" + std::to_string(n), true, {}, 0.0};
  ReportTimer timer(report);
  Representation rep = fundamental_rep(n);
  Report rel = check_relations(rep);
  for (auto& d : rel.details) report.fail(d);
  const Matrix s = evaluate(scasimir(n), rep);
  for (const auto& g : Generator::all(n)) {
    const Matrix& x = rep.image(g);
    Matrix r = g.is_odd() ? s * x + x * s : s * x - x * s;
    if (!r.is_zero()) report.fail("Sc does not " + std::string(g.is_odd() ? "anticommute" : "commute") + " with " + to_string(g));
  }
  const Rational mu = s(0, 0);
  if (mu == 0) {
    report.fail("Sc vanishes on the even sector; cannot normalize");
    return report;
  }
  const Matrix normalized = s * Rational(1 / mu);
  if (normalized * normalized != Matrix::identity(rep.dim)) report.fail("normalized Sc is not an involution");
  Matrix expected(rep.dim, rep.dim);
  for (std::size_t i = 0; i < rep.dim; ++i) expected(i, i) = rep.parity[i] == 0 ? 1 : -1;
  if (normalized != expected) report.fail("normalized Sc is not +1 on the even sector and -1 on the odd sector");
  report.note("n=" + std::to_string(n) + ": Sc acts as " + to_string(mu) + " * (-1)^F on the " +
              std::to_string(rep.dim) + "-dimensional representation");
  return report;
}

}  // namespace scg
