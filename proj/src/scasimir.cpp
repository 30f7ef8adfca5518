#include "scg/scasimir.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <thread>

#include "scg/power_series.hpp"

namespace scg {

std::string to_string(CoeffRoute r) {
  switch (r) {
    case CoeffRoute::RecursionA: return "recursion-a";
    case CoeffRoute::RecursionB: return "recursion-b";
    case CoeffRoute::Series: return "series";
  }
  return "?";
}

CoeffRoute route_from_string(const std::string& s) {
  if (s == "recursion-a" || s == "a") return CoeffRoute::RecursionA;
  if (s == "recursion-b" || s == "b") return CoeffRoute::RecursionB;
  if (s == "series") return CoeffRoute::Series;
  throw Error("unknown coefficient route '" + s + "'");
}

namespace {

Rational xy_ratio(int n, int k) {
  auto uk = static_cast<unsigned>(k);
  auto un = static_cast<unsigned>(n);
  Integer num = factorial(2 * uk + 2) * factorial(2 * un - 2 * uk);
  Integer den = factorial(uk) * factorial(2 * un + 1);
  Rational r(num, den);
  r.canonicalize();
  return r * pow2(-k);
}

void check_n(int n) {
  if (n < 1) throw Error("n must be >= 1");
}

Rational frac(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

CoeffTable finish(int n, CoeffRoute route, std::vector<Rational> y) {
  CoeffTable t;
  t.n = n;
  t.route = route;
  for (int k = 0; k <= n; ++k) t.x.push_back(x_from_y(n, k, y[static_cast<std::size_t>(k)]));
  t.y = std::move(y);
  return t;
}

}  // namespace

Rational y_from_x(int n, int k, const Rational& x) { return xy_ratio(n, k) * x; }
Rational x_from_y(int n, int k, const Rational& y) { return y / xy_ratio(n, k); }

OmegaElement a_poly(int n, int k) {
  check_n(n);
  if (k < 0 || k > n) throw Error("a_poly: k must lie in 0..n");
  OmegaElement out(n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> idx;
    for (int alpha = 1; alpha <= n; ++alpha) {
      if (mask & (1u << (alpha - 1))) continue;  // deleted pair
      idx.push_back(alpha);
      idx.push_back(alpha + n);
    }
    out.add_indices(std::move(idx), 1);
  }
  return out;
}

CoeffTable coeffs_recursion_a(int n) {
  check_n(n);
  std::vector<Rational> y{Rational(2, 2 * n + 1)};
  y[0].canonicalize();
  for (int k = 1; k <= n; ++k) {
    Rational s = 0;
    for (int p = 0; p < k; ++p) {
      auto up = static_cast<unsigned>(p), uk = static_cast<unsigned>(k);
      Rational w = frac(factorial(2 * uk + 2), 4 * factorial(2 * up + 2) * factorial(2 * uk - 2 * up + 1));
      int poly = (2 * k - 2 * p - 1) * (2 * n - 2 * p + 1) + 2 * p * (2 * k - 2 * p + 1);
      s += y[up] * w * poly;
    }
    y.push_back(-s / k);
  }
  return finish(n, CoeffRoute::RecursionA, std::move(y));
}

CoeffTable coeffs_recursion_b(int n) {
  check_n(n);
  std::vector<Rational> y{Rational(2, 2 * n + 1)};
  y[0].canonicalize();
  for (int k = 1; k <= n; ++k) {
    Rational s = 0;
    for (int p = 0; p < k; ++p) {
      auto up = static_cast<unsigned>(p), uk = static_cast<unsigned>(k);
      Rational w = frac(factorial(2 * uk + 2), factorial(2 * up + 2) * factorial(2 * uk - 2 * up + 2));
      int poly = (k - p) * (2 * n - 2 * p + 1) + p * (2 * k - 2 * p + 2);
      s += y[up] * w * poly;
    }
    y.push_back(-s / k);
  }
  return finish(n, CoeffRoute::RecursionB, std::move(y));
}

CoeffTable coeffs_series(int n) {
  check_n(n);
  const auto un = static_cast<unsigned>(n);
  const std::size_t order = 2 * un;
  PowerSeries f = PowerSeries::sinhc(order).reciprocal().pow(2 * un + 1);
  CoeffTable t;
  t.n = n;
  t.route = CoeffRoute::Series;
  for (int k = 0; k <= n; ++k) {
    auto uk = static_cast<unsigned>(k);
    // (2k)! [u^{2k}] is the 2k-th derivative at 0
    Rational deriv = f[2 * uk] * Rational(factorial(2 * uk));
    Rational x = pow2(-k) * Rational(factorial(uk) * binomial(2 * un, 2 * uk)) * deriv;
    t.x.push_back(x);
    t.y.push_back(y_from_x(n, k, x));
  }
  return t;
}

CoeffTable coeffs(int n, CoeffRoute route) {
  switch (route) {
    case CoeffRoute::RecursionA: return coeffs_recursion_a(n);
    case CoeffRoute::RecursionB: return coeffs_recursion_b(n);
    case CoeffRoute::Series: return coeffs_series(n);
  }
  throw Error("unknown route");
}

OmegaElement scasimir(const CoeffTable& table) {
  OmegaElement sc(table.n);
  for (int k = 0; k <= table.n; ++k) sc.add_scaled(a_poly(table.n, k), table.x[static_cast<std::size_t>(k)]);
  return sc;
}

OmegaElement scasimir(int n) {
  static std::mutex mu;
  static std::map<int, OmegaElement> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  return cache.emplace(n, scasimir(coeffs_series(n))).first->second;
}

Element scasimir_pbw(OmegaSpace& space) { return space.expand(scasimir(space.n())); }

Rational sum_rule(int n) {
  const CoeffTable t = coeffs_series(n);
  const auto un = static_cast<unsigned>(n);
  Rational s = 0;
  for (int k = 0; k <= n; ++k) {
    Rational ratio(factorial(un), factorial(static_cast<unsigned>(k)));
    ratio.canonicalize();
    s += pow2(k - n) * ratio * t.x[static_cast<std::size_t>(k)];
  }
  return s;
}

Element scasimir_square(OmegaSpace& space) {
  Element sc = scasimir_pbw(space);
  return space.engine().product(sc, sc);
}

Report verify_ghost(int n) {
  Report report{"ghost n=" + std::to_string(n), true, {}, 0.0};
  ReportTimer timer(report);
  OmegaSpace space(n);
  const Element sc = scasimir_pbw(space);
  const auto gens = Generator::all(n);

  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                           static_cast<unsigned>(gens.size())));
  std::vector<std::vector<std::string>> failures(workers);
  auto work = [&](unsigned id) {
    PbwEngine engine(GeneratorOrder::standard(n));
    for (std::size_t i = id; i < gens.size(); i += workers) {
      const Generator g = gens[i];
      Element gen = Element::generator(n, g);
      Element r = engine.left_multiply(g, sc);
      r.add_scaled(engine.product(sc, gen), g.is_odd() ? 1 : -1);
      if (!r.is_zero()) {
        failures[id].push_back(to_string(g) + (g.is_odd() ? " anticommutator" : " commutator") +
                               " leaves " + std::to_string(r.size()) + " terms");
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned id = 1; id < workers; ++id) pool.emplace_back(work, id);
  work(0);
  for (auto& t : pool) t.join();

  for (auto& f : failures)
    for (auto& msg : f) report.fail(std::move(msg));
  report.note("n=" + std::to_string(n) + ": " + std::to_string(2 * n) + " odd and " +
              std::to_string(n * (2 * n + 1)) + " even generators checked; Sc has " +
              std::to_string(sc.size()) + " PBW terms");
  return report;
}

Report verify_square_central(int n) {
  Report report{"square-central n=" + std::to_string(n), true, {}, 0.0};
  ReportTimer timer(report);
  OmegaSpace space(n);
  Element sq = scasimir_square(space);
  if (sq.parity() != 0) report.fail("Sc^2 is not parity-even");
  auto& engine = space.engine();
  for (const auto& g : Generator::all(n)) {
    Element r = engine.left_multiply(g, sq) - engine.product(sq, Element::generator(n, g));
    if (!r.is_zero()) report.fail("[" + to_string(g) + ", Sc^2] leaves " + std::to_string(r.size()) + " terms");
  }
  report.note("Sc^2 has " + std::to_string(sq.size()) + " PBW terms");
  return report;
}

Report verify_routes(int max_n) {
  Report report{"routes n<=" + std::to_string(max_n), true, {}, 0.0};
  ReportTimer timer(report);
  for (int n = 1; n <= max_n; ++n) {
    auto a = coeffs_recursion_a(n), b = coeffs_recursion_b(n), s = coeffs_series(n);
    if (a.x != b.x || a.x != s.x) report.fail("x tables disagree at n=" + std::to_string(n));
    if (a.y != b.y || a.y != s.y) report.fail("y tables disagree at n=" + std::to_string(n));
    Rational y0(2, 2 * n + 1);
    y0.canonicalize();
    if (s.x[0] != 1 || s.y[0] != y0) report.fail("initial values wrong at n=" + std::to_string(n));
  }
  report.note("routes compared for n=1.." + std::to_string(max_n));
  return report;
}

Report verify_sum_rule(int max_n) {
  Report report{"sum-rule n<=" + std::to_string(max_n), true, {}, 0.0};
  ReportTimer timer(report);
  for (int n = 1; n <= max_n; ++n) {
    Rational s = sum_rule(n);
    if (s != 0) report.fail("n=" + std::to_string(n) + ": sum = " + to_string(s));
  }
  report.note("sum rule checked for n=1.." + std::to_string(max_n));
  return report;
}

}  // namespace scg
