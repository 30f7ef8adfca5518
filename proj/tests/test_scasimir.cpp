#include <doctest.h>

#include "oracles.hpp"
#include "scg/omega.hpp"
#include "scg/power_series.hpp"
#include "scg/scasimir.hpp"

using namespace scg;
using oracle::q;

namespace {

std::vector<Rational> reference(int n) {
  std::vector<Rational> out;
  for (const auto& s : oracle::reference_tables()[static_cast<std::size_t>(n - 1)]) out.push_back(q(s));
  return out;
}

OmegaElement br(int n, std::vector<int> idx, const Rational& c = 1) {
  OmegaElement w(n);
  w.add_indices(std::move(idx), c);
  return w;
}

}  // namespace

TEST_CASE("power series") {
  PowerSeries inv = PowerSeries::sinhc(6).reciprocal();
  CHECK(inv[0] == 1);
  CHECK(inv[1] == 0);
  CHECK(inv[2] == q("-1/6"));
  CHECK(inv[4] == q("7/360"));
  CHECK(inv[6] == q("-31/15120"));
  CHECK(inv * PowerSeries::sinhc(6) == PowerSeries(6, {1, 0, 0, 0, 0, 0, 0}));
  CHECK(PowerSeries::sinhc(2).reciprocal().pow(3)[2] == q("-1/2"));
  CHECK_THROWS_AS(PowerSeries(3).reciprocal(), Error);
}

TEST_CASE("A polynomials") {
  CHECK(a_poly(2, 0) == br(2, {1, 3, 2, 4}));
  CHECK(a_poly(2, 1) == br(2, {1, 3}) + br(2, {2, 4}));
  CHECK(a_poly(2, 2) == OmegaElement::bracket(2, Bracket()));
  CHECK(a_poly(3, 1) == br(3, {1, 4, 2, 5}) + br(3, {1, 4, 3, 6}) + br(3, {2, 5, 3, 6}));
  CHECK_THROWS_AS(a_poly(2, 3), Error);
}

TEST_CASE("every route reproduces the reference tables") {
  for (int n = 1; n <= 5; ++n) {
    for (auto route : {CoeffRoute::RecursionA, CoeffRoute::RecursionB, CoeffRoute::Series}) {
      CoeffTable t = coeffs(n, route);
      CHECK_MESSAGE(t.x == reference(n), "n=" << n << " route " << to_string(route));
      CHECK(t.y[0] == Rational(Rational(2) / (2 * n + 1)));
      CHECK(t.y[1] == -1);
      for (int k = 0; k <= n; ++k) {
        auto uk = static_cast<std::size_t>(k);
        CHECK(y_from_x(n, k, t.x[uk]) == t.y[uk]);
        CHECK(x_from_y(n, k, t.y[uk]) == t.x[uk]);
      }
    }
  }
}

TEST_CASE("x_1 closed form") {
  for (int n = 1; n <= 30; ++n) {
    const Rational expected = Rational(-(2 * n + 1) * (2 * n) * (2 * n - 1)) / 12;
    CHECK(coeffs_recursion_b(n).x[1] == expected);
  }
}

TEST_CASE("routes agree with each other and with a Bernoulli-number series") {
  for (int n = 1; n <= 30; ++n) {
    CoeffTable a = coeffs_recursion_a(n);
    CHECK(a.x == coeffs_recursion_b(n).x);
    CHECK(a.x == coeffs_series(n).x);
    if (n <= 12) CHECK(a.x == oracle::series_coeffs(n));
  }
  CHECK(verify_routes(30).passed);
}

TEST_CASE("route names") {
  CHECK(route_from_string("a") == CoeffRoute::RecursionA);
  CHECK(route_from_string("recursion-b") == CoeffRoute::RecursionB);
  CHECK(route_from_string("series") == CoeffRoute::Series);
  CHECK_THROWS_AS(route_from_string("c"), Error);
  CHECK_THROWS_AS(coeffs_series(0), Error);
}

TEST_CASE("Scasimir in bracket form") {
  CHECK(scasimir(1) == br(1, {1, 2}) - OmegaElement::bracket(1, Bracket(), q("1/2")));
  OmegaElement expected = br(2, {1, 3, 2, 4}) - (br(2, {1, 3}) + br(2, {2, 4})) * Rational(5) +
                          OmegaElement::bracket(2, Bracket(), q("9/2"));
  CHECK(scasimir(2) == expected);
  CHECK(scasimir(coeffs_recursion_a(3)) == scasimir(3));
}

TEST_CASE("sum rule") {
  CHECK(sum_rule(1) == 0);
  CHECK(sum_rule(2) == 0);
  CHECK(verify_sum_rule(50).passed);
}

TEST_CASE("ghost property") {
  for (int n = 1; n <= 3; ++n) {
    Report r = verify_ghost(n);
    CHECK_MESSAGE(r.passed, "n=" << n);
  }
}

TEST_CASE("ghost property fails for a perturbed Scasimir") {
  const int n = 2;
  OmegaSpace space(n);
  CoeffTable t = coeffs_series(n);
  t.x[1] += 1;
  Element bad = space.expand(scasimir(t));
  Element g = Element::generator(n, Generator::odd(1));
  PbwEngine& engine = space.engine();
  CHECK_FALSE((engine.product(g, bad) + engine.product(bad, g)).is_zero());
}

TEST_CASE("the square is central and even") {
  for (int n = 1; n <= 2; ++n) {
    OmegaSpace space(n);
    Element sq = scasimir_square(space);
    CHECK(sq.parity() == 0);
    CHECK(verify_square_central(n).passed);
  }
}
