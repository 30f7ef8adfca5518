#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "scg/element.hpp"

using namespace scg;
using oracle::q;

namespace {

using Lie = std::map<Generator, Rational>;

Lie lie_bracket(int n, const Lie& x, const Lie& y) {
  Lie out;
  for (const auto& [g, a] : x)
    for (const auto& [h, b] : y)
      for (const auto& [k, c] : generator_bracket(n, g, h)) out[k] += a * b * c;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Lie single(Generator g) { return {{g, Rational(1)}}; }

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(to_string(q("6/4")) == "3/2");
  CHECK(to_string(q("-10/5")) == "-2");
  CHECK(to_string(q("0")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK(factorial(5) == 120);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(3, 5) == 0);
  CHECK(pow2(-3) == q("1/8"));
}

TEST_CASE("metric is antisymmetric with g(a, a+n) = -1") {
  for (int n = 1; n <= 3; ++n) {
    for (int a = 1; a <= 2 * n; ++a) {
      for (int b = 1; b <= 2 * n; ++b) CHECK(metric(n, a, b) == -metric(n, b, a));
      CHECK(conjugate(n, conjugate(n, a)) == a);
    }
    for (int a = 1; a <= n; ++a) CHECK(metric(n, a, a + n) == -1);
  }
  CHECK_THROWS_AS(metric(2, 5, 1), IndexOutOfRange);
}

TEST_CASE("generator ids are a bijection onto 0..n(2n+3)-1") {
  for (int n = 1; n <= 4; ++n) {
    auto all = Generator::all(n);
    REQUIRE(static_cast<int>(all.size()) == Generator::count(n));
    for (int i = 0; i < Generator::count(n); ++i) {
      CHECK(all[static_cast<std::size_t>(i)].id(n) == i);
      CHECK(Generator::from_id(n, i) == all[static_cast<std::size_t>(i)]);
    }
    CHECK(Generator::all_odd(n).size() == static_cast<std::size_t>(2 * n));
  }
  CHECK(Generator::even(3, 1) == Generator::even(1, 3));
  CHECK_THROWS_AS(Generator::odd(5).check(2), IndexOutOfRange);
  CHECK_THROWS_AS(Generator::from_id(1, 5), IndexOutOfRange);
}

TEST_CASE("defining brackets") {
  const int n = 2;
  auto odd = Generator::odd;
  auto even = Generator::even;
  // {s_a, s_b} = s_ab
  auto r = generator_bracket(n, odd(1), odd(3));
  REQUIRE(r.size() == 1);
  CHECK(r[0].first == even(1, 3));
  CHECK(r[0].second == 1);
  // [s_a, s_bc] = -g_ab s_c - g_ac s_b
  r = generator_bracket(n, odd(3), even(1, 2));
  REQUIRE(r.size() == 1);
  CHECK(r[0].first == odd(2));
  CHECK(r[0].second == -1);
  CHECK(generator_bracket(n, odd(1), even(1, 2)).empty());
  // [s_13, s_1] = -[s_1, s_13] = g_13 s_1
  r = generator_bracket(n, even(1, 3), odd(1));
  REQUIRE(r.size() == 1);
  CHECK(r[0].first == odd(1));
  CHECK(r[0].second == -1);
}

TEST_CASE("super Jacobi identity on all generator triples") {
  for (int n = 1; n <= 2; ++n) {
    auto gens = Generator::all(n);
    for (auto x : gens)
      for (auto y : gens)
        for (auto z : gens) {
          const int px = x.parity(), py = y.parity(), pz = z.parity();
          Lie total;
          auto add = [&](const Lie& t, int sign) {
            for (const auto& [g, c] : t) total[g] += sign * c;
          };
          add(lie_bracket(n, single(x), lie_bracket(n, single(y), single(z))), (px * pz) % 2 ? -1 : 1);
          add(lie_bracket(n, single(y), lie_bracket(n, single(z), single(x))), (py * px) % 2 ? -1 : 1);
          add(lie_bracket(n, single(z), lie_bracket(n, single(x), single(y))), (pz * py) % 2 ? -1 : 1);
          std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
          CHECK_MESSAGE(total.empty(), to_string(x) << " " << to_string(y) << " " << to_string(z));
        }
  }
}

TEST_CASE("element arithmetic") {
  const int n = 1;
  Element a = Element::generator(n, Generator::odd(1));
  Element b = Element::generator(n, Generator::odd(2), q("1/2"));
  Element ab = a * b;
  CHECK(ab.coeff({Generator::odd(1), Generator::odd(2)}) == q("1/2"));
  CHECK((ab - ab).is_zero());
  CHECK((a + b).parity() == 1);
  CHECK((Element::unit(n) + a).parity() == std::nullopt);
  CHECK((Element::unit(n) + a).even_part() == Element::unit(n));
  CHECK(Element::scalar(n, 3).as_scalar() == Rational(3));
  CHECK_FALSE(a.as_scalar().has_value());
  CHECK_THROWS_AS(a + Element::unit(2), DimensionMismatch);
  CHECK(graded_commutator(a, a) == Element::monomial(n, {Generator::odd(1), Generator::odd(1)}, 2));
  CHECK_THROWS_AS(graded_commutator(a + Element::unit(n), a), ParityError);
}
