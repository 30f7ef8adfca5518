#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "scg/omega.hpp"
#include "scg/scasimir.hpp"

using namespace scg;
using oracle::q;

namespace {

Generator o(int a) { return Generator::odd(a); }
Generator e(int a, int b) { return Generator::even(a, b); }
OmegaElement br(int n, std::vector<int> idx, const Rational& c = 1) {
  OmegaElement w(n);
  w.add_indices(std::move(idx), c);
  return w;
}

}  // namespace

TEST_CASE("bracket canonicalization") {
  auto [s1, b1] = Bracket::canonical({3, 1});
  CHECK(s1 == -1);
  CHECK(b1.indices() == std::vector<int>{1, 3});
  auto [s2, b2] = Bracket::canonical({2, 3, 1});
  CHECK(s2 == 1);
  CHECK(Bracket::canonical({1, 2, 1}).first == 0);
  CHECK_THROWS_AS(Bracket({2, 1}), Error);
  CHECK_THROWS_AS(Bracket({1, 5}).check(2), IndexOutOfRange);
  CHECK(to_string(Bracket({1, 3})) == "[1 3]");
}

TEST_CASE("basis has 4^n brackets") {
  for (int n = 1; n <= 5; ++n) CHECK(omega_basis(n).size() == (std::size_t{1} << (2 * n)));
}

TEST_CASE("bracket expansion examples") {
  OmegaSpace s1(1);
  Element expected = Element::monomial(1, {o(1), o(2)}, 2) - Element::generator(1, e(1, 2));
  CHECK(s1.bracket_expand(Bracket({1, 2})) == expected);
  CHECK(s1.bracket_expand(Bracket()) == Element::unit(1));
  OmegaSpace s2(2);
  expected = Element::monomial(2, {o(1), o(2)}, 2) - Element::generator(2, e(1, 2));
  CHECK(s2.bracket_expand(Bracket({1, 2})) == expected);
}

TEST_CASE("bracket expansion equals the signed permutation sum") {
  for (int n = 1; n <= 2; ++n) {
    OmegaSpace space(n);
    for (const auto& b : space.basis()) {
      Element brute = space.engine().normal_order(oracle::bracket_by_permutations(n, b.indices()));
      CHECK_MESSAGE(space.bracket_expand(b) == brute, to_string(b));
    }
  }
  OmegaSpace s3(3);
  for (const auto& idx : std::vector<std::vector<int>>{{1, 2, 4, 6}, {1, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 6}}) {
    Element brute = s3.engine().normal_order(oracle::bracket_by_permutations(3, idx));
    CHECK(s3.bracket_expand(Bracket(idx)) == brute);
  }
}

TEST_CASE("projection examples") {
  const int n = 1;
  OmegaSpace space(n);
  TensorElement t = space.project_to_tensor(Element::monomial(n, {o(1), o(2)}, 2) - Element::generator(n, e(1, 2)));
  REQUIRE(t.terms().size() == 1);
  CHECK(t.at(Bracket({1, 2})) == Element::unit(n));

  t = space.project_to_tensor(Element::generator(n, e(1, 2)));
  REQUIRE(t.terms().size() == 1);
  CHECK(t.at(Bracket()) == Element::generator(n, e(1, 2)));

  t = space.project_to_tensor(Element::generator(n, o(1)));
  REQUIRE(t.terms().size() == 1);
  CHECK(t.at(Bracket({1})) == Element::unit(n));
}

TEST_CASE("projection and reconstruction are inverse") {
  for (int n = 1; n <= 2; ++n) {
    OmegaSpace space(n);
    std::mt19937_64 rng(31 + static_cast<unsigned>(n));
    auto evens = Generator::all_even(n);
    const auto& basis = space.basis();
    for (int trial = 0; trial < 20; ++trial) {
      TensorElement t(n);
      for (int k = 0; k < 3; ++k) {
        Word w;
        const auto len = rng() % 3;
        for (std::size_t i = 0; i < len; ++i) w.push_back(evens[rng() % evens.size()]);
        Element coeff = space.engine().normal_order(w, Rational(static_cast<long>(rng() % 7) - 3));
        t.add(basis[rng() % basis.size()], coeff);
      }
      CHECK(space.project_to_tensor(space.reconstruct(t)) == t);
    }
  }
}

TEST_CASE("closed-form sp action examples") {
  const int n = 1;
  CHECK(sp_action_on_bracket(n, e(1, 2), Bracket({1})) == br(n, {1}, -1));
  CHECK(sp_action_on_bracket(n, e(1, 1), Bracket({2})) == br(n, {1}, 2));
  CHECK(sp_action_on_bracket(n, e(1, 1), Bracket({1})).is_zero());
  CHECK_THROWS_AS(sp_action_on_bracket(n, o(1), Bracket({1})), ParityError);
}

TEST_CASE("triangle action on brackets") {
  const int n = 1;
  OmegaSpace space(n);
  CHECK(space.triangle_on_bracket(o(1), Bracket({2})) == br(n, {1, 2}));
  CHECK(space.triangle_on_bracket(o(1), Bracket({1})).is_zero());
  OmegaElement v0 = br(n, {1, 2}) - OmegaElement::bracket(n, Bracket(), q("1/2"));
  CHECK(space.triangle_on_omega(o(1), v0).is_zero());
  CHECK(space.triangle_on_omega(o(2), v0).is_zero());
}

TEST_CASE("stability: every action is scalar and even actions match the closed form") {
  for (int n = 1; n <= 2; ++n) {
    OmegaSpace space(n);
    for (auto g : Generator::all(n))
      for (const auto& b : space.basis()) {
        OmegaElement got(n);
        REQUIRE_NOTHROW(got = space.triangle_on_bracket(g, b));
        if (g.is_even()) CHECK(got == sp_action_on_bracket(n, g, b));
      }
  }
  OmegaSpace s3(3);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) {
    auto evens = Generator::all_even(3);
    Generator g = evens[rng() % evens.size()];
    const Bracket& b = s3.basis()[rng() % s3.basis().size()];
    CHECK(s3.triangle_on_bracket(g, b) == sp_action_on_bracket(3, g, b));
  }
}

TEST_CASE("triangle on Omega is a module action") {
  const int n = 2;
  OmegaSpace space(n);
  auto gens = Generator::all(n);
  for (auto g : gens)
    for (auto h : gens) {
      const int sign = g.parity() * h.parity() != 0 ? -1 : 1;
      for (const auto& b : {Bracket({1}), Bracket({1, 3}), Bracket({2, 3, 4})}) {
        OmegaElement w = OmegaElement::bracket(n, b);
        OmegaElement lhs(n);
        for (const auto& [k, c] : generator_bracket(n, g, h)) lhs.add_scaled(space.triangle_on_omega(k, w), c);
        OmegaElement rhs = space.triangle_on_omega(g, space.triangle_on_omega(h, w));
        rhs.add_scaled(space.triangle_on_omega(h, space.triangle_on_omega(g, w)), -sign);
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("weights") {
  OmegaSpace s1(1);
  CHECK(s1.weight_sign() == -1);
  CHECK(s1.weight_vector(br(1, {1})) == WeightVector{1});
  CHECK(s1.weight_vector(br(1, {1, 2}) - OmegaElement::bracket(1, Bracket(), q("1/2"))) == WeightVector{0});
  CHECK_THROWS_AS(s1.weight_vector(br(1, {1}) + br(1, {2})), NotAWeightVector);
  CHECK_THROWS_AS(s1.weight_vector(OmegaElement(1)), NotAWeightVector);
  OmegaSpace s2(2);
  CHECK(s2.weight_vector(br(2, {1, 2})) == WeightVector{1, 1});
  for (const auto& b : s2.basis()) {
    for (const auto& x : s2.weight_vector(OmegaElement::bracket(2, b))) CHECK(abs(x) <= 1);
  }
}

TEST_CASE("highest weight vectors") {
  OmegaSpace s1(1);
  auto v = s1.highest_weight_vectors();
  REQUIRE(v.size() == 2);
  CHECK(v[0].weight == WeightVector{0});
  CHECK(v[0].vector == br(1, {1, 2}) - OmegaElement::bracket(1, Bracket(), q("1/2")));
  CHECK(v[1].weight == WeightVector{1});
  CHECK(v[1].vector == br(1, {1}));
  CHECK(s1.submodule_dimension(v[0].vector) == 1);
  CHECK(s1.submodule_dimension(v[1].vector) == 3);

  OmegaSpace s2(2);
  v = s2.highest_weight_vectors();
  REQUIRE(v.size() == 3);
  CHECK(v[0].weight == WeightVector{0, 0});
  CHECK(v[1].weight == WeightVector{1, 0});
  CHECK(v[2].weight == WeightVector{1, 1});
  std::size_t total = 0;
  const std::size_t dims[] = {1, 5, 10};
  for (std::size_t j = 0; j < 3; ++j) {
    const std::size_t d = s2.submodule_dimension(v[j].vector);
    CHECK(d == dims[j]);
    total += d;
  }
  CHECK(total == 16);
  // the trivial summand is spanned by the Scasimir itself
  OmegaElement sc = scasimir(2);
  CHECK(sc == v[0].vector * Rational(-1));
}

TEST_CASE("osp(1|2) filtration dimensions") {
  auto f0 = osp12_filtration_dimensions(0);
  CHECK(f0.lhs == 4);
  CHECK(f0.representations == 4);
  CHECK(f0.lower == 0);
  auto f2 = osp12_filtration_dimensions(2);
  CHECK(f2.lhs == 40);
  CHECK(f2.representations == 36);
  CHECK(f2.lower == 4);
  auto f3 = osp12_filtration_dimensions(3);
  CHECK(f3.lhs == 80);
  CHECK(f3.representations == 64);
  CHECK(f3.lower == 16);
  for (int d = 0; d <= 10; ++d) CHECK(check_osp12_filtration(d));
  CHECK_THROWS_AS(osp12_filtration_dimensions(-1), Error);
}
