#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "scg/harish_chandra.hpp"
#include "scg/matrix_rep.hpp"
#include "scg/omega.hpp"
#include "scg/random.hpp"
#include "scg/scasimir.hpp"

using namespace scg;
using oracle::q;

namespace {

Generator o(int a) { return Generator::odd(a); }

CartanPolynomial H(int vars, int alpha) { return CartanPolynomial::variable(vars, alpha); }
CartanPolynomial C(int vars, const Rational& c) { return CartanPolynomial::constant(vars, c); }

Rational evaluate_at(const CartanPolynomial& p, const std::vector<Rational>& point) {
  Rational sum = 0;
  for (const auto& [exps, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < exps.size(); ++i)
      for (int k = 0; k < exps[i]; ++k) term *= point[i];
    sum += term;
  }
  return sum;
}

CartanPolynomial random_poly(int vars, std::mt19937_64& rng) {
  CartanPolynomial p(vars);
  for (int t = 0; t < 4; ++t) {
    CartanPolynomial::Exponents e(static_cast<std::size_t>(vars));
    for (auto& x : e) x = static_cast<int>(rng() % 3);
    p.add_term(e, Rational(static_cast<long>(rng() % 9) - 4));
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic and printing") {
  CartanPolynomial p = H(2, 1) * H(2, 2) - C(2, q("1/2"));
  CHECK(to_string(p) == "H1*H2 - 1/2");
  CHECK(p.is_symmetric());
  CHECK_FALSE((H(2, 1) - H(2, 2) * H(2, 2)).is_symmetric());
  CHECK((H(1, 1) - H(1, 1)).is_zero());
  CHECK(CartanPolynomial::product_of_all(2, 2) == H(2, 1) * H(2, 1) * H(2, 2) * H(2, 2));
}

TEST_CASE("projection examples") {
  const int n = 1;
  OmegaSpace space(n);
  CHECK(hc_project(scasimir_pbw(space)) == H(1, 1) - C(1, q("1/2")));
  CHECK(hc_project(Element::monomial(n, {o(2), o(1)})).is_zero());
  CHECK(hc_project(Element::monomial(n, {o(1), o(2)})) == H(1, 1));
  CHECK(hc_project(Element::scalar(n, 7)) == C(1, 7));
  PbwEngine borel(GeneratorOrder::borel(n));
  CHECK(hc_project_normal(borel.normal_order(Element::monomial(n, {o(1), o(2)}))) == H(1, 1));
}

TEST_CASE("gamma shift") {
  CHECK(gamma_shift(H(1, 1), ShiftDirection::Forward) == H(1, 1) - C(1, q("1/2")));
  CHECK(gamma_shift(H(2, 1), ShiftDirection::Forward) == H(2, 1) - C(2, q("3/2")));
  CHECK(gamma_shift(H(2, 2), ShiftDirection::Forward) == H(2, 2) - C(2, q("1/2")));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    CartanPolynomial p = random_poly(3, rng);
    CHECK(gamma_shift(gamma_shift(p, ShiftDirection::Forward), ShiftDirection::Inverse) == p);
  }
}

TEST_CASE("projection kills N- U and U N+") {
  for (int n = 1; n <= 2; ++n) {
    RandomElements rng(n, 23);
    for (int i = 0; i < 20; ++i) {
      Element y = rng.element(2, 3);
      for (auto g : Generator::all(n)) {
        auto cls = classify_root(n, g);
        Element gen = Element::generator(n, g);
        if (cls == RootClass::Positive) CHECK(hc_project(multiply(y, gen)).is_zero());
        if (cls == RootClass::Negative) CHECK(hc_project(multiply(gen, y)).is_zero());
      }
    }
  }
}

TEST_CASE("Scasimir images") {
  for (int n = 1; n <= 2; ++n) {
    for (const auto& order : {GeneratorOrder::borel(n), GeneratorOrder::borel_alt(n)}) {
      CHECK(verify_hc_scasimir(n, order).passed);
      CHECK(verify_hc_square(n, order).passed);
    }
  }
  CHECK(verify_hc_scasimir(3, GeneratorOrder::borel(3)).passed);
  CHECK(hc_normalization(1) == 1);
  CHECK(hc_normalization(2) == 6);
  CHECK(hc_normalization(3) == 90);
}

TEST_CASE("image of the unit and symmetry of the images") {
  const int n = 2;
  CHECK(gamma_shift(hc_project(Element::unit(n)), ShiftDirection::Inverse) == C(n, 1));
  OmegaSpace space(n);
  CHECK(gamma_shift(hc_project(scasimir_pbw(space)), ShiftDirection::Inverse).is_symmetric());
}

TEST_CASE("normalization agrees with the eigenvalue in the fundamental representation") {
  // highest weight vector: odd, H = (-1, 0, ..., 0)
  for (int n = 1; n <= 3; ++n) {
    Matrix sc = evaluate(scasimir(n), fundamental_rep(n));
    CartanPolynomial predicted =
        gamma_shift(C(n, hc_normalization(n)) * CartanPolynomial::product_of_all(n), ShiftDirection::Forward);
    std::vector<Rational> point(static_cast<std::size_t>(n), Rational(0));
    point[0] = -1;
    CHECK(sc(0, 0) == -evaluate_at(predicted, point));
  }
}
