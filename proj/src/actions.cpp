#include "scg/actions.hpp"

#include <algorithm>

#include "scg/random.hpp"

namespace scg {

namespace {

// g x + sign * x g, unreduced
Element side_sum(Generator g, const Element& x, int sign) {
  Element gen = Element::generator(x.n(), g);
  Element out = multiply(gen, x);
  out.add_scaled(multiply(x, gen), sign);
  return out;
}

Element side_sum(PbwEngine& engine, Generator g, const Element& x, int sign) {
  Element out = engine.left_multiply(g, x);
  out.add_scaled(engine.product(x, Element::generator(x.n(), g)), sign);
  return out;
}

}  // namespace

Element adjoint(Generator g, const Element& x) {
  g.check(x.n());
  if (g.is_even()) return side_sum(g, x, -1);
  Element out = side_sum(g, x.even_part(), -1);
  out += side_sum(g, x.odd_part(), +1);
  return out;
}

Element triangle(Generator g, const Element& x) {
  g.check(x.n());
  if (g.is_even()) return side_sum(g, x, -1);
  Element out = side_sum(g, x.even_part(), +1);
  out += side_sum(g, x.odd_part(), -1);
  return out;
}

Element triangle(PbwEngine& engine, Generator g, const Element& x) {
  g.check(x.n());
  Element nx = engine.normal_order(x);
  if (g.is_even()) return side_sum(engine, g, nx, -1);
  Element out = side_sum(engine, g, nx.even_part(), +1);
  out += side_sum(engine, g, nx.odd_part(), -1);
  return out;
}

Element triangle_bracket(PbwEngine& engine, Generator g, Generator h, const Element& x) {
  Element out(x.n());
  for (const auto& [k, c] : generator_bracket(x.n(), g, h)) out.add_scaled(triangle(engine, k, x), c);
  return out;
}

namespace {

// Returns an empty string on success, a description of the residual otherwise.
std::string check_pair(PbwEngine& engine, Generator g, Generator h, const Element& x) {
  Element lhs = triangle_bracket(engine, g, h, x);
  Element rhs = triangle(engine, g, triangle(engine, h, x));
  const int sign = (g.is_odd() && h.is_odd()) ? 1 : -1;
  rhs.add_scaled(triangle(engine, h, triangle(engine, g, x)), sign);
  Element residual = lhs - rhs;
  if (residual.is_zero()) return {};
  return "pair (" + to_string(g) + ", " + to_string(h) + ") leaves " +
         std::to_string(residual.size()) + " residual terms";
}

void sweep(Report& report, PbwEngine& engine, int n, const std::vector<Element>& inputs) {
  const auto gens = Generator::all(n);
  std::size_t checks = 0;
  for (const auto& x : inputs) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i; j < gens.size(); ++j) {
        ++checks;
        if (auto msg = check_pair(engine, gens[i], gens[j], x); !msg.empty()) {
          report.fail(msg);
          return;
        }
      }
    }
  }
  report.note(std::to_string(checks) + " identities checked over " + std::to_string(inputs.size()) +
              " elements");
}

void normal_monomials(const GeneratorOrder& order, std::size_t max_length, Word& prefix,
                      const std::vector<Generator>& sorted, std::size_t start,
                      std::vector<Word>& out) {
  out.push_back(prefix);
  if (prefix.size() == max_length) return;
  for (std::size_t i = start; i < sorted.size(); ++i) {
    prefix.push_back(sorted[i]);
    // odd generators may not repeat
    normal_monomials(order, max_length, prefix, sorted, sorted[i].is_odd() ? i + 1 : i, out);
    prefix.pop_back();
  }
}

}  // namespace

Report verify_module_axioms(int n, int samples, std::uint64_t seed) {
  Report report{"module-axioms n=" + std::to_string(n), true, {}, 0.0};
  ReportTimer timer(report);
  PbwEngine engine(GeneratorOrder::standard(n));
  RandomElements rnd(n, seed);
  std::vector<Element> inputs;
  for (int i = 0; i < samples; ++i) inputs.push_back(rnd.element(3, 4));
  sweep(report, engine, n, inputs);
  return report;
}

Report verify_module_axioms_exhaustive(int n, std::size_t max_length) {
  Report report{"module-axioms-exhaustive n=" + std::to_string(n), true, {}, 0.0};
  ReportTimer timer(report);
  auto order = GeneratorOrder::standard(n);
  PbwEngine engine(order);
  auto sorted = Generator::all(n);
  std::sort(sorted.begin(), sorted.end(),
            [&](Generator a, Generator b) { return order.rank(a) < order.rank(b); });
  std::vector<Word> words;
  Word prefix;
  normal_monomials(order, max_length, prefix, sorted, 0, words);
  std::vector<Element> inputs;
  for (auto& w : words) inputs.push_back(Element::monomial(n, w));
  sweep(report, engine, n, inputs);
  return report;
}

}  // namespace scg
