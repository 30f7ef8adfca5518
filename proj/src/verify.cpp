#include "scg/verify.hpp"

#include <algorithm>

#include "scg/actions.hpp"
#include "scg/harish_chandra.hpp"
#include "scg/matrix_rep.hpp"
#include "scg/omega.hpp"
#include "scg/oscillator.hpp"
#include "scg/parser.hpp"
#include "scg/random.hpp"
#include "scg/scasimir.hpp"
#include "scg/serialize.hpp"

namespace scg {

namespace {

std::string weight_text(const WeightVector& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + to_string(w[i]);
  return s + ")";
}

// [1 .. j  j+1 j+1bar .. n nbar]
Bracket expected_leading(int n, int j) {
  std::vector<int> idx;
  for (int a = 1; a <= j; ++a) idx.push_back(a);
  for (int a = j + 1; a <= n; ++a) {
    idx.push_back(a);
    idx.push_back(a + n);
  }
  return Bracket::canonical(idx).second;
}

bool is_pair_deletion(int n, const Bracket& lead, const Bracket& b) {
  if (!std::includes(lead.indices().begin(), lead.indices().end(), b.indices().begin(), b.indices().end()))
    return false;
  for (int a : lead.indices()) {
    if (b.contains(a)) continue;
    const int partner = a <= n ? a + n : a - n;
    if (!lead.contains(partner) || b.contains(partner)) return false;
  }
  return true;
}

void merge(Report& into, const Report& from) {
  if (!from.passed) into.passed = false;
  for (const auto& d : from.details) into.details.push_back(from.name + ": " + d);
}

}  // namespace

Report verify_stability(int n) {
  Report r{"stability n=" + std::to_string(n), true, {}, 0.0};
  ReportTimer timer(r);
  OmegaSpace space(n);
  std::size_t pairs = 0;
  for (const auto& g : Generator::all(n)) {
    for (const auto& b : space.basis()) {
      ++pairs;
      try {
        const OmegaElement& got = space.triangle_on_bracket(g, b);
        if (g.is_even()) {
          OmegaElement closed = sp_action_on_bracket(n, g, b);
          if (got != closed) {
            r.fail(to_string(g) + " |> " + to_string(b) + " = " + to_text(got) + ", closed form " + to_text(closed));
          }
        }
      } catch (const NonScalarResidual& e) {
        r.fail(to_string(g) + " |> " + to_string(b) + ": " + e.what());
      }
    }
  }
  r.note(std::to_string(pairs) + " (generator, bracket) pairs");
  return r;
}

Report verify_decomposition(int n) {
  Report r{"hwv n=" + std::to_string(n), true, {}, 0.0};
  ReportTimer timer(r);
  OmegaSpace space(n);
  auto hwvs = space.highest_weight_vectors();
  if (static_cast<int>(hwvs.size()) != n + 1) {
    r.fail("found " + std::to_string(hwvs.size()) + " highest weight vectors, expected " + std::to_string(n + 1));
    return r;
  }
  Integer total = 0;
  for (int j = 0; j <= n; ++j) {
    const auto& v = hwvs[static_cast<std::size_t>(j)];
    WeightVector expected(static_cast<std::size_t>(n), Rational(0));
    for (int a = 0; a < j; ++a) expected[static_cast<std::size_t>(a)] = 1;
    if (v.weight != expected) r.fail("vector " + std::to_string(j) + " has weight " + weight_text(v.weight));

    const Bracket lead = expected_leading(n, j);
    if (v.vector.coeff(lead) != 1) r.fail("vector " + std::to_string(j) + " lacks leading bracket " + to_string(lead));
    for (const auto& [b, c] : v.vector.terms()) {
      if (!is_pair_deletion(n, lead, b)) r.fail("bracket " + to_string(b) + " is not a pair deletion of " + to_string(lead));
    }
    for (const auto& g : simple_root_generators(n)) {
      if (!space.triangle_on_omega(g, v.vector).is_zero()) r.fail(to_string(g) + " does not annihilate vector " + std::to_string(j));
    }

    const std::size_t dim = space.submodule_dimension(v.vector);
    const Integer want = binomial(static_cast<unsigned>(2 * n + 1), static_cast<unsigned>(j));
    if (Integer(static_cast<unsigned long>(dim)) != want) {
      r.fail("submodule " + std::to_string(j) + " has dimension " + std::to_string(dim) + ", expected " + want.get_str());
    }
    total += static_cast<unsigned long>(dim);
    r.note("weight " + weight_text(v.weight) + " dim " + std::to_string(dim) + ": " + to_text(v.vector));
  }
  Integer four_n = 1;
  for (int i = 0; i < n; ++i) four_n *= 4;
  if (total != four_n) r.fail("dimensions sum to " + total.get_str() + ", expected " + four_n.get_str());
  return r;
}

Report verify_filtration(int max_d) {
  Report r{"filtration d<=" + std::to_string(max_d), true, {}, 0.0};
  ReportTimer timer(r);
  for (int d = 0; d <= max_d; ++d) {
    auto f = osp12_filtration_dimensions(d);
    if (!f.holds()) {
      r.fail("d=" + std::to_string(d) + ": " + f.lhs.get_str() + " != " + f.representations.get_str() + " + " +
             f.lower.get_str());
    }
  }
  return r;
}

Report verify_pbw_oracle(int n, int samples, std::uint64_t seed) {
  Report r{"pbw-oracle n=" + std::to_string(n), true, {}, 0.0};
  ReportTimer timer(r);
  RandomElements rng(n, seed);
  for (const auto& order : {GeneratorOrder::standard(n), GeneratorOrder::borel(n), GeneratorOrder::borel_alt(n)}) {
    PbwEngine engine(order);
    for (int i = 0; i < samples; ++i) {
      Word w = rng.word(6);
      Element x = Element::monomial(n, w);
      Element fast = engine.normal_order(x);
      Element slow = naive_normal_order(x, order);
      if (fast != slow) {
        std::string word;
        for (const auto& g : w) word += (word.empty() ? "" : "*") + to_string(g);
        r.fail(order.name() + " order disagrees on " + word);
      }
    }
  }

  Representation rep = fundamental_rep(n);
  PbwEngine engine(GeneratorOrder::standard(n));
  for (int i = 0; i < samples; ++i) {
    Element x = rng.element(3, 5);
    if (evaluate(x, rep) != evaluate(engine.normal_order(x), rep)) {
      r.fail("representation changes under normal ordering of " + render(x));
    }
  }
  r.note(std::to_string(samples) + " words per order, " + std::to_string(samples) + " elements in the representation");
  return r;
}

const std::vector<std::string>& verify_names() {
  static const std::vector<std::string> names = {"routes", "sum-rule", "ghost", "module-axioms", "stability",
                                                 "hwv", "hc", "hc-square", "oscillator", "rep", "filtration",
                                                 "pbw-oracle"};
  return names;
}

std::vector<Report> run_verify(const std::string& name, const VerifyOptions& options) {
  const int n = options.n;
  if (n < 1) throw Error("n must be at least 1");
  const std::uint64_t seed = options.seed;
  auto samples = [&](int fallback) { return options.samples > 0 ? options.samples : fallback; };

  if (name == "all") {
    std::vector<Report> out;
    for (const auto& each : verify_names()) {
      auto part = run_verify(each, options);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (name == "routes" || name == "coeffs") return {verify_routes(std::max(30, n))};
  if (name == "sum-rule") return {verify_sum_rule(std::max(50, n))};
  if (name == "ghost") {
    std::vector<Report> out = {verify_ghost(n)};
    if (options.extended) {
      out.push_back(verify_square_central(n));
      if (n < 3) out.push_back(verify_ghost(3));
    }
    return out;
  }
  if (name == "module-axioms") {
    std::vector<Report> out = {verify_module_axioms(n, samples(50), seed)};
    if (options.extended) out.push_back(verify_module_axioms_exhaustive(n, 3));
    return out;
  }
  if (name == "stability") return {verify_stability(n)};
  if (name == "hwv") return {verify_decomposition(n)};
  if (name == "hc") {
    return {verify_hc_scasimir(n, GeneratorOrder::borel(n)), verify_hc_scasimir(n, GeneratorOrder::borel_alt(n))};
  }
  if (name == "hc-square") {
    return {verify_hc_square(n, GeneratorOrder::borel(n)), verify_hc_square(n, GeneratorOrder::borel_alt(n))};
  }
  if (name == "oscillator") {
    Report values{"a-values n<=" + std::to_string(std::max(3, n)), true, {}, 0.0};
    {
      ReportTimer timer(values);
      for (int m = 1; m <= std::max(3, n); ++m) {
        for (int k = 0; k <= m; ++k) {
          if (a_value(m, k) != a_value_expected(m, k)) {
            values.fail("a_value(" + std::to_string(m) + "," + std::to_string(k) + ") = " + to_string(a_value(m, k)));
          }
        }
      }
    }
    return {verify_quotient_relations(n), values, verify_vanishing(n)};
  }
  if (name == "rep") {
    Report rel{"rep-relations n=" + std::to_string(n), true, {}, 0.0};
    {
      ReportTimer timer(rel);
      try {
        merge(rel, check_relations(fundamental_rep(n)));
      } catch (const Error& e) {
        rel.fail(e.what());
      }
    }
    return {rel, verify_rep_ghost(n)};
  }
  if (name == "filtration") return {verify_filtration(10)};
  if (name == "pbw-oracle") return {verify_pbw_oracle(n, samples(200), seed)};
  throw Error("unknown check '" + name + "'");
}

}  // namespace scg
