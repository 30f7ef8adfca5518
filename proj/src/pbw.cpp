#include "scg/pbw.hpp"

#include <algorithm>
#include <stdexcept>

namespace scg {

RootClass classify_root(int n, Generator g) {
  g.check(n);
  if (g.is_odd()) return g.a() <= n ? RootClass::Positive : RootClass::Negative;
  int a = g.a(), b = g.b();
  if (b <= n) return RootClass::Positive;
  if (a > n) return RootClass::Negative;
  int c = b - n;
  if (a == c) return RootClass::Cartan;
  return a < c ? RootClass::Positive : RootClass::Negative;
}

std::string to_string(RootClass c) {
  switch (c) {
    case RootClass::Negative: return "negative";
    case RootClass::Cartan: return "cartan";
    case RootClass::Positive: return "positive";
  }
  return "?";
}

GeneratorOrder::GeneratorOrder(int n, std::string name, const std::vector<Generator>& sequence)
    : n_(n), name_(std::move(name)), rank_(static_cast<std::size_t>(Generator::count(n)), -1) {
  if (sequence.size() != rank_.size()) throw std::logic_error("order must list every generator");
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    auto& slot = rank_[static_cast<std::size_t>(sequence[i].id(n))];
    if (slot != -1) throw std::logic_error("generator listed twice in order");
    slot = static_cast<int>(i);
  }
}

GeneratorOrder GeneratorOrder::standard(int n) {
  auto seq = Generator::all_even(n);
  auto odd = Generator::all_odd(n);
  seq.insert(seq.end(), odd.begin(), odd.end());
  return GeneratorOrder(n, "standard", seq);
}

namespace {

std::vector<Generator> select(int n, const std::vector<Generator>& from, RootClass cls) {
  std::vector<Generator> out;
  for (const auto& g : from)
    if (classify_root(n, g) == cls) out.push_back(g);
  return out;
}

void append(std::vector<Generator>& to, std::vector<Generator> block, bool reversed) {
  if (reversed) std::reverse(block.begin(), block.end());
  to.insert(to.end(), block.begin(), block.end());
}

std::vector<Generator> borel_sequence(int n, bool alt) {
  auto odd = Generator::all_odd(n);
  auto even = Generator::all_even(n);
  std::vector<Generator> seq;
  auto neg_odd = select(n, odd, RootClass::Negative);
  auto neg_even = select(n, even, RootClass::Negative);
  auto cartan = select(n, even, RootClass::Cartan);
  auto pos_odd = select(n, odd, RootClass::Positive);
  auto pos_even = select(n, even, RootClass::Positive);
  if (!alt) {
    append(seq, neg_odd, false);
    append(seq, neg_even, false);
    append(seq, cartan, false);
    append(seq, pos_even, false);
    append(seq, pos_odd, false);
  } else {
    append(seq, neg_even, true);
    append(seq, neg_odd, true);
    append(seq, cartan, true);
    append(seq, pos_odd, true);
    append(seq, pos_even, true);
  }
  return seq;
}

}  // namespace

GeneratorOrder GeneratorOrder::borel(int n) {
  return GeneratorOrder(n, "borel", borel_sequence(n, false));
}

GeneratorOrder GeneratorOrder::borel_alt(int n) {
  return GeneratorOrder(n, "borel-alt", borel_sequence(n, true));
}

GeneratorOrder GeneratorOrder::by_name(int n, const std::string& name) {
  if (name == "standard") return standard(n);
  if (name == "borel") return borel(n);
  if (name == "borel-alt") return borel_alt(n);
  throw Error("unknown generator order '" + name + "'");
}

bool GeneratorOrder::is_normal(const Word& w) const {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    int r = rank(w[i]), s = rank(w[i + 1]);
    if (r > s || (r == s && w[i].is_odd())) return false;
  }
  return true;
}

std::size_t GeneratorOrder::inversions(const Word& w) const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      int r = rank(w[i]), s = rank(w[j]);
      if (r > s || (r == s && w[i].is_odd())) ++count;
    }
  return count;
}

PbwEngine::PbwEngine(GeneratorOrder order) : order_(std::move(order)) {}

void PbwEngine::insert_into(Element& out, Generator g, const Word& m, const Rational& c) {
  if (m.empty() || order_.rank(g) < order_.rank(m.front()) || (g == m.front() && g.is_even())) {
    Word w;
    w.reserve(m.size() + 1);
    w.push_back(g);
    w.insert(w.end(), m.begin(), m.end());
    out.add_term(w, c);
    return;
  }
  out.add_scaled(insert(g, m), c);
}

const Element& PbwEngine::insert(Generator g, const Word& m) {
  Key key{g.id(n()), m};
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  Element out(n());
  const Generator h = m.front();
  const Word rest(m.begin() + 1, m.end());
  if (g == h) {
    // s_a s_a = 1/2 s_aa
    insert_into(out, Generator::even(g.a(), g.a()), rest, Rational(1, 2));
  } else {
    // g h = sign * h g + [g, h}
    Element tail(n());
    insert_into(tail, g, rest, 1);
    const int sign = (g.is_odd() && h.is_odd()) ? -1 : 1;
    for (const auto& [w, c] : tail.terms()) insert_into(out, h, w, sign * c);
    for (const auto& [x, c] : generator_bracket(n(), g, h)) insert_into(out, x, rest, c);
  }
  return cache_.emplace(std::move(key), std::move(out)).first->second;
}

Element PbwEngine::left_multiply(Generator g, const Element& x) {
  Element out(n());
  for (const auto& [w, c] : x.terms()) insert_into(out, g, w, c);
  return out;
}

Element PbwEngine::left_multiply(const Word& w, const Element& x) {
  Element acc = x;
  for (auto it = w.rbegin(); it != w.rend(); ++it) acc = left_multiply(*it, acc);
  return acc;
}

Element PbwEngine::normal_order(const Word& w, const Rational& c) {
  return left_multiply(w, Element::scalar(n(), c));
}

Element PbwEngine::normal_order(const Element& x) {
  if (x.n() != n()) throw DimensionMismatch("element and engine over different n");
  Element out(n());
  for (const auto& [w, c] : x.terms()) {
    if (order_.is_normal(w)) {
      out.add_term(w, c);
    } else {
      out += normal_order(w, c);
    }
  }
  return out;
}

Element PbwEngine::product(const Element& x, const Element& y) {
  Element ny = normal_order(y);
  Element out(n());
  for (const auto& [w, c] : x.terms()) out.add_scaled(left_multiply(w, ny), c);
  return out;
}

Element normal_order(const Element& x, const GeneratorOrder& order) {
  PbwEngine engine(order);
  return engine.normal_order(x);
}

Element naive_normal_order(const Element& x, const GeneratorOrder& order) {
  const int n = x.n();
  std::map<Word, Rational> pending(x.terms().begin(), x.terms().end());
  Element out(n);
  auto measure = [&](const Word& w) { return std::make_pair(w.size(), order.inversions(w)); };
  auto push = [&](const Word& parent, Word w, const Rational& c) {
    if (!(measure(w) < measure(parent))) {
      throw std::logic_error("rewrite step failed to decrease the termination measure");
    }
    auto [it, inserted] = pending.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) pending.erase(it);
    }
  };
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const Rational& c = node.mapped();
    std::size_t i = 0;
    for (; i + 1 < w.size(); ++i) {
      int r = order.rank(w[i]), s = order.rank(w[i + 1]);
      if (r > s || (r == s && w[i].is_odd())) break;
    }
    if (i + 1 >= w.size()) {
      out.add_term(w, c);
      continue;
    }
    const Generator g = w[i], h = w[i + 1];
    auto splice = [&](std::initializer_list<Generator> middle) {
      Word v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      v.insert(v.end(), middle.begin(), middle.end());
      v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
      return v;
    };
    if (g == h) {
      push(w, splice({Generator::even(g.a(), g.a())}), c / 2);
      continue;
    }
    const int sign = (g.is_odd() && h.is_odd()) ? -1 : 1;
    push(w, splice({h, g}), sign * c);
    for (const auto& [gen, k] : generator_bracket(n, g, h)) push(w, splice({gen}), c * k);
  }
  return out;
}

}  // namespace scg
