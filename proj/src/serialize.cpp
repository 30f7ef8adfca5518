#include "scg/serialize.hpp"

#include <sstream>

#include "scg/parser.hpp"

namespace scg {

namespace {

Json word_to_json(const Word& w) {
  Json arr = Json::array();
  for (const auto& g : w) arr.push_back(g.is_odd() ? Json::array({g.a()}) : Json::array({g.a(), g.b()}));
  return arr;
}

Word word_from_json(const Json& j) {
  Word w;
  for (const auto& g : j) {
    if (!g.is_array() || g.empty() || g.size() > 2) throw Error("generator must be [a] or [a,b]");
    w.push_back(g.size() == 1 ? Generator::odd(g[0].get<int>())
                              : Generator::even(g[0].get<int>(), g[1].get<int>()));
  }
  return w;
}

template <class Terms>
Json word_terms_to_json(int n, const Terms& terms) {
  Json out = {{"n", n}, {"terms", Json::array()}};
  for (const auto& [w, c] : terms) out["terms"].push_back({{"word", word_to_json(w)}, {"coeff", to_json(c)}});
  return out;
}

std::string index_latex(int n, int a) {
  return a <= n ? std::to_string(a) : "\\bar{" + std::to_string(a - n) + "}";
}

std::string generator_latex(int n, Generator g) {
  if (g.is_odd()) return "\\sigma_{" + index_latex(n, g.a()) + "}";
  return "\\sigma_{" + index_latex(n, g.a()) + index_latex(n, g.b()) + "}";
}

std::string bracket_latex(int n, const Bracket& b) {
  if (b.empty()) return "1";
  std::string s = "[";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "\\," : "") + index_latex(n, b.indices()[i]);
  return s + "]";
}

// Joins signed terms: first term keeps its sign, later ones get " + " or " - ".
template <class Range, class Body>
std::string latex_sum(const Range& terms, Body body) {
  std::string s;
  bool first = true;
  for (const auto& [key, c] : terms) {
    Rational mag = abs(c);
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    std::string b = body(key);
    if (b.empty()) {
      s += to_latex(mag);
    } else {
      if (mag != 1) s += to_latex(mag) + " ";
      s += b;
    }
  }
  return s.empty() ? "0" : s;
}

std::string latex_escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '_': case '&': case '%': case '$': case '#': case '{': case '}':
        out += '\\';
        out += ch;
        break;
      case '\\': out += "\\textbackslash{}"; break;
      case '^': out += "\\^{}"; break;
      case '~': out += "\\~{}"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Element& x) { return word_terms_to_json(x.n(), x.terms()); }

Json to_json(const WeylElement& x) {
  Json j = word_terms_to_json(x.n(), x.terms());
  j["weyl"] = true;
  return j;
}

Json to_json(const OmegaElement& w) {
  Json out = {{"n", w.n()}, {"terms", Json::array()}};
  for (const auto& [b, c] : w.terms()) out["terms"].push_back({{"indices", b.indices()}, {"coeff", to_json(c)}});
  return out;
}

Json to_json(const CoeffTable& t) {
  Json x = Json::array(), y = Json::array();
  for (const auto& q : t.x) x.push_back(to_json(q));
  for (const auto& q : t.y) y.push_back(to_json(q));
  return {{"n", t.n}, {"route", to_string(t.route)}, {"x", x}, {"y", y}};
}

Json to_json(const CartanPolynomial& p) {
  Json out = {{"vars", p.vars()}, {"terms", Json::array()}};
  for (const auto& [e, c] : p.terms()) out["terms"].push_back({{"exps", e}, {"coeff", to_json(c)}});
  return out;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const Report& r) {
  return {{"name", r.name},
          {"status", r.passed ? "pass" : "fail"},
          {"details", r.details},
          {"timing_ms", r.elapsed_ms}};
}

Json to_json(const HighestWeightVector& v) {
  Json weight = Json::array();
  for (const auto& q : v.weight) weight.push_back(to_json(q));
  return {{"weight", weight}, {"vector", to_json(v.vector)}};
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw Error("rational must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

Element element_from_json(const Json& j) {
  Element x(j.at("n").get<int>());
  for (const auto& t : j.at("terms")) {
    Word w = word_from_json(t.at("word"));
    for (const auto& g : w) g.check(x.n());
    x.add_term(w, rational_from_json(t.at("coeff")));
  }
  return x;
}

OmegaElement omega_from_json(const Json& j) {
  OmegaElement w(j.at("n").get<int>());
  for (const auto& t : j.at("terms")) {
    Bracket b(t.at("indices").get<std::vector<int>>());
    b.check(w.n());
    w.add_term(b, rational_from_json(t.at("coeff")));
  }
  return w;
}

CoeffTable coeff_table_from_json(const Json& j) {
  CoeffTable t;
  t.n = j.at("n").get<int>();
  t.route = route_from_string(j.at("route").get<std::string>());
  for (const auto& q : j.at("x")) t.x.push_back(rational_from_json(q));
  for (const auto& q : j.at("y")) t.y.push_back(rational_from_json(q));
  return t;
}

CartanPolynomial cartan_from_json(const Json& j) {
  CartanPolynomial p(j.at("vars").get<int>());
  for (const auto& t : j.at("terms")) {
    auto e = t.at("exps").get<std::vector<int>>();
    if (static_cast<int>(e.size()) != p.vars()) throw Error("exponent vector has wrong length");
    p.add_term(e, rational_from_json(t.at("coeff")));
  }
  return p;
}

std::string to_text(const OmegaElement& w) {
  if (w.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [b, c] : w.terms()) {
    Rational mag = abs(c);
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1 || b.empty()) s += to_string(mag);
    if (!b.empty()) s += (mag != 1 ? "*" : "") + to_string(b);
  }
  return s;
}

std::string to_text(const CoeffTable& t) {
  std::ostringstream out;
  out << "n = " << t.n << " (" << to_string(t.route) << ")\n";
  for (std::size_t k = 0; k < t.x.size(); ++k) {
    out << "  x_" << k << " = " << to_string(t.x[k]) << "    y_" << k << " = " << to_string(t.y[k]) << "\n";
  }
  return out.str();
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS " : "FAIL ") << r.name;
  out.setf(std::ios::fixed);
  out.precision(1);
  out << " (" << r.elapsed_ms << " ms)\n";
  for (const auto& d : r.details) out << "  " << d << "\n";
  return out.str();
}

std::string to_text(const WeylElement& x) {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    Rational mag = abs(c);
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    std::string word;
    for (const auto& g : w) word += (word.empty() ? "" : "*") + to_string(g);
    if (word.empty()) {
      s += to_string(mag);
    } else {
      s += (mag != 1 ? to_string(mag) + "*" : "") + word;
    }
  }
  return s;
}

std::string to_latex(const Rational& q) {
  std::string sign = q < 0 ? "-" : "";
  Rational mag = abs(q);
  if (mag.get_den() == 1) return sign + mag.get_num().get_str();
  return sign + "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
}

std::string to_latex(const Element& x) {
  const int n = x.n();
  return latex_sum(x.terms(), [n](const Word& w) {
    std::string s;
    for (const auto& g : w) s += generator_latex(n, g);
    return s;
  });
}

std::string to_latex(const OmegaElement& w) {
  const int n = w.n();
  return latex_sum(w.terms(), [n](const Bracket& b) { return b.empty() ? std::string() : bracket_latex(n, b); });
}

std::string to_latex(const CoeffTable& t) {
  std::string s = "\\mathrm{Sc}^{(" + std::to_string(t.n) + ")} = ";
  bool first = true;
  for (int k = 0; k <= t.n; ++k) {
    const Rational& c = t.x[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1) s += to_latex(mag) + "\\,";
    s += "A^{(" + std::to_string(t.n) + ")}_{" + std::to_string(2 * t.n - 2 * k) + "}";
  }
  return s;
}

std::string to_latex(const CartanPolynomial& p) {
  return latex_sum(p.terms(), [](const CartanPolynomial::Exponents& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      s += "H_{" + std::to_string(i + 1) + "}";
      if (e[i] > 1) s += "^{" + std::to_string(e[i]) + "}";
    }
    return s;
  });
}

std::string to_latex(const Report& r) {
  std::string s = "\\textbf{" + latex_escape(r.name) + "}: " + (r.passed ? "pass" : "fail");
  for (const auto& d : r.details) s += "\\\\\n\\texttt{" + latex_escape(d) + "}";
  return s;
}

std::string latex_document(const std::vector<std::string>& equations) {
  std::string s =
      "\\documentclass{article}\n\\usepackage{amsmath}\n\\allowdisplaybreaks\n\\begin{document}\n";
  for (const auto& e : equations) s += "\\begin{multline*}\n" + e + "\n\\end{multline*}\n";
  return s + "\\end{document}\n";
}

std::string latex_text_document(const std::vector<std::string>& paragraphs) {
  std::string s = "\\documentclass{article}\n\\begin{document}\n";
  for (const auto& p : paragraphs) s += p + "\n\n";
  return s + "\\end{document}\n";
}

}  // namespace scg
