#include "scg/parser.hpp"

#include <cctype>

namespace scg {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n) : text_(text), n_(n) {}

  Element parse_all() {
    Element e = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  bool digit_next() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string uint_token() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an unsigned integer", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  int index() {
    skip_ws();
    std::size_t start = pos_;
    std::string tok = uint_token();
    if (tok.size() > 6 || std::stoi(tok) < 1 || std::stoi(tok) > 2 * n_) {
      throw IndexOutOfRange("index " + tok + " at position " + std::to_string(start) +
                            " outside 1.." + std::to_string(2 * n_));
    }
    return std::stoi(tok);
  }

  Element expr() {
    Element e = accept('-') ? -term() : term();
    while (true) {
      if (accept('+')) {
        e += term();
      } else if (accept('-')) {
        e -= term();
      } else {
        return e;
      }
    }
  }

  bool starts_primary() {
    char c = peek();
    return c == 's' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  Element term() {
    Element e = factor(false);
    while (true) {
      if (accept('*')) {
        e = multiply(e, factor(true));
      } else if (starts_primary()) {
        e = multiply(e, factor(false));
      } else {
        return e;
      }
    }
  }

  Element factor(bool allow_negative) {
    Element e = primary(allow_negative);
    while (accept('^')) {
      std::size_t at = pos_;
      std::string tok = uint_token();
      if (tok.size() > 4) throw ParseError("exponent too large", at);
      int k = std::stoi(tok);
      Element base = e;
      e = Element::unit(n_);
      for (int i = 0; i < k; ++i) e = multiply(e, base);
    }
    return e;
  }

  Element primary(bool allow_negative) {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Element e = expr();
      expect(')');
      return e;
    }
    if (c == 's') {
      ++pos_;
      expect('(');
      int a = index();
      if (accept(',')) {
        int b = index();
        expect(')');
        return Element::generator(n_, Generator::even(a, b));
      }
      expect(')');
      return Element::generator(n_, Generator::odd(a));
    }
    bool negative = false;
    if (c == '-' && allow_negative) {
      ++pos_;
      negative = true;
      if (!digit_next()) throw ParseError("expected a number after '-'", pos_);
    }
    if (digit_next()) {
      std::string num = uint_token();
      std::string text = (negative ? "-" : "") + num;
      if (peek() == '/') {
        ++pos_;
        std::size_t at = pos_;
        std::string den = uint_token();
        if (den.find_first_not_of('0') == std::string::npos) throw ParseError("zero denominator", at);
        text += "/" + den;
      }
      return Element::scalar(n_, parse_rational(text));
    }
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse(std::string_view text, int n) { return Parser(text, n).parse_all(); }

std::string render(const Element& x) {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    Rational mag = abs(c);
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    std::string word;
    for (const auto& g : w) {
      if (!word.empty()) word += "*";
      word += to_string(g);
    }
    if (word.empty()) {
      s += to_string(mag);
    } else {
      if (mag != 1) s += to_string(mag) + "*";
      s += word;
    }
  }
  return s;
}

}  // namespace scg
