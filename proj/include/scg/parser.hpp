#pragma once

#include <string>
#include <string_view>

#include "scg/element.hpp"

namespace scg {

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses a free-algebra expression over n:
///   expr    := ['-'] term (('+' | '-') term)*
///   term    := factor ('*'? factor)*
///   factor  := primary ('^' uint)*
///   primary := rational | 's(' uint ')' | 's(' uint ',' uint ')' | '(' expr ')'
///   rational:= '-'? uint ('/' uint)?
/// Throws ParseError on bad syntax and IndexOutOfRange for indices outside
/// 1..2n.
Element parse(std::string_view text, int n);

/// Renders an element in the syntax accepted by parse().
std::string render(const Element& x);

}  // namespace scg
