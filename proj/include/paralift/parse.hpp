#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "paralift/chart.hpp"
#include "paralift/poly.hpp"

namespace paralift {

// Syntax or name-resolution failure, with position information.
// `offset` is the 0-based byte offset into the input; line/column are
// 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t offset, int line, int column);
  std::size_t offset() const { return offset_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::size_t offset_;
  int line_;
  int column_;
};

// Grammar (ASCII):
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := atom ('^' natural)?
//   atom     := rational | 'j' | identifier | '(' expr ')' | '-' atom
//   rational := integer ('/' positive-integer)?
//   identifier := letter (letter|digit|'_'|'\'')*
// Identifiers must name coordinates of the chart; 'j' is the split-complex
// unit.  The result is normalized to canonical form.
Poly parse_expr(std::string_view text, const Chart& chart);

}  // namespace paralift
