#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "stlsynth/formula.hpp"

namespace stlsynth {

// Syntax, interval or variable-index error; position is a 0-based offset into
// the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar (whitespace-insensitive):
//   formula := disj
//   disj    := conj { "||" conj }
//   conj    := unary { "&&" unary }
//   unary   := "!" unary | "F" ival unary | "G" ival unary
//            | atom [ "U" ival unary ]
//   atom    := "true" | "(" formula ")" | pred
//   ival    := "[" int "," int "]"
//   pred    := expr cmp expr      with cmp in { > >= < <= }
//   expr    := polynomial over x1..xn, literals, + - * and integer ^
//
// Comparisons normalize to "l >= 0" form: e > c and e >= c become Pred(e - c),
// e < c and e <= c become Pred(c - e). Strict and non-strict comparisons are
// not distinguished.
FormulaPtr parse(std::string_view text, int state_dim);

}  // namespace stlsynth
