#include "stlsynth/parser.hpp"

#include <cctype>
#include <cstdlib>

namespace stlsynth {
namespace {

class Parser {
 public:
  Parser(std::string_view text, int state_dim) : text_(text), dim_(state_dim) {
    if (state_dim < 1) throw std::invalid_argument("state dimension must be >= 1");
  }

  FormulaPtr run() {
    FormulaPtr f = parse_formula();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  std::string_view text_;
  int dim_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) fail(std::string("expected '") + c + "' " + what);
  }

  bool consume_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    // keywords must not run into an identifier tail
    std::size_t end = pos_ + w.size();
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
    pos_ = end;
    return true;
  }

  bool consume_op(std::string_view op) {
    skip_ws();
    if (text_.substr(pos_, op.size()) == op) {
      pos_ += op.size();
      return true;
    }
    return false;
  }

  FormulaPtr parse_formula() { return parse_disj(); }

  FormulaPtr parse_disj() {
    FormulaPtr f = parse_conj();
    while (consume_op("||")) f = f_or(f, parse_conj());
    return f;
  }

  FormulaPtr parse_conj() {
    FormulaPtr f = parse_unary();
    while (consume_op("&&")) f = f_and(f, parse_unary());
    return f;
  }

  FormulaPtr parse_unary() {
    skip_ws();
    if (consume_op("!")) return f_not(parse_unary());
    if (consume_word("F")) {
      Interval i = parse_interval();
      return f_finally(i, parse_unary());
    }
    if (consume_word("G")) {
      Interval i = parse_interval();
      return f_globally(i, parse_unary());
    }
    FormulaPtr f = parse_atom();
    if (consume_word("U")) {
      Interval i = parse_interval();
      return f_until(i, f, parse_unary());
    }
    return f;
  }

  FormulaPtr parse_atom() {
    skip_ws();
    if (consume_word("true")) return f_true();
    if (peek() == '(') {
      // Could open either a parenthesized formula or a parenthesized
      // expression inside a predicate; try the formula reading first and
      // fall back on failure.
      std::size_t save = pos_;
      try {
        ++pos_;  // '('
        FormulaPtr f = parse_formula();
        expect(')', "to close formula");
        return f;
      } catch (const ParseError&) {
        pos_ = save;
      }
    }
    return parse_pred();
  }

  FormulaPtr parse_pred() {
    ExprPtr lhs = parse_expr();
    skip_ws();
    bool less;
    if (consume_op(">=") || consume_op(">")) {
      less = false;
    } else if (consume_op("<=") || consume_op("<")) {
      less = true;
    } else {
      fail("expected comparison operator");
    }
    ExprPtr rhs = parse_expr();
    return f_pred(less ? expr_sub(rhs, lhs) : expr_sub(lhs, rhs));
  }

  Interval parse_interval() {
    expect('[', "to open interval");
    std::size_t at = pos_;
    long lo = parse_int("interval bound");
    expect(',', "between interval bounds");
    long hi = parse_int("interval bound");
    expect(']', "to close interval");
    if (lo < 0 || hi <= lo) {
      fail_at("interval [" + std::to_string(lo) + "," + std::to_string(hi) +
                  "] requires 0 <= lo < hi",
              at);
    }
    return Interval{static_cast<int>(lo), static_cast<int>(hi)};
  }

  long parse_int(const char* what) {
    skip_ws();
    if (peek() == '-') fail(std::string(what) + " must be non-negative");
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail(std::string("expected ") + what);
    return std::strtol(std::string(text_.substr(start, pos_ - start)).c_str(), nullptr, 10);
  }

  ExprPtr parse_expr() {
    ExprPtr e = parse_term();
    for (;;) {
      skip_ws();
      if (consume_op("+")) {
        e = expr_add(e, parse_term());
      } else if (peek() == '-') {
        ++pos_;
        e = expr_sub(e, parse_term());
      } else {
        return e;
      }
    }
  }

  ExprPtr parse_term() {
    ExprPtr e = parse_factor();
    while (consume_op("*")) e = expr_mul(e, parse_factor());
    return e;
  }

  ExprPtr parse_factor() {
    skip_ws();
    if (consume_op("-")) return expr_neg(parse_factor());
    ExprPtr base = parse_primary();
    if (consume_op("^")) {
      skip_ws();
      std::size_t at = pos_;
      long exp = parse_int("exponent");
      (void)at;
      return expr_pow(base, static_cast<int>(exp));
    }
    return base;
  }

  ExprPtr parse_primary() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      ExprPtr e = parse_expr();
      expect(')', "to close expression");
      return e;
    }
    if (c == 'x') return parse_var();
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
    fail("expected expression");
  }

  ExprPtr parse_var() {
    std::size_t at = pos_;
    ++pos_;  // 'x'
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail_at("expected variable index after 'x'", at);
    long idx = std::strtol(std::string(text_.substr(start, pos_ - start)).c_str(), nullptr, 10);
    if (idx < 1 || idx > dim_) {
      fail_at("unknown variable x" + std::to_string(idx) + " (state dimension " +
                  std::to_string(dim_) + ")",
              at);
    }
    return expr_var(static_cast<int>(idx - 1));
  }

  ExprPtr parse_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t mark = pos_++;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      } else {
        pos_ = mark;  // 'e' belonged to something else
      }
    }
    return expr_const(std::strtod(std::string(text_.substr(start, pos_ - start)).c_str(), nullptr));
  }
};

}  // namespace

FormulaPtr parse(std::string_view text, int state_dim) { return Parser(text, state_dim).run(); }

}  // namespace stlsynth
