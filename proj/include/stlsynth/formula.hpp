#pragma once

#include <memory>
#include <span>
#include <string>

namespace stlsynth {

// Bounded time interval in integer step indices, lo < hi, lo >= 0.
struct Interval {
  int lo = 0;
  int hi = 0;
};

Interval make_interval(int lo, int hi);  // throws std::invalid_argument on bad bounds

// ---------------------------------------------------------------------------
// Predicate expressions
//
// Polynomial expressions over state components x1..xn, closed under +, -, *,
// unary minus and raising to a non-negative integer power. Comparisons are
// normalized away at parse time, so a predicate is simply "expr >= 0".
// ---------------------------------------------------------------------------

enum class ExprKind { Const, Var, Add, Sub, Mul, Neg, Pow };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind = ExprKind::Const;
  double constant = 0.0;  // Const
  int var = 0;            // Var, 0-based state index
  int exponent = 0;       // Pow
  ExprPtr lhs, rhs;       // children (Neg/Pow use lhs only)
};

ExprPtr expr_const(double c);
ExprPtr expr_var(int index0);  // 0-based
ExprPtr expr_add(ExprPtr a, ExprPtr b);
ExprPtr expr_sub(ExprPtr a, ExprPtr b);  // folds "x - 0" to "x"
ExprPtr expr_mul(ExprPtr a, ExprPtr b);
ExprPtr expr_neg(ExprPtr a);  // folds a negated literal into the literal
ExprPtr expr_pow(ExprPtr base, int exponent);

int max_var_index(const Expr& e);  // largest 0-based index used, -1 if none
bool expr_equal(const Expr& a, const Expr& b);
std::string to_string(const Expr& e);

// Evaluate at one state vector; Num must support +, -, * and double scaling.
template <class Num>
Num eval_expr(const Expr& e, std::span<const Num> state) {
  switch (e.kind) {
    case ExprKind::Const: return Num(e.constant);
    case ExprKind::Var: return state[static_cast<std::size_t>(e.var)];
    case ExprKind::Add: return eval_expr(*e.lhs, state) + eval_expr(*e.rhs, state);
    case ExprKind::Sub: return eval_expr(*e.lhs, state) - eval_expr(*e.rhs, state);
    case ExprKind::Mul: return eval_expr(*e.lhs, state) * eval_expr(*e.rhs, state);
    case ExprKind::Neg: return -eval_expr(*e.lhs, state);
    case ExprKind::Pow: {
      if (e.exponent == 0) return Num(1.0);
      Num base = eval_expr(*e.lhs, state);
      Num acc = base;
      for (int i = 1; i < e.exponent; ++i) acc = acc * base;
      return acc;
    }
  }
  return Num(0.0);  // unreachable
}

// ---------------------------------------------------------------------------
// Formulas
//
// F, G and the disjunction are first-class nodes rather than sugar over
// Until/negation: the cumulative semantics assigns them their own clauses.
// ---------------------------------------------------------------------------

enum class FormulaKind { True, Pred, Not, And, Or, Until, Finally, Globally };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FormulaKind kind = FormulaKind::True;
  Interval interval;       // Until/Finally/Globally
  ExprPtr pred;            // Pred
  FormulaPtr left, right;  // unary operators use left
};

FormulaPtr f_true();
FormulaPtr f_pred(ExprPtr e);
FormulaPtr f_not(FormulaPtr f);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_until(Interval i, FormulaPtr a, FormulaPtr b);
FormulaPtr f_finally(Interval i, FormulaPtr f);
FormulaPtr f_globally(Interval i, FormulaPtr f);

// Number of future steps needed to evaluate the formula at a time point.
int horizon(const Formula& f);

bool contains_true(const Formula& f);
bool formula_equal(const Formula& a, const Formula& b);
int max_var_index(const Formula& f);

// Fully parenthesized form; parsing it back yields a structurally equal tree.
std::string to_string(const Formula& f);

// Checks that no Finally node sits under an odd number of negations; the
// cumulative semantics is undefined for such formulas.
struct ValidationResult {
  bool ok = true;
  std::string violation_path;  // "/" separated node labels from the root
};

ValidationResult validate_no_neg_finally(const Formula& f);

}  // namespace stlsynth
