#include "stlsynth/formula.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <utility>
#include <vector>

namespace stlsynth {

Interval make_interval(int lo, int hi) {
  if (lo < 0 || hi <= lo) {
    throw std::invalid_argument("interval [" + std::to_string(lo) + "," + std::to_string(hi) +
                                "] violates 0 <= lo < hi");
  }
  return Interval{lo, hi};
}

ExprPtr expr_const(double c) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Const;
  e->constant = c;
  return e;
}

ExprPtr expr_var(int index0) {
  if (index0 < 0) throw std::invalid_argument("negative variable index");
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Var;
  e->var = index0;
  return e;
}

static ExprPtr binary(ExprKind k, ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

ExprPtr expr_add(ExprPtr a, ExprPtr b) { return binary(ExprKind::Add, std::move(a), std::move(b)); }

ExprPtr expr_sub(ExprPtr a, ExprPtr b) {
  // "x - 0" folds to "x" so normalized comparisons against a zero literal
  // round-trip through the printer unchanged.
  if (b->kind == ExprKind::Const && b->constant == 0.0) return a;
  return binary(ExprKind::Sub, std::move(a), std::move(b));
}

ExprPtr expr_mul(ExprPtr a, ExprPtr b) { return binary(ExprKind::Mul, std::move(a), std::move(b)); }

ExprPtr expr_neg(ExprPtr a) {
  if (a->kind == ExprKind::Const) return expr_const(-a->constant);
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Neg;
  e->lhs = std::move(a);
  return e;
}

ExprPtr expr_pow(ExprPtr base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("exponent must be a non-negative integer");
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Pow;
  e->exponent = exponent;
  e->lhs = std::move(base);
  return e;
}

int max_var_index(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Const: return -1;
    case ExprKind::Var: return e.var;
    case ExprKind::Neg:
    case ExprKind::Pow: return max_var_index(*e.lhs);
    default: return std::max(max_var_index(*e.lhs), max_var_index(*e.rhs));
  }
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprKind::Const: return a.constant == b.constant;
    case ExprKind::Var: return a.var == b.var;
    case ExprKind::Neg: return expr_equal(*a.lhs, *b.lhs);
    case ExprKind::Pow: return a.exponent == b.exponent && expr_equal(*a.lhs, *b.lhs);
    default: return expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
  }
}

static std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Const: return format_double(e.constant);
    case ExprKind::Var: return "x" + std::to_string(e.var + 1);
    case ExprKind::Add: return "(" + to_string(*e.lhs) + " + " + to_string(*e.rhs) + ")";
    case ExprKind::Sub: return "(" + to_string(*e.lhs) + " - " + to_string(*e.rhs) + ")";
    case ExprKind::Mul: return "(" + to_string(*e.lhs) + " * " + to_string(*e.rhs) + ")";
    case ExprKind::Neg: return "(-" + to_string(*e.lhs) + ")";
    case ExprKind::Pow: return "(" + to_string(*e.lhs) + " ^ " + std::to_string(e.exponent) + ")";
  }
  return {};
}

FormulaPtr f_true() {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::True;
  return f;
}

FormulaPtr f_pred(ExprPtr e) {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::Pred;
  f->pred = std::move(e);
  return f;
}

FormulaPtr f_not(FormulaPtr child) {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::Not;
  f->left = std::move(child);
  return f;
}

static FormulaPtr binary_formula(FormulaKind k, FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->left = std::move(a);
  f->right = std::move(b);
  return f;
}

FormulaPtr f_and(FormulaPtr a, FormulaPtr b) { return binary_formula(FormulaKind::And, std::move(a), std::move(b)); }
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) { return binary_formula(FormulaKind::Or, std::move(a), std::move(b)); }

FormulaPtr f_until(Interval i, FormulaPtr a, FormulaPtr b) {
  auto f = binary_formula(FormulaKind::Until, std::move(a), std::move(b));
  const_cast<Formula*>(f.get())->interval = make_interval(i.lo, i.hi);
  return f;
}

static FormulaPtr unary_temporal(FormulaKind k, Interval i, FormulaPtr child) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->interval = make_interval(i.lo, i.hi);
  f->left = std::move(child);
  return f;
}

FormulaPtr f_finally(Interval i, FormulaPtr child) { return unary_temporal(FormulaKind::Finally, i, std::move(child)); }
FormulaPtr f_globally(Interval i, FormulaPtr child) { return unary_temporal(FormulaKind::Globally, i, std::move(child)); }

int horizon(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::True:
    case FormulaKind::Pred: return 0;
    case FormulaKind::Not: return horizon(*f.left);
    case FormulaKind::And:
    case FormulaKind::Or: return std::max(horizon(*f.left), horizon(*f.right));
    case FormulaKind::Finally:
    case FormulaKind::Globally: return f.interval.hi + horizon(*f.left);
    case FormulaKind::Until: return f.interval.hi + std::max(horizon(*f.left), horizon(*f.right));
  }
  return 0;
}

bool contains_true(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::True: return true;
    case FormulaKind::Pred: return false;
    case FormulaKind::Not:
    case FormulaKind::Finally:
    case FormulaKind::Globally: return contains_true(*f.left);
    default: return contains_true(*f.left) || contains_true(*f.right);
  }
}

int max_var_index(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::True: return -1;
    case FormulaKind::Pred: return max_var_index(*f.pred);
    case FormulaKind::Not:
    case FormulaKind::Finally:
    case FormulaKind::Globally: return max_var_index(*f.left);
    default: return std::max(max_var_index(*f.left), max_var_index(*f.right));
  }
}

bool formula_equal(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case FormulaKind::True: return true;
    case FormulaKind::Pred: return expr_equal(*a.pred, *b.pred);
    case FormulaKind::Not: return formula_equal(*a.left, *b.left);
    case FormulaKind::And:
    case FormulaKind::Or: return formula_equal(*a.left, *b.left) && formula_equal(*a.right, *b.right);
    case FormulaKind::Finally:
    case FormulaKind::Globally:
      return a.interval.lo == b.interval.lo && a.interval.hi == b.interval.hi &&
             formula_equal(*a.left, *b.left);
    case FormulaKind::Until:
      return a.interval.lo == b.interval.lo && a.interval.hi == b.interval.hi &&
             formula_equal(*a.left, *b.left) && formula_equal(*a.right, *b.right);
  }
  return false;
}

static std::string interval_str(const Interval& i) {
  return "[" + std::to_string(i.lo) + "," + std::to_string(i.hi) + "]";
}

std::string to_string(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::True: return "true";
    case FormulaKind::Pred: return to_string(*f.pred) + " >= 0";
    case FormulaKind::Not: return "!(" + to_string(*f.left) + ")";
    case FormulaKind::And: return "((" + to_string(*f.left) + ") && (" + to_string(*f.right) + "))";
    case FormulaKind::Or: return "((" + to_string(*f.left) + ") || (" + to_string(*f.right) + "))";
    case FormulaKind::Until:
      return "((" + to_string(*f.left) + ") U" + interval_str(f.interval) + " (" + to_string(*f.right) + "))";
    case FormulaKind::Finally: return "F" + interval_str(f.interval) + " (" + to_string(*f.left) + ")";
    case FormulaKind::Globally: return "G" + interval_str(f.interval) + " (" + to_string(*f.left) + ")";
  }
  return {};
}

static const char* node_label(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::True: return "true";
    case FormulaKind::Pred: return "pred";
    case FormulaKind::Not: return "!";
    case FormulaKind::And: return "&&";
    case FormulaKind::Or: return "||";
    case FormulaKind::Until: return "U";
    case FormulaKind::Finally: return "F";
    case FormulaKind::Globally: return "G";
  }
  return "?";
}

static bool find_neg_finally(const Formula& f, bool odd_negation, std::vector<const Formula*>& path) {
  path.push_back(&f);
  switch (f.kind) {
    case FormulaKind::True:
    case FormulaKind::Pred: break;
    case FormulaKind::Finally:
      if (odd_negation) return true;
      if (find_neg_finally(*f.left, odd_negation, path)) return true;
      break;
    case FormulaKind::Not:
      if (find_neg_finally(*f.left, !odd_negation, path)) return true;
      break;
    case FormulaKind::Globally:
      if (find_neg_finally(*f.left, odd_negation, path)) return true;
      break;
    default:
      if (find_neg_finally(*f.left, odd_negation, path)) return true;
      if (find_neg_finally(*f.right, odd_negation, path)) return true;
      break;
  }
  path.pop_back();
  return false;
}

ValidationResult validate_no_neg_finally(const Formula& f) {
  std::vector<const Formula*> path;
  if (!find_neg_finally(f, false, path)) return {};
  std::string joined;
  for (const Formula* node : path) {
    joined += "/";
    joined += node_label(*node);
  }
  return {false, joined};
}

}  // namespace stlsynth
