#pragma once

// Shared recursion for the robustness semantics. The evaluator is templated
// over the scalar type (double, or a reverse-mode tape value) and over the
// operator set (exact min/max/rectifiers, or their beta-smooth forms), so the
// exact monitor, the smooth objectives and their gradients all run through a
// single definition of the recursion.

#include <limits>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stlsynth/formula.hpp"
#include "stlsynth/smooth.hpp"

namespace stlsynth::detail {

template <class Num>
struct Grid {
  int rows = 0, cols = 0;
  std::vector<Num> data;  // column-major

  Grid() = default;
  Grid(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

  Num& at(int r, int c) { return data[static_cast<std::size_t>(c) * rows + r]; }
  const Num& at(int r, int c) const { return data[static_cast<std::size_t>(c) * rows + r]; }
  std::span<const Num> col(int c) const {
    return {data.data() + static_cast<std::size_t>(c) * rows, static_cast<std::size_t>(rows)};
  }
};

struct ExactOps {
  static constexpr bool exact = true;
  double max2(double a, double b) const { return b < a ? a : b; }
  double min2(double a, double b) const { return b < a ? b : a; }
  double rpos(double a) const { return rect_pos(a); }
  double rneg(double a) const { return rect_neg(a); }
};

template <class Num>
struct SmoothOps {
  static constexpr bool exact = false;
  double beta;
  Num max2(const Num& a, const Num& b) const { return smooth_max2(a, b, beta); }
  Num min2(const Num& a, const Num& b) const { return smooth_min2(a, b, beta); }
  Num rpos(const Num& a) const { return rect_pos_smooth(a, beta); }
  Num rneg(const Num& a) const { return rect_neg_smooth(a, beta); }
};

// Bottom-up memoized evaluation; memo tables are per-instance, keyed by
// subformula node and time step.
template <class Num, class Ops>
class Evaluator {
 public:
  Evaluator(const Grid<Num>& signal, Ops ops) : sig_(signal), ops_(ops) {}

  // Traditional robustness, Eq.-style recursion over min/max.
  Num rho(const Formula& f, int k) {
    auto& slot = lookup(memo_rho_, f, k);
    if (slot.first) return slot.second;
    Num v = compute_rho(f, k);
    slot = {true, v};
    return v;
  }

  // Positive/negative cumulative robustness, evaluated together.
  std::pair<Num, Num> rho_pm(const Formula& f, int k) {
    auto& slot = lookup(memo_pm_, f, k);
    if (slot.first) return slot.second;
    std::pair<Num, Num> v = compute_pm(f, k);
    slot = {true, v};
    return v;
  }

 private:
  template <class V>
  using Memo = std::unordered_map<const Formula*, std::vector<std::pair<bool, V>>>;

  const Grid<Num>& sig_;
  Ops ops_;
  Memo<Num> memo_rho_;
  Memo<std::pair<Num, Num>> memo_pm_;

  template <class V>
  std::pair<bool, V>& lookup(Memo<V>& memo, const Formula& f, int k) {
    auto& row = memo[&f];
    if (row.empty()) row.resize(static_cast<std::size_t>(sig_.cols));
    return row[static_cast<std::size_t>(k)];
  }

  Num compute_rho(const Formula& f, int k) {
    switch (f.kind) {
      case FormulaKind::True:
        if constexpr (Ops::exact) {
          return Num(std::numeric_limits<double>::infinity());
        } else {
          throw std::invalid_argument("'true' has no smooth robustness");
        }
      case FormulaKind::Pred: return eval_expr(*f.pred, sig_.col(k));
      case FormulaKind::Not: return -rho(*f.left, k);
      case FormulaKind::And: return ops_.min2(rho(*f.left, k), rho(*f.right, k));
      case FormulaKind::Or: return ops_.max2(rho(*f.left, k), rho(*f.right, k));
      case FormulaKind::Finally: {
        Num acc = rho(*f.left, k + f.interval.lo);
        for (int j = f.interval.lo + 1; j <= f.interval.hi; ++j) acc = ops_.max2(acc, rho(*f.left, k + j));
        return acc;
      }
      case FormulaKind::Globally: {
        Num acc = rho(*f.left, k + f.interval.lo);
        for (int j = f.interval.lo + 1; j <= f.interval.hi; ++j) acc = ops_.min2(acc, rho(*f.left, k + j));
        return acc;
      }
      case FormulaKind::Until: {
        // prefix tracks min over k'' in [k, k+j] of rho(psi)
        Num prefix = rho(*f.left, k);
        for (int j = 1; j <= f.interval.lo; ++j) prefix = ops_.min2(prefix, rho(*f.left, k + j));
        std::optional<Num> acc;
        for (int j = f.interval.lo; j <= f.interval.hi; ++j) {
          Num v = ops_.min2(rho(*f.right, k + j), prefix);
          acc = acc ? ops_.max2(*acc, v) : v;
          if (j < f.interval.hi) prefix = ops_.min2(prefix, rho(*f.left, k + j + 1));
        }
        return *acc;
      }
    }
    throw std::logic_error("unreachable formula kind");
  }

  std::pair<Num, Num> compute_pm(const Formula& f, int k) {
    switch (f.kind) {
      case FormulaKind::True: throw std::invalid_argument("'true' has no cumulative robustness");
      case FormulaKind::Pred: {
        Num v = eval_expr(*f.pred, sig_.col(k));
        return {ops_.rpos(v), ops_.rneg(v)};
      }
      case FormulaKind::Not: {
        auto [p, n] = rho_pm(*f.left, k);
        return {-n, -p};
      }
      case FormulaKind::And: {
        auto [pa, na] = rho_pm(*f.left, k);
        auto [pb, nb] = rho_pm(*f.right, k);
        return {ops_.min2(pa, pb), ops_.min2(na, nb)};
      }
      case FormulaKind::Or: {
        auto [pa, na] = rho_pm(*f.left, k);
        auto [pb, nb] = rho_pm(*f.right, k);
        return {ops_.max2(pa, pb), ops_.max2(na, nb)};
      }
      case FormulaKind::Finally: {
        auto [p, n] = rho_pm(*f.left, k + f.interval.lo);
        for (int j = f.interval.lo + 1; j <= f.interval.hi; ++j) {
          auto [pj, nj] = rho_pm(*f.left, k + j);
          p = p + pj;
          n = n + nj;
        }
        return {p, n};
      }
      case FormulaKind::Globally: {
        auto [p, n] = rho_pm(*f.left, k + f.interval.lo);
        for (int j = f.interval.lo + 1; j <= f.interval.hi; ++j) {
          auto [pj, nj] = rho_pm(*f.left, k + j);
          p = ops_.min2(p, pj);
          n = ops_.min2(n, nj);
        }
        return {p, n};
      }
      case FormulaKind::Until: {
        auto [pp, pn] = rho_pm(*f.left, k);
        for (int j = 1; j <= f.interval.lo; ++j) {
          auto [pj, nj] = rho_pm(*f.left, k + j);
          pp = ops_.min2(pp, pj);
          pn = ops_.min2(pn, nj);
        }
        std::optional<Num> sp, sn;
        for (int j = f.interval.lo; j <= f.interval.hi; ++j) {
          auto [qp, qn] = rho_pm(*f.right, k + j);
          Num vp = ops_.min2(qp, pp);
          Num vn = ops_.min2(qn, pn);
          sp = sp ? *sp + vp : vp;
          sn = sn ? *sn + vn : vn;
          if (j < f.interval.hi) {
            auto [pj, nj] = rho_pm(*f.left, k + j + 1);
            pp = ops_.min2(pp, pj);
            pn = ops_.min2(pn, nj);
          }
        }
        return {*sp, *sn};
      }
    }
    throw std::logic_error("unreachable formula kind");
  }
};

}  // namespace stlsynth::detail
