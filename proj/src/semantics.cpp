#include "stlsynth/semantics.hpp"

#include "stlsynth/eval_core.hpp"

namespace stlsynth {
namespace {

detail::Grid<double> to_grid(const Trajectory& t) {
  detail::Grid<double> g(t.dim(), t.steps() + 1);
  for (int c = 0; c <= t.steps(); ++c)
    for (int r = 0; r < t.dim(); ++r) g.at(r, c) = t.values(r, c);
  return g;
}

void check_eval(const Formula& f, const Trajectory& t, int k) {
  if (k < 0) throw std::invalid_argument("evaluation step must be non-negative");
  int need = k + horizon(f);
  if (need > t.steps()) throw TrajectoryTooShort(need, t.steps());
  if (max_var_index(f) >= t.dim()) {
    throw std::invalid_argument("formula refers to x" + std::to_string(max_var_index(f) + 1) +
                                " but trajectory has dimension " + std::to_string(t.dim()));
  }
}

void check_cumulative(const Formula& f) {
  if (contains_true(f)) throw std::invalid_argument("'true' has no cumulative robustness");
  ValidationResult v = validate_no_neg_finally(f);
  if (!v.ok) throw NegatedFinallyError(v.violation_path);
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::False: return "false";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::True: return "true";
  }
  return "?";
}

Verdict sat(const Formula& f, const Trajectory& traj, int k) {
  double r = rho(f, traj, k);
  if (r > 0) return Verdict::True;
  if (r < 0) return Verdict::False;
  return Verdict::Inconclusive;
}

double rho(const Formula& f, const Trajectory& traj, int k) {
  check_eval(f, traj, k);
  auto grid = to_grid(traj);
  return detail::Evaluator<double, detail::ExactOps>(grid, {}).rho(f, k);
}

double rho_smooth(const Formula& f, const Trajectory& traj, int k, double beta) {
  check_eval(f, traj, k);
  if (contains_true(f)) throw std::invalid_argument("'true' has no smooth robustness");
  if (!(beta > 0)) throw std::invalid_argument("beta must be positive");
  auto grid = to_grid(traj);
  return detail::Evaluator<double, detail::SmoothOps<double>>(grid, {beta}).rho(f, k);
}

double rho_plus(const Formula& f, const Trajectory& traj, int k) {
  check_eval(f, traj, k);
  check_cumulative(f);
  auto grid = to_grid(traj);
  return detail::Evaluator<double, detail::ExactOps>(grid, {}).rho_pm(f, k).first;
}

double rho_minus(const Formula& f, const Trajectory& traj, int k) {
  check_eval(f, traj, k);
  check_cumulative(f);
  auto grid = to_grid(traj);
  return detail::Evaluator<double, detail::ExactOps>(grid, {}).rho_pm(f, k).second;
}

double rho_plus_smooth(const Formula& f, const Trajectory& traj, int k, double beta) {
  check_eval(f, traj, k);
  check_cumulative(f);
  if (!(beta > 0)) throw std::invalid_argument("beta must be positive");
  auto grid = to_grid(traj);
  return detail::Evaluator<double, detail::SmoothOps<double>>(grid, {beta}).rho_pm(f, k).first;
}

double rho_minus_smooth(const Formula& f, const Trajectory& traj, int k, double beta) {
  check_eval(f, traj, k);
  check_cumulative(f);
  if (!(beta > 0)) throw std::invalid_argument("beta must be positive");
  auto grid = to_grid(traj);
  return detail::Evaluator<double, detail::SmoothOps<double>>(grid, {beta}).rho_pm(f, k).second;
}

int dwell_steps(const Formula& f, const Trajectory& traj, int from, int to) {
  int count = 0;
  for (int k = from; k <= to && k <= traj.steps(); ++k) {
    if (rho(f, traj, k) > 0) ++count;
  }
  return count;
}

}  // namespace stlsynth
