#pragma once

#include <string>

#include "stlsynth/formula.hpp"
#include "stlsynth/trajectory.hpp"

namespace stlsynth {

// Three-valued satisfaction verdict; Inconclusive corresponds to robustness
// exactly zero, where the soundness implications are silent.
enum class Verdict { False, Inconclusive, True };

const char* to_string(Verdict v);

class NegatedFinallyError : public std::invalid_argument {
 public:
  explicit NegatedFinallyError(const std::string& path)
      : std::invalid_argument("formula contains a negated Finally at " + path), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Qualitative satisfaction at step k (sign of the robustness degree).
Verdict sat(const Formula& f, const Trajectory& traj, int k);

// Traditional robustness degree; 'true' evaluates to +infinity.
double rho(const Formula& f, const Trajectory& traj, int k);

// Smooth approximation of rho; rejects formulas containing 'true'.
double rho_smooth(const Formula& f, const Trajectory& traj, int k, double beta);

// Positive / negative cumulative robustness. Formulas must pass
// validate_no_neg_finally and must not contain 'true'.
double rho_plus(const Formula& f, const Trajectory& traj, int k);
double rho_minus(const Formula& f, const Trajectory& traj, int k);

// Smooth cumulative robustness (max/min/rectifiers replaced by their
// beta-smooth forms; window sums unchanged).
double rho_plus_smooth(const Formula& f, const Trajectory& traj, int k, double beta);
double rho_minus_smooth(const Formula& f, const Trajectory& traj, int k, double beta);

// Steps a trajectory dwells in the region described by a predicate-only
// formula (boolean test rho > 0 at each step of [from, to]).
int dwell_steps(const Formula& f, const Trajectory& traj, int from, int to);

}  // namespace stlsynth
