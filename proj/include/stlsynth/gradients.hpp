#pragma once

#include <memory>
#include <vector>

#include "stlsynth/autodiff.hpp"
#include "stlsynth/eval_core.hpp"
#include "stlsynth/plant.hpp"
#include "stlsynth/semantics.hpp"

namespace stlsynth {

using RevGrid = detail::Grid<ad::Rev>;

// Scalar objective over a simulated trajectory and the policy that produced
// it. `value` and `build` must evaluate the same function; the taped form is
// what the gradient sweep differentiates.
class Objective {
 public:
  virtual ~Objective() = default;
  virtual double value(const Trajectory& traj, const ControlPolicy& u) const = 0;
  virtual ad::Rev build(const RevGrid& sigma, const RevGrid& u) const = 0;
};

// Smooth traditional robustness rho~(phi, sigma, at).
class SmoothRhoObjective : public Objective {
 public:
  SmoothRhoObjective(FormulaPtr phi, int at, double beta);
  double value(const Trajectory& traj, const ControlPolicy& u) const override;
  ad::Rev build(const RevGrid& sigma, const RevGrid& u) const override;

 private:
  FormulaPtr phi_;
  int at_;
  double beta_;
};

// Smooth positive cumulative robustness rho~+(phi, sigma, at).
class SmoothRhoPlusObjective : public Objective {
 public:
  SmoothRhoPlusObjective(FormulaPtr phi, int at, double beta);
  double value(const Trajectory& traj, const ControlPolicy& u) const override;
  ad::Rev build(const RevGrid& sigma, const RevGrid& u) const override;

 private:
  FormulaPtr phi_;
  int at_;
  double beta_;
};

// Negated cumulative cost -sum_k J(sigma[k], u[k], sigma[k+1]); ascending it
// descends the cost.
class NegTotalCostObjective : public Objective {
 public:
  explicit NegTotalCostObjective(CostFunction cost);
  double value(const Trajectory& traj, const ControlPolicy& u) const override;
  ad::Rev build(const RevGrid& sigma, const RevGrid& u) const override;

 private:
  CostFunction cost_;
};

// -||sigma[k+K] - sigma[k]||^2, the loop-closure penalty.
class ClosurePenaltyObjective : public Objective {
 public:
  ClosurePenaltyObjective(int k, int K);
  double value(const Trajectory& traj, const ControlPolicy& u) const override;
  ad::Rev build(const RevGrid& sigma, const RevGrid& u) const override;

 private:
  int k_, K_;
};

// Weighted sum of objectives.
class CompositeObjective : public Objective {
 public:
  void add(double weight, std::shared_ptr<const Objective> part);
  double value(const Trajectory& traj, const ControlPolicy& u) const override;
  ad::Rev build(const RevGrid& sigma, const RevGrid& u) const override;

 private:
  std::vector<std::pair<double, std::shared_ptr<const Objective>>> parts_;
};

// Exact reverse-mode gradient of the objective with respect to every signal
// sample and every control sample it references directly.
struct SignalGradient {
  double value = 0.0;
  Eigen::MatrixXd d_sigma;    // n x (L+1)
  Eigen::MatrixXd d_control;  // m x L, direct dependence only
};

SignalGradient grad_wrt_signal(const Objective& Q, const Trajectory& traj, const ControlPolicy& u);

// Backward recursion through the dynamics: folds d_sigma into the total
// derivative of Q with respect to each control, holding the initial state
// fixed. delta[k] accumulates dQ/dsigma[k]; the returned zeta is dQ/du.
Eigen::MatrixXd adjoint_controls(const Eigen::MatrixXd& d_sigma, const SystemModel& sys,
                                 const Trajectory& traj, const ControlPolicy& u,
                                 const Eigen::MatrixXd& d_control_direct);

struct PolicyGradient {
  double value = 0.0;
  Eigen::MatrixXd grad;  // m x L
};

// Convenience composition: tape sweep plus adjoint recursion.
PolicyGradient policy_gradient(const Objective& Q, const SystemModel& sys, const Trajectory& traj,
                               const ControlPolicy& u);

}  // namespace stlsynth
