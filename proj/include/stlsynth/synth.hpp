#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stlsynth/gradients.hpp"
#include "stlsynth/plant.hpp"

namespace stlsynth {

// Gradient step-size schedule. Backtracking shrinks the step until the
// objective does not decrease, which keeps the trace monotone.
struct StepSchedule {
  enum class Kind { Constant, Harmonic, Geometric };
  Kind kind = Kind::Constant;
  double alpha0 = 1.0;
  double param = 1.0;  // kappa for harmonic (alpha0 / (1 + i/kappa)), ratio for geometric
  bool backtracking = true;
  double shrink = 0.5;
  int max_shrinks = 40;

  double alpha_at(int iteration) const;
};

// Which monitored quantity a stop rule reads.
enum class Metric { Objective, ExactRho, SmoothRhoPlus };

// First-of composition of stop conditions; max_iters is always attached.
struct Termination {
  std::optional<double> objective_above;
  Metric above_metric = Metric::Objective;
  std::optional<double> grad_norm_below;  // infinity norm of the policy gradient
  std::optional<double> objective_below;
  Metric below_metric = Metric::Objective;
  int max_iters = 1000;
};

// Optional exact/smooth monitors consulted by termination rules and for the
// satisfaction bookkeeping.
struct Monitors {
  std::function<double(const Trajectory&)> exact_rho;
  std::function<double(const Trajectory&)> smooth_rho_plus;
};

enum class AscentStatus { Converged, MaxIters, Stalled };

struct AscentResult {
  ControlPolicy policy;
  Trajectory trajectory;
  std::vector<double> trace;  // objective at each accepted iterate, initial included
  int iterations = 0;
  AscentStatus status = AscentStatus::MaxIters;
  std::string stopped_by;
  // last iterate whose exact robustness monitor was strictly positive
  std::optional<ControlPolicy> last_satisfying;
};

// Clamp every control component into the admissible box; idempotent.
ControlPolicy project_controls(ControlPolicy u, const ControlBox& box);

// Projected gradient ascent on Q over the control sequence (re-simulating
// after every update), stopping at the first satisfied termination rule.
AscentResult gradient_ascent(const Objective& Q, const SystemModel& sys, const Eigen::VectorXd& gamma,
                             ControlPolicy u_init, const Termination& term, const StepSchedule& schedule,
                             const Monitors& monitors = {});

struct SynthConfig {
  double beta = 10.0;
  bool anneal_beta = true;   // on stall, double beta up to beta_max and continue
  double beta_max = 80.0;
  double epsilon = 1e-3;     // stage-2 gradient threshold (infinity norm)
  std::optional<double> xi;  // stage-3 robustness floor; default 0.5 x stage-2 final
  double xi_rel = 0.5;
  StepSchedule schedule;
  int max_iters_stage1 = 3000;
  int max_iters_stage2 = 3000;
  int max_iters_stage3 = 3000;
  std::uint64_t seed = 1;
  int restarts = 1;  // multi-start count; best final report wins
  bool augment_state_box = true;
  bool cost_stage = true;  // run stage 3 when a cost function is supplied
  enum class Mode { Cumulative, Traditional } mode = Mode::Cumulative;
  std::optional<ControlPolicy> u_init;  // overrides the random initialization
};

struct StageReport {
  bool ran = false;
  int iterations = 0;
  AscentStatus status = AscentStatus::Converged;
  std::string stopped_by;
  std::vector<double> trace;
  double final_objective = 0.0;
};

struct SynthReport {
  bool success = false;  // stage 1 converged and the returned policy satisfies phi exactly
  std::string message;
  ControlPolicy policy;       // returned policy (after the last stage that ran)
  ControlPolicy stage1_policy;
  ControlPolicy stage2_policy;
  Trajectory trajectory;      // simulation of `policy`
  StageReport stage1, stage2, stage3;
  double rho = 0.0;           // exact robustness of the augmented formula at step 0
  double rho_plus = 0.0;      // exact positive cumulative robustness
  double total_cost = 0.0;    // sum of stage costs (0 when no cost is configured)
  double beta_final = 0.0;
  double xi_used = 0.0;
  double wall_time_sec = 0.0;
  FormulaPtr augmented;       // formula actually optimized (state box added)
};

// Conjunction of affine bound predicates G_[0,h](sigma in X); returns phi
// unchanged when no component is bounded.
FormulaPtr augment_with_state_box(FormulaPtr phi, const StateBounds& bounds, int hphi);

// Three-stage pipeline: (1) maximize smooth rho until the exact rho of the
// simulated trajectory is positive, (2) maximize the smooth positive
// cumulative robustness until its gradient is small, (3) descend the
// cumulative cost while the smooth cumulative robustness stays above xi.
SynthReport smooth_optimization(const FormulaPtr& phi, const SystemModel& sys, const Eigen::VectorXd& gamma,
                                const CostFunction* cost, const SynthConfig& config,
                                const Objective* extra_term = nullptr, int at_step = 0);

}  // namespace stlsynth
