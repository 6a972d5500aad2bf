#include "stlsynth/gradients.hpp"

#include <stdexcept>

namespace stlsynth {

namespace {

void check_smooth_formula(const Formula& f, int at, int steps) {
  if (contains_true(f)) throw std::invalid_argument("'true' has no smooth robustness");
  if (at + horizon(f) > steps) throw TrajectoryTooShort(at + horizon(f), steps);
}

}  // namespace

SmoothRhoObjective::SmoothRhoObjective(FormulaPtr phi, int at, double beta)
    : phi_(std::move(phi)), at_(at), beta_(beta) {
  if (contains_true(*phi_)) throw std::invalid_argument("'true' has no smooth robustness");
}

double SmoothRhoObjective::value(const Trajectory& traj, const ControlPolicy&) const {
  return rho_smooth(*phi_, traj, at_, beta_);
}

ad::Rev SmoothRhoObjective::build(const RevGrid& sigma, const RevGrid&) const {
  check_smooth_formula(*phi_, at_, sigma.cols - 1);
  detail::Evaluator<ad::Rev, detail::SmoothOps<ad::Rev>> eval(sigma, {beta_});
  return eval.rho(*phi_, at_);
}

SmoothRhoPlusObjective::SmoothRhoPlusObjective(FormulaPtr phi, int at, double beta)
    : phi_(std::move(phi)), at_(at), beta_(beta) {
  if (contains_true(*phi_)) throw std::invalid_argument("'true' has no cumulative robustness");
  ValidationResult v = validate_no_neg_finally(*phi_);
  if (!v.ok) throw NegatedFinallyError(v.violation_path);
}

double SmoothRhoPlusObjective::value(const Trajectory& traj, const ControlPolicy&) const {
  return rho_plus_smooth(*phi_, traj, at_, beta_);
}

ad::Rev SmoothRhoPlusObjective::build(const RevGrid& sigma, const RevGrid&) const {
  check_smooth_formula(*phi_, at_, sigma.cols - 1);
  detail::Evaluator<ad::Rev, detail::SmoothOps<ad::Rev>> eval(sigma, {beta_});
  return eval.rho_pm(*phi_, at_).first;
}

NegTotalCostObjective::NegTotalCostObjective(CostFunction cost) : cost_(std::move(cost)) {}

double NegTotalCostObjective::value(const Trajectory& traj, const ControlPolicy& u) const {
  return -total_cost(cost_, traj, u);
}

ad::Rev NegTotalCostObjective::build(const RevGrid& sigma, const RevGrid& u) const {
  ad::Rev acc(0.0);
  for (int k = 0; k < u.cols; ++k) {
    acc = acc + cost_.build(sigma.col(k), u.col(k), sigma.col(k + 1));
  }
  return -acc;
}

ClosurePenaltyObjective::ClosurePenaltyObjective(int k, int K) : k_(k), K_(K) {
  if (k < 0 || K <= 0) throw std::invalid_argument("closure penalty needs k >= 0 and K > 0");
}

double ClosurePenaltyObjective::value(const Trajectory& traj, const ControlPolicy&) const {
  if (k_ + K_ > traj.steps()) throw TrajectoryTooShort(k_ + K_, traj.steps());
  return -(traj.values.col(k_ + K_) - traj.values.col(k_)).squaredNorm();
}

ad::Rev ClosurePenaltyObjective::build(const RevGrid& sigma, const RevGrid&) const {
  if (k_ + K_ > sigma.cols - 1) throw TrajectoryTooShort(k_ + K_, sigma.cols - 1);
  ad::Rev acc(0.0);
  for (int r = 0; r < sigma.rows; ++r) {
    ad::Rev d = sigma.at(r, k_ + K_) - sigma.at(r, k_);
    acc = acc + d * d;
  }
  return -acc;
}

void CompositeObjective::add(double weight, std::shared_ptr<const Objective> part) {
  parts_.emplace_back(weight, std::move(part));
}

double CompositeObjective::value(const Trajectory& traj, const ControlPolicy& u) const {
  double acc = 0.0;
  for (const auto& [w, part] : parts_) acc += w * part->value(traj, u);
  return acc;
}

ad::Rev CompositeObjective::build(const RevGrid& sigma, const RevGrid& u) const {
  ad::Rev acc(0.0);
  for (const auto& [w, part] : parts_) acc = acc + ad::Rev(w) * part->build(sigma, u);
  return acc;
}

SignalGradient grad_wrt_signal(const Objective& Q, const Trajectory& traj, const ControlPolicy& u) {
  const int n = traj.dim();
  const int cols = traj.steps() + 1;
  const int m = static_cast<int>(u.rows());
  const int L = static_cast<int>(u.cols());

  ad::Tape tape;
  RevGrid sigma(n, cols);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < n; ++r) sigma.at(r, c) = ad::make_leaf(tape, traj.values(r, c));
  RevGrid uu(m, L);
  for (int c = 0; c < L; ++c)
    for (int r = 0; r < m; ++r) uu.at(r, c) = ad::make_leaf(tape, u(r, c));

  ad::Rev out = Q.build(sigma, uu);

  SignalGradient result;
  result.value = out.val;
  result.d_sigma = Eigen::MatrixXd::Zero(n, cols);
  result.d_control = Eigen::MatrixXd::Zero(m, L);
  if (out.is_const()) return result;  // objective ignores its inputs

  std::vector<double> adj = tape.gradient(out.idx);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < n; ++r) result.d_sigma(r, c) = adj[static_cast<std::size_t>(sigma.at(r, c).idx)];
  for (int c = 0; c < L; ++c)
    for (int r = 0; r < m; ++r) result.d_control(r, c) = adj[static_cast<std::size_t>(uu.at(r, c).idx)];
  return result;
}

Eigen::MatrixXd adjoint_controls(const Eigen::MatrixXd& d_sigma, const SystemModel& sys,
                                 const Trajectory& traj, const ControlPolicy& u,
                                 const Eigen::MatrixXd& d_control_direct) {
  const int L = static_cast<int>(u.cols());
  if (traj.steps() != L || d_sigma.cols() != L + 1 || d_sigma.rows() != sys.n ||
      d_control_direct.rows() != sys.m || d_control_direct.cols() != L) {
    throw std::invalid_argument("adjoint_controls: shape mismatch between trajectory, policy and gradients");
  }
  Eigen::MatrixXd zeta(sys.m, L);
  Eigen::VectorXd delta = d_sigma.col(L);
  for (int k = L - 1; k >= 0; --k) {
    const Eigen::VectorXd s = traj.values.col(k);
    const Eigen::VectorXd uk = u.col(k);
    zeta.col(k) = d_control_direct.col(k) + sys.jac_control(s, uk).transpose() * delta;
    delta = d_sigma.col(k) + sys.jac_state(s, uk).transpose() * delta;
  }
  return zeta;
}

PolicyGradient policy_gradient(const Objective& Q, const SystemModel& sys, const Trajectory& traj,
                               const ControlPolicy& u) {
  SignalGradient sg = grad_wrt_signal(Q, traj, u);
  PolicyGradient pg;
  pg.value = sg.value;
  pg.grad = adjoint_controls(sg.d_sigma, sys, traj, u, sg.d_control);
  return pg;
}

}  // namespace stlsynth
