#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stlsynth/autodiff.hpp"
#include "stlsynth/trajectory.hpp"

namespace stlsynth {

// Control sequence; column k is the input applied at step k.
using ControlPolicy = Eigen::MatrixXd;  // m x L

// Hyper-rectangle of admissible inputs.
struct ControlBox {
  Eigen::VectorXd lo, hi;
};

// Per-dimension optional state bounds; unbounded components (e.g. a heading
// angle) carry no entry and contribute no constraint.
struct StateBounds {
  std::vector<std::optional<double>> lo, hi;
};

// Discrete-time system sigma[k+1] = f(sigma[k], u[k]) with analytic
// Jacobians. Models are immutable descriptions; simulation is pure.
struct SystemModel {
  std::string name;
  int n = 0;  // state dimension
  int m = 0;  // control dimension
  double dt = 1.0;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&, const Eigen::VectorXd&)> step;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&, const Eigen::VectorXd&)> jac_state;    // n x n
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&, const Eigen::VectorXd&)> jac_control;  // n x m
  ControlBox control_box;
  StateBounds state_bounds;
};

// Additive i.i.d. Gaussian disturbance per step and state component.
struct NoiseSpec {
  Eigen::VectorXd stddev;
  std::uint64_t seed = 0;
};

// Stage cost J(sigma[k], u[k], sigma[k+1]), with a taped form so exact
// gradients flow through the same definition.
struct CostFunction {
  std::string name;
  std::function<double(const Eigen::VectorXd&, const Eigen::VectorXd&, const Eigen::VectorXd&)> value;
  std::function<ad::Rev(std::span<const ad::Rev>, std::span<const ad::Rev>, std::span<const ad::Rev>)> build;
};

Trajectory simulate(const SystemModel& sys, const Eigen::VectorXd& gamma, const ControlPolicy& u);
Trajectory simulate_noisy(const SystemModel& sys, const NoiseSpec& noise, const Eigen::VectorXd& gamma,
                          const ControlPolicy& u);

// Sum of stage costs along a trajectory.
double total_cost(const CostFunction& J, const Trajectory& traj, const ControlPolicy& u);

// Unicycle kinematics with speed/turn-rate input, U = [0,2] x [-0.75,0.75],
// positions constrained to [0,7]^2.
SystemModel dubins_model(double dt);

// x[k+1] = [[1,0.5],[0,0.8]] x[k] + [0,1]^T u[k]; the control is scalar and
// nominally unconstrained, boxed to +-bound for projection.
SystemModel linear_model(double control_bound = 10.0);

// One-dimensional sigma' = sigma + u, for tests and small demos.
SystemModel integrator_model(double u_lo = -1.0, double u_hi = 1.0);

// Block-diagonal composition of two systems (states and inputs stacked).
SystemModel product_model(const SystemModel& a, const SystemModel& b, const std::string& name = "");

// Two dubins vehicles as one 6-state, 4-input system.
SystemModel two_vehicle_model(double dt);

CostFunction quadratic_motion_cost();  // ||sigma[k+1] - sigma[k]||^2
CostFunction control_effort_cost();    // ||u[k]||^2

}  // namespace stlsynth
