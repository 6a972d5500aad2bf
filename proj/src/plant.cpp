#include "stlsynth/plant.hpp"

#include <cmath>
#include <stdexcept>

#include "stlsynth/rng.hpp"

namespace stlsynth {

static void check_shapes(const SystemModel& sys, const Eigen::VectorXd& gamma, const ControlPolicy& u) {
  if (gamma.size() != sys.n) {
    throw std::invalid_argument("initial state has dimension " + std::to_string(gamma.size()) +
                                ", system expects " + std::to_string(sys.n));
  }
  if (u.rows() != sys.m) {
    throw std::invalid_argument("policy has " + std::to_string(u.rows()) + " control rows, system expects " +
                                std::to_string(sys.m));
  }
}

static void check_finite(const Eigen::VectorXd& x, int step) {
  if (!x.allFinite()) {
    throw std::runtime_error("simulation produced a non-finite state at step " + std::to_string(step));
  }
}

Trajectory simulate(const SystemModel& sys, const Eigen::VectorXd& gamma, const ControlPolicy& u) {
  check_shapes(sys, gamma, u);
  const int L = static_cast<int>(u.cols());
  Trajectory traj;
  traj.dt = sys.dt;
  traj.values.resize(sys.n, L + 1);
  traj.values.col(0) = gamma;
  check_finite(gamma, 0);
  for (int k = 0; k < L; ++k) {
    traj.values.col(k + 1) = sys.step(traj.values.col(k), u.col(k));
    check_finite(traj.values.col(k + 1), k + 1);
  }
  return traj;
}

Trajectory simulate_noisy(const SystemModel& sys, const NoiseSpec& noise, const Eigen::VectorXd& gamma,
                          const ControlPolicy& u) {
  check_shapes(sys, gamma, u);
  if (noise.stddev.size() != sys.n) {
    throw std::invalid_argument("noise stddev has dimension " + std::to_string(noise.stddev.size()) +
                                ", system expects " + std::to_string(sys.n));
  }
  const int L = static_cast<int>(u.cols());
  Trajectory traj;
  traj.dt = sys.dt;
  traj.values.resize(sys.n, L + 1);
  traj.values.col(0) = gamma;
  check_finite(gamma, 0);
  for (int k = 0; k < L; ++k) {
    Eigen::VectorXd next = sys.step(traj.values.col(k), u.col(k));
    // one stream per step so the disturbance at step k depends only on
    // (seed, k), independent of policy length
    rng::Stream stream(rng::derive(noise.seed, static_cast<std::uint64_t>(k) + 1));
    for (int i = 0; i < sys.n; ++i) {
      if (noise.stddev[i] > 0) next[i] += noise.stddev[i] * stream.normal();
    }
    traj.values.col(k + 1) = next;
    check_finite(traj.values.col(k + 1), k + 1);
  }
  return traj;
}

double total_cost(const CostFunction& J, const Trajectory& traj, const ControlPolicy& u) {
  double sum = 0.0;
  for (int k = 0; k < u.cols(); ++k) {
    sum += J.value(traj.values.col(k), u.col(k), traj.values.col(k + 1));
  }
  return sum;
}

SystemModel dubins_model(double dt) {
  SystemModel sys;
  sys.name = "dubins";
  sys.n = 3;
  sys.m = 2;
  sys.dt = dt;
  sys.step = [dt](const Eigen::VectorXd& s, const Eigen::VectorXd& u) {
    Eigen::VectorXd next(3);
    next[0] = s[0] + std::cos(s[2]) * u[0] * dt;
    next[1] = s[1] + std::sin(s[2]) * u[0] * dt;
    next[2] = s[2] + u[0] * u[1] * dt;
    return next;
  };
  sys.jac_state = [dt](const Eigen::VectorXd& s, const Eigen::VectorXd& u) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Identity(3, 3);
    J(0, 2) = -std::sin(s[2]) * u[0] * dt;
    J(1, 2) = std::cos(s[2]) * u[0] * dt;
    return J;
  };
  sys.jac_control = [dt](const Eigen::VectorXd& s, const Eigen::VectorXd& u) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(3, 2);
    J(0, 0) = std::cos(s[2]) * dt;
    J(1, 0) = std::sin(s[2]) * dt;
    J(2, 0) = u[1] * dt;
    J(2, 1) = u[0] * dt;
    return J;
  };
  sys.control_box.lo = Eigen::Vector2d(0.0, -0.75);
  sys.control_box.hi = Eigen::Vector2d(2.0, 0.75);
  sys.state_bounds.lo = {0.0, 0.0, std::nullopt};
  sys.state_bounds.hi = {7.0, 7.0, std::nullopt};
  return sys;
}

SystemModel linear_model(double control_bound) {
  SystemModel sys;
  sys.name = "linear";
  sys.n = 2;
  sys.m = 1;
  sys.dt = 1.0;
  Eigen::Matrix2d A;
  A << 1.0, 0.5, 0.0, 0.8;
  Eigen::Vector2d B(0.0, 1.0);
  sys.step = [A, B](const Eigen::VectorXd& s, const Eigen::VectorXd& u) -> Eigen::VectorXd {
    return A * s + B * u[0];
  };
  sys.jac_state = [A](const Eigen::VectorXd&, const Eigen::VectorXd&) -> Eigen::MatrixXd { return A; };
  sys.jac_control = [B](const Eigen::VectorXd&, const Eigen::VectorXd&) -> Eigen::MatrixXd { return B; };
  sys.control_box.lo = Eigen::VectorXd::Constant(1, -control_bound);
  sys.control_box.hi = Eigen::VectorXd::Constant(1, control_bound);
  sys.state_bounds.lo = {std::nullopt, std::nullopt};
  sys.state_bounds.hi = {std::nullopt, std::nullopt};
  return sys;
}

SystemModel integrator_model(double u_lo, double u_hi) {
  SystemModel sys;
  sys.name = "integrator";
  sys.n = 1;
  sys.m = 1;
  sys.dt = 1.0;
  sys.step = [](const Eigen::VectorXd& s, const Eigen::VectorXd& u) -> Eigen::VectorXd {
    return s + u;
  };
  sys.jac_state = [](const Eigen::VectorXd&, const Eigen::VectorXd&) -> Eigen::MatrixXd {
    return Eigen::MatrixXd::Identity(1, 1);
  };
  sys.jac_control = [](const Eigen::VectorXd&, const Eigen::VectorXd&) -> Eigen::MatrixXd {
    return Eigen::MatrixXd::Identity(1, 1);
  };
  sys.control_box.lo = Eigen::VectorXd::Constant(1, u_lo);
  sys.control_box.hi = Eigen::VectorXd::Constant(1, u_hi);
  sys.state_bounds.lo = {std::nullopt};
  sys.state_bounds.hi = {std::nullopt};
  return sys;
}

SystemModel product_model(const SystemModel& a, const SystemModel& b, const std::string& name) {
  SystemModel sys;
  sys.name = name.empty() ? a.name + "+" + b.name : name;
  sys.n = a.n + b.n;
  sys.m = a.m + b.m;
  sys.dt = a.dt;
  const int na = a.n, nb = b.n, ma = a.m, mb = b.m;
  auto fa = a.step, fb = b.step;
  sys.step = [fa, fb, na, nb, ma, mb](const Eigen::VectorXd& s, const Eigen::VectorXd& u) {
    Eigen::VectorXd next(na + nb);
    next.head(na) = fa(s.head(na), u.head(ma));
    next.tail(nb) = fb(s.tail(nb), u.tail(mb));
    return next;
  };
  auto ja = a.jac_state, jb = b.jac_state;
  sys.jac_state = [ja, jb, na, nb, ma, mb](const Eigen::VectorXd& s, const Eigen::VectorXd& u) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(na + nb, na + nb);
    J.topLeftCorner(na, na) = ja(s.head(na), u.head(ma));
    J.bottomRightCorner(nb, nb) = jb(s.tail(nb), u.tail(mb));
    return J;
  };
  auto ga = a.jac_control, gb = b.jac_control;
  sys.jac_control = [ga, gb, na, nb, ma, mb](const Eigen::VectorXd& s, const Eigen::VectorXd& u) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(na + nb, ma + mb);
    J.topLeftCorner(na, ma) = ga(s.head(na), u.head(ma));
    J.bottomRightCorner(nb, mb) = gb(s.tail(nb), u.tail(mb));
    return J;
  };
  sys.control_box.lo.resize(ma + mb);
  sys.control_box.hi.resize(ma + mb);
  sys.control_box.lo << a.control_box.lo, b.control_box.lo;
  sys.control_box.hi << a.control_box.hi, b.control_box.hi;
  sys.state_bounds.lo = a.state_bounds.lo;
  sys.state_bounds.hi = a.state_bounds.hi;
  sys.state_bounds.lo.insert(sys.state_bounds.lo.end(), b.state_bounds.lo.begin(), b.state_bounds.lo.end());
  sys.state_bounds.hi.insert(sys.state_bounds.hi.end(), b.state_bounds.hi.begin(), b.state_bounds.hi.end());
  return sys;
}

SystemModel two_vehicle_model(double dt) {
  SystemModel base = dubins_model(dt);
  return product_model(base, base, "dubins2");
}

CostFunction quadratic_motion_cost() {
  CostFunction J;
  J.name = "motion";
  J.value = [](const Eigen::VectorXd& s, const Eigen::VectorXd&, const Eigen::VectorXd& s1) {
    return (s1 - s).squaredNorm();
  };
  J.build = [](std::span<const ad::Rev> s, std::span<const ad::Rev>, std::span<const ad::Rev> s1) {
    ad::Rev acc(0.0);
    for (std::size_t i = 0; i < s.size(); ++i) {
      ad::Rev d = s1[i] - s[i];
      acc = acc + d * d;
    }
    return acc;
  };
  return J;
}

CostFunction control_effort_cost() {
  CostFunction J;
  J.name = "effort";
  J.value = [](const Eigen::VectorXd&, const Eigen::VectorXd& u, const Eigen::VectorXd&) {
    return u.squaredNorm();
  };
  J.build = [](std::span<const ad::Rev>, std::span<const ad::Rev> u, std::span<const ad::Rev>) {
    ad::Rev acc(0.0);
    for (const ad::Rev& ui : u) acc = acc + ui * ui;
    return acc;
  };
  return J;
}

}  // namespace stlsynth
