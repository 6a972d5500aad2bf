#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace stlsynth {

// Discrete-time n-dimensional signal; column k holds the state at step k.
// dt is informational (seconds per step); all semantics are in step indices.
struct Trajectory {
  Eigen::MatrixXd values;  // n x (L+1)
  double dt = 1.0;

  int dim() const { return static_cast<int>(values.rows()); }
  int steps() const { return static_cast<int>(values.cols()) - 1; }  // L
};

class TrajectoryTooShort : public std::runtime_error {
 public:
  TrajectoryTooShort(int required_steps, int actual_steps)
      : std::runtime_error("trajectory too short: evaluation needs " +
                           std::to_string(required_steps) + " steps, have " +
                           std::to_string(actual_steps)),
        required_(required_steps),
        actual_(actual_steps) {}
  int required_steps() const { return required_; }
  int actual_steps() const { return actual_; }

 private:
  int required_;
  int actual_;
};

}  // namespace stlsynth
