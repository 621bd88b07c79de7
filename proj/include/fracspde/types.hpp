#pragma once

#include <Eigen/Core>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fracspde {

using Scalar = double;
using Vector = Eigen::ArrayXd;   // coefficient-wise path/sequence storage
using Matrix = Eigen::MatrixXd;

// Bad user input: rejected before any computation starts.
struct validation_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A numerical procedure failed to deliver its accuracy contract
// (quadrature non-convergence, factorization failure, ...).
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An estimator's non-degeneracy precondition fails on this model/data.
struct degeneracy_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Uniform grid t_i = i*T/n, i = 0..n.
class TimeGrid {
 public:
  TimeGrid(Scalar horizon, int steps) : horizon_(horizon), steps_(steps) {
    if (!(horizon > 0.0) || !std::isfinite(horizon))
      throw validation_error("TimeGrid: horizon must be positive and finite");
    if (steps < 1) throw validation_error("TimeGrid: need at least one step");
  }

  Scalar horizon() const { return horizon_; }
  int steps() const { return steps_; }
  Scalar dt() const { return horizon_ / steps_; }
  Scalar point(int i) const { return horizon_ * Scalar(i) / steps_; }

  Vector points() const {
    return Vector::LinSpaced(steps_ + 1, 0.0, horizon_);
  }

  friend bool operator==(const TimeGrid& a, const TimeGrid& b) {
    return a.horizon_ == b.horizon_ && a.steps_ == b.steps_;
  }

 private:
  Scalar horizon_;
  int steps_;
};

inline void require_hurst(Scalar H, const char* where) {
  if (!(H > 0.0 && H < 1.0))
    throw validation_error(std::string(where) + ": Hurst parameter must lie in (0,1)");
}

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fracspde
