#pragma once

#include <array>
#include <optional>
#include <vector>

#include "uavsim/vehicle.hpp"

namespace uavsim {

struct PlanRequest {
  UavState start;
  UavState goal;
  double total_time = 0;   // T, s
  double resolution = 0;   // sample period, s
  // Optional post-hoc limits; exceeding them flags the plan, it is not
  // re-optimized.
  std::optional<double> max_speed;
  std::optional<double> max_accel;

  bool valid() const {
    return total_time > 0 && resolution > 0 && resolution <= total_time &&
           start.all_finite() && goal.all_finite();
  }
};

struct PathSample {
  double t = 0;
  Vec3 position = Vec3::Zero();
  Vec3 velocity = Vec3::Zero();
  Vec3 acceleration = Vec3::Zero();
  double yaw = 0;
};

struct Path {
  std::vector<PathSample> samples;
};

/// One axis of the plan: position polynomial c0 + c1 t + ... + c5 t^5.
struct AxisPolynomial {
  std::array<double, 6> c{};

  double position(double t) const;
  double velocity(double t) const;
  double acceleration(double t) const;
};

/// Minimum-jerk trajectory: three independent quintic axis polynomials
/// satisfying boundary position/velocity with zero boundary acceleration,
/// plus linear yaw interpolation along the shortest angular direction.
class Trajectory {
 public:
  Trajectory(const PlanRequest& request);

  double total_time() const { return total_time_; }

  /// Position, velocity, acceleration at time t. Out-of-range t is clamped
  /// to [0, T]; `clamped` reports when that happened.
  PathSample evaluate(double t, bool* clamped = nullptr) const;

  /// Samples at 0, resolution, 2*resolution, ... with a final sample at
  /// exactly T.
  Path sample(double resolution) const;

  const AxisPolynomial& axis(int i) const { return axes_[i]; }
  double yaw_at(double t) const;

 private:
  std::array<AxisPolynomial, 3> axes_;
  double yaw_start_ = 0, yaw_delta_ = 0;
  double total_time_ = 0;
};

struct PlanStats {
  double max_speed = 0;
  double max_accel = 0;
  bool limits_violated = false;
};

struct PlanResult {
  Trajectory trajectory;
  Path path;
  PlanStats stats;
};

/// Plans a single-segment minimum-jerk mission. Throws std::invalid_argument
/// when the request violates its invariants.
PlanResult plan(const PlanRequest& request);

/// Quintic coefficients for one axis given boundary position/velocity/
/// acceleration at t=0 and t=T.
AxisPolynomial solve_quintic(double p0, double v0, double a0, double p1, double v1, double a1,
                             double total_time);

}  // namespace uavsim
