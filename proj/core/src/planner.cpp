#include "uavsim/planner.hpp"

#include <cmath>
#include <stdexcept>

namespace uavsim {

double AxisPolynomial::position(double t) const {
  double acc = 0;
  for (int i = 5; i >= 0; --i) acc = acc * t + c[i];
  return acc;
}

double AxisPolynomial::velocity(double t) const {
  double acc = 0;
  for (int i = 5; i >= 1; --i) acc = acc * t + i * c[i];
  return acc;
}

double AxisPolynomial::acceleration(double t) const {
  double acc = 0;
  for (int i = 5; i >= 2; --i) acc = acc * t + i * (i - 1) * c[i];
  return acc;
}

AxisPolynomial solve_quintic(double p0, double v0, double a0, double p1, double v1, double a1,
                             double total_time) {
  const double t = total_time;
  const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
  AxisPolynomial poly;
  poly.c[0] = p0;
  poly.c[1] = v0;
  poly.c[2] = a0 / 2.0;
  poly.c[3] = (20.0 * (p1 - p0) - (8.0 * v1 + 12.0 * v0) * t - (3.0 * a0 - a1) * t2) / (2.0 * t3);
  poly.c[4] = (30.0 * (p0 - p1) + (14.0 * v1 + 16.0 * v0) * t + (3.0 * a0 - 2.0 * a1) * t2) / (2.0 * t4);
  poly.c[5] = (12.0 * (p1 - p0) - 6.0 * (v1 + v0) * t - (a0 - a1) * t2) / (2.0 * t5);
  return poly;
}

Trajectory::Trajectory(const PlanRequest& request) {
  if (!request.valid()) throw std::invalid_argument("plan: invalid request (T, resolution or non-finite states)");
  total_time_ = request.total_time;

  const Vec3 p0 = request.start.position(), p1 = request.goal.position();
  const Vec3 v0 = request.start.velocity(), v1 = request.goal.velocity();
  for (int i = 0; i < 3; ++i) {
    axes_[i] = solve_quintic(p0[i], v0[i], 0.0, p1[i], v1[i], 0.0, total_time_);
  }
  yaw_start_ = request.start.psi;
  yaw_delta_ = wrap_angle(request.goal.psi - request.start.psi);
}

double Trajectory::yaw_at(double t) const {
  return wrap_angle(yaw_start_ + yaw_delta_ * (t / total_time_));
}

PathSample Trajectory::evaluate(double t, bool* clamped) const {
  bool out_of_range = false;
  if (t < 0) {
    t = 0;
    out_of_range = true;
  } else if (t > total_time_) {
    t = total_time_;
    out_of_range = true;
  }
  if (clamped != nullptr) *clamped = out_of_range;

  PathSample s;
  s.t = t;
  for (int i = 0; i < 3; ++i) {
    s.position[i] = axes_[i].position(t);
    s.velocity[i] = axes_[i].velocity(t);
    s.acceleration[i] = axes_[i].acceleration(t);
  }
  s.yaw = yaw_at(t);
  return s;
}

Path Trajectory::sample(double resolution) const {
  Path path;
  const double tol = 1e-9 * std::max(1.0, total_time_);
  for (int k = 0;; ++k) {
    const double t = k * resolution;
    if (t >= total_time_ - tol) break;
    path.samples.push_back(evaluate(t));
  }
  path.samples.push_back(evaluate(total_time_));
  return path;
}

PlanResult plan(const PlanRequest& request) {
  Trajectory traj(request);
  Path path = traj.sample(request.resolution);

  PlanStats stats;
  for (const PathSample& s : path.samples) {
    stats.max_speed = std::max(stats.max_speed, s.velocity.norm());
    stats.max_accel = std::max(stats.max_accel, s.acceleration.norm());
  }
  if (request.max_speed && stats.max_speed > *request.max_speed) stats.limits_violated = true;
  if (request.max_accel && stats.max_accel > *request.max_accel) stats.limits_violated = true;

  return PlanResult{std::move(traj), std::move(path), stats};
}

}  // namespace uavsim
