#include "uavsim/prediction.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace uavsim {

void TrackHistory::push(double t, const Vec3& position) {
  if (!observations.empty() && t <= observations.back().t) {
    throw std::invalid_argument("TrackHistory: observation times must strictly increase");
  }
  observations.push_back({t, position});
}

namespace {

std::vector<double> prediction_times(double t0, double horizon, double resolution) {
  std::vector<double> ts;
  const double tol = 1e-9 * std::max(1.0, horizon);
  for (int k = 1;; ++k) {
    const double offset = k * resolution;
    if (offset > horizon + tol) break;
    ts.push_back(t0 + offset);
  }
  return ts;
}

PathSample make_sample(double t, const Vec3& position, const Vec3& velocity) {
  PathSample s;
  s.t = t;
  s.position = position;
  s.velocity = velocity;
  return s;
}

}  // namespace

PredictionResult predict_linear(const TrackHistory& history, double horizon, double resolution) {
  const auto& obs = history.observations;
  if (obs.size() < 2) throw std::invalid_argument("predict_linear: need at least 2 observations");

  const auto& prev = obs[obs.size() - 2];
  const auto& last = obs.back();
  const Vec3 velocity = (last.position - prev.position) / (last.t - prev.t);

  PredictionResult result;
  for (double t : prediction_times(last.t, horizon, resolution)) {
    result.path.samples.push_back(make_sample(t, last.position + velocity * (t - last.t), velocity));
  }
  return result;
}

PredictionResult predict_dynamics(const TrackHistory& history, const VehicleParams& assumed_params,
                                  double horizon, double resolution) {
  const auto& obs = history.observations;
  if (obs.size() < 3) throw std::invalid_argument("predict_dynamics: need at least 3 observations");

  const auto& o1 = obs[obs.size() - 3];
  const auto& o2 = obs[obs.size() - 2];
  const auto& o3 = obs.back();
  const Vec3 v_recent = (o3.position - o2.position) / (o3.t - o2.t);
  const Vec3 v_older = (o2.position - o1.position) / (o2.t - o1.t);
  const Vec3 accel = (v_recent - v_older) / ((o3.t - o1.t) / 2.0);

  // Invert the vertical dynamics for thrust at small attitude:
  // z'' = g - ft/m  =>  ft = m (g - z'').
  const double ft = assumed_params.m * (assumed_params.g - accel.z());
  if (ft < 0 || ft > assumed_params.ft_max) {
    PredictionResult fallback = predict_linear(history, horizon, resolution);
    fallback.fallback = true;
    return fallback;
  }

  // Small-angle attitude from horizontal acceleration (yaw taken as zero):
  // x'' ~ -g theta, y'' ~ g phi.
  const double g = assumed_params.g;
  UavState state;
  state.x = o3.position.x();
  state.y = o3.position.y();
  state.z = o3.position.z();
  state.vx = v_recent.x();
  state.vy = v_recent.y();
  state.vz = v_recent.z();
  state.theta = -accel.x() / g;
  state.phi = accel.y() / g;

  const ControlInput input{ft, 0, 0, 0};
  PredictionResult result;
  double t = o3.t;
  for (double target : prediction_times(o3.t, horizon, resolution)) {
    // Integrate in fixed sub-steps no larger than the resolution.
    state = step(state, input, assumed_params, target - t);
    t = target;
    result.path.samples.push_back(make_sample(t, state.position(), state.velocity()));
  }
  return result;
}

PredictionResult predict_obstacle_aware(const TrackHistory& history,
                                        const std::vector<Obstacle>& obstacles, double gain,
                                        double horizon, double resolution) {
  const auto& obs = history.observations;
  if (obs.size() < 2) {
    throw std::invalid_argument("predict_obstacle_aware: need at least 2 observations");
  }
  const auto& prev = obs[obs.size() - 2];
  const auto& last = obs.back();
  const Vec3 velocity = (last.position - prev.position) / (last.t - prev.t);

  constexpr double kSaturation = 5.0;
  PredictionResult result;
  Vec3 position = last.position;
  double t = last.t;
  for (double target : prediction_times(last.t, horizon, resolution)) {
    const double dt = target - t;
    const Vec3 correction = repulsion(position, velocity, obstacles, gain, kSaturation);
    position += (velocity + correction) * dt;
    t = target;
    result.path.samples.push_back(make_sample(t, position, velocity + correction));
  }
  return result;
}

EkfTransition constant_velocity_transition() {
  return [](const Eigen::Matrix<double, 6, 1>& x, double dt) {
    Eigen::Matrix<double, 6, 1> next = x;
    next.head<3>() += x.tail<3>() * dt;
    return next;
  };
}

EkfMeasurement position_measurement() {
  return [](const Eigen::Matrix<double, 6, 1>& x) { return Vec3(x.head<3>()); };
}

namespace {

Eigen::Matrix<double, 6, 6> transition_jacobian(const EkfTransition& f,
                                                const Eigen::Matrix<double, 6, 1>& x, double dt) {
  constexpr double eps = 1e-6;
  Eigen::Matrix<double, 6, 6> jac;
  for (int j = 0; j < 6; ++j) {
    Eigen::Matrix<double, 6, 1> plus = x, minus = x;
    plus[j] += eps;
    minus[j] -= eps;
    jac.col(j) = (f(plus, dt) - f(minus, dt)) / (2.0 * eps);
  }
  return jac;
}

Eigen::Matrix<double, 3, 6> measurement_jacobian(const EkfMeasurement& h,
                                                 const Eigen::Matrix<double, 6, 1>& x) {
  constexpr double eps = 1e-6;
  Eigen::Matrix<double, 3, 6> jac;
  for (int j = 0; j < 6; ++j) {
    Eigen::Matrix<double, 6, 1> plus = x, minus = x;
    plus[j] += eps;
    minus[j] -= eps;
    jac.col(j) = (h(plus) - h(minus)) / (2.0 * eps);
  }
  return jac;
}

void require_positive_definite(const Eigen::Matrix<double, 6, 6>& p) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 6, 6>> es(p);
  if (es.eigenvalues().minCoeff() <= 0) {
    throw std::runtime_error("ekf_step: covariance lost positive definiteness (filter diverged)");
  }
}

}  // namespace

EkfState ekf_step(const EkfState& state, double dt, const std::optional<Vec3>& measurement,
                  const EkfTransition& transition, const EkfMeasurement& measure) {
  EkfState next = state;

  const Eigen::Matrix<double, 6, 6> f = transition_jacobian(transition, state.mean, dt);
  next.mean = transition(state.mean, dt);
  next.covariance = f * state.covariance * f.transpose() + state.process_noise;
  next.covariance = 0.5 * (next.covariance + next.covariance.transpose().eval());

  if (measurement) {
    const Eigen::Matrix<double, 3, 6> h = measurement_jacobian(measure, next.mean);
    const Eigen::Matrix<double, 3, 3> s =
        h * next.covariance * h.transpose() + state.measurement_noise;
    const Eigen::Matrix<double, 6, 3> gain = next.covariance * h.transpose() * s.inverse();
    next.mean += gain * (*measurement - measure(next.mean));
    const Eigen::Matrix<double, 6, 6> ikh = Eigen::Matrix<double, 6, 6>::Identity() - gain * h;
    // Joseph form, then symmetrize.
    next.covariance = ikh * next.covariance * ikh.transpose() +
                      gain * state.measurement_noise * gain.transpose();
    next.covariance = 0.5 * (next.covariance + next.covariance.transpose().eval());
  }

  require_positive_definite(next.covariance);
  return next;
}

}  // namespace uavsim
