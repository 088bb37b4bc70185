#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "uavsim/planner.hpp"
#include "uavsim/world.hpp"

namespace uavsim {

/// Timestamped position observations of one tracked target.
struct TrackHistory {
  struct Observation {
    double t = 0;
    Vec3 position = Vec3::Zero();
  };
  std::vector<Observation> observations;

  void push(double t, const Vec3& position);
};

struct PredictionResult {
  Path path;
  bool fallback = false;  // dynamics-aware prediction fell back to linear
};

/// Constant-velocity extrapolation from the last two observations
/// (first-order Markov: older history is ignored).
PredictionResult predict_linear(const TrackHistory& history, double horizon, double resolution);

/// Infers thrust and small-angle attitude consistent with the vertical
/// dynamics from the last three observations and propagates the nonlinear
/// model holding that input. Falls back to predict_linear when the
/// inferred thrust is infeasible.
PredictionResult predict_dynamics(const TrackHistory& history, const VehicleParams& assumed_params,
                                  double horizon, double resolution);

/// Constant-velocity propagation with the repulsion correction applied at
/// each step against the known obstacle set.
PredictionResult predict_obstacle_aware(const TrackHistory& history,
                                        const std::vector<Obstacle>& obstacles, double gain,
                                        double horizon, double resolution);

/// Position-velocity Kalman filter template. Transition and measurement
/// functions are pluggable; their Jacobians are numerical central
/// differences, so extending the template needs no hand derivatives.
struct EkfState {
  Eigen::Matrix<double, 6, 1> mean = Eigen::Matrix<double, 6, 1>::Zero();  // position, velocity
  Eigen::Matrix<double, 6, 6> covariance = Eigen::Matrix<double, 6, 6>::Identity();
  Eigen::Matrix<double, 6, 6> process_noise = Eigen::Matrix<double, 6, 6>::Identity() * 1e-4;
  Eigen::Matrix<double, 3, 3> measurement_noise = Eigen::Matrix<double, 3, 3>::Identity() * 1e-2;
};

using EkfTransition =
    std::function<Eigen::Matrix<double, 6, 1>(const Eigen::Matrix<double, 6, 1>&, double dt)>;
using EkfMeasurement = std::function<Vec3(const Eigen::Matrix<double, 6, 1>&)>;

EkfTransition constant_velocity_transition();
EkfMeasurement position_measurement();

/// One predict(+update) cycle. Covariance is symmetrized after the update
/// (Joseph form); losing positive definiteness throws std::runtime_error.
EkfState ekf_step(const EkfState& state, double dt, const std::optional<Vec3>& measurement,
                  const EkfTransition& transition = constant_velocity_transition(),
                  const EkfMeasurement& measure = position_measurement());

}  // namespace uavsim
