#pragma once

#include <vector>

#include "uavsim/planner.hpp"
#include "uavsim/vehicle.hpp"

namespace uavsim {

struct LqrWeights {
  Eigen::MatrixXd q;  // state cost, symmetric PSD
  Eigen::MatrixXd r;  // input cost, symmetric PD

  /// Q = diag(10,10,10, 5,5,5, 1,1,1, 1,1,1), R = diag(0.1, 10, 10, 10).
  static LqrWeights default_preset();
  /// Gentler preset: same Q, R scaled 10x (slower, smoother inputs).
  static LqrWeights soft_preset();
  static LqrWeights by_name(const std::string& name);
};

struct LqrGain {
  Eigen::MatrixXd k;  // feedback gain, m x n
  Eigen::MatrixXd p;  // stabilizing Riccati solution, n x n
  double residual = 0;  // max-abs entry of A'P + PA - PBR^-1B'P + Q
};

/// Solves the continuous algebraic Riccati equation
///   A'P + PA - P B R^-1 B' P + Q = 0
/// for the stabilizing solution by Newton-Kleinman iteration, bootstrapped
/// from a stabilizing gain built with an eigenvalue-shifted Lyapunov solve
/// (Bass' method). Throws std::runtime_error when the iteration fails to
/// reach the residual bound within the budget (non-stabilizable pair).
LqrGain solve_care(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const Eigen::MatrixXd& q,
                   const Eigen::MatrixXd& r, double residual_bound = 1e-8, int max_iterations = 60);

/// Solves A'X + XA + C = 0 for X (sizes up to ~20 are fine; dense
/// Kronecker-product linear solve).
Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& a, const Eigen::MatrixXd& c);

/// Largest real part over the eigenvalues of m.
double spectral_abscissa(const Eigen::MatrixXd& m);

struct ReferencePoint {
  Vec3 position = Vec3::Zero();
  Vec3 velocity = Vec3::Zero();
  Vec3 acceleration = Vec3::Zero();
  double yaw = 0;
};

struct ControlOptions {
  /// When set, adds the vertical feedforward ft += m * (-a_ref_z).
  bool vertical_feedforward = false;
};

/// u = clamp(u_hover - K (x - x_ref)). The reference state embeds position,
/// velocity and yaw from `ref` with zero roll/pitch and zero angular-rate
/// targets. Saturation is absorbed by clamping and reported via the flag.
ControlInput control_law(const LqrGain& gain, const UavState& state, const ReferencePoint& ref,
                         const ControlInput& u_hover, const VehicleParams& limits,
                         bool* saturated = nullptr, const ControlOptions& opts = {});

/// Builds the 12-vector reference state used by control_law.
StateVec reference_state(const ReferencePoint& ref);

struct TrackSample {
  double t = 0;
  UavState state;
  ReferencePoint reference;
  ControlInput input;
  double position_error = 0;
  double velocity_error = 0;
};

struct TrackLog {
  std::vector<TrackSample> samples;
  double max_position_error = 0;
  double terminal_position_error = 0;
};

/// Closed-loop simulation of control_law + step at a fixed dt over
/// [0, horizon]; the plan is held at its goal for t > T.
TrackLog track(const Trajectory& plan, const UavState& initial, const VehicleParams& params,
               const LqrWeights& weights, double dt, double horizon,
               const ControlOptions& opts = {});

}  // namespace uavsim
