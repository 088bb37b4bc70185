#pragma once

#include <stdexcept>

#include "uavsim/geometry.hpp"

namespace uavsim {

/// 12-dimensional quadrotor state.
///
/// Axis convention: z is positive DOWNWARD and gravity is a positive
/// constant acting along +z, so hover requires thrust ft = m*g opposing
/// +z and altitude above the ground plane equals -z. Angular-rate states
/// are Euler-angle rates (phi_dot, theta_dot, psi_dot), not body rates.
struct UavState {
  double x = 0, y = 0, z = 0;             // position, m
  double phi = 0, theta = 0, psi = 0;     // roll, pitch, yaw, rad
  double vx = 0, vy = 0, vz = 0;          // linear velocity, m/s
  double p_rate = 0, q_rate = 0, r_rate = 0;  // Euler-angle rates, rad/s

  StateVec to_vector() const;
  static UavState from_vector(const StateVec& v);

  Vec3 position() const { return {x, y, z}; }
  Vec3 velocity() const { return {vx, vy, vz}; }

  bool all_finite() const;
  /// Wraps the three Euler angles into (-pi, pi].
  void normalize_angles();
};

struct VehicleParams {
  double m = 1.0;        // mass, kg
  double g = 9.81;       // gravitational acceleration, m/s^2, acts along +z
  double ix = 0.01;      // principal moments of inertia, kg m^2
  double iy = 0.01;
  double iz = 0.02;
  double ft_max = 25.0;  // maximum total thrust, N
  double tau_max = 1.0;  // maximum torque magnitude per axis, N m

  bool valid() const {
    return m > 0 && g > 0 && ix > 0 && iy > 0 && iz > 0 && ft_max > m * g && tau_max > 0;
  }
};

struct ControlInput {
  double ft = 0;     // total thrust, N
  double tau_x = 0;  // body torques, N m
  double tau_y = 0;
  double tau_z = 0;

  InputVec to_vector() const { return InputVec{ft, tau_x, tau_y, tau_z}; }
  static ControlInput from_vector(const InputVec& u) { return {u[0], u[1], u[2], u[3]}; }
};

/// Clamps thrust to [0, ft_max] and each torque to [-tau_max, tau_max].
/// `saturated` reports whether any component was touched.
ControlInput clamp_input(const ControlInput& u, const VehicleParams& p, bool* saturated = nullptr);

/// Time derivative of the 12-state under the nonlinear rigid-body model:
///
///   x''   = -(ft/m) [ s(phi) s(psi) + c(phi) c(psi) s(theta) ]
///   y''   = -(ft/m) [ c(phi) s(psi) s(theta) - c(psi) s(phi) ]
///   z''   =  g - (ft/m) c(phi) c(theta)
///   phi''   = ((Iy - Iz)/Ix) theta' psi' + tau_x / Ix
///   theta'' = ((Iz - Ix)/Iy) phi' psi'   + tau_y / Iy
///   psi''   = ((Ix - Iy)/Iz) phi' theta' + tau_z / Iz
///
/// Returned ordering: [vx, vy, vz, p, q, r, ax, ay, az, ap, aq, ar].
StateVec derivative(const UavState& s, const ControlInput& u, const VehicleParams& p);

/// One fixed-step RK4 integration step. The input is clamped to actuator
/// limits first; angles are renormalized after the step. Throws
/// std::runtime_error if the result is non-finite (exploding scenario).
UavState step(const UavState& s, const ControlInput& u, const VehicleParams& p, double dt);

struct HoverLinearization {
  Mat12 a;
  Mat12x4 b;
  ControlInput u_hover;
};

/// Central-finite-difference Jacobians of `derivative` at the hover
/// equilibrium (zero state, ft = m*g, zero torques).
HoverLinearization linearize_hover(const VehicleParams& p, double epsilon = 1e-6);

}  // namespace uavsim
