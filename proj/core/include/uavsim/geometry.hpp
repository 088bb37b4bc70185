#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

namespace uavsim {

using Vec3 = Eigen::Vector3d;
using StateVec = Eigen::Matrix<double, 12, 1>;
using InputVec = Eigen::Matrix<double, 4, 1>;
using Mat12 = Eigen::Matrix<double, 12, 12>;
using Mat12x4 = Eigen::Matrix<double, 12, 4>;
using Mat4 = Eigen::Matrix<double, 4, 4>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Wraps an angle into (-pi, pi].
inline double wrap_angle(double a) {
  double r = std::remainder(a, kTwoPi);
  if (r <= -std::numbers::pi) r = std::numbers::pi;
  return r;
}

/// Body-to-world rotation for ZYX Euler angles (roll phi, pitch theta, yaw psi).
inline Eigen::Matrix3d body_to_world(double phi, double theta, double psi) {
  const double cf = std::cos(phi), sf = std::sin(phi);
  const double ct = std::cos(theta), st = std::sin(theta);
  const double cp = std::cos(psi), sp = std::sin(psi);
  Eigen::Matrix3d r;
  r << cp * ct, cp * st * sf - sp * cf, cp * st * cf + sp * sf,
       sp * ct, sp * st * sf + cp * cf, sp * st * cf - cp * sf,
       -st,     ct * sf,                ct * cf;
  return r;
}

/// Maps Euler-angle rates (phi_dot, theta_dot, psi_dot) to body rates (p, q, r).
inline Vec3 euler_rates_to_body_rates(double phi, double theta, const Vec3& euler_rates) {
  const double cf = std::cos(phi), sf = std::sin(phi);
  const double ct = std::cos(theta), st = std::sin(theta);
  const double fd = euler_rates.x(), td = euler_rates.y(), pd = euler_rates.z();
  return {fd - pd * st,
          td * cf + pd * sf * ct,
          -td * sf + pd * cf * ct};
}

}  // namespace uavsim
