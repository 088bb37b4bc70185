#include "uavsim/vehicle.hpp"

#include <cmath>

namespace uavsim {

StateVec UavState::to_vector() const {
  StateVec v;
  v << x, y, z, phi, theta, psi, vx, vy, vz, p_rate, q_rate, r_rate;
  return v;
}

UavState UavState::from_vector(const StateVec& v) {
  UavState s;
  s.x = v[0];
  s.y = v[1];
  s.z = v[2];
  s.phi = v[3];
  s.theta = v[4];
  s.psi = v[5];
  s.vx = v[6];
  s.vy = v[7];
  s.vz = v[8];
  s.p_rate = v[9];
  s.q_rate = v[10];
  s.r_rate = v[11];
  return s;
}

bool UavState::all_finite() const {
  return to_vector().allFinite();
}

void UavState::normalize_angles() {
  phi = wrap_angle(phi);
  theta = wrap_angle(theta);
  psi = wrap_angle(psi);
}

ControlInput clamp_input(const ControlInput& u, const VehicleParams& p, bool* saturated) {
  ControlInput c = u;
  bool sat = false;
  auto clamp = [&sat](double v, double lo, double hi) {
    if (v < lo) {
      sat = true;
      return lo;
    }
    if (v > hi) {
      sat = true;
      return hi;
    }
    return v;
  };
  c.ft = clamp(c.ft, 0.0, p.ft_max);
  c.tau_x = clamp(c.tau_x, -p.tau_max, p.tau_max);
  c.tau_y = clamp(c.tau_y, -p.tau_max, p.tau_max);
  c.tau_z = clamp(c.tau_z, -p.tau_max, p.tau_max);
  if (saturated != nullptr) *saturated = sat;
  return c;
}

StateVec derivative(const UavState& s, const ControlInput& u, const VehicleParams& p) {
  if (!s.all_finite()) throw std::runtime_error("derivative: non-finite input state");

  const double cf = std::cos(s.phi), sf = std::sin(s.phi);
  const double ct = std::cos(s.theta), st = std::sin(s.theta);
  const double cp = std::cos(s.psi), sp = std::sin(s.psi);
  const double a = u.ft / p.m;

  const double ax = -a * (sf * sp + cf * cp * st);
  const double ay = -a * (cf * sp * st - cp * sf);
  const double az = p.g - a * cf * ct;

  const double ap = ((p.iy - p.iz) / p.ix) * s.q_rate * s.r_rate + u.tau_x / p.ix;
  const double aq = ((p.iz - p.ix) / p.iy) * s.p_rate * s.r_rate + u.tau_y / p.iy;
  const double ar = ((p.ix - p.iy) / p.iz) * s.p_rate * s.q_rate + u.tau_z / p.iz;

  StateVec d;
  d << s.vx, s.vy, s.vz, s.p_rate, s.q_rate, s.r_rate, ax, ay, az, ap, aq, ar;
  return d;
}

UavState step(const UavState& s, const ControlInput& u, const VehicleParams& p, double dt) {
  if (dt <= 0) throw std::invalid_argument("step: dt must be positive");
  const ControlInput uc = clamp_input(u, p);

  const StateVec x0 = s.to_vector();
  const StateVec k1 = derivative(s, uc, p);
  const StateVec k2 = derivative(UavState::from_vector(x0 + 0.5 * dt * k1), uc, p);
  const StateVec k3 = derivative(UavState::from_vector(x0 + 0.5 * dt * k2), uc, p);
  const StateVec k4 = derivative(UavState::from_vector(x0 + dt * k3), uc, p);

  UavState next = UavState::from_vector(x0 + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
  if (!next.all_finite()) throw std::runtime_error("step: state became non-finite");
  next.normalize_angles();
  return next;
}

HoverLinearization linearize_hover(const VehicleParams& p, double epsilon) {
  HoverLinearization lin;
  lin.u_hover = ControlInput{p.m * p.g, 0, 0, 0};

  const UavState x0;  // zero state
  for (int j = 0; j < 12; ++j) {
    StateVec plus = x0.to_vector(), minus = x0.to_vector();
    plus[j] += epsilon;
    minus[j] -= epsilon;
    const StateVec dp = derivative(UavState::from_vector(plus), lin.u_hover, p);
    const StateVec dm = derivative(UavState::from_vector(minus), lin.u_hover, p);
    lin.a.col(j) = (dp - dm) / (2.0 * epsilon);
  }
  for (int j = 0; j < 4; ++j) {
    InputVec up = lin.u_hover.to_vector(), um = lin.u_hover.to_vector();
    up[j] += epsilon;
    um[j] -= epsilon;
    const StateVec dp = derivative(x0, ControlInput::from_vector(up), p);
    const StateVec dm = derivative(x0, ControlInput::from_vector(um), p);
    lin.b.col(j) = (dp - dm) / (2.0 * epsilon);
  }
  return lin;
}

}  // namespace uavsim
