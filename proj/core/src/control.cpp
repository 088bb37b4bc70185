#include "uavsim/control.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace uavsim {

LqrWeights LqrWeights::default_preset() {
  Eigen::VectorXd qd(12);
  qd << 10, 10, 10, 5, 5, 5, 1, 1, 1, 1, 1, 1;
  Eigen::VectorXd rd(4);
  rd << 0.1, 10, 10, 10;
  return LqrWeights{qd.asDiagonal(), rd.asDiagonal()};
}

LqrWeights LqrWeights::soft_preset() {
  LqrWeights w = default_preset();
  w.r *= 10.0;
  return w;
}

LqrWeights LqrWeights::by_name(const std::string& name) {
  if (name == "default") return default_preset();
  if (name == "soft") return soft_preset();
  throw std::invalid_argument("unknown LQR weights preset: " + name);
}

double spectral_abscissa(const Eigen::MatrixXd& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, /*computeEigenvectors=*/false);
  return es.eigenvalues().real().maxCoeff();
}

Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& a, const Eigen::MatrixXd& c) {
  const Eigen::Index n = a.rows();
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
  // vec(A'X + XA) = (I (x) A' + A' (x) I) vec(X)
  Eigen::MatrixXd kron = Eigen::MatrixXd::Zero(n * n, n * n);
  for (Eigen::Index j = 0; j < n; ++j) kron.block(j * n, j * n, n, n) += a.transpose();
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) kron.block(j * n, k * n, n, n) += a(k, j) * eye;

  Eigen::VectorXd rhs(n * n);
  for (Eigen::Index col = 0; col < n; ++col) rhs.segment(col * n, n) = -c.col(col);

  const Eigen::VectorXd x = kron.partialPivLu().solve(rhs);
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index col = 0; col < n; ++col) out.col(col) = x.segment(col * n, n);
  return 0.5 * (out + out.transpose().eval());
}

namespace {

double care_residual(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const Eigen::MatrixXd& q,
                     const Eigen::MatrixXd& r, const Eigen::MatrixXd& p) {
  const Eigen::MatrixXd res =
      a.transpose() * p + p * a - p * b * r.llt().solve(b.transpose() * p) + q;
  return res.cwiseAbs().maxCoeff();
}

/// Bass' method: for beta > ||A||, A + beta I is anti-stable, and the
/// Lyapunov solution Z of (A + beta I) Z + Z (A + beta I)' = 2 B B'
/// yields the stabilizing gain K0 = B' Z^-1.
Eigen::MatrixXd initial_stabilizing_gain(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const Eigen::Index n = a.rows();
  const double beta = a.cwiseAbs().rowwise().sum().maxCoeff() + 1.0;  // > ||A||_inf
  const Eigen::MatrixXd shifted = (a + beta * Eigen::MatrixXd::Identity(n, n)).transpose();
  // solve_lyapunov solves M'X + XM + C = 0; pick M = shifted so that
  // (A+betaI) Z + Z (A+betaI)' = 2BB' becomes M'Z + ZM + (-2BB') = 0.
  const Eigen::MatrixXd z = solve_lyapunov(shifted, (-2.0 * b * b.transpose()).eval());
  Eigen::FullPivLU<Eigen::MatrixXd> lu(z);
  if (!lu.isInvertible()) {
    throw std::runtime_error("solve_care: Lyapunov bootstrap produced singular Z (pair not controllable)");
  }
  return b.transpose() * lu.inverse();
}

}  // namespace

LqrGain solve_care(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const Eigen::MatrixXd& q,
                   const Eigen::MatrixXd& r, double residual_bound, int max_iterations) {
  const Eigen::Index n = a.rows(), m = b.cols();
  if (a.cols() != n || b.rows() != n || q.rows() != n || q.cols() != n || r.rows() != m ||
      r.cols() != m) {
    throw std::invalid_argument("solve_care: inconsistent matrix dimensions");
  }
  if ((q - q.transpose()).cwiseAbs().maxCoeff() > 1e-12 ||
      (r - r.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("solve_care: Q and R must be symmetric");
  }
  Eigen::LLT<Eigen::MatrixXd> r_chol(r);
  if (r_chol.info() != Eigen::Success) {
    throw std::invalid_argument("solve_care: R must be positive definite");
  }

  Eigen::MatrixXd k = spectral_abscissa(a) < 0 ? Eigen::MatrixXd::Zero(m, n)
                                               : initial_stabilizing_gain(a, b);

  LqrGain gain;
  for (int it = 0; it < max_iterations; ++it) {
    const Eigen::MatrixXd acl = a - b * k;
    // Newton-Kleinman step: (A-BK)'P + P(A-BK) + Q + K'RK = 0.
    const Eigen::MatrixXd p = solve_lyapunov(acl, (q + k.transpose() * r * k).eval());
    k = r_chol.solve(b.transpose() * p);

    const double res = care_residual(a, b, q, r, p);
    if (res <= residual_bound) {
      gain.p = p;
      gain.k = k;
      gain.residual = res;
      if (spectral_abscissa(a - b * gain.k) >= 0) {
        throw std::runtime_error("solve_care: converged P is not stabilizing");
      }
      return gain;
    }
  }
  throw std::runtime_error("solve_care: Newton-Kleinman did not reach the residual bound (pair may not be stabilizable)");
}

StateVec reference_state(const ReferencePoint& ref) {
  StateVec x = StateVec::Zero();
  x[0] = ref.position.x();
  x[1] = ref.position.y();
  x[2] = ref.position.z();
  x[5] = ref.yaw;
  x[6] = ref.velocity.x();
  x[7] = ref.velocity.y();
  x[8] = ref.velocity.z();
  return x;
}

ControlInput control_law(const LqrGain& gain, const UavState& state, const ReferencePoint& ref,
                         const ControlInput& u_hover, const VehicleParams& limits, bool* saturated,
                         const ControlOptions& opts) {
  StateVec err = state.to_vector() - reference_state(ref);
  // Yaw error through the shortest direction, so tracking across the
  // +/-pi seam does not unwind a full turn.
  err[5] = wrap_angle(err[5]);
  InputVec u = u_hover.to_vector() - gain.k * err;
  if (opts.vertical_feedforward) u[0] += limits.m * (-ref.acceleration.z());
  return clamp_input(ControlInput::from_vector(u), limits, saturated);
}

TrackLog track(const Trajectory& plan, const UavState& initial, const VehicleParams& params,
               const LqrWeights& weights, double dt, double horizon, const ControlOptions& opts) {
  const HoverLinearization lin = linearize_hover(params);
  const LqrGain gain = solve_care(lin.a, lin.b, weights.q, weights.r);

  TrackLog log;
  UavState state = initial;
  const long ticks = std::lround(horizon / dt);
  for (long k = 0; k <= ticks; ++k) {
    const double t = k * dt;
    const PathSample s = plan.evaluate(std::min(t, plan.total_time()));
    const ReferencePoint ref{s.position, s.velocity, s.acceleration, s.yaw};

    TrackSample entry;
    entry.t = t;
    entry.state = state;
    entry.reference = ref;
    entry.input = control_law(gain, state, ref, ControlInput{params.m * params.g, 0, 0, 0}, params,
                              nullptr, opts);
    entry.position_error = (state.position() - ref.position).norm();
    entry.velocity_error = (state.velocity() - ref.velocity).norm();
    log.samples.push_back(entry);
    log.max_position_error = std::max(log.max_position_error, entry.position_error);

    if (k < ticks) state = step(state, entry.input, params, dt);
  }
  log.terminal_position_error = log.samples.back().position_error;
  return log;
}

}  // namespace uavsim
