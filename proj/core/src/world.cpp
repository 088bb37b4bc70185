#include "uavsim/world.hpp"

#include <cmath>

namespace uavsim {

std::vector<Obstacle> detect(const Vec3& uav_position, const std::vector<Obstacle>& obstacles,
                             DetectionMode mode, double radius) {
  if (mode == DetectionMode::kGlobal) return obstacles;
  std::vector<Obstacle> nearby;
  for (const Obstacle& o : obstacles) {
    const double surface_distance = (uav_position - o.center).norm() - o.radius;
    if (surface_distance <= radius) nearby.push_back(o);
  }
  return nearby;
}

Vec3 repulsion(const Vec3& uav_position, const Vec3& /*uav_velocity*/,
               const std::vector<Obstacle>& nearby, double gain, double saturation, double d_min) {
  Vec3 correction = Vec3::Zero();
  for (const Obstacle& o : nearby) {
    const Vec3 offset = uav_position - o.center;
    const double center_distance = offset.norm();
    if (center_distance <= 0) continue;  // coincident centers give no direction
    const Vec3 d_hat = offset / center_distance;
    const double d = center_distance - o.radius;
    correction += gain * d_hat / std::max(d * d, d_min * d_min);
  }
  const double norm = correction.norm();
  if (norm > saturation && norm > 0) correction *= saturation / norm;
  return correction;
}

long sensor_period_ticks(double rate, double dt) {
  return std::max(1L, std::lround(1.0 / (rate * dt)));
}

namespace {

Vec3 noisy(const Vec3& value, const SensorModel& model, RngStream& rng) {
  Vec3 n = rng.normal3();
  return value + model.bias + model.noise_std.cwiseProduct(n);
}

bool dropped(const SensorModel& model, RngStream& rng) {
  if (model.dropout_probability <= 0) return false;
  return rng.uniform01() < model.dropout_probability;
}

}  // namespace

std::optional<GpsReading> sense_gps(const UavState& truth, const SensorModel& model,
                                    RngStream& rng) {
  if (dropped(model, rng)) return std::nullopt;
  return GpsReading{noisy(truth.position(), model, rng)};
}

std::optional<ImuReading> sense_imu(const UavState& truth, const ControlInput& applied_input,
                                    const VehicleParams& params, const SensorModel& model,
                                    RngStream& rng) {
  if (dropped(model, rng)) return std::nullopt;

  const StateVec d = derivative(truth, applied_input, params);
  const Vec3 accel_world{d[6], d[7], d[8]};
  const Vec3 gravity{0, 0, params.g};  // +z is down
  const Eigen::Matrix3d world_to_body = body_to_world(truth.phi, truth.theta, truth.psi).transpose();

  ImuReading out;
  // Accelerometers measure specific force (acceleration minus gravity).
  // The 3-channel bias/noise model applies to each triplet independently;
  // draw order is accel then gyro.
  out.accel = noisy(world_to_body * (accel_world - gravity), model, rng);
  out.gyro = noisy(euler_rates_to_body_rates(truth.phi, truth.theta,
                                             Vec3{truth.p_rate, truth.q_rate, truth.r_rate}),
                   model, rng);
  return out;
}

std::optional<SonarReading> sense_sonar(const UavState& truth, const SensorModel& model,
                                        RngStream& rng) {
  if (dropped(model, rng)) return std::nullopt;
  const double altitude = -truth.z;  // z positive down
  const double measured = altitude + model.bias.x() + model.noise_std.x() * rng.normal();
  return SonarReading{std::clamp(measured, 0.0, kSonarMaxRange)};
}

}  // namespace uavsim
