#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uavsim/rng.hpp"
#include "uavsim/vehicle.hpp"

namespace uavsim {

struct Obstacle {
  std::string id;
  Vec3 center = Vec3::Zero();
  double radius = 0;
  Vec3 velocity = Vec3::Zero();  // zero for static obstacles
  bool phantom = false;          // true when attack-injected
};

enum class DetectionMode { kGlobal, kLocal };

/// Global mode returns every obstacle; local mode returns those whose
/// surface (center distance minus obstacle radius) is within `radius`.
std::vector<Obstacle> detect(const Vec3& uav_position, const std::vector<Obstacle>& obstacles,
                             DetectionMode mode, double radius);

/// Repulsive velocity correction:
///   sum over nearby: gain * d_hat / max(d^2, d_min^2)
/// with d_hat the unit vector from obstacle center to the UAV and d the
/// center distance minus the obstacle radius. The result norm is clamped
/// to `saturation`. d_min floors the 1/d^2 law near contact.
Vec3 repulsion(const Vec3& uav_position, const Vec3& uav_velocity,
               const std::vector<Obstacle>& nearby, double gain, double saturation,
               double d_min = 0.1);

enum class SensorKind { kGps, kImu, kSonar };

struct SensorModel {
  SensorKind kind = SensorKind::kGps;
  double rate = 10.0;                 // Hz
  Vec3 noise_std = Vec3::Zero();      // per-channel standard deviation
  Vec3 bias = Vec3::Zero();           // per-channel constant offset
  double dropout_probability = 0.0;

  bool valid() const {
    return rate > 0 && noise_std.minCoeff() >= 0 && dropout_probability >= 0 &&
           dropout_probability <= 1;
  }
};

inline constexpr double kSonarMaxRange = 40.0;

struct GpsReading {
  Vec3 position;
};

struct ImuReading {
  Vec3 accel;  // specific force in the body frame
  Vec3 gyro;   // body angular rates
};

struct SonarReading {
  double range;  // altitude above the z = 0 ground plane, saturated at max range
};

/// Sensor outputs per model. `applied_input` is the control input currently
/// acting on the vehicle (the IMU derives specific force from the dynamics).
/// Returns nullopt when a dropout suppresses the emission. Draw order per
/// emission is fixed (dropout uniform, then per-channel normals) so streams
/// replay exactly.
std::optional<GpsReading> sense_gps(const UavState& truth, const SensorModel& model,
                                    RngStream& rng);
std::optional<ImuReading> sense_imu(const UavState& truth, const ControlInput& applied_input,
                                    const VehicleParams& params, const SensorModel& model,
                                    RngStream& rng);
std::optional<SonarReading> sense_sonar(const UavState& truth, const SensorModel& model,
                                        RngStream& rng);

/// Ticks between emissions for a sensor rate at scheduler step dt (>= 1).
long sensor_period_ticks(double rate, double dt);

}  // namespace uavsim
