#pragma once

#include <string>

#include "uavsim/json_util.hpp"
#include "uavsim/vehicle.hpp"

namespace uavsim {

struct SwarmStateMsg {
  std::string uav_id;
  Vec3 position = Vec3::Zero();
  Vec3 velocity = Vec3::Zero();
  double sim_time = 0;
};

enum class EmergencyStatus { kNone, kEmergency };

/// Broadcast identification message, framework-native JSON wire form.
/// Local coordinates map to geodetic ones through a flat-earth origin:
/// x is north, y is east, altitude is -z (z-down convention).
struct RemoteIdMsg {
  std::string uas_id;
  double latitude = 0;            // deg, [-90, 90]
  double longitude = 0;           // deg, (-180, 180]
  double altitude = 0;            // m above origin
  double speed = 0;               // m/s horizontal, >= 0
  double heading = 0;             // deg from north, [0, 360)
  double timestamp = 0;           // s
  double operator_latitude = 0;   // deg
  double operator_longitude = 0;  // deg
  EmergencyStatus emergency_status = EmergencyStatus::kNone;
};

struct GeoPoint {
  double latitude = 0;
  double longitude = 0;
};

struct RemoteIdConfig {
  std::string uas_id;
  GeoPoint origin;
  GeoPoint operator_location;
  double rate = 1.0;  // Hz
};

/// Meters per degree of latitude in the flat-earth conversion.
inline constexpr double kMetersPerDegLat = 111320.0;

/// Flat-earth forward conversion: local (north = x, east = y) to (lat, lon).
GeoPoint local_to_geo(const GeoPoint& origin, double north_m, double east_m);
/// Exact inverse of local_to_geo.
void geo_to_local(const GeoPoint& origin, const GeoPoint& point, double* north_m, double* east_m);

/// Builds the broadcast message for the current ground-truth state.
RemoteIdMsg make_remote_id(const UavState& state, const RemoteIdConfig& config, double sim_time);

/// Wire codec. decode throws std::invalid_argument naming the offending
/// field when a value is out of range.
Json encode_remote_id(const RemoteIdMsg& msg);
RemoteIdMsg decode_remote_id(const Json& j);

}  // namespace uavsim
