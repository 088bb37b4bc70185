#include "uavsim/comms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uavsim {

GeoPoint local_to_geo(const GeoPoint& origin, double north_m, double east_m) {
  const double lat_rad = origin.latitude * std::numbers::pi / 180.0;
  GeoPoint g;
  g.latitude = origin.latitude + north_m / kMetersPerDegLat;
  g.longitude = origin.longitude + east_m / (kMetersPerDegLat * std::cos(lat_rad));
  return g;
}

void geo_to_local(const GeoPoint& origin, const GeoPoint& point, double* north_m, double* east_m) {
  const double lat_rad = origin.latitude * std::numbers::pi / 180.0;
  *north_m = (point.latitude - origin.latitude) * kMetersPerDegLat;
  *east_m = (point.longitude - origin.longitude) * kMetersPerDegLat * std::cos(lat_rad);
}

RemoteIdMsg make_remote_id(const UavState& state, const RemoteIdConfig& config, double sim_time) {
  RemoteIdMsg msg;
  msg.uas_id = config.uas_id;
  const GeoPoint g = local_to_geo(config.origin, state.x, state.y);
  msg.latitude = g.latitude;
  msg.longitude = g.longitude;
  msg.altitude = -state.z;
  msg.speed = std::hypot(state.vx, state.vy);
  // Compass heading: angle from north, clockwise; east velocity is vy,
  // north velocity is vx.
  double heading = std::atan2(state.vy, state.vx) * 180.0 / std::numbers::pi;
  if (heading < 0) heading += 360.0;
  if (heading >= 360.0) heading = 0.0;
  msg.heading = heading;
  msg.timestamp = sim_time;
  msg.operator_latitude = config.operator_location.latitude;
  msg.operator_longitude = config.operator_location.longitude;
  msg.emergency_status = EmergencyStatus::kNone;
  return msg;
}

Json encode_remote_id(const RemoteIdMsg& msg) {
  return Json{
      {"uas_id", msg.uas_id},
      {"latitude", msg.latitude},
      {"longitude", msg.longitude},
      {"altitude", msg.altitude},
      {"speed", msg.speed},
      {"heading", msg.heading},
      {"timestamp", msg.timestamp},
      {"operator_latitude", msg.operator_latitude},
      {"operator_longitude", msg.operator_longitude},
      {"emergency_status", msg.emergency_status == EmergencyStatus::kEmergency ? "emergency" : "none"},
  };
}

RemoteIdMsg decode_remote_id(const Json& j) {
  RemoteIdMsg m;
  m.uas_id = j.at("uas_id").get<std::string>();
  m.latitude = j.at("latitude").get<double>();
  m.longitude = j.at("longitude").get<double>();
  m.altitude = j.at("altitude").get<double>();
  m.speed = j.at("speed").get<double>();
  m.heading = j.at("heading").get<double>();
  m.timestamp = j.at("timestamp").get<double>();
  m.operator_latitude = j.at("operator_latitude").get<double>();
  m.operator_longitude = j.at("operator_longitude").get<double>();
  const std::string status = j.at("emergency_status").get<std::string>();
  if (status == "none") {
    m.emergency_status = EmergencyStatus::kNone;
  } else if (status == "emergency") {
    m.emergency_status = EmergencyStatus::kEmergency;
  } else {
    throw std::invalid_argument("remote_id: invalid emergency_status '" + status + "'");
  }

  if (m.latitude < -90.0 || m.latitude > 90.0)
    throw std::invalid_argument("remote_id: latitude out of range [-90, 90]");
  if (m.longitude <= -180.0 || m.longitude > 180.0)
    throw std::invalid_argument("remote_id: longitude out of range (-180, 180]");
  if (m.heading < 0.0 || m.heading >= 360.0)
    throw std::invalid_argument("remote_id: heading out of range [0, 360)");
  if (m.speed < 0.0) throw std::invalid_argument("remote_id: speed must be nonnegative");
  return m;
}

}  // namespace uavsim
