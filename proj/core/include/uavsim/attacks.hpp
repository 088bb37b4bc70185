#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "uavsim/json_util.hpp"
#include "uavsim/world.hpp"

namespace uavsim {

struct Region {
  Vec3 center = Vec3::Zero();
  double radius = 0;

  bool contains(const Vec3& p) const { return (p - center).norm() <= radius; }
};

/// Attack activation condition. Triggers compose: a composite node is the
/// AND or OR of at least two children.
struct Trigger {
  enum class Kind { kManual, kTimeWindow, kRegion, kComposite };
  enum class Op { kAnd, kOr };

  Kind kind = Kind::kTimeWindow;
  double window_start = 0;  // time_window, [start, end)
  double window_end = 0;
  Region region;            // region kind: fires while the UAV is inside
  Op op = Op::kAnd;
  std::vector<Trigger> children;

  bool evaluate(double sim_time, const Vec3& uav_position, bool manual_armed) const;
};

enum class AttackSurface { kImu, kGps, kCommLink, kObstacle };
enum class AttackEffect { kSpoof, kJam, kPhantom };

/// Which vehicles an attack applies to: an explicit id list, a spatial
/// region, or both (an empty spec matches every vehicle).
struct TargetSet {
  std::vector<std::string> ids;
  std::optional<Region> region;

  bool matches(const std::string& uav_id, const Vec3& uav_position) const;
};

/// One scheduled arm/disarm of a manual trigger.
struct ManualEvent {
  double t = 0;
  bool arm = false;
};

struct AttackSpec {
  std::string id;
  AttackSurface surface = AttackSurface::kGps;
  AttackEffect effect = AttackEffect::kSpoof;
  Trigger trigger;
  Vec3 magnitude = Vec3::Zero();  // meaning per surface; [0] is the jam min_interval
  double bound = 0;               // detection-avoidance threshold on the applied offset norm
  double duty_cycle = 1.0;        // fraction of each period the attack is applied
  double period = 1.0;            // s; required when duty_cycle < 1
  TargetSet targets;
  std::string topic;              // comm_link jams name the topic here
  std::optional<Obstacle> phantom;  // geometry for obstacle injection
  std::vector<ManualEvent> manual_schedule;
};

/// Trigger evaluation AND-ed with the duty-cycle gate
/// (sim_time mod period) < duty_cycle * period.
bool is_active(const AttackSpec& spec, long tick, double sim_time, const Vec3& uav_position,
               bool manual_armed);

/// Shrinks `offset` to norm <= bound, direction preserved.
Vec3 clamp_offset(const Vec3& offset, double bound);

/// Adds the clamped offset to the accelerometer channels; gyro untouched.
ImuReading apply_imu(const AttackSpec& spec, const ImuReading& sample);

/// Adds the clamped offset to the position fix.
GpsReading apply_gps(const AttackSpec& spec, const GpsReading& fix);

/// Config parsing; `path` is the JSON-pointer prefix used in error messages.
Trigger parse_trigger(const Json& j, const std::string& path);
AttackSpec parse_attack_spec(const Json& j, const std::string& path);

}  // namespace uavsim
