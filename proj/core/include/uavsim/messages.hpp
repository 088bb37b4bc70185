#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "uavsim/comms.hpp"
#include "uavsim/json_util.hpp"
#include "uavsim/planner.hpp"
#include "uavsim/vehicle.hpp"
#include "uavsim/world.hpp"

namespace uavsim {

struct ObstacleListMsg {
  std::vector<Obstacle> obstacles;
};

struct ControlCmdMsg {
  ControlInput input;
  bool saturated = false;
};

/// Per-tick controller telemetry: the reference it tracked and the error
/// it saw. Everything the run summary needs is recoverable from the bag.
struct TrackingMsg {
  Vec3 ref_position = Vec3::Zero();
  Vec3 ref_velocity = Vec3::Zero();
  double ref_yaw = 0;
  double position_error = 0;
  double velocity_error = 0;
};

struct AttackStatusMsg {
  std::string attack_id;
  bool active = false;
};

struct SimStepRequest {
  UavState state;
  ControlInput input;
  double dt = 0;
};

struct SimStepResponse {
  UavState state;
};

struct AttackCommand {
  bool arm = false;
};

struct AttackAck {
  bool armed = false;
};

struct MissionGoal {
  std::string uav_id;
  double duration = 0;
  double feedback_period = 1.0;
};

struct MissionFeedback {
  double t = 0;
  double position_error = 0;
};

struct MissionResult {
  std::string status;  // "completed" | "cancelled"
  double terminal_error = 0;
};

/// The closed set of message kinds this build understands. Every recorded,
/// jammed or spoofed value on the bus is one of these.
using Payload = std::variant<UavState, GpsReading, ImuReading, SonarReading, ObstacleListMsg, Path,
                             ControlCmdMsg, TrackingMsg, SwarmStateMsg, RemoteIdMsg,
                             AttackStatusMsg, SimStepRequest, SimStepResponse, AttackCommand,
                             AttackAck, MissionGoal, MissionFeedback, MissionResult>;

enum class MessageKind {
  kUavState,
  kGpsFix,
  kImuSample,
  kSonarRange,
  kObstacleList,
  kPath,
  kControlCmd,
  kTracking,
  kSwarmState,
  kRemoteId,
  kAttackStatus,
  kSimStepRequest,
  kSimStepResponse,
  kAttackCommand,
  kAttackAck,
  kMissionGoal,
  kMissionFeedback,
  kMissionResult,
};

MessageKind kind_of(const Payload& payload);
const char* kind_name(MessageKind kind);
MessageKind kind_from_name(const std::string& name);

/// Timestamped, sequence-numbered message on a named topic; the unit of
/// everything recorded, jammed or spoofed.
struct Envelope {
  std::string topic;
  std::uint64_t seq = 0;
  long tick = 0;
  double sim_time = 0;
  Payload payload;
};

/// Tagged JSON form: {"type": "<kind>", ...fields}. Round-trips byte-exactly
/// (sorted keys, shortest round-trip numbers).
Json payload_to_json(const Payload& payload);
Payload payload_from_json(const Json& j);

Json state_to_json(const UavState& s);
UavState state_from_json(const Json& j);
Json vec3_to_json(const Vec3& v);
Vec3 vec3_from_json(const Json& j);

}  // namespace uavsim
