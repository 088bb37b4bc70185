#include "uavsim/messages.hpp"

#include <stdexcept>
#include <unordered_map>

namespace uavsim {

namespace {

constexpr const char* kKindNames[] = {
    "uav_state",      "gps_fix",       "imu_sample",      "sonar_range",   "obstacle_list",
    "path",           "control_cmd",   "tracking",        "swarm_state",   "remote_id",
    "attack_status",  "sim_step_request", "sim_step_response", "attack_command", "attack_ack",
    "mission_goal",   "mission_feedback", "mission_result",
};

}  // namespace

MessageKind kind_of(const Payload& payload) {
  return static_cast<MessageKind>(payload.index());
}

const char* kind_name(MessageKind kind) {
  return kKindNames[static_cast<int>(kind)];
}

MessageKind kind_from_name(const std::string& name) {
  static const std::unordered_map<std::string, MessageKind> lookup = [] {
    std::unordered_map<std::string, MessageKind> m;
    for (int i = 0; i <= static_cast<int>(MessageKind::kMissionResult); ++i) {
      m.emplace(kKindNames[i], static_cast<MessageKind>(i));
    }
    return m;
  }();
  const auto it = lookup.find(name);
  if (it == lookup.end()) throw std::invalid_argument("unknown message kind '" + name + "'");
  return it->second;
}

Json vec3_to_json(const Vec3& v) {
  return Json::array({v.x(), v.y(), v.z()});
}

Vec3 vec3_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected a 3-element array");
  return Vec3{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

Json state_to_json(const UavState& s) {
  return Json{
      {"x", s.x},       {"y", s.y},         {"z", s.z},         {"phi", s.phi},
      {"theta", s.theta}, {"psi", s.psi},   {"vx", s.vx},       {"vy", s.vy},
      {"vz", s.vz},     {"p_rate", s.p_rate}, {"q_rate", s.q_rate}, {"r_rate", s.r_rate},
  };
}

UavState state_from_json(const Json& j) {
  UavState s;
  s.x = j.at("x").get<double>();
  s.y = j.at("y").get<double>();
  s.z = j.at("z").get<double>();
  s.phi = j.at("phi").get<double>();
  s.theta = j.at("theta").get<double>();
  s.psi = j.at("psi").get<double>();
  s.vx = j.at("vx").get<double>();
  s.vy = j.at("vy").get<double>();
  s.vz = j.at("vz").get<double>();
  s.p_rate = j.at("p_rate").get<double>();
  s.q_rate = j.at("q_rate").get<double>();
  s.r_rate = j.at("r_rate").get<double>();
  return s;
}

namespace {

Json input_to_json(const ControlInput& u) {
  return Json{{"ft", u.ft}, {"tau", Json::array({u.tau_x, u.tau_y, u.tau_z})}};
}

ControlInput input_from_json(const Json& j) {
  ControlInput u;
  u.ft = j.at("ft").get<double>();
  const Json& tau = j.at("tau");
  u.tau_x = tau[0].get<double>();
  u.tau_y = tau[1].get<double>();
  u.tau_z = tau[2].get<double>();
  return u;
}

Json obstacle_to_json(const Obstacle& o) {
  return Json{{"id", o.id},
              {"center", vec3_to_json(o.center)},
              {"radius", o.radius},
              {"velocity", vec3_to_json(o.velocity)},
              {"phantom", o.phantom}};
}

Obstacle obstacle_from_json(const Json& j) {
  Obstacle o;
  o.id = j.at("id").get<std::string>();
  o.center = vec3_from_json(j.at("center"));
  o.radius = j.at("radius").get<double>();
  o.velocity = vec3_from_json(j.at("velocity"));
  o.phantom = j.at("phantom").get<bool>();
  return o;
}

Json sample_to_json(const PathSample& s) {
  return Json{{"t", s.t},
              {"position", vec3_to_json(s.position)},
              {"velocity", vec3_to_json(s.velocity)},
              {"acceleration", vec3_to_json(s.acceleration)},
              {"yaw", s.yaw}};
}

PathSample sample_from_json(const Json& j) {
  PathSample s;
  s.t = j.at("t").get<double>();
  s.position = vec3_from_json(j.at("position"));
  s.velocity = vec3_from_json(j.at("velocity"));
  s.acceleration = vec3_from_json(j.at("acceleration"));
  s.yaw = j.at("yaw").get<double>();
  return s;
}

struct ToJsonVisitor {
  Json operator()(const UavState& s) const { return state_to_json(s); }
  Json operator()(const GpsReading& g) const { return Json{{"position", vec3_to_json(g.position)}}; }
  Json operator()(const ImuReading& i) const {
    return Json{{"accel", vec3_to_json(i.accel)}, {"gyro", vec3_to_json(i.gyro)}};
  }
  Json operator()(const SonarReading& s) const { return Json{{"range", s.range}}; }
  Json operator()(const ObstacleListMsg& m) const {
    Json arr = Json::array();
    for (const Obstacle& o : m.obstacles) arr.push_back(obstacle_to_json(o));
    return Json{{"obstacles", std::move(arr)}};
  }
  Json operator()(const Path& p) const {
    Json arr = Json::array();
    for (const PathSample& s : p.samples) arr.push_back(sample_to_json(s));
    return Json{{"samples", std::move(arr)}};
  }
  Json operator()(const ControlCmdMsg& c) const {
    Json j = input_to_json(c.input);
    j["saturated"] = c.saturated;
    return j;
  }
  Json operator()(const TrackingMsg& t) const {
    return Json{{"ref_position", vec3_to_json(t.ref_position)},
                {"ref_velocity", vec3_to_json(t.ref_velocity)},
                {"ref_yaw", t.ref_yaw},
                {"position_error", t.position_error},
                {"velocity_error", t.velocity_error}};
  }
  Json operator()(const SwarmStateMsg& s) const {
    return Json{{"uav_id", s.uav_id},
                {"position", vec3_to_json(s.position)},
                {"velocity", vec3_to_json(s.velocity)},
                {"sim_time", s.sim_time}};
  }
  Json operator()(const RemoteIdMsg& m) const { return encode_remote_id(m); }
  Json operator()(const AttackStatusMsg& a) const {
    return Json{{"attack_id", a.attack_id}, {"active", a.active}};
  }
  Json operator()(const SimStepRequest& r) const {
    return Json{{"state", state_to_json(r.state)}, {"input", input_to_json(r.input)}, {"dt", r.dt}};
  }
  Json operator()(const SimStepResponse& r) const { return Json{{"state", state_to_json(r.state)}}; }
  Json operator()(const AttackCommand& c) const { return Json{{"arm", c.arm}}; }
  Json operator()(const AttackAck& a) const { return Json{{"armed", a.armed}}; }
  Json operator()(const MissionGoal& g) const {
    return Json{{"uav_id", g.uav_id}, {"duration", g.duration}, {"feedback_period", g.feedback_period}};
  }
  Json operator()(const MissionFeedback& f) const {
    return Json{{"t", f.t}, {"position_error", f.position_error}};
  }
  Json operator()(const MissionResult& r) const {
    return Json{{"status", r.status}, {"terminal_error", r.terminal_error}};
  }
};

}  // namespace

Json payload_to_json(const Payload& payload) {
  Json j = std::visit(ToJsonVisitor{}, payload);
  j["type"] = kind_name(kind_of(payload));
  return j;
}

Payload payload_from_json(const Json& j) {
  const MessageKind kind = kind_from_name(j.at("type").get<std::string>());
  switch (kind) {
    case MessageKind::kUavState:
      return state_from_json(j);
    case MessageKind::kGpsFix:
      return GpsReading{vec3_from_json(j.at("position"))};
    case MessageKind::kImuSample:
      return ImuReading{vec3_from_json(j.at("accel")), vec3_from_json(j.at("gyro"))};
    case MessageKind::kSonarRange:
      return SonarReading{j.at("range").get<double>()};
    case MessageKind::kObstacleList: {
      ObstacleListMsg m;
      for (const Json& o : j.at("obstacles")) m.obstacles.push_back(obstacle_from_json(o));
      return m;
    }
    case MessageKind::kPath: {
      Path p;
      for (const Json& s : j.at("samples")) p.samples.push_back(sample_from_json(s));
      return p;
    }
    case MessageKind::kControlCmd:
      return ControlCmdMsg{input_from_json(j), j.at("saturated").get<bool>()};
    case MessageKind::kTracking: {
      TrackingMsg t;
      t.ref_position = vec3_from_json(j.at("ref_position"));
      t.ref_velocity = vec3_from_json(j.at("ref_velocity"));
      t.ref_yaw = j.at("ref_yaw").get<double>();
      t.position_error = j.at("position_error").get<double>();
      t.velocity_error = j.at("velocity_error").get<double>();
      return t;
    }
    case MessageKind::kSwarmState: {
      SwarmStateMsg s;
      s.uav_id = j.at("uav_id").get<std::string>();
      s.position = vec3_from_json(j.at("position"));
      s.velocity = vec3_from_json(j.at("velocity"));
      s.sim_time = j.at("sim_time").get<double>();
      return s;
    }
    case MessageKind::kRemoteId:
      return decode_remote_id(j);
    case MessageKind::kAttackStatus:
      return AttackStatusMsg{j.at("attack_id").get<std::string>(), j.at("active").get<bool>()};
    case MessageKind::kSimStepRequest:
      return SimStepRequest{state_from_json(j.at("state")), input_from_json(j.at("input")),
                            j.at("dt").get<double>()};
    case MessageKind::kSimStepResponse:
      return SimStepResponse{state_from_json(j.at("state"))};
    case MessageKind::kAttackCommand:
      return AttackCommand{j.at("arm").get<bool>()};
    case MessageKind::kAttackAck:
      return AttackAck{j.at("armed").get<bool>()};
    case MessageKind::kMissionGoal:
      return MissionGoal{j.at("uav_id").get<std::string>(), j.at("duration").get<double>(),
                         j.at("feedback_period").get<double>()};
    case MessageKind::kMissionFeedback:
      return MissionFeedback{j.at("t").get<double>(), j.at("position_error").get<double>()};
    case MessageKind::kMissionResult:
      return MissionResult{j.at("status").get<std::string>(), j.at("terminal_error").get<double>()};
  }
  throw std::logic_error("payload_from_json: unhandled kind");
}

}  // namespace uavsim
