#include "uavsim/attacks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uavsim {

bool Trigger::evaluate(double sim_time, const Vec3& uav_position, bool manual_armed) const {
  switch (kind) {
    case Kind::kManual:
      return manual_armed;
    case Kind::kTimeWindow:
      return sim_time >= window_start && sim_time < window_end;
    case Kind::kRegion:
      return region.contains(uav_position);
    case Kind::kComposite: {
      if (op == Op::kAnd) {
        for (const Trigger& c : children)
          if (!c.evaluate(sim_time, uav_position, manual_armed)) return false;
        return true;
      }
      for (const Trigger& c : children)
        if (c.evaluate(sim_time, uav_position, manual_armed)) return true;
      return false;
    }
  }
  return false;
}

bool TargetSet::matches(const std::string& uav_id, const Vec3& uav_position) const {
  if (!ids.empty() && std::find(ids.begin(), ids.end(), uav_id) == ids.end()) return false;
  if (region && !region->contains(uav_position)) return false;
  return true;
}

bool is_active(const AttackSpec& spec, long /*tick*/, double sim_time, const Vec3& uav_position,
               bool manual_armed) {
  if (!spec.trigger.evaluate(sim_time, uav_position, manual_armed)) return false;
  if (spec.duty_cycle >= 1.0) return true;
  if (spec.duty_cycle <= 0.0) return false;
  return std::fmod(sim_time, spec.period) < spec.duty_cycle * spec.period;
}

Vec3 clamp_offset(const Vec3& offset, double bound) {
  const double norm = offset.norm();
  if (norm <= bound || norm == 0.0) return offset;
  return offset * (bound / norm);
}

ImuReading apply_imu(const AttackSpec& spec, const ImuReading& sample) {
  ImuReading out = sample;
  out.accel += clamp_offset(spec.magnitude, spec.bound);
  return out;
}

GpsReading apply_gps(const AttackSpec& spec, const GpsReading& fix) {
  GpsReading out = fix;
  out.position += clamp_offset(spec.magnitude, spec.bound);
  return out;
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw std::invalid_argument("config error at " + path + ": " + msg);
}

Vec3 parse_vec3(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) fail(path, "expected a 3-element array");
  return Vec3{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

Region parse_region(const Json& j, const std::string& path) {
  Region r;
  r.center = parse_vec3(j.at("center"), path + "/center");
  r.radius = j.at("radius").get<double>();
  if (r.radius <= 0) fail(path + "/radius", "region radius must be positive");
  return r;
}

}  // namespace

Trigger parse_trigger(const Json& j, const std::string& path) {
  Trigger t;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "manual") {
    t.kind = Trigger::Kind::kManual;
  } else if (kind == "time_window") {
    t.kind = Trigger::Kind::kTimeWindow;
    const Json& w = j.at("window");
    if (!w.is_array() || w.size() != 2) fail(path + "/window", "expected [t_start, t_end]");
    t.window_start = w[0].get<double>();
    t.window_end = w[1].get<double>();
    if (!(t.window_start < t.window_end)) fail(path + "/window", "t_start must be < t_end");
  } else if (kind == "region") {
    t.kind = Trigger::Kind::kRegion;
    t.region = parse_region(j.at("region"), path + "/region");
  } else if (kind == "composite") {
    t.kind = Trigger::Kind::kComposite;
    const std::string op = j.at("op").get<std::string>();
    if (op == "and") {
      t.op = Trigger::Op::kAnd;
    } else if (op == "or") {
      t.op = Trigger::Op::kOr;
    } else {
      fail(path + "/op", "expected 'and' or 'or'");
    }
    const Json& children = j.at("children");
    if (!children.is_array() || children.size() < 2)
      fail(path + "/children", "composite trigger needs at least 2 children");
    for (std::size_t i = 0; i < children.size(); ++i) {
      t.children.push_back(parse_trigger(children[i], path + "/children/" + std::to_string(i)));
    }
  } else {
    fail(path + "/kind", "unknown trigger kind '" + kind + "'");
  }
  return t;
}

AttackSpec parse_attack_spec(const Json& j, const std::string& path) {
  AttackSpec spec;
  spec.id = j.at("id").get<std::string>();
  if (spec.id.empty()) fail(path + "/id", "attack id must be non-empty");

  const std::string surface = j.at("surface").get<std::string>();
  if (surface == "imu") {
    spec.surface = AttackSurface::kImu;
    spec.effect = AttackEffect::kSpoof;
  } else if (surface == "gps") {
    spec.surface = AttackSurface::kGps;
    spec.effect = AttackEffect::kSpoof;
  } else if (surface == "comm_link") {
    spec.surface = AttackSurface::kCommLink;
    spec.effect = AttackEffect::kJam;
  } else if (surface == "obstacle") {
    spec.surface = AttackSurface::kObstacle;
    spec.effect = AttackEffect::kPhantom;
  } else {
    fail(path + "/surface", "unknown surface '" + surface + "'");
  }
  // GPS attacks are spoofs unless the effect says jam.
  if (j.contains("effect")) {
    const std::string effect = j.at("effect").get<std::string>();
    if (effect == "spoof") {
      spec.effect = AttackEffect::kSpoof;
    } else if (effect == "jam") {
      spec.effect = AttackEffect::kJam;
    } else if (effect == "phantom") {
      spec.effect = AttackEffect::kPhantom;
    } else {
      fail(path + "/effect", "unknown effect '" + effect + "'");
    }
  }

  spec.trigger = parse_trigger(j.at("trigger"), path + "/trigger");

  if (j.contains("magnitude")) spec.magnitude = parse_vec3(j.at("magnitude"), path + "/magnitude");
  spec.bound = j.value("bound", 0.0);
  if (spec.bound < 0) fail(path + "/bound", "bound must be nonnegative");
  spec.duty_cycle = j.value("duty_cycle", 1.0);
  if (spec.duty_cycle < 0 || spec.duty_cycle > 1)
    fail(path + "/duty_cycle", "duty_cycle must be in [0, 1]");
  spec.period = j.value("period", 1.0);
  if (spec.duty_cycle < 1.0 && spec.period <= 0)
    fail(path + "/period", "period must be positive when duty_cycle < 1");

  if (j.contains("targets")) {
    const Json& t = j.at("targets");
    if (t.is_array()) {
      for (const auto& id : t) spec.targets.ids.push_back(id.get<std::string>());
    } else if (t.is_object()) {
      if (t.contains("ids"))
        for (const auto& id : t.at("ids")) spec.targets.ids.push_back(id.get<std::string>());
      if (t.contains("region"))
        spec.targets.region = parse_region(t.at("region"), path + "/targets/region");
    } else {
      fail(path + "/targets", "expected an id array or {ids, region} object");
    }
  }

  spec.topic = j.value("topic", std::string{});
  if (spec.surface == AttackSurface::kCommLink && spec.topic.empty())
    fail(path + "/topic", "comm_link attacks must name a topic");

  if (j.contains("obstacle")) {
    const Json& o = j.at("obstacle");
    Obstacle ob;
    ob.id = o.value("id", spec.id + "/phantom");
    ob.center = parse_vec3(o.at("center"), path + "/obstacle/center");
    ob.radius = o.at("radius").get<double>();
    if (ob.radius <= 0) fail(path + "/obstacle/radius", "radius must be positive");
    if (o.contains("velocity")) ob.velocity = parse_vec3(o.at("velocity"), path + "/obstacle/velocity");
    ob.phantom = true;
    spec.phantom = ob;
  }
  if (spec.surface == AttackSurface::kObstacle && !spec.phantom)
    fail(path, "obstacle attacks must carry an 'obstacle' geometry");

  if (j.contains("manual_schedule")) {
    for (std::size_t i = 0; i < j.at("manual_schedule").size(); ++i) {
      const Json& e = j.at("manual_schedule")[i];
      spec.manual_schedule.push_back({e.at("t").get<double>(), e.at("arm").get<bool>()});
    }
  }
  return spec;
}

}  // namespace uavsim
