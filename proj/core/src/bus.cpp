#include "uavsim/bus.hpp"

#include <stdexcept>

namespace uavsim {

namespace {
constexpr const char* kRecordKindNames[] = {
    "topic", "service_req", "service_resp", "action_goal", "action_feedback", "action_result",
};
}

const char* record_kind_name(RecordKind kind) {
  return kRecordKindNames[static_cast<int>(kind)];
}

RecordKind record_kind_from_name(const std::string& name) {
  for (int i = 0; i < 6; ++i) {
    if (name == kRecordKindNames[i]) return static_cast<RecordKind>(i);
  }
  throw std::invalid_argument("unknown bag record kind '" + name + "'");
}

Bus::Bus(std::uint64_t seed, double dt) : seed_(seed), dt_(dt) {
  if (dt <= 0) throw std::invalid_argument("Bus: dt must be positive");
}

TopicHandle Bus::create_topic(const std::string& name, MessageKind kind) {
  if (topic_index_.contains(name)) throw std::invalid_argument("create_topic: duplicate topic '" + name + "'");
  topics_.push_back(Topic{name, kind, 0, {}});
  const std::size_t index = topics_.size() - 1;
  topic_index_.emplace(name, index);
  return TopicHandle{index};
}

TopicHandle Bus::topic(const std::string& name) const {
  const auto it = topic_index_.find(name);
  if (it == topic_index_.end()) throw std::invalid_argument("unknown topic '" + name + "'");
  return TopicHandle{it->second};
}

bool Bus::has_topic(const std::string& name) const {
  return topic_index_.contains(name);
}

const std::string& Bus::topic_name(TopicHandle handle) const {
  return topics_.at(handle.index).name;
}

MessageKind Bus::topic_kind(TopicHandle handle) const {
  return topics_.at(handle.index).kind;
}

std::vector<std::string> Bus::topic_names() const {
  std::vector<std::string> names;
  names.reserve(topics_.size());
  for (const Topic& t : topics_) names.push_back(t.name);
  return names;
}

void Bus::record(RecordKind kind, const std::string& name, std::uint64_t seq, long tick,
                 double sim_time, const Payload& payload) {
  ++record_counts_[name];
  if (sinks_.empty()) return;
  BagRecord rec{kind, name, seq, tick, sim_time, payload};
  for (const RecordSink& sink : sinks_) sink(rec);
}

std::uint64_t Bus::enqueue(Topic& topic, std::size_t topic_index, Payload payload,
                           std::optional<std::uint64_t> forced_seq) {
  if (kind_of(payload) != topic.kind) {
    throw std::invalid_argument("publish: payload kind '" +
                                std::string(kind_name(kind_of(payload))) +
                                "' does not match topic '" + topic.name + "' (expects '" +
                                kind_name(topic.kind) + "')");
  }
  const std::uint64_t seq = forced_seq.value_or(topic.next_seq);
  topic.next_seq = seq + 1;

  Envelope env;
  env.topic = topic.name;
  env.seq = seq;
  env.tick = tick_;
  env.sim_time = tick_ * dt_;
  env.payload = std::move(payload);

  record(RecordKind::kTopic, topic.name, seq, env.tick, env.sim_time, env.payload);
  pending_.push_back(PendingEnvelope{topic_index, std::move(env)});
  return seq;
}

std::uint64_t Bus::publish(TopicHandle handle, Payload payload) {
  Topic& topic = topics_.at(handle.index);
  return enqueue(topic, handle.index, std::move(payload), std::nullopt);
}

std::uint64_t Bus::publish(const std::string& name, Payload payload) {
  return publish(topic(name), std::move(payload));
}

void Bus::publish_recorded(TopicHandle handle, const Envelope& envelope) {
  Topic& topic = topics_.at(handle.index);
  enqueue(topic, handle.index, envelope.payload, envelope.seq);
}

SubscriptionHandle Bus::subscribe(TopicHandle handle, const QosPolicy& qos,
                                  const std::string& node_id, DeliveryCallback callback) {
  if (!qos.valid()) throw std::invalid_argument("subscribe: invalid QoS policy");
  Topic& topic = topics_.at(handle.index);

  // Streams must stay distinct when one node subscribes to the same topic
  // twice, so the label carries an ordinal.
  int ordinal = 0;
  for (SubscriptionHandle h : topic.subscriptions) {
    if (subscriptions_[h].node_id == node_id) ++ordinal;
  }
  const std::string label =
      "drop|" + topic.name + "|" + node_id + "|" + std::to_string(ordinal);

  subscriptions_.push_back(Subscription{handle.index, node_id, qos, std::nullopt,
                                        std::move(callback), RngStream::derive(seed_, label)});
  const SubscriptionHandle sub = subscriptions_.size() - 1;
  topic.subscriptions.push_back(sub);
  return sub;
}

SubscriptionHandle Bus::subscribe(const std::string& name, const QosPolicy& qos,
                                  const std::string& node_id, DeliveryCallback callback) {
  return subscribe(topic(name), qos, node_id, std::move(callback));
}

void Bus::set_qos(SubscriptionHandle subscription, const QosPolicy& qos) {
  if (subscription >= subscriptions_.size())
    throw std::invalid_argument("set_qos: unknown subscription");
  if (!qos.valid()) throw std::invalid_argument("set_qos: invalid QoS policy");
  subscriptions_[subscription].staged_policy = qos;
}

QosPolicy Bus::qos(SubscriptionHandle subscription) const {
  if (subscription >= subscriptions_.size()) throw std::invalid_argument("qos: unknown subscription");
  return subscriptions_[subscription].policy;
}

std::optional<SubscriptionHandle> Bus::find_subscription(const std::string& topic_name,
                                                         const std::string& node_id) const {
  const auto it = topic_index_.find(topic_name);
  if (it == topic_index_.end()) return std::nullopt;
  for (SubscriptionHandle h : topics_[it->second].subscriptions) {
    if (subscriptions_[h].node_id == node_id) return h;
  }
  return std::nullopt;
}

bool Bus::admits(Subscription& sub, const Envelope& envelope) {
  if (!sub.policy.enabled) return false;
  if (sub.policy.min_interval > 0 && sub.has_delivered) {
    // Epsilon absorbs the quantization of sim_time = tick * dt.
    if (envelope.sim_time - sub.last_delivery_sim_time + 1e-12 < sub.policy.min_interval)
      return false;
  }
  if (sub.policy.drop_probability > 0) {
    if (sub.drop_rng.uniform01() < sub.policy.drop_probability) return false;
  }
  return true;
}

void Bus::begin_tick(long tick) {
  tick_ = tick;
  for (Subscription& sub : subscriptions_) {
    if (sub.staged_policy) {
      sub.policy = *sub.staged_policy;
      sub.staged_policy.reset();
    }
  }

  std::vector<PendingEnvelope> batch;
  batch.swap(pending_);
  for (PendingEnvelope& p : batch) {
    // Iterate by index: callbacks may add subscriptions (they start
    // receiving from the next tick's batch onward for already-queued
    // envelopes of this topic as well, since the list is re-read).
    const std::vector<SubscriptionHandle> subs = topics_[p.topic_index].subscriptions;
    for (SubscriptionHandle h : subs) {
      Subscription& sub = subscriptions_[h];
      if (!admits(sub, p.envelope)) continue;
      sub.last_delivery_sim_time = p.envelope.sim_time;
      sub.has_delivered = true;
      if (sub.callback) sub.callback(p.envelope);
    }
  }
}

void Bus::register_service(const std::string& name, ServiceHandler handler) {
  if (services_.contains(name))
    throw std::invalid_argument("register_service: duplicate service '" + name + "'");
  services_.emplace(name, std::move(handler));
}

bool Bus::has_service(const std::string& name) const {
  return services_.contains(name);
}

Payload Bus::call_service(const std::string& name, const Payload& request) {
  const auto it = services_.find(name);
  if (it == services_.end()) throw std::invalid_argument("call_service: unknown service '" + name + "'");
  const std::uint64_t seq = service_seq_[name]++;
  record(RecordKind::kServiceRequest, name, seq, tick_, sim_time(), request);
  Payload response = it->second(request);
  record(RecordKind::kServiceResponse, name, seq, tick_, sim_time(), response);
  return response;
}

void Bus::register_action(const std::string& name, ActionServer server) {
  if (actions_.contains(name))
    throw std::invalid_argument("register_action: duplicate action '" + name + "'");
  ActionState state;
  state.server = std::move(server);
  actions_.emplace(name, std::move(state));
}

bool Bus::has_action(const std::string& name) const {
  return actions_.contains(name);
}

void Bus::start_action(const std::string& name, Payload goal,
                       std::function<void(const Payload&)> on_feedback,
                       std::function<void(const Payload&)> on_result) {
  const auto it = actions_.find(name);
  if (it == actions_.end()) throw std::invalid_argument("start_action: unknown action '" + name + "'");
  ActionState& state = it->second;
  if (state.active)
    throw std::runtime_error("start_action: action '" + name + "' already has an active goal");
  state.active = true;
  state.cancel_requested = false;
  state.on_feedback = std::move(on_feedback);
  state.on_result = std::move(on_result);
  record(RecordKind::kActionGoal, name, state.next_seq++, tick_, sim_time(), goal);
  if (state.server.on_goal) state.server.on_goal(goal);
}

bool Bus::cancel_action(const std::string& name) {
  const auto it = actions_.find(name);
  if (it == actions_.end()) throw std::invalid_argument("cancel_action: unknown action '" + name + "'");
  if (!it->second.active) return false;  // cancel after completion is a no-op signal
  it->second.cancel_requested = true;
  if (it->second.server.on_cancel) it->second.server.on_cancel();
  return true;
}

bool Bus::action_active(const std::string& name) const {
  const auto it = actions_.find(name);
  if (it == actions_.end()) throw std::invalid_argument("action_active: unknown action '" + name + "'");
  return it->second.active;
}

bool Bus::cancel_requested(const std::string& name) const {
  const auto it = actions_.find(name);
  if (it == actions_.end())
    throw std::invalid_argument("cancel_requested: unknown action '" + name + "'");
  return it->second.cancel_requested;
}

void Bus::action_feedback(const std::string& name, Payload feedback) {
  ActionState& state = actions_.at(name);
  if (!state.active) throw std::runtime_error("action_feedback: no active goal on '" + name + "'");
  record(RecordKind::kActionFeedback, name, state.next_seq++, tick_, sim_time(), feedback);
  if (state.on_feedback) state.on_feedback(feedback);
}

void Bus::action_result(const std::string& name, Payload result) {
  ActionState& state = actions_.at(name);
  if (!state.active) throw std::runtime_error("action_result: no active goal on '" + name + "'");
  record(RecordKind::kActionResult, name, state.next_seq++, tick_, sim_time(), result);
  state.active = false;
  state.cancel_requested = false;
  if (state.on_result) state.on_result(result);
}

}  // namespace uavsim
