#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uavsim/messages.hpp"
#include "uavsim/rng.hpp"

namespace uavsim {

/// Per-subscription delivery policy. With min_interval = 0,
/// drop_probability = 0 and enabled = true delivery is lossless FIFO.
struct QosPolicy {
  double min_interval = 0;      // s of sim time between deliveries; 0 = unlimited
  double drop_probability = 0;  // [0, 1]
  bool enabled = true;

  bool valid() const {
    return min_interval >= 0 && drop_probability >= 0 && drop_probability <= 1;
  }
};

struct TopicHandle {
  std::size_t index = static_cast<std::size_t>(-1);
};

using SubscriptionHandle = std::size_t;

enum class RecordKind {
  kTopic,
  kServiceRequest,
  kServiceResponse,
  kActionGoal,
  kActionFeedback,
  kActionResult,
};

const char* record_kind_name(RecordKind kind);
RecordKind record_kind_from_name(const std::string& name);

/// One line of a bag.
struct BagRecord {
  RecordKind kind = RecordKind::kTopic;
  std::string topic_or_name;
  std::uint64_t seq = 0;
  long tick = 0;
  double sim_time = 0;
  Payload payload;
};

/// In-process publish/subscribe bus with services (request/response) and
/// actions (goal/feedback/result).
///
/// Timing model: messages published during tick N are queued and delivered
/// at the start of tick N+1, in global publish order, before any node runs.
/// QoS changes staged with set_qos likewise take effect at the next tick.
/// A single-threaded scheduler owns the bus; callbacks run serialized on it.
/// Message values may be moved to other threads for offline analysis, but
/// live bus access is scheduler-only.
class Bus {
 public:
  using DeliveryCallback = std::function<void(const Envelope&)>;
  using ServiceHandler = std::function<Payload(const Payload&)>;
  using RecordSink = std::function<void(const BagRecord&)>;

  Bus(std::uint64_t seed, double dt);

  // -- topics ---------------------------------------------------------------

  TopicHandle create_topic(const std::string& name, MessageKind kind);
  TopicHandle topic(const std::string& name) const;
  bool has_topic(const std::string& name) const;
  const std::string& topic_name(TopicHandle handle) const;
  MessageKind topic_kind(TopicHandle handle) const;
  std::vector<std::string> topic_names() const;

  /// Enqueues for delivery at the next tick; returns the assigned seq.
  std::uint64_t publish(TopicHandle topic, Payload payload);
  std::uint64_t publish(const std::string& topic, Payload payload);

  /// Replay path: re-publishes a recorded envelope preserving its original
  /// sequence number.
  void publish_recorded(TopicHandle topic, const Envelope& envelope);

  /// `node_id` must be stable across runs; the drop stream is derived from
  /// (seed, topic name, node id), so adding one subscriber never perturbs
  /// another's stream.
  SubscriptionHandle subscribe(TopicHandle topic, const QosPolicy& qos, const std::string& node_id,
                               DeliveryCallback callback);
  SubscriptionHandle subscribe(const std::string& topic, const QosPolicy& qos,
                               const std::string& node_id, DeliveryCallback callback);

  /// Stages a policy change; it applies from the next tick.
  void set_qos(SubscriptionHandle subscription, const QosPolicy& qos);
  /// The policy currently in force (staged changes not yet applied).
  QosPolicy qos(SubscriptionHandle subscription) const;
  /// Locates a subscription by (topic, node id); this is the jammer's
  /// lookup path.
  std::optional<SubscriptionHandle> find_subscription(const std::string& topic,
                                                      const std::string& node_id) const;

  // -- services ---------------------------------------------------------------

  void register_service(const std::string& name, ServiceHandler handler);
  bool has_service(const std::string& name) const;
  /// Runs the handler synchronously within the current tick; both request
  /// and response are recorded. Handler errors propagate to the caller.
  Payload call_service(const std::string& name, const Payload& request);

  // -- actions ----------------------------------------------------------------

  struct ActionServer {
    std::function<void(const Payload& goal)> on_goal;
    std::function<void()> on_cancel;
  };

  void register_action(const std::string& name, ActionServer server);
  bool has_action(const std::string& name) const;
  /// Starts a goal. One active goal per server; a second goal while active
  /// is rejected (throws std::runtime_error).
  void start_action(const std::string& name, Payload goal,
                    std::function<void(const Payload&)> on_feedback,
                    std::function<void(const Payload&)> on_result);
  /// Returns false (no-op signal) when no goal is active.
  bool cancel_action(const std::string& name);
  bool action_active(const std::string& name) const;
  bool cancel_requested(const std::string& name) const;
  /// Server-side emissions; feedback requires an active goal, the result
  /// completes it.
  void action_feedback(const std::string& name, Payload feedback);
  void action_result(const std::string& name, Payload result);

  // -- scheduler hooks ---------------------------------------------------------

  /// Applies staged QoS, then delivers everything published during the
  /// previous tick. Node callbacks of tick `tick` run only after this.
  void begin_tick(long tick);
  long current_tick() const { return tick_; }
  double dt() const { return dt_; }
  double sim_time() const { return tick_ * dt_; }

  void add_record_sink(RecordSink sink) { sinks_.push_back(std::move(sink)); }

  /// Published message counts per topic/service/action name, matching the
  /// records emitted to the sinks.
  const std::map<std::string, std::uint64_t>& record_counts() const { return record_counts_; }

 private:
  struct Subscription {
    std::size_t topic_index;
    std::string node_id;
    QosPolicy policy;
    std::optional<QosPolicy> staged_policy;
    DeliveryCallback callback;
    RngStream drop_rng;
    double last_delivery_sim_time = 0;
    bool has_delivered = false;
  };

  struct Topic {
    std::string name;
    MessageKind kind;
    std::uint64_t next_seq = 0;
    std::vector<SubscriptionHandle> subscriptions;  // creation order
  };

  struct ActionState {
    ActionServer server;
    bool active = false;
    bool cancel_requested = false;
    std::uint64_t next_seq = 0;
    std::function<void(const Payload&)> on_feedback;
    std::function<void(const Payload&)> on_result;
  };

  struct PendingEnvelope {
    std::size_t topic_index;
    Envelope envelope;
  };

  void record(RecordKind kind, const std::string& name, std::uint64_t seq, long tick,
              double sim_time, const Payload& payload);
  bool admits(Subscription& sub, const Envelope& envelope);
  std::uint64_t enqueue(Topic& topic, std::size_t topic_index, Payload payload,
                        std::optional<std::uint64_t> forced_seq);

  std::uint64_t seed_;
  double dt_;
  long tick_ = 0;

  std::vector<Topic> topics_;
  std::map<std::string, std::size_t> topic_index_;
  std::vector<Subscription> subscriptions_;
  std::vector<PendingEnvelope> pending_;

  std::map<std::string, ServiceHandler> services_;
  std::map<std::string, std::uint64_t> service_seq_;
  std::map<std::string, ActionState> actions_;

  std::vector<RecordSink> sinks_;
  std::map<std::string, std::uint64_t> record_counts_;
};

}  // namespace uavsim
