#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "ccdtn/messages.hpp"

namespace ccdtn {

struct NodeState;

enum class RouterKind : std::uint8_t { Epidemic, SprayAndWait, FirstContact, Hybrid };

RouterKind router_from_string(const std::string& s);
const char* to_string(RouterKind k);

struct RouterConfig {
  RouterKind kind = RouterKind::Epidemic;
  int initial_copies = 10;
};

// Initial copy budget a node assigns when it originates or re-buffers a
// message it created itself.
int initial_copies_for(const RouterConfig& cfg, bool interest);

// Store-carry-forward queue. FIFO drop-oldest on overflow, no duplicate ids.
class Buffer {
 public:
  explicit Buffer(std::size_t capacity = 200) : capacity_(capacity) {}

  // Inserts m unless its id is already present; returns ids evicted to make room.
  std::vector<MsgId> insert(Message m);
  bool contains(MsgId id) const;
  Message* find(MsgId id);
  const Message* find(MsgId id) const;
  std::optional<Message> take(MsgId id);
  std::vector<Message> purge_expired(double now);

  std::size_t size() const { return queue_.size(); }
  std::size_t capacity() const { return capacity_; }
  void set_capacity(std::size_t capacity) { capacity_ = capacity; }
  const std::deque<Message>& messages() const { return queue_; }

 private:
  std::deque<Message> queue_;
  std::size_t capacity_ = 200;
};

enum class Direction : std::uint8_t { AToB, BToA };

struct PlannedTransfer {
  MsgId msg = 0;
  Direction dir = Direction::AToB;
};

// Decides which buffered messages move between two nodes in contact, ordered
// oldest creation time first.
//   Epidemic      — symmetric difference of the buffers, both directions.
//   SprayAndWait  — binary spray while copies > 1; a single copy moves only by
//                   direct transmission to the message destination.
//   FirstContact  — every message is handed to the peer and leaves the sender.
//   Hybrid        — SprayAndWait discipline, but single-copy Interests also
//                   treat CAPs and nodes caching the content as acceptable
//                   endpoints, so requests keep progressing toward providers.
std::vector<PlannedTransfer> select_transfers(const RouterConfig& cfg, const NodeState& a,
                                              const NodeState& b, double now);

struct TransferResult {
  Message delivered;
  bool sender_kept = false;
  std::vector<MsgId> evicted;  // receiver-side overflow victims
};

// Applies copy accounting for a completed transfer and inserts the delivered
// copy into the receiver's buffer. Returns nothing when the sender no longer
// holds the message (aborted or expired mid-flight); buffers are untouched then.
std::optional<TransferResult> on_transfer_complete(const RouterConfig& cfg, NodeState& sender,
                                                   NodeState& receiver, MsgId msg);

}  // namespace ccdtn
