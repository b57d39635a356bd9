#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "ccdtn/types.hpp"

namespace ccdtn {

// Content request carried as a DTN bundle. `requester` is the meta-information
// that lets responses travel a reverse path that differs from the forward one.
struct InterestMessage {
  MsgId msg_id = 0;
  ContentId content = kNoContent;
  NodeId requester = kNoNode;
  double creation_time = 0.0;
  double ttl = 0.0;
  int copies_remaining = 1;        // owned by the routing layer
  std::vector<NodeId> hop_trace;   // nodes that have forwarded this copy
  std::vector<NodeId> steer;       // suggested providers from an SRIT match, best first
};

// Content-carrying packet. `extra_requesters` are additional pending requesters
// folded in along the way; the destination is never listed there.
struct ResponseMessage {
  MsgId msg_id = 0;
  ContentId content = kNoContent;
  NodeId destination = kNoNode;
  std::vector<NodeId> extra_requesters;
  NodeId provider = kNoNode;
  std::uint64_t size = 0;  // bytes
  double creation_time = 0.0;
  double ttl = 0.0;
  int copies_remaining = 1;
  std::optional<double> popularity_hint;  // piggybacked by CAPs for cost-aware caching
};

using Message = std::variant<InterestMessage, ResponseMessage>;

inline bool is_interest(const Message& m) { return std::holds_alternative<InterestMessage>(m); }

MsgId msg_id_of(const Message& m);
ContentId content_of(const Message& m);
double creation_time_of(const Message& m);
double ttl_of(const Message& m);
std::uint64_t size_of(const Message& m);
int copies_of(const Message& m);
void set_copies(Message& m, int copies);

inline bool message_expired(const Message& m, double now) {
  return now >= creation_time_of(m) + ttl_of(m);
}

}  // namespace ccdtn
