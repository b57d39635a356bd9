#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ccdtn/content_store.hpp"
#include "ccdtn/messages.hpp"
#include "ccdtn/routing.hpp"
#include "ccdtn/types.hpp"

namespace ccdtn {

// Pending Requester Information Table entry: who is still waiting for a
// content. One entry per content; the requester set only grows until the
// entry is satisfied or expires.
struct PritEntry {
  std::set<NodeId> requesters;
  double inserted_at = 0.0;
  double expiry = 0.0;
};

// Satisfied Request Information Table: remembers who satisfied past interests
// so future interests can be steered toward likely providers.
struct SritProvider {
  NodeId provider = kNoNode;
  double satisfied_at = 0.0;
};

struct SritEntry {
  std::vector<SritProvider> providers;  // most recently satisfied first
  double last_touch = 0.0;
};

// Conventional CCN breadcrumbs, kept by CAPs for Interests that arrive over
// the fixed-network side.
struct PitEntry {
  std::set<NodeId> requesters;
  double inserted_at = 0.0;
  double expiry = 0.0;
};

struct Fib {
  bool full_coverage = false;
  std::set<ContentId> entries;
  bool has(ContentId c) const { return full_coverage || entries.count(c) > 0; }
};

struct ProtocolConfig {
  double message_ttl = 500.0;
  std::uint64_t content_bytes = 1'000'000;
  std::size_t srit_max_contents = 20;
  std::size_t srit_max_providers = 3;
  std::size_t hop_limit = 16;
  bool cache_at_destination = true;
  bool cache_at_relays = false;
  bool cache_at_caps = true;
};

struct NodeState {
  NodeId id = kNoNode;
  NodeKind kind = NodeKind::MobileRelay;
  ContentStore content_store;
  std::map<ContentId, PritEntry> prit;
  std::map<ContentId, SritEntry> srit;
  std::map<ContentId, PitEntry> pit;  // CAPs only
  Fib fib;                            // CAPs only
  Buffer buffer;
  double profile_u = 1.0;  // request profile, consulted by cost-aware caching
};

enum class Via : std::uint8_t { Dtn, Ccn };

struct NextHop {
  enum class Kind : std::uint8_t { Broadcast, Node, TowardFib, TowardSrit };
  Kind kind = Kind::Broadcast;
  NodeId node = kNoNode;                // Kind::Node
  std::vector<NodeId> srit_providers;   // Kind::TowardSrit, best first

  static NextHop broadcast() { return {}; }
  static NextHop to(NodeId n) { return {Kind::Node, n, {}}; }
  static NextHop toward_fib() { return {Kind::TowardFib, kNoNode, {}}; }
  static NextHop toward_srit(std::vector<NodeId> providers) {
    return {Kind::TowardSrit, kNoNode, std::move(providers)};
  }
};

struct DeliverToApp {
  ContentId content = kNoContent;
};
struct SendResponseAction {
  ResponseMessage msg;
  NextHop next;
};
struct ForwardInterestAction {
  InterestMessage msg;
  NextHop next;
};
struct DropAction {
  MsgId msg = 0;
  DropReason reason = DropReason::TtlExpired;
};
struct CacheAdmitAction {
  ContentId content = kNoContent;
};

using ProtocolAction =
    std::variant<DeliverToApp, SendResponseAction, ForwardInterestAction, DropAction, CacheAdmitAction>;

// Branch labels recorded for conformance tests; each label corresponds to one
// leaf of the Interest/Response processing decision trees.
enum class InterestBranch : std::uint8_t {
  TtlExpired,
  MobileHit,
  CapHitCcn,
  CapHitDtn,
  LoopDetected,
  HopLimitExceeded,
  MobileSritSteer,
  MobileDuplicate,
  MobilePritForward,
  CapCcnDuplicate,
  CapFibFetch,
  CapSritSteer,
  CapDtnDuplicate,
  CapDtnPritForward,
  CapCcnHandoff,
};

enum class ResponseBranch : std::uint8_t {
  TtlExpired,
  DestNoPending,
  DestReaddress,
  RelayFold,
  RelayPassThrough,
  CapDtnNoPending,
  CapDtnForward,
  CapCcnNative,
  CapCcnNoPending,
};

struct BranchLog {
  std::vector<InterestBranch> interest;
  std::vector<ResponseBranch> response;
};

struct MsgIdGen {
  MsgId next = 1;
  MsgId operator()() { return next++; }
};

// Node-level Interest processing. Ordering: TTL guard; Content Store lookup
// (a hit builds a Response and mutates no table); on a miss, loop and hop-cap
// guards, then SRIT steering, then PRIT aggregation, then forwarding. CAPs add
// a PIT breadcrumb for fixed-network arrivals and prefer the FIB path when an
// entry exists.
std::vector<ProtocolAction> process_interest(NodeState& node, const InterestMessage& msg, Via via,
                                             double now, const ProtocolConfig& cfg, MsgIdGen& ids,
                                             BranchLog* log = nullptr);

// Node-level Response processing per the reverse-path scheme: mobile nodes
// record the provider in the SRIT unconditionally, destinations deliver and
// re-address toward remaining pending requesters, intermediates fold their
// PRIT entries into the meta-information, CAPs serve PIT/PRIT pendings.
std::vector<ProtocolAction> process_response(NodeState& node, const ResponseMessage& msg, Via via,
                                             double now, const ProtocolConfig& cfg, MsgIdGen& ids,
                                             BranchLog* log = nullptr);

// Purges PRIT/PIT entries whose expiry has passed and re-asserts the SRIT
// bounds. Idempotent at fixed `now`; returns the number of purged entries.
std::size_t expire_tables(NodeState& node, double now, const ProtocolConfig& cfg);

// Table helpers, shared with the engine and the tests.
void prit_add(NodeState& node, ContentId c, NodeId requester, double now, const ProtocolConfig& cfg);
void pit_add(NodeState& node, ContentId c, NodeId requester, double now, const ProtocolConfig& cfg);
void srit_insert(NodeState& node, ContentId c, NodeId provider, double now, const ProtocolConfig& cfg);
// Providers recorded for `c`, most recently satisfied first, minus `exclude`.
std::vector<NodeId> srit_lookup(NodeState& node, ContentId c, double now, NodeId exclude = kNoNode);

}  // namespace ccdtn
