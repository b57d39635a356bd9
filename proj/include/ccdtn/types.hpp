#pragma once

#include <cstdint>
#include <string>

namespace ccdtn {

using NodeId = std::int32_t;
using ContentId = std::int32_t;
using MsgId = std::uint64_t;

inline constexpr NodeId kNoNode = -1;
inline constexpr ContentId kNoContent = 0;

enum class NodeKind : std::uint8_t { MobileRequester, MobileRelay, Cap, Provider };

inline bool is_mobile(NodeKind k) {
  return k == NodeKind::MobileRequester || k == NodeKind::MobileRelay;
}

enum class DropReason : std::uint8_t {
  DuplicateRequester,
  TtlExpired,
  NoPendingRequester,
  LoopDetected,
  CacheFull,
  BufferOverflow,
};

// Suppressions performed by the content router, as opposed to resource
// exhaustion (TTL death, full buffers).
inline bool is_protocol_drop(DropReason r) {
  return r == DropReason::DuplicateRequester || r == DropReason::NoPendingRequester ||
         r == DropReason::LoopDetected;
}

const char* to_string(NodeKind k);
const char* to_string(DropReason r);

}  // namespace ccdtn
