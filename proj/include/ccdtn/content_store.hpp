#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "ccdtn/types.hpp"

namespace ccdtn {

enum class CachePolicy : std::uint8_t { Lru, Fifo, Lfu, CostAware };

CachePolicy cache_policy_from_string(const std::string& s);
const char* to_string(CachePolicy p);

struct RetrievalCostEstimate {
  ContentId content = kNoContent;
  double popularity = 0.0;
  double requester_affinity = 0.0;
  double est_time = 0.0;
  double cost = 0.0;  // est_time * (1 - popularity * requester_affinity)
};

// Throws std::invalid_argument when popularity/affinity leave [0,1] or
// est_time is negative.
RetrievalCostEstimate estimate_retrieval_cost(ContentId c, double popularity,
                                              double affinity, double est_time);

// Deterministic cost function consulted by CachePolicy::CostAware.
using CostFn = std::function<double(ContentId)>;

// Item-granular content cache; all contents occupy one slot.
class ContentStore {
 public:
  struct EntryMeta {
    double last_access = 0.0;
    std::uint64_t hits = 0;
    double admitted_at = 0.0;
  };

  ContentStore() = default;
  explicit ContentStore(std::size_t capacity) : capacity_(capacity) {}

  // Hit bookkeeping: refreshes last_access and hit count on a hit.
  bool lookup(ContentId c, double now);
  bool contains(ContentId c) const { return entries_.count(c) > 0; }

  // Admits `c`, evicting at most one victim per `policy`. Returns the victim.
  // A zero-capacity store is a no-op; CostAware may refuse `c` itself when its
  // cost is the minimum. Ties break toward the lower content index.
  std::optional<ContentId> admit(ContentId c, CachePolicy policy, double now);

  void set_cost_fn(CostFn fn) { cost_fn_ = std::move(fn); }

  std::size_t size() const { return entries_.size(); }
  std::size_t capacity() const { return capacity_; }
  void set_capacity(std::size_t capacity) { capacity_ = capacity; }
  const std::map<ContentId, EntryMeta>& entries() const { return entries_; }

 private:
  ContentId pick_victim(CachePolicy policy) const;

  std::size_t capacity_ = 0;
  std::map<ContentId, EntryMeta> entries_;
  CostFn cost_fn_;
};

}  // namespace ccdtn
