#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ccdtn/content_store.hpp"
#include "ccdtn/routing.hpp"
#include "ccdtn/workload.hpp"

namespace ccdtn {

// Feature flags matching the evaluation baselines: the full proposal, the
// proposal without caches on mobile devices, plain request-response search on
// the DTN routers, and the same with user caches.
enum class Mode : std::uint8_t { Full, NoUserCache, DtnOnly, DtnUserCache };

Mode mode_from_string(const std::string& s);
const char* to_string(Mode m);

struct GridSpec {
  int width = 10;
  int height = 10;
  double spacing = 200.0;  // metres
  bool diagonals = true;
};

struct MapSpec {
  std::string file;  // optional JSON map; empty = synthetic grid
  GridSpec grid;
  int poi_groups = 4;
  int pois_per_group = 3;
};

struct NodeCounts {
  int requesters = 10;
  int relays = 160;
  int caps = 30;
};

struct CacheSpec {
  CachePolicy policy = CachePolicy::Lru;
  int mobile = 10;  // items
  int cap = 50;
};

struct WorkloadSpec {
  int catalog = 1000;
  Popularity dist = Popularity::Zipf;
  double zipf_s = 1.0;
  double interval_s = 300.0;
};

struct LinkSpec {
  double mobile_speed_bps = 2.5e6;
  double cap_speed_bps = 1.0e7;
  double mobile_range_m = 10.0;
  double cap_range_m = 100.0;
};

struct MobilitySpec {
  double p_poi = 0.8;
  double pause_max_s = 120.0;
  double walk_speed_min = 0.5;  // m/s
  double walk_speed_max = 1.5;
  double vehicle_speed_min = 2.7;
  double vehicle_speed_max = 13.9;
  std::vector<int> vehicle_groups = {4};  // groups that ride instead of walk
  double contact_step_s = 1.0;
};

struct PayloadSpec {
  std::uint64_t content_bytes = 1'000'000;
  std::uint64_t interest_bytes = 1'000;
};

struct Scenario {
  std::string id;
  std::uint64_t seed = 1;
  double duration = 432000.0;  // 5 days
  double warmup = 86400.0;     // first day
  NodeCounts nodes;
  MapSpec map;
  RouterConfig routing;
  CacheSpec cache;
  WorkloadSpec workload;
  LinkSpec link;
  MobilitySpec mobility;
  PayloadSpec payload;
  double ttl_s = 500.0;
  double core_latency_s = 0.2;
  double ttl_tick_s = 60.0;
  Mode mode = Mode::Full;
  int buffer_capacity = 200;
  // Contents resident in CAP stores at t=0, keyed by CAP index (0-based).
  std::map<int, std::vector<ContentId>> prewarm_caps;

  // Desk-scale preset: small node counts and a short run so a full experiment
  // grid finishes in minutes.
  static Scenario desk();
  // The published large-scale parameter set: 5 simulated days, 10 requesters,
  // 160 relays, 30 CAPs.
  static Scenario paper_scale();

  // Throws std::invalid_argument listing every violated key path.
  void validate() const;
};

// Parses a scenario file, filling unset keys from `defaults`. Unknown keys are
// rejected with their full path.
Scenario load_scenario(const std::string& path, const Scenario& defaults);
Scenario scenario_from_json_text(const std::string& text, const Scenario& defaults);

}  // namespace ccdtn
