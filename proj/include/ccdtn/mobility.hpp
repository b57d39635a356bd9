#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "ccdtn/rng.hpp"
#include "ccdtn/types.hpp"

namespace ccdtn {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(Vec2 a, Vec2 b) {
  const double dx = a.x - b.x, dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

// Undirected road graph; edge lengths equal the Euclidean distance between
// their endpoints. POIs group vertices into visit targets per mobility group.
struct RoadGraph {
  struct Edge {
    int a = 0;
    int b = 0;
    double length = 0.0;
  };

  std::vector<Vec2> vertices;
  std::vector<Edge> edges;
  std::map<int, std::vector<int>> pois;  // group -> vertices

  void add_edge(int a, int b);
  const std::vector<std::pair<int, double>>& neighbors(int v) const { return adjacency_[v]; }
  int vertex_count() const { return static_cast<int>(vertices.size()); }
  bool connected() const;

  // Dijkstra with deterministic tie-breaking (lower predecessor id wins).
  // Returns the vertex sequence from `from` to `to` inclusive.
  std::vector<int> shortest_path(int from, int to) const;
  double path_length(const std::vector<int>& path) const;

  // Synthetic street grid, `spacing` metres apart, with diagonals on
  // alternating cells. POIs are spread deterministically over the grid.
  static RoadGraph grid(int width, int height, double spacing, bool diagonals, int poi_groups,
                        int pois_per_group);

 private:
  std::vector<std::vector<std::pair<int, double>>> adjacency_;
};

// One movement leg: walk `path` at `speed` during [t0, t1]. A single-vertex
// path with speed 0 is a pause.
struct MovementLeg {
  double t0 = 0.0;
  double t1 = 0.0;
  std::vector<int> path;
  double speed = 0.0;
};

struct Trajectory {
  std::vector<MovementLeg> legs;
  // Position at time t; clamps to the trajectory endpoints outside its span.
  Vec2 position_at(double t, const RoadGraph& graph) const;
};

struct MobilityParams {
  double p_poi = 0.8;        // probability of picking a group POI over a random vertex
  double pause_max_s = 120.0;
  double speed_min = 0.5;    // m/s
  double speed_max = 1.5;
};

// Picks the next waypoint: a uniform draw from the group's POI list with
// probability p_poi, otherwise a uniform random vertex; never the current one.
int next_destination(int current_vertex, int group, const RoadGraph& graph, double p_poi, Rng& rng);

// Shortest-path map-based movement: waypoints, per-leg uniform speed, uniform
// pause at each destination, repeated until `duration` is covered.
Trajectory build_trajectory(int start_vertex, int group, const RoadGraph& graph,
                            const MobilityParams& params, double duration, Rng& rng);

struct ContactEvent {
  NodeId a = kNoNode;
  NodeId b = kNoNode;
  double start = 0.0;
  double end = 0.0;
};

// A node's track: either a fixed position (CAPs) or a trajectory on the graph.
struct NodeTrack {
  NodeId id = kNoNode;
  bool is_cap = false;
  Vec2 fixed;
  const Trajectory* trajectory = nullptr;
};

// Samples positions every `step` seconds and emits contact intervals. A pair
// is in contact while their distance is at most the pair range: CAP-mobile
// pairs use the CAP range, mobile pairs the mobile range. CAP-CAP pairs are
// skipped (they talk over the fixed network).
std::vector<ContactEvent> detect_contacts(const std::vector<NodeTrack>& tracks,
                                          const RoadGraph& graph, double mobile_range,
                                          double cap_range, double duration, double step);

}  // namespace ccdtn
