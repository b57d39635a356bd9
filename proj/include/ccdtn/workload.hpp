#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccdtn/rng.hpp"
#include "ccdtn/types.hpp"

namespace ccdtn {

enum class Popularity : std::uint8_t { Uniform, Zipf };

Popularity popularity_from_string(const std::string& s);
const char* to_string(Popularity p);

// pmf[i] = (i+1)^-s / H_{n,s}; content id i+1 is the i-th most popular.
std::vector<double> zipf_pmf(int n, double s);

// Content catalog with rank-ordered popularity. Content ids are 1..size.
struct Catalog {
  int size = 0;
  Popularity dist = Popularity::Zipf;
  double zipf_s = 1.0;
  std::vector<double> pmf;
  std::vector<double> cdf;

  static Catalog uniform(int n);
  static Catalog zipf(int n, double s);

  double popularity(ContentId c) const { return pmf[static_cast<std::size_t>(c - 1)]; }
  ContentId sample(Rng& rng) const;  // inverse-CDF draw
};

// Eq-style request rate: u_m * pi_c, scaled by the base per-second rate.
double request_rate(double u_m, double pi_c, double base_rate = 1.0);

struct Request {
  double time = 0.0;
  NodeId requester = kNoNode;
  ContentId content = kNoContent;
};

struct RequestSchedule {
  std::vector<Request> entries;  // sorted by time
};

// One Interest per requester per `interval_s` epoch with uniform jitter inside
// the epoch; contents drawn from the catalog popularity. Exactly
// floor(duration/interval_s) * |requesters| entries.
RequestSchedule generate_schedule(const Catalog& catalog, const std::vector<NodeId>& requesters,
                                  double interval_s, double duration, Rng& rng);

// Per-user request profiles u_m, drawn uniformly from (0, 1].
std::vector<double> draw_profiles(std::size_t count, Rng& rng);

}  // namespace ccdtn
