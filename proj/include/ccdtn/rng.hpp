#pragma once

#include <cstdint>
#include <utility>

namespace ccdtn {

// splitmix64 generator. Small, fast, and fully deterministic across
// platforms, which the reproducibility contract needs; std:: distributions
// are implementation-defined and therefore avoided.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n); n must be > 0.
  std::uint64_t uniform_int(std::uint64_t n) { return next_u64() % n; }

  // Derives an independent stream, e.g. one per node or per subsystem.
  Rng fork(std::uint64_t stream) const {
    Rng r(state_ ^ (0x94d049bb133111ebull * (stream + 1)));
    r.next_u64();
    return r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace ccdtn
