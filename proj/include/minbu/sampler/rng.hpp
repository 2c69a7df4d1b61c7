#pragma once

#include <cstdint>

namespace minbu {

// Counter-based stream: draw i of (seed, stream) is a pure function of the three
// numbers, so samples can be replayed in any order on any worker.
class RngStream {
 public:
  static constexpr const char* algorithm_id = "splitmix64-keyed-counter";

  RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

  std::uint64_t next();
  // uniform on [0, bound), bound > 0 (Lemire's multiply-shift with rejection)
  std::uint64_t below(std::uint64_t bound);
  // uniform on [0, 1) with 53 random bits
  double uniform();

  std::uint64_t master_seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_, stream_, key_, counter_ = 0;
};

std::uint64_t splitmix64_mix(std::uint64_t x);

}  // namespace minbu
