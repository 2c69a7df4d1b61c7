#include "minbu/sampler/rng.hpp"

namespace minbu {

namespace {
constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t splitmix64_mix(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : seed_(master_seed), stream_(stream_index) {
  key_ = splitmix64_mix(splitmix64_mix(master_seed + kGamma) ^ (stream_index * 0xd1342543de82ef95ULL + 1));
}

std::uint64_t RngStream::next() {
  ++counter_;
  // two rounds so that nearby keys do not give shifted copies of one sequence
  return splitmix64_mix(splitmix64_mix(key_ + counter_ * kGamma) ^ key_);
}

std::uint64_t RngStream::below(std::uint64_t bound) {
  unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(next()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double RngStream::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

}  // namespace minbu
