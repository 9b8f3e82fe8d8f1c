#pragma once

#include <cstdint>

namespace lpproj {

// SplitMix64. Every draw is a fixed function of (seed, draw index), so case
// streams are reproducible across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Independent generator for sub-stream `stream`; does not advance *this.
  Rng split(std::uint64_t stream) const {
    Rng mixer(seed_ ^ (0xd1b54a32d192ed03ULL * (stream + 1)));
    return Rng(mixer.next());
  }

  // Uniform in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  // Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double normal();

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace lpproj
