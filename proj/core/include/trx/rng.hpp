#pragma once
#include <cstdint>
#include <vector>

namespace trx {

// Deterministic 64-bit generator (splitmix64 core). Bounded draws use rejection
// sampling, so streams are reproducible across platforms and standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound), bound >= 1
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t mask = ~0ULL >> __builtin_clzll((bound - 1) | 1);
    for (;;) {
      std::uint64_t v = next() & mask;
      if (v < bound) return v;
    }
  }

  bool coin() { return next() & 1; }

  // independent child stream; distinct indices give decorrelated streams
  Rng split(std::uint64_t index) const {
    Rng child(state_ ^ (0x9e3779b97f4a7c15ULL * (index + 0x632be59bd9b4e019ULL)));
    child.next();
    return child;
  }

  // Fisher-Yates on any random-access container
  template <class Seq>
  void shuffle(Seq& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

private:
  std::uint64_t state_;
};

} // namespace trx
