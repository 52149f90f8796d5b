#pragma once

// Small platform-stable RNG (splitmix64). std::uniform_int_distribution is
// implementation-defined, so seeded corpora and retry schedules go through
// this instead.

#include <cstdint>
#include <vector>

namespace gallai {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Derives an independent sub-stream seed.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  SplitMix64 rng(a ^ (b * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL));
  return rng.next();
}

// Unbiased value in [0, n) via rejection sampling.
inline std::uint64_t rng_below(SplitMix64& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = ~0ULL - ~0ULL % n;
  std::uint64_t r;
  do {
    r = rng.next();
  } while (r >= limit);
  return r % n;
}

template <typename T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng_below(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace gallai
