#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "twistdec/perm.hpp"

namespace twistdec {

inline uint64_t splitmix64(uint64_t& x) {
  uint64_t z = (x += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Derive an independent stream seed from a master seed and a stream index.
inline uint64_t derive_seed(uint64_t master, uint64_t stream) {
  uint64_t x = master ^ (0xD1B54A32D192ED03ull * (stream + 1));
  return splitmix64(x);
}

// xoshiro256**; deterministic across platforms, seeded via splitmix64.
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    for (auto& w : s_) w = splitmix64(seed);
  }

  uint64_t next() {
    auto rotl = [](uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
    uint64_t result = rotl(s_[1] * 5, 7) * 9;
    uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Unbiased value in [0, bound) by rejection.
  uint64_t below(uint64_t bound) {
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  int uniform_int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  // k distinct values from {1..n}, by partial Fisher-Yates; sorted ascending.
  std::vector<int> sample_points(int n, int k) {
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    for (int i = 0; i < k; ++i) {
      int j = i + static_cast<int>(below(static_cast<uint64_t>(n - i)));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
  }

  Permutation random_permutation(int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 1);
    for (int i = degree - 1; i > 0; --i) {
      int j = static_cast<int>(below(static_cast<uint64_t>(i + 1)));
      std::swap(img[i], img[j]);
    }
    return Permutation::from_images(std::move(img));
  }

 private:
  uint64_t s_[4];
};

}  // namespace twistdec
