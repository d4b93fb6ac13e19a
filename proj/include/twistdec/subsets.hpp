#pragma once

#include <cstdint>
#include <vector>

namespace twistdec {

// Number of k-subsets of an n-set, capped at 2^63 to keep budget arithmetic
// overflow-free.
inline uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr uint64_t kCap = uint64_t{1} << 63;
  uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    if (r > kCap / (n - k + i)) return kCap;
    r = r * (n - k + i) / i;
  }
  return r;
}

// Enumerates k-subsets of {1..n} as ascending vectors in colexicographic
// order. Usage: SubsetIter it(n, k); do { use(it.current()); } while
// (it.next());  k = 0 yields the single empty subset.
class SubsetIter {
 public:
  SubsetIter(int n, int k) : n_(n), k_(k), cur_(k) {
    for (int i = 0; i < k; ++i) cur_[i] = i + 1;
    done_ = k > n;
  }
  bool done() const { return done_; }
  const std::vector<int>& current() const { return cur_; }
  bool next() {
    if (done_) return false;
    int i = 0;
    while (i < k_) {
      int limit = (i + 1 < k_) ? cur_[i + 1] : n_ + 1;
      if (cur_[i] + 1 < limit) break;
      ++i;
    }
    if (i == k_) {
      done_ = true;
      return false;
    }
    ++cur_[i];
    for (int j = 0; j < i; ++j) cur_[j] = j + 1;
    return true;
  }

 private:
  int n_, k_;
  std::vector<int> cur_;
  bool done_;
};

inline uint64_t subset_mask(const std::vector<int>& points) {
  uint64_t m = 0;
  for (int p : points) m |= uint64_t{1} << (p - 1);
  return m;
}

}  // namespace twistdec
