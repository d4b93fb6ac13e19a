#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twistdec/perm.hpp"

namespace twistdec {

// Default cap on closure size; enumeration refuses to grow past it.
inline constexpr uint64_t kDefaultEnumerationBudget = uint64_t{1} << 21;

// Enumeration (and the fixmask machinery) is limited to degree 64 so that a
// point set fits one machine word. Large-degree support is out of scope.
inline constexpr int kMaxEnumerationDegree = 64;

// Flat storage for many same-degree permutations, one byte per image.
class ElementStore {
 public:
  explicit ElementStore(int degree) : n_(degree) {}
  int degree() const { return n_; }
  size_t size() const { return n_ ? flat_.size() / n_ : 0; }
  std::span<const uint8_t> images(size_t i) const {
    return {flat_.data() + i * n_, static_cast<size_t>(n_)};
  }
  size_t append(std::span<const uint8_t> imgs) {
    flat_.insert(flat_.end(), imgs.begin(), imgs.end());
    return size() - 1;
  }
  Permutation perm(size_t i) const;
  void reserve(size_t count) { flat_.reserve(count * n_); }

 private:
  int n_;
  std::vector<uint8_t> flat_;
};

// Open-addressing hash from permutation image bytes to element index.
class ElementIndex {
 public:
  static constexpr uint32_t kNone = 0xFFFFFFFFu;
  explicit ElementIndex(const ElementStore* store);
  uint32_t find(std::span<const uint8_t> imgs) const;
  // Inserts key -> index; returns false if the key was already present.
  bool insert(std::span<const uint8_t> imgs, uint32_t idx);

 private:
  void grow();
  const ElementStore* store_;
  std::vector<uint32_t> slots_;
  size_t used_ = 0;
};

// Complete element list of a finite permutation group, in deterministic
// order: breadth-first closure under right multiplication by the generators,
// each layer sorted lexicographically by image list. Index 0 is the identity.
class Enumeration {
 public:
  Enumeration(const std::vector<Permutation>& generators, int degree,
              uint64_t budget);

  int degree() const { return store_.degree(); }
  size_t size() const { return store_.size(); }
  std::span<const uint8_t> images(size_t i) const { return store_.images(i); }
  Permutation perm(size_t i) const { return store_.perm(i); }
  size_t find(const Permutation& p) const;
  size_t find_bytes(std::span<const uint8_t> imgs) const;
  bool contains(const Permutation& p) const;

  uint64_t fixmask(size_t i) const { return fixmasks_[i]; }
  int fix_count(size_t i) const;
  // Distinct fixed-point masks over non-identity elements.
  const std::vector<uint64_t>& distinct_fixmasks() const { return distinct_; }
  const ElementStore& store() const { return store_; }

 private:
  ElementStore store_;
  ElementIndex index_;
  std::vector<uint64_t> fixmasks_;
  std::vector<uint64_t> distinct_;
};

// Minimum Hamming distance of a group; a trivial group has no distinct pairs,
// reported as infinite with the conventional n+1 sentinel value.
struct Distance {
  int value;
  bool infinite;
};

struct BaseSizeResult {
  int size;
  std::vector<int> witness;  // a smallest base
};

// Mask-based base machinery, shared by groups (fixed-point masks of
// non-identity elements) and permutation codes (pairwise agreement masks):
// a point set is a base iff no mask contains all of it.
bool is_base_in_masks(const std::vector<uint64_t>& masks, uint64_t subset);
// Smallest base by exhaustive subset-cover sweeps in ascending k; the
// witness is the colex-first base of that size.
BaseSizeResult base_size_from_masks(int degree,
                                    const std::vector<uint64_t>& masks);

class PermutationGroup {
 public:
  PermutationGroup(std::string name, int degree,
                   std::vector<Permutation> generators);

  const std::string& name() const { return name_; }
  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  // Enumerates on first use and caches; later calls ignore the budget.
  const Enumeration& enumeration(
      uint64_t budget = kDefaultEnumerationBudget) const;
  uint64_t order(uint64_t budget = kDefaultEnumerationBudget) const;
  bool contains(const Permutation& p) const;
  bool is_transitive() const;

  Distance min_distance() const;
  // True iff only the identity fixes every listed point.
  bool is_base(const std::vector<int>& points) const;
  // Smallest base size, found by exhaustive subset-cover sweeps in
  // ascending k; the witness is the colex-first base of that size.
  BaseSizeResult base_size() const;

 private:
  std::string name_;
  int degree_;
  std::vector<Permutation> generators_;
  // shared so that copies stay cheap and keep one cached enumeration
  mutable std::shared_ptr<const Enumeration> enum_;
  mutable std::shared_ptr<std::mutex> mu_ = std::make_shared<std::mutex>();
};

// Lookup table from a base's image tuple to the unique group element
// attaining it. Symbols are packed into a 64-bit key.
class BaseIndexTable {
 public:
  static constexpr uint32_t kNone = 0xFFFFFFFFu;
  // Precondition: base is a base of the stored element list (a key collision
  // while building reports the offending pair of elements).
  BaseIndexTable(const ElementStore& elems, std::vector<int> base);

  const std::vector<int>& base() const { return base_; }
  size_t entries() const { return used_; }
  // Index of the element whose images on the base points are `symbols`
  // (aligned with base order), or kNone.
  uint32_t lookup(std::span<const int> symbols) const;

 private:
  uint64_t pack(std::span<const int> symbols) const;
  std::vector<int> base_;
  int bits_;
  std::vector<uint64_t> keys_;
  std::vector<uint32_t> vals_;
  size_t used_ = 0;
};

// Checks the defining identity of a permutational isomorphism: for every
// generator g of g1 and every point x, psi(x^g) = psi(x)^phi(g), where phi is
// given by its images of g1's generators (which must lie in g2).
struct PermIsoResult {
  bool ok;
  int generator_index;  // first violation, -1 if ok
  int point;
};
PermIsoResult verify_permutational_isomorphism(
    const PermutationGroup& g1, const PermutationGroup& g2,
    const std::vector<Permutation>& phi_images, const Permutation& psi);

}  // namespace twistdec
