#include "twistdec/group.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "twistdec/subsets.hpp"

namespace twistdec {

namespace {

uint64_t hash_bytes(std::span<const uint8_t> b) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (uint8_t c : b) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdull;
  h ^= h >> 33;
  return h;
}

uint64_t fixmask_of(std::span<const uint8_t> imgs) {
  uint64_t m = 0;
  for (size_t i = 0; i < imgs.size(); ++i)
    if (imgs[i] == i + 1) m |= uint64_t{1} << i;
  return m;
}

}  // namespace

Permutation ElementStore::perm(size_t i) const {
  auto imgs = images(i);
  std::vector<int> v(imgs.begin(), imgs.end());
  return Permutation::from_images(std::move(v));
}

ElementIndex::ElementIndex(const ElementStore* store)
    : store_(store), slots_(1024, kNone) {}

uint32_t ElementIndex::find(std::span<const uint8_t> imgs) const {
  size_t mask = slots_.size() - 1;
  size_t pos = hash_bytes(imgs) & mask;
  while (slots_[pos] != kNone) {
    auto have = store_->images(slots_[pos]);
    if (std::equal(have.begin(), have.end(), imgs.begin())) return slots_[pos];
    pos = (pos + 1) & mask;
  }
  return kNone;
}

bool ElementIndex::insert(std::span<const uint8_t> imgs, uint32_t idx) {
  if (used_ * 10 >= slots_.size() * 7) grow();
  size_t mask = slots_.size() - 1;
  size_t pos = hash_bytes(imgs) & mask;
  while (slots_[pos] != kNone) {
    auto have = store_->images(slots_[pos]);
    if (std::equal(have.begin(), have.end(), imgs.begin())) return false;
    pos = (pos + 1) & mask;
  }
  slots_[pos] = idx;
  ++used_;
  return true;
}

void ElementIndex::grow() {
  std::vector<uint32_t> old = std::move(slots_);
  slots_.assign(old.size() * 2, kNone);
  size_t mask = slots_.size() - 1;
  for (uint32_t idx : old) {
    if (idx == kNone) continue;
    size_t pos = hash_bytes(store_->images(idx)) & mask;
    while (slots_[pos] != kNone) pos = (pos + 1) & mask;
    slots_[pos] = idx;
  }
}

Enumeration::Enumeration(const std::vector<Permutation>& generators,
                         int degree, uint64_t budget)
    : store_(degree), index_(&store_) {
  if (generators.empty())
    throw InputError("enumeration needs at least one generator");
  if (degree > kMaxEnumerationDegree)
    throw InputError("enumeration supports degree up to " +
                     std::to_string(kMaxEnumerationDegree) + ", got " +
                     std::to_string(degree));
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw InputError("generator degree mismatch in group of degree " +
                       std::to_string(degree));

  std::vector<std::vector<uint8_t>> gen_bytes;
  for (const auto& g : generators) {
    std::vector<uint8_t> b(degree);
    for (int i = 0; i < degree; ++i) b[i] = static_cast<uint8_t>(g.images()[i]);
    gen_bytes.push_back(std::move(b));
  }

  std::vector<uint8_t> id(degree);
  for (int i = 0; i < degree; ++i) id[i] = static_cast<uint8_t>(i + 1);
  store_.append(id);
  index_.insert(store_.images(0), 0);
  fixmasks_.push_back(fixmask_of(store_.images(0)));

  std::vector<uint32_t> frontier{0};
  std::vector<std::vector<uint8_t>> layer;
  while (!frontier.empty()) {
    layer.clear();
    for (uint32_t fi : frontier) {
      // copy: appending below may reallocate the flat store
      std::vector<uint8_t> x(store_.images(fi).begin(),
                             store_.images(fi).end());
      for (const auto& g : gen_bytes) {
        std::vector<uint8_t> y(degree);
        for (int p = 0; p < degree; ++p) y[p] = g[x[p] - 1];
        if (index_.find(y) == ElementIndex::kNone) layer.push_back(std::move(y));
      }
    }
    std::sort(layer.begin(), layer.end());
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
    frontier.clear();
    for (auto& y : layer) {
      if (store_.size() >= budget)
        throw BudgetError("enumeration exceeded budget of " +
                          std::to_string(budget) + " elements");
      uint32_t idx = static_cast<uint32_t>(store_.append(y));
      if (!index_.insert(store_.images(idx), idx)) continue;  // dup in layer
      fixmasks_.push_back(fixmask_of(store_.images(idx)));
      frontier.push_back(idx);
    }
  }

  std::unordered_set<uint64_t> seen;
  for (size_t i = 1; i < size(); ++i) seen.insert(fixmasks_[i]);
  distinct_.assign(seen.begin(), seen.end());
  std::sort(distinct_.begin(), distinct_.end());
}

size_t Enumeration::find(const Permutation& p) const {
  if (p.degree() != degree()) return static_cast<size_t>(-1);
  std::vector<uint8_t> b(p.images().begin(), p.images().end());
  return find_bytes(b);
}

size_t Enumeration::find_bytes(std::span<const uint8_t> imgs) const {
  uint32_t idx = index_.find(imgs);
  return idx == ElementIndex::kNone ? static_cast<size_t>(-1) : idx;
}

bool Enumeration::contains(const Permutation& p) const {
  return find(p) != static_cast<size_t>(-1);
}

int Enumeration::fix_count(size_t i) const {
  return std::popcount(fixmasks_[i]);
}

PermutationGroup::PermutationGroup(std::string name, int degree,
                                   std::vector<Permutation> generators)
    : name_(std::move(name)), degree_(degree),
      generators_(std::move(generators)) {
  if (generators_.empty())
    throw InputError("group '" + name_ + "' has no generators");
  for (const auto& g : generators_)
    if (g.degree() != degree_)
      throw InputError("group '" + name_ + "': generator degree mismatch");
}

const Enumeration& PermutationGroup::enumeration(uint64_t budget) const {
  std::lock_guard<std::mutex> lk(*mu_);
  if (!enum_)
    enum_ = std::make_shared<Enumeration>(generators_, degree_, budget);
  return *enum_;
}

uint64_t PermutationGroup::order(uint64_t budget) const {
  return enumeration(budget).size();
}

bool PermutationGroup::contains(const Permutation& p) const {
  return enumeration().contains(p);
}

bool PermutationGroup::is_transitive() const {
  std::vector<char> seen(degree_ + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& g : generators_) {
      int y = g.apply(x);
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == degree_;
}

Distance PermutationGroup::min_distance() const {
  const auto& e = enumeration();
  if (e.size() == 1) return {degree_ + 1, true};
  int max_fix = 0;
  for (size_t i = 1; i < e.size(); ++i)
    max_fix = std::max(max_fix, e.fix_count(i));
  return {degree_ - max_fix, false};
}

bool is_base_in_masks(const std::vector<uint64_t>& masks, uint64_t subset) {
  for (uint64_t m : masks)
    if ((m & subset) == subset) return false;
  return true;
}

BaseSizeResult base_size_from_masks(int degree,
                                    const std::vector<uint64_t>& masks) {
  const int n = degree;
  for (int k = 0; k <= n; ++k) {
    // Mark every k-subset contained in some mask; the colex-first unmarked
    // subset is a smallest base once one exists.
    std::unordered_set<uint64_t> covered;
    for (uint64_t m : masks) {
      if (std::popcount(m) < k) continue;
      std::vector<int> pts;
      for (int i = 0; i < n; ++i)
        if (m & (uint64_t{1} << i)) pts.push_back(i + 1);
      SubsetIter it(static_cast<int>(pts.size()), k);
      do {
        uint64_t sub = 0;
        for (int j : it.current()) sub |= uint64_t{1} << (pts[j - 1] - 1);
        covered.insert(sub);
      } while (it.next());
    }
    if (covered.size() >= binomial(n, k)) continue;  // k exhaustively refuted
    SubsetIter it(n, k);
    do {
      if (!covered.count(subset_mask(it.current())))
        return {k, it.current()};
    } while (it.next());
  }
  throw Error("base_size: no base found up to degree (unreachable)");
}

bool PermutationGroup::is_base(const std::vector<int>& points) const {
  for (int p : points)
    if (p < 1 || p > degree_)
      throw InputError("base point " + std::to_string(p) +
                       " out of range 1.." + std::to_string(degree_));
  return is_base_in_masks(enumeration().distinct_fixmasks(),
                          subset_mask(points));
}

BaseSizeResult PermutationGroup::base_size() const {
  return base_size_from_masks(degree_, enumeration().distinct_fixmasks());
}

BaseIndexTable::BaseIndexTable(const ElementStore& elems, std::vector<int> base)
    : base_(std::move(base)) {
  const int n = elems.degree();
  for (int p : base_)
    if (p < 1 || p > n)
      throw InputError("base point " + std::to_string(p) + " out of range");
  bits_ = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(n))));
  if (bits_ * static_cast<int>(base_.size()) > 64)
    throw InputError("base image tuple does not fit a 64-bit key");

  size_t cap = 64;
  while (cap < elems.size() * 2) cap <<= 1;
  keys_.assign(cap, 0);
  vals_.assign(cap, kNone);

  std::vector<int> symbols(base_.size());
  for (size_t i = 0; i < elems.size(); ++i) {
    auto imgs = elems.images(i);
    for (size_t j = 0; j < base_.size(); ++j) symbols[j] = imgs[base_[j] - 1];
    uint64_t key = pack(symbols);
    size_t mask = cap - 1;
    size_t pos = (key * 0x9E3779B97F4A7C15ull) & mask;
    while (vals_[pos] != kNone) {
      if (keys_[pos] == key)
        throw InputError(
            "base index collision: points do not form a base (elements " +
            std::to_string(vals_[pos]) + " and " + std::to_string(i) +
            " agree on all base points)");
      pos = (pos + 1) & mask;
    }
    keys_[pos] = key;
    vals_[pos] = static_cast<uint32_t>(i);
    ++used_;
  }
}

uint64_t BaseIndexTable::pack(std::span<const int> symbols) const {
  uint64_t key = 0;
  for (int s : symbols) key = (key << bits_) | static_cast<uint64_t>(s);
  return key;
}

uint32_t BaseIndexTable::lookup(std::span<const int> symbols) const {
  uint64_t key = pack(symbols);
  size_t mask = keys_.size() - 1;
  size_t pos = (key * 0x9E3779B97F4A7C15ull) & mask;
  while (vals_[pos] != kNone) {
    if (keys_[pos] == key) return vals_[pos];
    pos = (pos + 1) & mask;
  }
  return kNone;
}

PermIsoResult verify_permutational_isomorphism(
    const PermutationGroup& g1, const PermutationGroup& g2,
    const std::vector<Permutation>& phi_images, const Permutation& psi) {
  if (phi_images.size() != g1.generators().size())
    throw InputError("phi must list one image per generator of g1");
  if (psi.degree() != g1.degree() || g2.degree() != g1.degree())
    throw InputError("point bijection requires equal degrees");
  for (const auto& im : phi_images)
    if (!g2.contains(im))
      throw InputError("phi image " + im.to_cycles() + " is not in " +
                       g2.name());
  for (size_t j = 0; j < phi_images.size(); ++j) {
    const Permutation& g = g1.generators()[j];
    const Permutation& gp = phi_images[j];
    for (int x = 1; x <= g1.degree(); ++x)
      if (psi.apply(g.apply(x)) != gp.apply(psi.apply(x)))
        return {false, static_cast<int>(j), x};
  }
  return {true, -1, -1};
}

}  // namespace twistdec
