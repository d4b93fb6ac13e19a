#include "twistdec/gkp.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_set>

#include "twistdec/matching.hpp"
#include "twistdec/subsets.hpp"

namespace twistdec {

namespace {

// binom(i, j) mod p via Lucas; each digit's binomial fits a long long
int binom_mod(int i, int j, int p) {
  if (j < 0 || j > i) return 0;
  int result = 1;
  while (i > 0 || j > 0) {
    int id = i % p, jd = j % p;
    if (jd > id) return 0;
    long long r = 1;
    for (int t = 1; t <= jd; ++t) r = r * (id - t + 1) / t;
    result = static_cast<int>((result * (r % p)) % p);
    i /= p;
    j /= p;
  }
  return result;
}

}  // namespace

MatrixModP MatrixModP::identity(int p, int dim) {
  MatrixModP m{p, dim, std::vector<int>(static_cast<size_t>(dim) * dim, 0)};
  for (int r = 1; r <= dim; ++r) m.at(r, r) = 1;
  return m;
}

MatrixModP MatrixModP::mul(const MatrixModP& rhs) const {
  if (p != rhs.p || dim != rhs.dim)
    throw InputError("matrix shape/modulus mismatch");
  MatrixModP out{p, dim, std::vector<int>(static_cast<size_t>(dim) * dim, 0)};
  for (int r = 1; r <= dim; ++r)
    for (int c = 1; c <= dim; ++c) {
      int s = 0;
      for (int t = 1; t <= dim; ++t) s += at(r, t) * rhs.at(t, c);
      out.at(r, c) = s % p;
    }
  return out;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

MatrixModP bk_matrix(int p, int k) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (k < 1) throw InputError("matrix dimension must be >= 1");
  MatrixModP m = MatrixModP::identity(p, k);
  for (int r = 2; r <= k; ++r) m.at(r, r - 1) = 1;
  return m;
}

MatrixModP bk_power(int p, int k, int i) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (k < 1) throw InputError("matrix dimension must be >= 1");
  if (i < 0) throw InputError("exponent must be >= 0");
  MatrixModP m = MatrixModP::identity(p, k);
  for (int r = 1; r <= k; ++r)
    for (int c = 1; c <= r; ++c) m.at(r, c) = binom_mod(i, r - c, p);
  // the closed form must agree with direct repeated multiplication
  MatrixModP check = MatrixModP::identity(p, k);
  MatrixModP b = bk_matrix(p, k);
  for (int t = 0; t < i; ++t) check = check.mul(b);
  if (!(check == m))
    throw Error("closed-form power disagrees with direct multiplication");
  return m;
}

int bk_order(int p, int k) {
  MatrixModP b = bk_matrix(p, k);
  MatrixModP id = MatrixModP::identity(p, k);
  MatrixModP acc = b;
  for (int ord = 1; ord <= 1 << 20; ++ord) {
    if (acc == id) return ord;
    acc = acc.mul(b);
  }
  throw Error("order search overflow");
}

std::string gkp_name(int p, int k) {
  return "GKP_" + std::to_string(p) + "_" + std::to_string(k);
}

GkpFamily::GkpFamily(int p, int k) : p_(p), k_(k), name_(gkp_name(p, k)) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (k < 2) throw InputError("family needs k >= 2 (k = 1 has no pair base)");
  long long npts = 1;
  for (int t = 0; t < k; ++t) {
    npts *= p;
    if (npts > 4096) throw InputError("point budget exceeded: p^k > 4096");
  }
  n_ = static_cast<int>(npts);

  // point <-> vector, lex rank with the first coordinate most significant
  auto rank_of = [&](const std::vector<int>& v) {
    int r = 0;
    for (int c : v) r = r * p + c;
    return r;
  };
  std::vector<std::vector<int>> vecs(n_);
  for (int r = 0; r < n_; ++r) {
    std::vector<int> v(k);
    int x = r;
    for (int j = k - 1; j >= 0; --j) {
      v[j] = x % p;
      x /= p;
    }
    vecs[r] = std::move(v);
  }

  std::vector<MatrixModP> bpow;
  for (int i = 0; i < p; ++i) bpow.push_back(bk_power(p, k, i));

  perms_.reserve(static_cast<size_t>(n_) * p);
  for (int i = 0; i < p; ++i) {
    for (int wr = 0; wr < n_; ++wr) {
      std::vector<int> img(n_);
      for (int ur = 0; ur < n_; ++ur) {
        std::vector<int> out(k);
        for (int c = 0; c < k; ++c) {
          int s = vecs[wr][c];
          for (int t = 0; t < k; ++t)
            s += vecs[ur][t] * bpow[i].at(t + 1, c + 1);
          out[c] = s % p;
        }
        img[ur] = rank_of(out) + 1;
      }
      perms_.push_back(Permutation::from_images(std::move(img)));
    }
  }

  // pairwise agreement masks and code distance (degree <= 64 for masks)
  min_dist_ = n_;
  if (n_ <= kMaxEnumerationDegree) {
    std::unordered_set<uint64_t> seen;
    for (size_t a = 0; a < perms_.size(); ++a)
      for (size_t b = a + 1; b < perms_.size(); ++b) {
        uint64_t m = 0;
        const auto& x = perms_[a].images();
        const auto& y = perms_[b].images();
        for (int u = 0; u < n_; ++u)
          if (x[u] == y[u]) m |= uint64_t{1} << u;
        min_dist_ = std::min(min_dist_, n_ - std::popcount(m));
        if (m) seen.insert(m);
      }
    agree_.assign(seen.begin(), seen.end());
    std::sort(agree_.begin(), agree_.end());
  } else {
    for (size_t a = 0; a < perms_.size(); ++a)
      for (size_t b = a + 1; b < perms_.size(); ++b)
        min_dist_ =
            std::min(min_dist_, hamming_distance(perms_[a], perms_[b]));
  }

  // closedness: the translations and b generate everything, so the set is
  // closed iff composing each element with each generator stays inside
  std::set<std::vector<int>> members;
  for (const auto& q : perms_) members.insert(q.images());
  closed_ = true;
  for (const auto& g : generators()) {
    for (const auto& q : perms_) {
      if (!members.count(q.compose(g).images())) {
        closed_ = false;
        break;
      }
    }
    if (!closed_) break;
  }
}

int GkpFamily::point_of(const std::vector<int>& v) const {
  if (static_cast<int>(v.size()) != k_)
    throw InputError("vector length must be k");
  int r = 0;
  for (int c : v) {
    if (c < 0 || c >= p_) throw InputError("vector entry out of F_p");
    r = r * p_ + c;
  }
  return r + 1;
}

std::vector<int> GkpFamily::vector_of(int point) const {
  if (point < 1 || point > n_) throw InputError("point out of range");
  std::vector<int> v(k_);
  int x = point - 1;
  for (int j = k_ - 1; j >= 0; --j) {
    v[j] = x % p_;
    x /= p_;
  }
  return v;
}

Permutation GkpFamily::translation(int j) const {
  if (j < 1 || j > k_) throw InputError("translation index out of range");
  std::vector<int> e(k_, 0);
  e[j - 1] = 1;
  return perms_[point_of(e) - 1];  // i = 0 block, index rank(e_j)
}

Permutation GkpFamily::b_action() const {
  return perms_[static_cast<size_t>(n_)];  // i = 1, w = 0
}

std::vector<Permutation> GkpFamily::generators() const {
  std::vector<Permutation> g;
  for (int j = 1; j <= k_; ++j) g.push_back(translation(j));
  g.push_back(b_action());
  return g;
}

PermutationGroup GkpFamily::as_group() const {
  if (!closed_)
    throw InputError(name_ +
                     " is not multiplicatively closed (p < k); it cannot be "
                     "used as a permutation group");
  return PermutationGroup(name_, n_, generators());
}

bool GkpFamily::is_base(const std::vector<int>& points) const {
  if (n_ > kMaxEnumerationDegree)
    throw InputError("base machinery limited to degree 64");
  for (int pt : points)
    if (pt < 1 || pt > n_)
      throw InputError("base point " + std::to_string(pt) + " out of range");
  return is_base_in_masks(agree_, subset_mask(points));
}

BaseSizeResult GkpFamily::base_size() const {
  if (n_ > kMaxEnumerationDegree)
    throw InputError("base machinery limited to degree 64");
  return base_size_from_masks(n_, agree_);
}

std::vector<int> GkpFamily::canonical_base(int j) const {
  if (j < 2 || j > k_)
    throw InputError("canonical base needs 2 <= j <= k: e_1 B^i = e_1 for "
                     "every i, so {origin, e_1} never separates the powers");
  std::vector<int> zero(k_, 0), ej(k_, 0);
  ej[j - 1] = 1;
  return {point_of(zero), point_of(ej)};
}

SaxlGraph GkpFamily::saxl() const {
  if (n_ > kMaxEnumerationDegree)
    throw InputError("base machinery limited to degree 64");
  return saxl_from_masks(n_, agree_);
}

GkpUbbResult gkp_ubb(int p, int k) {
  GkpFamily fam(p, k);
  long long delta = 1;
  for (int t = 0; t <= k; ++t) delta *= p;
  delta -= p;  // p^(k+1) - p
  GkpUbbResult out;
  out.delta_formula = static_cast<int>(delta);
  out.params = correction_params(out.delta_formula, p);
  out.ubb = matching_ubb(fam.saxl(), out.params.r_prime + 1, fam.name());
  out.closed_form_size = (fam.degree() - 1) / 2;
  out.closed_form_agrees = out.closed_form_size == out.params.r_prime + 1;
  if (!out.closed_form_agrees)
    out.note = "closed-form size floor((p^k-1)/2) = " +
               std::to_string(out.closed_form_size) +
               " differs from the definitional size " +
               std::to_string(out.params.r_prime + 1) +
               " at p = " + std::to_string(p) + "; using the definitional value";
  return out;
}

namespace {

// index of (elem[xi] . g) in the enumeration
size_t product_index(const Enumeration& e, size_t xi,
                     std::span<const uint8_t> g) {
  auto x = e.images(xi);
  std::vector<uint8_t> z(x.size());
  for (size_t t = 0; t < x.size(); ++t) z[t] = g[x[t] - 1];
  return e.find_bytes(z);
}

// Does mapping generator j to e[img_idx[j]] extend to an automorphism?
// Fills ymap (element -> image element) on success.
bool extends_to_automorphism(const Enumeration& e,
                             const std::vector<std::vector<uint8_t>>& gens,
                             const std::vector<size_t>& img_idx,
                             std::vector<uint32_t>& ymap) {
  constexpr uint32_t kNone = 0xFFFFFFFFu;
  const size_t N = e.size();
  std::vector<std::vector<uint8_t>> imgs;
  for (size_t ii : img_idx) {
    auto s = e.images(ii);
    imgs.emplace_back(s.begin(), s.end());
  }
  ymap.assign(N, kNone);
  std::vector<uint32_t> pre(N, kNone);
  ymap[0] = 0;
  pre[0] = 0;
  std::vector<uint32_t> queue{0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    uint32_t x = queue[qi];
    for (size_t j = 0; j < gens.size(); ++j) {
      size_t xn = product_index(e, x, gens[j]);
      size_t yn = product_index(e, ymap[x], imgs[j]);
      if (ymap[xn] == kNone) {
        if (pre[yn] != kNone) return false;  // not injective
        ymap[xn] = static_cast<uint32_t>(yn);
        pre[yn] = static_cast<uint32_t>(xn);
        queue.push_back(static_cast<uint32_t>(xn));
      } else if (ymap[xn] != yn) {
        return false;  // inconsistent products
      }
    }
  }
  return queue.size() == N;
}

int perm_order_of(std::span<const uint8_t> imgs) {
  int n = static_cast<int>(imgs.size());
  std::vector<char> seen(n, 0);
  long long ord = 1;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    int len = 0, x = s;
    while (!seen[x]) {
      seen[x] = 1;
      x = imgs[x] - 1;
      ++len;
    }
    ord = std::lcm(ord, static_cast<long long>(len));
  }
  return static_cast<int>(ord);
}

}  // namespace

std::vector<std::vector<Permutation>> find_automorphisms(
    const PermutationGroup& g, uint64_t max_checks) {
  const Enumeration& e = g.enumeration();
  const size_t N = e.size();
  const auto& gens = g.generators();
  std::vector<std::vector<uint8_t>> gen_bytes;
  std::vector<size_t> gen_idx;
  for (const auto& gen : gens) {
    std::vector<uint8_t> b(gen.images().begin(), gen.images().end());
    gen_idx.push_back(e.find_bytes(b));
    gen_bytes.push_back(std::move(b));
  }

  std::vector<int> order(N);
  for (size_t i = 0; i < N; ++i) order[i] = perm_order_of(e.images(i));
  // central <=> commutes with every generator
  std::vector<char> central(N, 0);
  for (size_t i = 0; i < N; ++i) {
    bool c = true;
    for (const auto& gb : gen_bytes) {
      auto x = e.images(i);
      bool eq = true;
      for (size_t t = 0; t < x.size() && eq; ++t)
        eq = gb[x[t] - 1] == x[gb[t] - 1];
      if (!eq) {
        c = false;
        break;
      }
    }
    central[i] = c;
  }

  std::vector<std::vector<size_t>> candidates;
  for (size_t j = 0; j < gens.size(); ++j) {
    std::vector<size_t> cs;
    for (size_t i = 0; i < N; ++i)
      if (order[i] == order[gen_idx[j]] && central[i] == central[gen_idx[j]])
        cs.push_back(i);
    candidates.push_back(std::move(cs));
  }

  std::vector<std::vector<Permutation>> found;
  std::vector<size_t> pick(gens.size());
  uint64_t checks = 0;
  std::vector<uint32_t> ymap;
  // plain product iteration over candidate tuples; the closure check stops
  // early on inconsistent choices, so this is fast at the orders used here
  std::vector<size_t> at(gens.size(), 0);
  for (;;) {
    for (size_t j = 0; j < gens.size(); ++j) pick[j] = candidates[j][at[j]];
    if (++checks > max_checks)
      throw BudgetError("automorphism search exceeded its check budget");
    if (extends_to_automorphism(e, gen_bytes, pick, ymap)) {
      std::vector<Permutation> imgs;
      for (size_t ii : pick) imgs.push_back(e.perm(ii));
      found.push_back(std::move(imgs));
    }
    size_t j = 0;
    while (j < gens.size() && ++at[j] == candidates[j].size()) {
      at[j] = 0;
      ++j;
    }
    if (j == gens.size()) break;
  }
  return found;
}

TwistedCode gkp_twisted_code(int p, int k, uint64_t max_checks) {
  GkpFamily fam(p, k);
  if (!fam.is_closed())
    throw InputError(
        fam.name() +
        ": the matrix family is not a group (p < k), so it has no tuple of "
        "permutation representations; no twisted code exists for it");
  PermutationGroup g = fam.as_group();
  const Enumeration& e = g.enumeration();
  const size_t N = e.size();
  long long target = 1;
  for (int t = 0; t <= k; ++t) target *= p;
  target -= p;

  // delta_tw = p^(k+1) - p <=> the fixed-point carriers of the lambda
  // twists are pairwise disjoint over non-identity elements
  auto carrier_of = [&](const std::vector<uint32_t>& ymap) {
    std::vector<uint64_t> mask((N + 63) / 64, 0);
    for (size_t x = 1; x < N; ++x) {
      size_t y = ymap.empty() ? x : ymap[x];
      if (e.fix_count(y) > 0) mask[x / 64] |= uint64_t{1} << (x % 64);
    }
    return mask;
  };
  auto disjoint = [](const std::vector<uint64_t>& a,
                     const std::vector<uint64_t>& b) {
    for (size_t t = 0; t < a.size(); ++t)
      if (a[t] & b[t]) return false;
    return true;
  };

  auto autos = find_automorphisms(g, max_checks);
  // group automorphisms by their carrier mask; one representative each
  std::vector<std::vector<uint64_t>> carriers;
  std::vector<size_t> rep;  // automorphism index per distinct carrier
  {
    std::vector<std::vector<uint8_t>> gen_bytes;
    for (const auto& gen : g.generators())
      gen_bytes.emplace_back(gen.images().begin(), gen.images().end());
    std::vector<uint32_t> ymap;
    for (size_t a = 0; a < autos.size(); ++a) {
      std::vector<size_t> idx;
      for (const auto& im : autos[a]) idx.push_back(e.find(im));
      if (!extends_to_automorphism(e, gen_bytes, idx, ymap))
        throw Error("automorphism list is inconsistent");
      auto c = carrier_of(ymap);
      bool fresh = true;
      for (const auto& prev : carriers)
        if (prev == c) {
          fresh = false;
          break;
        }
      if (fresh) {
        carriers.push_back(std::move(c));
        rep.push_back(a);
      }
    }
  }

  std::vector<uint32_t> id_ymap;  // identity map carrier
  {
    id_ymap.resize(N);
    for (size_t i = 0; i < N; ++i) id_ymap[i] = static_cast<uint32_t>(i);
  }
  auto base_carrier = carrier_of(id_ymap);

  // choose p - 1 carriers pairwise disjoint and disjoint from the identity's
  std::vector<size_t> chosen;
  std::vector<std::vector<uint64_t>> acc{base_carrier};
  std::function<bool(size_t)> pickn = [&](size_t need) -> bool {
    if (need == 0) return true;
    for (size_t c = 0; c < carriers.size(); ++c) {
      bool ok = true;
      for (const auto& m : acc)
        if (!disjoint(m, carriers[c])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(c);
      acc.push_back(carriers[c]);
      if (pickn(need - 1)) return true;
      chosen.pop_back();
      acc.pop_back();
    }
    return false;
  };
  if (!pickn(static_cast<size_t>(p - 1))) {
    // report the best achievable spread for diagnostics
    throw InputError(fam.name() + ": no automorphism tuple reaches distance " +
                     std::to_string(target) + " (searched " +
                     std::to_string(carriers.size()) + " distinct twists)");
  }

  std::vector<ComponentMap> maps;
  for (size_t c : chosen) maps.push_back(ComponentMap{autos[rep[c]], {}});
  TwistedCode code(fam.name(), std::move(g), std::move(maps));
  Distance d = code.delta_tw();
  if (d.infinite || d.value != static_cast<int>(target))
    throw Error(fam.name() + ": certification failed: delta_tw = " +
                std::to_string(d.value) + ", expected " +
                std::to_string(target));
  return code;
}

}  // namespace twistdec
