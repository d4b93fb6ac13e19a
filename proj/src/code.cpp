#include "twistdec/code.hpp"

#include <algorithm>
#include <bit>

namespace twistdec {

Word Codeword::word() const {
  std::vector<int> syms;
  const int n = components.empty() ? 0 : components[0].degree();
  syms.reserve(components.size() * n);
  for (const auto& p : components)
    syms.insert(syms.end(), p.images().begin(), p.images().end());
  return Word(std::move(syms), n);
}

CorrectionParams correction_params(int delta_tw, int lambda) {
  if (delta_tw < 1 || lambda < 1)
    throw InputError("correction_params: need delta_tw >= 1 and lambda >= 1");
  int r_tw = (delta_tw - 1) / 2;
  return {r_tw, r_tw / lambda};
}

RepetitionStrength repetition_strength_check(int d, int lambda) {
  if (d < 1 || lambda < 1)
    throw InputError("repetition_strength_check: need d >= 1 and lambda >= 1");
  int r = (d - 1) / 2;
  int r_tw = (lambda * d - 1) / 2;
  return {r, r_tw / lambda};
}

namespace {

std::vector<uint8_t> to_bytes(const Permutation& p) {
  return std::vector<uint8_t>(p.images().begin(), p.images().end());
}

int fix_of(std::span<const uint8_t> imgs) {
  int c = 0;
  for (size_t i = 0; i < imgs.size(); ++i)
    if (imgs[i] == i + 1) ++c;
  return c;
}

}  // namespace

CodeTables::CodeTables(const PermutationGroup& g1,
                       const std::vector<ComponentMap>& maps,
                       uint64_t budget) {
  const int n = g1.degree();
  const int lambda = static_cast<int>(maps.size()) + 1;
  const size_t ngens = g1.generators().size();
  for (const auto& m : maps) {
    if (m.gen_images.size() != ngens)
      throw InputError("component map must list one image per generator");
    for (const auto& im : m.gen_images)
      if (im.degree() != n)
        throw InputError("component generator image degree mismatch");
  }

  // gens[i][j] = image of generator j in component i (component 0 = g1).
  std::vector<std::vector<std::vector<uint8_t>>> gens(lambda);
  for (size_t j = 0; j < ngens; ++j)
    gens[0].push_back(to_bytes(g1.generators()[j]));
  for (int i = 1; i < lambda; ++i)
    for (size_t j = 0; j < ngens; ++j)
      gens[i].push_back(to_bytes(maps[i - 1].gen_images[j]));

  for (int i = 0; i < lambda; ++i) {
    components_.emplace_back(n);
    fixes_.emplace_back();
  }
  for (int i = 0; i < lambda; ++i)
    indexes_.push_back(std::make_unique<ElementIndex>(&components_[i]));

  std::vector<uint8_t> id(n);
  for (int p = 0; p < n; ++p) id[p] = static_cast<uint8_t>(p + 1);
  for (int i = 0; i < lambda; ++i) {
    components_[i].append(id);
    indexes_[i]->insert(components_[i].images(0), 0);
    fixes_[i].push_back(static_cast<uint8_t>(n));
  }

  // Synchronized closure: candidate rows keyed and ordered by component 0,
  // exactly mirroring a plain group enumeration of g1.
  std::vector<uint32_t> frontier{0};
  // each candidate: lambda image vectors, contiguous
  struct Cand {
    std::vector<uint8_t> rows;  // lambda * n bytes
  };
  std::vector<Cand> layer;
  while (!frontier.empty()) {
    layer.clear();
    for (uint32_t fi : frontier) {
      std::vector<std::vector<uint8_t>> x(lambda);
      for (int i = 0; i < lambda; ++i) {
        auto s = components_[i].images(fi);
        x[i].assign(s.begin(), s.end());
      }
      for (size_t j = 0; j < ngens; ++j) {
        Cand c;
        c.rows.resize(static_cast<size_t>(lambda) * n);
        for (int i = 0; i < lambda; ++i)
          for (int p = 0; p < n; ++p)
            c.rows[static_cast<size_t>(i) * n + p] = gens[i][j][x[i][p] - 1];
        std::span<const uint8_t> key(c.rows.data(), n);
        uint32_t seen = indexes_[0]->find(key);
        if (seen != ElementIndex::kNone) {
          // Cayley-edge consistency: the other components must agree with
          // the stored row, else the generator images are not a homomorphism.
          for (int i = 1; i < lambda; ++i) {
            auto have = components_[i].images(seen);
            if (!std::equal(have.begin(), have.end(),
                            c.rows.begin() + static_cast<size_t>(i) * n))
              throw InputError(
                  "component " + std::to_string(i + 1) +
                  " generator images do not extend to an isomorphism "
                  "(inconsistent product at element " + std::to_string(seen) +
                  ", generator " + std::to_string(j + 1) + ")");
          }
          continue;
        }
        layer.push_back(std::move(c));
      }
    }
    std::sort(layer.begin(), layer.end(),
              [n](const Cand& a, const Cand& b) {
                return std::lexicographical_compare(
                    a.rows.begin(), a.rows.begin() + n, b.rows.begin(),
                    b.rows.begin() + n);
              });
    frontier.clear();
    for (auto& c : layer) {
      std::span<const uint8_t> key(c.rows.data(), n);
      if (indexes_[0]->find(key) != ElementIndex::kNone) {
        // duplicate inside the layer: still must be consistent
        uint32_t seen = indexes_[0]->find(key);
        for (int i = 1; i < lambda; ++i) {
          auto have = components_[i].images(seen);
          if (!std::equal(have.begin(), have.end(),
                          c.rows.begin() + static_cast<size_t>(i) * n))
            throw InputError("component " + std::to_string(i + 1) +
                             " generator images do not extend to an "
                             "isomorphism (layer-internal collision)");
        }
        continue;
      }
      if (components_[0].size() >= budget)
        throw BudgetError("code table enumeration exceeded budget of " +
                          std::to_string(budget) + " elements");
      for (int i = 0; i < lambda; ++i) {
        std::span<const uint8_t> row(c.rows.data() + static_cast<size_t>(i) * n,
                                     static_cast<size_t>(n));
        size_t idx = components_[i].append(row);
        if (!indexes_[i]->insert(components_[i].images(idx),
                                 static_cast<uint32_t>(idx)))
          throw InputError("component " + std::to_string(i + 1) +
                           " images are not faithful (duplicate element)");
        fixes_[i].push_back(static_cast<uint8_t>(fix_of(row)));
      }
      frontier.push_back(static_cast<uint32_t>(components_[0].size() - 1));
    }
  }

  for (int i = 0; i < lambda; ++i) {
    int max_fix = -1;
    for (size_t k = 1; k < size(); ++k)
      max_fix = std::max(max_fix, static_cast<int>(fixes_[i][k]));
    comp_min_dist_.push_back(max_fix < 0 ? n + 1 : n - max_fix);
  }
}

size_t CodeTables::find(int comp, const Permutation& p) const {
  if (p.degree() != degree()) return static_cast<size_t>(-1);
  std::vector<uint8_t> b = to_bytes(p);
  uint32_t idx = indexes_[comp]->find(b);
  return idx == ElementIndex::kNone ? static_cast<size_t>(-1) : idx;
}

TwistedCode::TwistedCode(std::string name, PermutationGroup g1,
                         std::vector<ComponentMap> maps, uint64_t budget)
    : name_(std::move(name)), g1_(std::move(g1)), maps_(std::move(maps)),
      identity_psi_(g1_.degree()), budget_(budget) {
  for (auto& m : maps_) {
    if (m.psi.degree() == 0) m.psi = identity_psi_;
    if (m.psi.degree() != g1_.degree())
      throw InputError("psi degree mismatch in code '" + name_ + "'");
  }
}

const Permutation& TwistedCode::psi(int comp) const {
  if (comp < 0 || comp >= lambda())
    throw InputError("component index out of range");
  return comp == 0 ? identity_psi_ : maps_[comp - 1].psi;
}

const CodeTables& TwistedCode::tables() const {
  std::lock_guard<std::mutex> lk(*mu_);
  if (!tables_)
    tables_ = std::make_shared<CodeTables>(g1_, maps_, budget_);
  return *tables_;
}

Codeword TwistedCode::encode_index(size_t idx) const {
  const auto& t = tables();
  if (idx >= t.size()) throw InputError("element index out of range");
  Codeword cw;
  for (int i = 0; i < lambda(); ++i) cw.components.push_back(t.perm(i, idx));
  return cw;
}

size_t TwistedCode::element_index(const Permutation& g) const {
  size_t idx = tables().find(0, g);
  if (idx == static_cast<size_t>(-1))
    throw InputError("element " + g.to_cycles() + " is not in " + g1_.name());
  return idx;
}

Codeword TwistedCode::encode(const Permutation& g) const {
  return encode_index(element_index(g));
}

Distance TwistedCode::delta_tw() const {
  const auto& t = tables();
  const int n = degree();
  if (t.size() == 1) return {lambda() * n + 1, true};
  int best = lambda() * n + 1;
  for (size_t k = 1; k < t.size(); ++k) {
    int d = 0;
    for (int i = 0; i < lambda(); ++i) d += n - t.fix_count(i, k);
    best = std::min(best, d);
  }
  return {best, false};
}

Distance TwistedCode::delta_rep() const {
  const auto& t = tables();
  if (t.size() == 1) return {lambda() * degree() + 1, true};
  int dmin = t.component_min_distance(0);
  for (int i = 1; i < lambda(); ++i)
    dmin = std::min(dmin, t.component_min_distance(i));
  return {lambda() * dmin, false};
}

CorrectionParams TwistedCode::params() const {
  Distance d = delta_tw();
  if (d.infinite)
    throw InputError("correction parameters are undefined for a trivial code");
  return correction_params(d.value, lambda());
}

PermIsoResult TwistedCode::check_component_iso(int comp) const {
  if (comp < 1 || comp >= lambda())
    throw InputError("check_component_iso: component must be 2..lambda");
  PermutationGroup gi(name_ + "_component" + std::to_string(comp + 1),
                      degree(), maps_[comp - 1].gen_images);
  return verify_permutational_isomorphism(g1_, gi, maps_[comp - 1].gen_images,
                                          psi(comp));
}

Permutation IsomorphismTable::apply(const Permutation& g1_elem) const {
  size_t idx = code_->tables().find(0, g1_elem);
  if (idx == static_cast<size_t>(-1))
    throw InputError("element is not in the base group");
  return code_->tables().perm(comp_, idx);
}

Permutation IsomorphismTable::apply_inverse(const Permutation& gi_elem) const {
  size_t idx = code_->tables().find(comp_, gi_elem);
  if (idx == static_cast<size_t>(-1))
    throw InputError("element is not in component " + std::to_string(comp_ + 1));
  return code_->tables().perm(0, idx);
}

}  // namespace twistdec
