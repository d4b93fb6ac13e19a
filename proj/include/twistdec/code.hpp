#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "twistdec/group.hpp"

namespace twistdec {

// One codeword of a twisted code: the tuple (alpha_1(g), ..., alpha_lambda(g)).
struct Codeword {
  std::vector<Permutation> components;
  Word word() const;
};

struct CorrectionParams {
  int r_tw;     // floor((delta_tw - 1) / 2)
  int r_prime;  // floor(r_tw / lambda)
};
CorrectionParams correction_params(int delta_tw, int lambda);

// Repetition-code arithmetic: with component distance d and lambda copies,
// r = floor((d-1)/2) and the derived per-component strength
// r' = floor(floor((lambda*d - 1)/2) / lambda) coincide.
struct RepetitionStrength {
  int r;
  int r_prime;
};
RepetitionStrength repetition_strength_check(int d, int lambda);

// Description of component i >= 2: alpha_i as images of the base group's
// generators (in generator order), plus the point bijection psi_i used by the
// decoder to transfer bases (identity when the image groups coincide).
struct ComponentMap {
  std::vector<Permutation> gen_images;
  Permutation psi;
};

// Aligned element tables for all components, built by one synchronized
// breadth-first closure keyed on component 1. Row k of every component is the
// image of the same abstract group element, so alpha_i is the map
// component(1, k) -> component(i, k). The closure validates that each
// generator-image assignment extends to an isomorphism: every Cayley edge is
// checked for consistency and every component must stay duplicate-free.
class CodeTables {
 public:
  CodeTables(const PermutationGroup& g1, const std::vector<ComponentMap>& maps,
             uint64_t budget);

  int lambda() const { return static_cast<int>(components_.size()); }
  int degree() const { return components_[0].degree(); }
  size_t size() const { return components_[0].size(); }

  std::span<const uint8_t> images(int comp, size_t idx) const {
    return components_[comp].images(idx);
  }
  Permutation perm(int comp, size_t idx) const {
    return components_[comp].perm(idx);
  }
  int fix_count(int comp, size_t idx) const { return fixes_[comp][idx]; }
  // Element index in the shared ordering; npos if absent. comp selects which
  // component's realization the permutation is interpreted in.
  size_t find(int comp, const Permutation& p) const;

  int component_min_distance(int comp) const { return comp_min_dist_[comp]; }
  const ElementStore& component_store(int comp) const {
    return components_[comp];
  }

 private:
  std::vector<ElementStore> components_;
  std::vector<std::unique_ptr<ElementIndex>> indexes_;  // one per component
  std::vector<std::vector<uint8_t>> fixes_;
  std::vector<int> comp_min_dist_;
};

class TwistedCode;

// View of one alpha_i as a total element-to-element table.
class IsomorphismTable {
 public:
  IsomorphismTable(const TwistedCode* code, int comp)
      : code_(code), comp_(comp) {}
  Permutation apply(const Permutation& g1_elem) const;
  Permutation apply_inverse(const Permutation& gi_elem) const;

 private:
  const TwistedCode* code_;
  int comp_;
};

// A twisted permutation code: all tuples [alpha_1(g) | ... | alpha_lambda(g)]
// for g in the base group, alpha_1 the identity map.
class TwistedCode {
 public:
  TwistedCode(std::string name, PermutationGroup g1,
              std::vector<ComponentMap> maps,
              uint64_t budget = kDefaultEnumerationBudget);

  const std::string& name() const { return name_; }
  int lambda() const { return static_cast<int>(maps_.size()) + 1; }
  int degree() const { return g1_.degree(); }
  const PermutationGroup& group() const { return g1_; }
  const Permutation& psi(int comp) const;  // comp is 0-based
  IsomorphismTable alpha(int comp) const { return {this, comp}; }
  const CodeTables& tables() const;
  uint64_t size() const { return tables().size(); }

  Codeword encode(const Permutation& g) const;
  Codeword encode_index(size_t idx) const;
  // Index of g interpreted in component 1's realization; throws if absent.
  size_t element_index(const Permutation& g) const;

  // Twisted minimum distance: min over non-identity g of
  // sum_i (n - fix(alpha_i(g))). Infinite (sentinel lambda*n + 1) for the
  // trivial group.
  Distance delta_tw() const;
  // Best lambda-fold repetition distance: lambda * min_i min_distance(G_i).
  Distance delta_rep() const;
  CorrectionParams params() const;

  // Optional strict check that (psi_i, alpha_i) is a permutational
  // isomorphism from G1 onto component i's image group. Holds for genuinely
  // relabeled components; fixture tuples with coinciding images and psi = id
  // twist by nontrivial automorphisms and are not expected to pass.
  PermIsoResult check_component_iso(int comp) const;

 private:
  std::string name_;
  PermutationGroup g1_;
  std::vector<ComponentMap> maps_;  // components 2..lambda
  Permutation identity_psi_;
  uint64_t budget_;
  mutable std::shared_ptr<const CodeTables> tables_;
  mutable std::shared_ptr<std::mutex> mu_ = std::make_shared<std::mutex>();
};

}  // namespace twistdec
