#pragma once

#include <string>
#include <vector>

#include "twistdec/code.hpp"
#include "twistdec/ubb.hpp"

namespace twistdec {

// Square matrix over F_p, 1-based accessors, row-major.
struct MatrixModP {
  int p = 0;
  int dim = 0;
  std::vector<int> a;

  static MatrixModP identity(int p, int dim);
  int at(int r, int c) const { return a[(r - 1) * dim + (c - 1)]; }
  int& at(int r, int c) { return a[(r - 1) * dim + (c - 1)]; }
  MatrixModP mul(const MatrixModP& rhs) const;
  bool operator==(const MatrixModP&) const = default;
};

bool is_prime(int p);

// The k x k lower unitriangular matrix with ones on the subdiagonal.
MatrixModP bk_matrix(int p, int k);
// Its i-th power by the closed form (r,c) -> binom(i, r-c) mod p, checked
// against direct repeated multiplication.
MatrixModP bk_power(int p, int k, int i);
// Actual multiplicative order. Equals p exactly when p >= k; for p < k the
// subdiagonal generator has order p^ceil(log_p k) instead, so the family
// below is handled as a permutation code rather than assuming a group.
int bk_order(int p, int k);

std::string gkp_name(int p, int k);

// The family code on p^k points: all affine maps v -> w + v B^i with
// w in F_p^k and 0 <= i < p, acting on row vectors. Always p^(k+1) distinct
// permutations with pairwise minimum distance p^k - p. When p >= k the set
// is multiplicatively closed and coincides with the group V x <B>; when
// p < k it is a plain permutation code, and "base" means a point set on
// which no two distinct elements agree (the decoder's requirement). Both
// readings share the mask machinery: non-bases are exactly the subsets of
// pairwise agreement sets, which for groups are the fixed-point sets.
class GkpFamily {
 public:
  GkpFamily(int p, int k);

  int p() const { return p_; }
  int k() const { return k_; }
  int degree() const { return n_; }
  size_t size() const { return perms_.size(); }
  const std::string& name() const { return name_; }

  // Element order: index = i * p^k + rank(w), vectors ranked
  // lexicographically with the first coordinate most significant.
  const Permutation& perm(size_t idx) const { return perms_[idx]; }
  int point_of(const std::vector<int>& v) const;  // 1-based
  std::vector<int> vector_of(int point) const;

  Permutation translation(int j) const;  // action of (e_j, 0), 1 <= j <= k
  Permutation b_action() const;          // action of (0, 1)
  std::vector<Permutation> generators() const;  // translations, then b

  // True when the permutation set is closed under composition (p >= k).
  bool is_closed() const { return closed_; }
  // The set as a PermutationGroup; requires is_closed().
  PermutationGroup as_group() const;

  int min_code_distance() const { return min_dist_; }
  const std::vector<uint64_t>& agreement_masks() const { return agree_; }
  bool is_base(const std::vector<int>& points) const;
  BaseSizeResult base_size() const;
  // Point pair {(1,0), (1,e_j)}; j = 1 is rejected (e_1 B^i = e_1 for all
  // i, so that pair never separates the B-powers).
  std::vector<int> canonical_base(int j) const;
  SaxlGraph saxl() const;

 private:
  int p_, k_, n_;
  std::string name_;
  std::vector<Permutation> perms_;
  std::vector<uint64_t> agree_;
  int min_dist_;
  bool closed_;
};

struct GkpUbbResult {
  Ubb ubb;
  int delta_formula;        // p^(k+1) - p
  CorrectionParams params;  // definitional, with lambda = p
  int closed_form_size;     // floor((p^k - 1) / 2)
  bool closed_form_agrees;
  std::string note;  // set when p = 2 and the closed form disagrees
};
// Matching UBB in the Saxl graph sized by the definitional r' + 1.
GkpUbbResult gkp_ubb(int p, int k);

// All automorphisms of the group as generator-image lists, by backtracking
// over order- and centrality-compatible images with closure verification.
std::vector<std::vector<Permutation>> find_automorphisms(
    const PermutationGroup& g, uint64_t max_checks = 1u << 22);

// Representation tuple achieving delta_tw = p^(k+1) - p: lambda = p
// components, component i >= 2 twisted by a group automorphism; the
// distance is certified by the exhaustive scan in TwistedCode. Requires
// p >= k (otherwise the family is not a group and no such tuple of
// representations exists; reports the obstruction).
TwistedCode gkp_twisted_code(int p, int k,
                             uint64_t max_checks = 1u << 22);

}  // namespace twistdec
