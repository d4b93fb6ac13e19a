#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistdec/group.hpp"

namespace twistdec {

using Base = std::vector<int>;

// An uncovering-by-bases: an ordered list of bases with a claimed strength r
// (every r-subset of the point set is disjoint from at least one base).
struct Ubb {
  std::string group_name;
  int strength = 0;
  std::vector<Base> bases;
};

// An (n, k, r) covering design: every r-subset of {1..n} lies in some block.
struct CoveringDesign {
  int n = 0;
  int block_size = 0;
  int strength = 0;
  std::vector<std::vector<int>> blocks;
};

struct StrengthResult {
  bool ok;
  std::vector<int> witness;  // an uncovered r-subset when !ok
  bool sampled;              // true when Monte-Carlo, not certified
  uint64_t checked;
};

inline constexpr uint64_t kDefaultStrengthBudget = 10'000'000;
inline constexpr uint64_t kDefaultStrengthSamples = 1'000'000;

// Exhaustive check that every r-subset of {1..n} is disjoint from some base,
// iterating subsets in colex order with per-subset early exit. Throws
// BudgetError when C(n,r) exceeds the budget (suggesting sampling mode).
StrengthResult verify_strength(const Ubb& ubb, int n, int r,
                               uint64_t budget = kDefaultStrengthBudget);
inline StrengthResult verify_strength(const Ubb& ubb, int n) {
  return verify_strength(ubb, n, ubb.strength);
}

// Monte-Carlo fallback: random r-subsets only; result is labeled sampled,
// not certified.
StrengthResult sample_strength(const Ubb& ubb, int n, int r, uint64_t samples,
                               uint64_t seed);

// Every row must be a base of the group; returns the first failing row
// index, or -1 if all pass.
int first_non_base_row(const Ubb& ubb, const PermutationGroup& group);

// Complements of the blocks of a covering design, each verified as a base of
// the group; strength carries over from the design.
Ubb ubb_from_cover(const CoveringDesign& cover, const PermutationGroup& group);

struct Relabeling {
  Permutation sigma;
  int attempt;  // 0 = already valid
};

// Randomized-restart greedy repair searching for a point relabeling sigma
// such that every relabeled block's complement is a base. Returns nullopt
// after the attempt budget.
std::optional<Relabeling> relabel_search(const CoveringDesign& cover,
                                         const PermutationGroup& group,
                                         int attempts, uint64_t seed);

// Graph on the domain whose edges are exactly the size-2 bases.
struct SaxlGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // 1-based, u < v
  std::vector<std::vector<int>> adjacency() const;  // 0-based lists
  bool has_edge(int u, int v) const;
};

// Edge set from the distinct masks (fixed-point or agreement masks): {u,v}
// is an edge iff no mask contains both points.
SaxlGraph saxl_from_masks(int n, const std::vector<uint64_t>& masks);

// Requires b(group) = 2.
SaxlGraph saxl_graph(const PermutationGroup& group);

struct ConnectivityWitness {
  bool connected;
  std::vector<int> parent;      // BFS tree, parent[v] 1-based, 0 at the root
  std::vector<int> components;  // component id per vertex (diagnostic)
};
ConnectivityWitness saxl_connectivity(const SaxlGraph& graph);

// A set of required_size pairwise-disjoint edges taken from a maximum
// matching, packaged as a UBB of strength required_size - 1.
Ubb matching_ubb(const SaxlGraph& graph, int required_size,
                 const std::string& group_name);

}  // namespace twistdec
