#pragma once

#include <utility>
#include <vector>

namespace twistdec {

// Maximum matching in a general (possibly non-bipartite) graph via
// augmenting paths with blossom contraction. Vertices are 0-based;
// returns mate[v] = matched partner or -1. O(V^3), fine for the graph
// sizes here (at most a few hundred vertices).
std::vector<int> maximum_matching(int n,
                                  const std::vector<std::vector<int>>& adj);

// Convenience: the matching as a sorted list of (u, v) pairs, u < v.
std::vector<std::pair<int, int>> matching_pairs(const std::vector<int>& mate);

}  // namespace twistdec
