#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <utility>
#include <vector>

#include "twistdec/matching.hpp"
#include "twistdec/rng.hpp"

using namespace twistdec;

namespace {

std::vector<std::vector<int>> adj_from_edges(
    int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

int matching_size(const std::vector<int>& mate) {
  int c = 0;
  for (int v = 0; v < static_cast<int>(mate.size()); ++v)
    if (mate[v] > v) ++c;
  return c;
}

void check_valid(const std::vector<int>& mate,
                 const std::vector<std::vector<int>>& adj) {
  for (int v = 0; v < static_cast<int>(mate.size()); ++v) {
    if (mate[v] == -1) continue;
    REQUIRE(mate[mate[v]] == v);  // symmetric
    bool edge = false;
    for (int w : adj[v])
      if (w == mate[v]) edge = true;
    REQUIRE(edge);  // matched along a real edge
  }
}

// Exhaustive maximum matching by bitmask DP, the independent oracle.
int oracle_max_matching(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> best(size_t{1} << n, 0);
  for (uint32_t m = 1; m < (uint32_t{1} << n); ++m) {
    int b = 0;
    for (auto [u, v] : edges)
      if ((m >> u & 1) && (m >> v & 1)) {
        uint32_t rest = m & ~(uint32_t{1} << u) & ~(uint32_t{1} << v);
        b = std::max(b, 1 + best[rest]);
      }
    best[m] = b;
  }
  return best[(uint32_t{1} << n) - 1];
}

}  // namespace

TEST_CASE("small named graphs") {
  // triangle: one edge max
  auto tri = adj_from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  auto m = maximum_matching(3, tri);
  check_valid(m, tri);
  CHECK(matching_size(m) == 1);

  // 5-cycle: two edges, one vertex exposed
  std::vector<std::pair<int, int>> c5{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  auto ac5 = adj_from_edges(5, c5);
  m = maximum_matching(5, ac5);
  check_valid(m, ac5);
  CHECK(matching_size(m) == 2);

  // complete graph K6: perfect matching
  std::vector<std::pair<int, int>> k6;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) k6.emplace_back(u, v);
  auto ak6 = adj_from_edges(6, k6);
  m = maximum_matching(6, ak6);
  check_valid(m, ak6);
  CHECK(matching_size(m) == 3);

  // edgeless graph
  m = maximum_matching(4, std::vector<std::vector<int>>(4));
  CHECK(matching_size(m) == 0);
  CHECK(m == std::vector<int>(4, -1));
}

TEST_CASE("Petersen graph has a perfect matching") {
  // outer 5-cycle, inner pentagram, spokes
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, 5 + i);
  }
  auto adj = adj_from_edges(10, e);
  auto m = maximum_matching(10, adj);
  check_valid(m, adj);
  CHECK(matching_size(m) == 5);
}

TEST_CASE("blossoms: two triangles joined by a path") {
  // triangles {0,1,2} and {5,6,7} connected 2-3-4-5; max matching is 4:
  // augmenting through both odd cycles is required
  std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4},
                                     {4, 5}, {5, 6}, {6, 7}, {5, 7}};
  auto adj = adj_from_edges(8, e);
  auto m = maximum_matching(8, adj);
  check_valid(m, adj);
  CHECK(matching_size(m) == oracle_max_matching(8, e));
  CHECK(matching_size(m) == 4);
}

TEST_CASE("random graphs agree with the exhaustive oracle") {
  Rng rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + static_cast<int>(rng.below(8));  // up to 10 vertices
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.below(100) < 40) edges.emplace_back(u, v);
    auto adj = adj_from_edges(n, edges);
    auto m = maximum_matching(n, adj);
    check_valid(m, adj);
    REQUIRE(matching_size(m) == oracle_max_matching(n, edges));
  }
}

TEST_CASE("matching pairs are sorted with u < v") {
  auto adj = adj_from_edges(4, {{2, 3}, {0, 1}});
  auto pairs = matching_pairs(maximum_matching(4, adj));
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0] == std::make_pair(0, 1));
  CHECK(pairs[1] == std::make_pair(2, 3));
}
