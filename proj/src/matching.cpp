#include "twistdec/matching.hpp"

#include <algorithm>
#include <queue>

namespace twistdec {

namespace {

// State for one augmenting-path search phase.
struct Blossom {
  int n;
  const std::vector<std::vector<int>>& adj;
  std::vector<int> mate, parent, base;
  std::vector<char> used, flower;

  Blossom(int n_, const std::vector<std::vector<int>>& a)
      : n(n_), adj(a), mate(n, -1) {}

  int lowest_common_base(int a, int b) {
    std::vector<char> path(n, 0);
    int v = a;
    for (;;) {
      v = base[v];
      path[v] = 1;
      if (mate[v] == -1) break;
      v = parent[mate[v]];
    }
    v = b;
    while (!path[base[v]]) v = parent[mate[base[v]]];
    return base[v];
  }

  void mark_path(int v, int b, int child) {
    while (base[v] != b) {
      flower[base[v]] = 1;
      flower[base[mate[v]]] = 1;
      parent[v] = child;
      child = mate[v];
      v = parent[mate[v]];
    }
  }

  bool augment_from(int root) {
    used.assign(n, 0);
    parent.assign(n, -1);
    base.resize(n);
    for (int i = 0; i < n; ++i) base[i] = i;
    used[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : adj[v]) {
        if (base[v] == base[to] || mate[v] == to) continue;
        if (to == root || (mate[to] != -1 && parent[mate[to]] != -1)) {
          // odd cycle: contract the blossom
          int b = lowest_common_base(v, to);
          flower.assign(n, 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int i = 0; i < n; ++i) {
            if (!flower[base[i]]) continue;
            base[i] = b;
            if (!used[i]) {
              used[i] = 1;
              q.push(i);
            }
          }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (mate[to] == -1) {
            // augmenting path found: flip matched edges back to the root
            int u = to;
            while (u != -1) {
              int pv = parent[u], nxt = mate[pv];
              mate[u] = pv;
              mate[pv] = u;
              u = nxt;
            }
            return true;
          }
          used[mate[to]] = 1;
          q.push(mate[to]);
        }
      }
    }
    return false;
  }
};

}  // namespace

std::vector<int> maximum_matching(int n,
                                  const std::vector<std::vector<int>>& adj) {
  Blossom bl(n, adj);
  // cheap greedy seed, then augment the rest
  for (int v = 0; v < n; ++v) {
    if (bl.mate[v] != -1) continue;
    for (int to : adj[v]) {
      if (bl.mate[to] == -1) {
        bl.mate[v] = to;
        bl.mate[to] = v;
        break;
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (bl.mate[v] == -1) bl.augment_from(v);
  return bl.mate;
}

std::vector<std::pair<int, int>> matching_pairs(const std::vector<int>& mate) {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < static_cast<int>(mate.size()); ++v)
    if (mate[v] > v) out.emplace_back(v, mate[v]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace twistdec
