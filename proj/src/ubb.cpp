#include "twistdec/ubb.hpp"

#include <algorithm>
#include <bit>

#include "twistdec/matching.hpp"
#include "twistdec/rng.hpp"
#include "twistdec/subsets.hpp"

namespace twistdec {

namespace {

void check_points(const std::vector<int>& pts, int n, const char* what) {
  for (int p : pts)
    if (p < 1 || p > n)
      throw InputError(std::string(what) + " point " + std::to_string(p) +
                       " out of range 1.." + std::to_string(n));
}

// Base masks sorted by ascending max point: subsets are generated in colex
// order, so low-point bases are the likeliest early hits.
std::vector<uint64_t> base_masks_for_scan(const Ubb& ubb, int n) {
  std::vector<uint64_t> masks;
  for (const auto& b : ubb.bases) {
    check_points(b, n, "base");
    masks.push_back(subset_mask(b));
  }
  std::sort(masks.begin(), masks.end(), [](uint64_t a, uint64_t b) {
    return std::bit_width(a) < std::bit_width(b);
  });
  return masks;
}

bool subset_uncovered(uint64_t smask, const std::vector<uint64_t>& masks) {
  for (uint64_t m : masks)
    if ((m & smask) == 0) return false;  // disjoint base found
  return true;
}

}  // namespace

StrengthResult verify_strength(const Ubb& ubb, int n, int r, uint64_t budget) {
  if (r < 0 || r > n) throw InputError("strength out of range");
  if (ubb.bases.empty()) throw InputError("ubb has no bases");
  uint64_t total = binomial(n, r);
  if (total > budget)
    throw BudgetError("strength check needs " + std::to_string(total) +
                      " subsets, over budget " + std::to_string(budget) +
                      "; use sampling mode for an uncertified estimate");
  auto masks = base_masks_for_scan(ubb, n);
  uint64_t checked = 0;
  SubsetIter it(n, r);
  do {
    ++checked;
    if (subset_uncovered(subset_mask(it.current()), masks))
      return {false, it.current(), false, checked};
  } while (it.next());
  return {true, {}, false, checked};
}

StrengthResult sample_strength(const Ubb& ubb, int n, int r, uint64_t samples,
                               uint64_t seed) {
  if (r < 0 || r > n) throw InputError("strength out of range");
  auto masks = base_masks_for_scan(ubb, n);
  Rng rng(seed);
  for (uint64_t i = 0; i < samples; ++i) {
    auto pts = rng.sample_points(n, r);
    if (subset_uncovered(subset_mask(pts), masks))
      return {false, pts, true, i + 1};
  }
  return {true, {}, true, samples};
}

int first_non_base_row(const Ubb& ubb, const PermutationGroup& group) {
  for (size_t i = 0; i < ubb.bases.size(); ++i)
    if (!group.is_base(ubb.bases[i])) return static_cast<int>(i);
  return -1;
}

Ubb ubb_from_cover(const CoveringDesign& cover,
                   const PermutationGroup& group) {
  if (cover.n != group.degree())
    throw InputError("cover is on " + std::to_string(cover.n) +
                     " points but group degree is " +
                     std::to_string(group.degree()));
  Ubb out{group.name(), cover.strength, {}};
  for (const auto& block : cover.blocks) {
    check_points(block, cover.n, "block");
    std::vector<char> in(cover.n + 1, 0);
    for (int p : block) in[p] = 1;
    Base comp;
    for (int p = 1; p <= cover.n; ++p)
      if (!in[p]) comp.push_back(p);
    if (!group.is_base(comp)) {
      std::string bs;
      for (int p : block) bs += (bs.empty() ? "" : " ") + std::to_string(p);
      throw InputError("complement of block {" + bs + "} is not a base of " +
                       group.name() + "; the design needs relabeling");
    }
    out.bases.push_back(std::move(comp));
  }
  return out;
}

std::optional<Relabeling> relabel_search(const CoveringDesign& cover,
                                         const PermutationGroup& group,
                                         int attempts, uint64_t seed) {
  const int n = cover.n;
  if (n != group.degree())
    throw InputError("cover/group degree mismatch in relabel search");
  // Work on complements directly: need sigma(complement) to be a base for
  // every block. Non-bases are exactly subsets of the group's fixed-point
  // masks, so validity checks are mask scans.
  std::vector<std::vector<int>> comps;
  for (const auto& block : cover.blocks) {
    check_points(block, n, "block");
    std::vector<char> in(n + 1, 0);
    for (int p : block) in[p] = 1;
    std::vector<int> c;
    for (int p = 1; p <= n; ++p)
      if (!in[p]) c.push_back(p);
    comps.push_back(std::move(c));
  }
  const auto& masks = group.enumeration().distinct_fixmasks();
  auto bad_rows = [&](const Permutation& sigma) {
    std::vector<int> bad;
    for (size_t i = 0; i < comps.size(); ++i) {
      uint64_t m = 0;
      for (int p : comps[i]) m |= uint64_t{1} << (sigma.apply(p) - 1);
      if (!is_base_in_masks(masks, m)) bad.push_back(static_cast<int>(i));
    }
    return bad;
  };

  Rng rng(seed);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    Permutation sigma =
        attempt == 0 ? Permutation(n) : rng.random_permutation(n);
    auto bad = bad_rows(sigma);
    for (int iter = 0; iter < 300 && !bad.empty(); ++iter) {
      // swap the image of a point in a failing complement with the image of
      // any other point; keep the swap unless it makes things worse
      const auto& row =
          comps[bad[static_cast<size_t>(rng.below(bad.size()))]];
      int u = row[static_cast<size_t>(rng.below(row.size()))];
      int v = rng.uniform_int(1, n);
      if (u == v) continue;
      auto img = sigma.images();
      std::swap(img[u - 1], img[v - 1]);
      Permutation cand = Permutation::from_images(std::move(img));
      auto cand_bad = bad_rows(cand);
      if (cand_bad.size() <= bad.size()) {
        sigma = std::move(cand);
        bad = std::move(cand_bad);
      }
    }
    if (bad.empty()) return Relabeling{sigma, attempt};
  }
  return std::nullopt;
}

std::vector<std::vector<int>> SaxlGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u - 1].push_back(v - 1);
    adj[v - 1].push_back(u - 1);
  }
  return adj;
}

bool SaxlGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::find(edges.begin(), edges.end(), std::make_pair(u, v)) !=
         edges.end();
}

SaxlGraph saxl_from_masks(int n, const std::vector<uint64_t>& masks) {
  SaxlGraph g;
  g.n = n;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      uint64_t s = (uint64_t{1} << (u - 1)) | (uint64_t{1} << (v - 1));
      if (is_base_in_masks(masks, s)) g.edges.emplace_back(u, v);
    }
  return g;
}

SaxlGraph saxl_graph(const PermutationGroup& group) {
  auto bs = group.base_size();
  if (bs.size != 2)
    throw InputError("saxl graph requires base size 2, but b(" +
                     group.name() + ") = " + std::to_string(bs.size));
  return saxl_from_masks(group.degree(),
                         group.enumeration().distinct_fixmasks());
}

ConnectivityWitness saxl_connectivity(const SaxlGraph& graph) {
  ConnectivityWitness w;
  w.parent.assign(graph.n + 1, -1);
  w.components.assign(graph.n + 1, 0);
  auto adj = graph.adjacency();
  int comp_id = 0;
  for (int s = 0; s < graph.n; ++s) {
    if (w.components[s + 1] != 0) continue;
    ++comp_id;
    std::vector<int> queue{s};
    w.components[s + 1] = comp_id;
    w.parent[s + 1] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int to : adj[v]) {
        if (w.components[to + 1] != 0) continue;
        w.components[to + 1] = comp_id;
        w.parent[to + 1] = v + 1;
        queue.push_back(to);
      }
    }
  }
  w.connected = comp_id <= 1;
  return w;
}

Ubb matching_ubb(const SaxlGraph& graph, int required_size,
                 const std::string& group_name) {
  if (required_size < 1 || required_size > graph.n / 2)
    throw InputError("required matching size " +
                     std::to_string(required_size) + " out of range 1.." +
                     std::to_string(graph.n / 2));
  auto mate = maximum_matching(graph.n, graph.adjacency());
  auto pairs = matching_pairs(mate);
  if (static_cast<int>(pairs.size()) < required_size)
    throw InputError("maximum matching has " + std::to_string(pairs.size()) +
                     " edges, need " + std::to_string(required_size));
  Ubb out{group_name, required_size - 1, {}};
  for (int i = 0; i < required_size; ++i)
    out.bases.push_back({pairs[i].first + 1, pairs[i].second + 1});
  return out;
}

}  // namespace twistdec
