#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>

#include "twistdec/group.hpp"
#include "twistdec/rng.hpp"

using namespace twistdec;

namespace {

PermutationGroup s3() {
  return PermutationGroup("S3", 3,
                          {Permutation::parse("(1,2)", 3),
                           Permutation::parse("(1,2,3)", 3)});
}

// PGL(2,7) acting on the 8-point projective line: x+1, 3x, and the flip 1/x.
PermutationGroup pgl27() {
  return PermutationGroup("PGL27", 8,
                          {Permutation::parse("(1,2,3,4,5,6,7)", 8),
                           Permutation::parse("(2,4,3,7,5,6)", 8),
                           Permutation::parse("(1,8)(3,5)(4,6)", 8)});
}

}  // namespace

TEST_CASE("closure of S3 generators") {
  auto g = s3();
  const auto& e = g.enumeration();
  CHECK(e.size() == 6);
  CHECK(g.order() == 6);
  CHECK(e.perm(0).is_identity());  // identity is always element 0
  CHECK(e.find(Permutation::parse("(1,3,2)", 3)) != static_cast<size_t>(-1));
  CHECK(e.find(Permutation::parse("(1,2)", 4)) == static_cast<size_t>(-1));
  CHECK(g.contains(Permutation::parse("(1,3)", 3)));
  CHECK(g.is_transitive());

  // every element round-trips through find
  for (size_t i = 0; i < e.size(); ++i) CHECK(e.find(e.perm(i)) == i);
}

TEST_CASE("fixmasks match fixed points") {
  auto g = s3();
  const auto& e = g.enumeration();
  for (size_t i = 0; i < e.size(); ++i) {
    auto p = e.perm(i);
    uint64_t m = 0;
    int cnt = 0;
    for (int x = 1; x <= 3; ++x)
      if (p.apply(x) == x) {
        m |= uint64_t{1} << (x - 1);
        ++cnt;
      }
    CHECK(e.fixmask(i) == m);
    CHECK(e.fix_count(i) == cnt);
  }
  // distinct non-identity masks of S3: the three transposition masks and 0
  auto d = e.distinct_fixmasks();
  CHECK(d.size() == 4);
}

TEST_CASE("PGL(2,7) order and minimum distance") {
  auto g = pgl27();
  CHECK(g.order() == 336);
  auto dist = g.min_distance();
  CHECK_FALSE(dist.infinite);
  CHECK(dist.value == 6);  // sharply 3-transitive, some elements fix 2 points
  CHECK(g.is_transitive());
}

TEST_CASE("group distance equals degree minus fixed points of quotient") {
  // d(g,h) = n - fix(g h^-1), exhaustively on a small group
  auto g = s3();
  const auto& e = g.enumeration();
  for (size_t i = 0; i < e.size(); ++i)
    for (size_t j = 0; j < e.size(); ++j) {
      auto gi = e.perm(i), gj = e.perm(j);
      auto q = gi.compose(gj.inverse());
      int fix = 0;
      for (int x = 1; x <= 3; ++x)
        if (q.apply(x) == x) ++fix;
      CHECK(hamming_distance(gi, gj) == 3 - fix);
    }
}

TEST_CASE("trivial group has infinite distance") {
  PermutationGroup t("trivial", 4, {Permutation(4)});
  CHECK(t.order() == 1);
  auto d = t.min_distance();
  CHECK(d.infinite);
  CHECK(d.value == 5);  // sentinel n+1
  CHECK_FALSE(t.is_transitive());
}

TEST_CASE("enumeration budget is enforced") {
  PermutationGroup g("S6", 6,
                     {Permutation::parse("(1,2)", 6),
                      Permutation::parse("(1,2,3,4,5,6)", 6)});
  CHECK_THROWS_AS(g.enumeration(100), BudgetError);
}

TEST_CASE("constructor rejects bad generator sets") {
  CHECK_THROWS_AS(PermutationGroup("empty", 3, {}), InputError);
  CHECK_THROWS_AS(PermutationGroup("mixed", 3,
                                   {Permutation::parse("(1,2)", 4)}),
                  InputError);
}

TEST_CASE("mask-based base tests") {
  auto g = s3();
  const auto& masks = g.enumeration().distinct_fixmasks();
  // single points are fixed by some transposition, so never a base
  CHECK_FALSE(is_base_in_masks(masks, uint64_t{1} << 0));
  CHECK_FALSE(is_base_in_masks(masks, uint64_t{1} << 2));
  // any pair is a base: only the identity fixes two points of S3
  CHECK(is_base_in_masks(masks, 0b011));
  CHECK(is_base_in_masks(masks, 0b101));

  auto r = base_size_from_masks(3, masks);
  CHECK(r.size == 2);
  CHECK(r.witness == std::vector<int>{1, 2});  // colex-first witness

  CHECK(g.is_base({1, 2}));
  CHECK_FALSE(g.is_base({2}));
  auto br = g.base_size();
  CHECK(br.size == 2);
}

TEST_CASE("PGL(2,7) has base size 3 and every 3-set is a base") {
  auto g = pgl27();
  auto r = g.base_size();
  CHECK(r.size == 3);
  // sharply 3-transitive: every triple of distinct points is a base
  for (int a = 1; a <= 8; ++a)
    for (int b = a + 1; b <= 8; ++b) {
      CHECK_FALSE(g.is_base({a, b}));
      for (int c = b + 1; c <= 8; ++c) REQUIRE(g.is_base({a, b, c}));
    }
}

TEST_CASE("base index table answers lookups") {
  auto g = s3();
  const auto& e = g.enumeration();
  BaseIndexTable tab(e.store(), {1, 2});
  CHECK(tab.entries() == 6);
  for (size_t i = 0; i < e.size(); ++i) {
    auto p = e.perm(i);
    std::vector<int> sym{p.apply(1), p.apply(2)};
    CHECK(tab.lookup(sym) == static_cast<uint32_t>(i));
  }
  std::vector<int> repeated{1, 1};  // no permutation maps 1 and 2 to one point
  CHECK(tab.lookup(repeated) == BaseIndexTable::kNone);
}

TEST_CASE("permutational isomorphism verifier") {
  auto g1 = s3();
  Permutation psi = Permutation::parse("(1,2,3)", 3);
  auto psi_inv = psi.inverse();
  std::vector<Permutation> phi;
  for (const auto& gen : g1.generators())
    phi.push_back(psi_inv.compose(gen).compose(psi));
  PermutationGroup g2("S3conj", 3, phi);

  auto ok = verify_permutational_isomorphism(g1, g2, phi, psi);
  CHECK(ok.ok);
  CHECK(ok.generator_index == -1);

  // wrong point bijection: reports the first violated generator and point
  auto bad = verify_permutational_isomorphism(g1, g2, phi, Permutation(3));
  CHECK_FALSE(bad.ok);
  CHECK(bad.generator_index >= 0);
  CHECK(bad.point >= 1);

  // phi images must lie in the target group
  PermutationGroup z3("Z3", 3, {Permutation::parse("(1,2,3)", 3)});
  CHECK_THROWS_AS(verify_permutational_isomorphism(
                      g1, z3, g1.generators(), Permutation(3)),
                  InputError);
}

TEST_CASE("random conjugates keep order and distance") {
  auto g = pgl27();
  uint64_t order = g.order();
  int dist = g.min_distance().value;
  Rng rng(99);
  for (int t = 0; t < 3; ++t) {
    auto sigma = rng.random_permutation(8);
    auto si = sigma.inverse();
    std::vector<Permutation> conj;
    for (const auto& gen : g.generators())
      conj.push_back(si.compose(gen).compose(sigma));
    PermutationGroup h("conj", 8, conj);
    CHECK(h.order() == order);
    CHECK(h.min_distance().value == dist);
  }
}
