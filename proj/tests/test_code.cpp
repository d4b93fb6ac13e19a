#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "twistdec/code.hpp"

using namespace twistdec;

namespace {

Permutation P(const char* s, int n) { return Permutation::parse(s, n); }

// AGL(3,2) on 8 points with a twisted second representation.
TwistedCode agl32_code() {
  PermutationGroup g("AGL32", 8,
                     {P("(2,5)(4,7)", 8), P("(2,3,4)(5,6,8)", 8),
                      P("(1,2)(3,4)(5,6)(7,8)", 8),
                      P("(1,3)(2,4)(5,7)(6,8)", 8),
                      P("(1,5)(2,6)(3,7)(4,8)", 8)});
  ComponentMap m2;
  m2.gen_images = {P("(1,3)(2,7)(4,5)(6,8)", 8), P("(2,3,4)(5,6,8)", 8),
                   P("(1,2)(3,4)(5,6)(7,8)", 8), P("(1,3)(2,4)(5,7)(6,8)", 8),
                   P("(1,5)(2,6)(3,7)(4,8)", 8)};
  m2.psi = Permutation(8);
  return TwistedCode("agl32", std::move(g), {std::move(m2)});
}

TwistedCode s3_conjugate_code() {
  PermutationGroup g("S3", 3, {P("(1,2)", 3), P("(1,2,3)", 3)});
  Permutation sigma = P("(1,2,3)", 3);
  auto si = sigma.inverse();
  ComponentMap m2;
  for (const auto& gen : g.generators())
    m2.gen_images.push_back(si.compose(gen).compose(sigma));
  m2.psi = sigma;
  return TwistedCode("s3conj", std::move(g), {std::move(m2)});
}

}  // namespace

TEST_CASE("correction parameters") {
  auto p = correction_params(12, 2);
  CHECK(p.r_tw == 5);
  CHECK(p.r_prime == 2);
  p = correction_params(16, 2);
  CHECK(p.r_tw == 7);
  CHECK(p.r_prime == 3);
  p = correction_params(48, 4);
  CHECK(p.r_tw == 23);
  CHECK(p.r_prime == 5);
  p = correction_params(8, 2);
  CHECK(p.r_tw == 3);
  CHECK(p.r_prime == 1);
  CHECK_THROWS_AS(correction_params(0, 2), InputError);
  CHECK_THROWS_AS(correction_params(5, 0), InputError);
}

TEST_CASE("repetition strength arithmetic never gains") {
  // plain lambda-fold repetition of a distance-d code corrects the same
  // number of per-component errors before and after the tuple bookkeeping
  for (int d = 1; d <= 20; ++d)
    for (int lambda = 1; lambda <= 6; ++lambda) {
      auto rs = repetition_strength_check(d, lambda);
      CHECK(rs.r == (d - 1) / 2);
      CHECK(rs.r == rs.r_prime);
    }
}

TEST_CASE("twisted code over AGL(3,2)") {
  auto code = agl32_code();
  CHECK(code.lambda() == 2);
  CHECK(code.degree() == 8);
  CHECK(code.size() == 1344);

  auto dt = code.delta_tw();
  CHECK_FALSE(dt.infinite);
  CHECK(dt.value == 12);
  auto dr = code.delta_rep();
  CHECK(dr.value == 8);
  CHECK(dt.value >= dr.value);

  auto pr = code.params();
  CHECK(pr.r_tw == 5);
  CHECK(pr.r_prime == 2);
}

TEST_CASE("encoding matches the hand-worked codeword") {
  auto code = agl32_code();
  auto g = P("(1,4,6,8,5,3)(2,7)", 8);
  auto cw = code.encode(g);
  REQUIRE(cw.components.size() == 2);
  CHECK(cw.components[0].images() == std::vector<int>{4, 7, 1, 6, 3, 8, 2, 5});
  CHECK(cw.components[1].images() == std::vector<int>{7, 4, 6, 1, 8, 3, 5, 2});

  auto w = cw.word();
  CHECK(w.alphabet == 8);
  CHECK(w.symbols ==
        std::vector<int>{4, 7, 1, 6, 3, 8, 2, 5, 7, 4, 6, 1, 8, 3, 5, 2});

  // index round trip, identity row first
  CHECK(code.encode_index(code.element_index(g)).word().symbols == w.symbols);
  auto id_cw = code.encode_index(0);
  CHECK(id_cw.components[0].is_identity());
  CHECK(id_cw.components[1].is_identity());

  CHECK_THROWS_AS(code.element_index(P("(1,2)", 8)), InputError);
}

TEST_CASE("alpha tables apply and invert") {
  auto code = agl32_code();
  auto g = P("(1,4,6,8,5,3)(2,7)", 8);
  auto a1 = code.alpha(1);
  auto img = a1.apply(g);
  CHECK(img.images() == std::vector<int>{7, 4, 6, 1, 8, 3, 5, 2});
  CHECK(a1.apply_inverse(img) == g);
  CHECK(code.alpha(0).apply(g) == g);  // component 1 is untwisted
  CHECK_THROWS_AS(a1.apply(P("(1,2)", 8)), InputError);

  CHECK(code.psi(0).is_identity());
  CHECK(code.psi(1).is_identity());
  CHECK_THROWS_AS(code.psi(2), InputError);
}

TEST_CASE("component isomorphism check on a relabeled component") {
  auto code = s3_conjugate_code();
  CHECK(code.size() == 6);
  auto res = code.check_component_iso(1);
  CHECK(res.ok);
  CHECK_THROWS_AS(code.check_component_iso(0), InputError);
  CHECK_THROWS_AS(code.check_component_iso(2), InputError);

  // conjugation preserves both distances; lambda doubles the repetition one
  CHECK(code.delta_tw().value == 4);
  CHECK(code.delta_rep().value == 4);
}

TEST_CASE("generator images that are no isomorphism are rejected") {
  PermutationGroup g("S3", 3, {P("(1,2)", 3), P("(1,2,3)", 3)});
  ComponentMap bad;
  // sends the 3-cycle to an involution: cannot extend to a homomorphism
  bad.gen_images = {P("(1,2)", 3), P("(1,2)", 3)};
  TwistedCode code("bad", g, {bad});
  CHECK_THROWS_AS(code.tables(), InputError);

  ComponentMap collapse;  // collapses everything: not faithful
  collapse.gen_images = {Permutation(3), Permutation(3)};
  TwistedCode code2("collapse", g, {collapse});
  CHECK_THROWS_AS(code2.tables(), InputError);
}

TEST_CASE("single-component code degenerates to the group") {
  PermutationGroup g("S3", 3, {P("(1,2)", 3), P("(1,2,3)", 3)});
  TwistedCode code("plain", g, {});
  CHECK(code.lambda() == 1);
  CHECK(code.size() == 6);
  CHECK(code.delta_tw().value == g.min_distance().value);
  CHECK(code.delta_rep().value == g.min_distance().value);
}

TEST_CASE("trivial code has undefined correction parameters") {
  PermutationGroup t("trivial", 4, {Permutation(4)});
  TwistedCode code("trivial", t, {});
  CHECK(code.delta_tw().infinite);
  CHECK(code.delta_tw().value == 5);
  CHECK_THROWS_AS(code.params(), InputError);
}

TEST_CASE("code table enumeration honors its budget") {
  PermutationGroup g("S6", 6,
                     {P("(1,2)", 6), P("(1,2,3,4,5,6)", 6)});
  TwistedCode code("tight", g, {}, 100);
  CHECK_THROWS_AS(code.tables(), BudgetError);
}
