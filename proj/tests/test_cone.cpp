#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace signstab;
using namespace oracles;

namespace {

std::vector<IntVec> expected_rays(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<IntVec> out;
  for (auto r : rows) out.push_back(iv(r));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("double description: quadrant and half-space") {
  Cone quad = Cone::from_normals(2, {iv({1, 0}), iv({0, 1})});
  CHECK(quad.rays() == expected_rays({{1, 0}, {0, 1}}));
  CHECK(quad.lineality().empty());
  CHECK(quad.dim() == 2);
  CHECK(quad.strictly_convex());

  Cone half = Cone::from_normals(2, {iv({1, 0})});
  CHECK(half.rays() == expected_rays({{1, 0}}));
  REQUIRE(half.lineality().size() == 1);
  CHECK(half.lineality()[0] == iv({0, 1}));
  CHECK(half.dim() == 2);
  CHECK(!half.strictly_convex());

  Cone half3 = Cone::from_normals(3, {iv({1, 0, 0})});
  CHECK(half3.dim() == 3);
  CHECK(!half3.strictly_convex());

  // {x >= 0, x <= 0} in the plane degenerates to the y-axis
  Cone slab = Cone::from_normals(2, {iv({1, 0}), iv({-1, 0})});
  CHECK(slab.rays().empty());
  REQUIRE(slab.lineality().size() == 1);
  CHECK(slab.dim() == 1);
  CHECK(!slab.full_dimensional());
}

TEST_CASE("positive and negative cones") {
  Cone pos = positive_cone(2);
  CHECK(pos.rays() == expected_rays({{1, 0}, {0, 1}}));
  Cone neg = negative_cone(2);
  CHECK(neg.rays() == expected_rays({{-1, 0}, {0, -1}}));
  RatVec lplus{Rat(1), Rat(1), Rat(1)};
  CHECK(positive_cone(3).contains_point(lplus, true));
  CHECK(!negative_cone(3).contains_point(lplus, false));
}

TEST_CASE("double description agrees with brute-force kernel enumeration") {
  Rng rng(301);
  for (int t = 0; t < 120; ++t) {
    std::size_t dim = static_cast<std::size_t>(rng.uniform(2, 5));
    int m = rng.uniform(1, 7);
    std::vector<IntVec> normals;
    for (int i = 0; i < m; ++i) {
      IntVec a(dim);
      for (std::size_t j = 0; j < dim; ++j) a[j] = rng.uniform(-3, 3);
      normals.push_back(std::move(a));
    }
    Cone c = Cone::from_normals(dim, normals);
    std::vector<IntVec> expect = brute_force_rays(dim, normals);
    CHECK(c.rays() == expect);
  }
}

TEST_CASE("H -> V -> H round trip preserves membership") {
  Rng rng(302);
  for (int t = 0; t < 60; ++t) {
    std::size_t dim = static_cast<std::size_t>(rng.uniform(2, 6));
    int m = rng.uniform(1, 12);
    std::vector<IntVec> normals;
    for (int i = 0; i < m; ++i) {
      IntVec a(dim);
      for (std::size_t j = 0; j < dim; ++j) a[j] = rng.uniform(-3, 3);
      normals.push_back(std::move(a));
    }
    Cone c = Cone::from_normals(dim, normals);
    Cone back = Cone::from_normals(dim, c.normals_from_generators());
    for (int s = 0; s < 40; ++s) {
      RatVec w = rng.point(dim, 6, 3);
      CHECK(c.contains_point(w, false) == back.contains_point(w, false));
    }
  }
}

TEST_CASE("containment and point membership") {
  Cone quad = positive_cone(2);
  CHECK(cone_contains(quad, quad));
  Cone narrow = Cone::from_normals(2, {iv({1, 0}), iv({1, 1})});
  // narrow = {x >= 0, x + y >= 0} actually contains the quadrant
  CHECK(cone_contains(narrow, quad));
  CHECK(!cone_contains(quad, narrow));

  RatVec boundary{Rat(0), Rat(1)};
  CHECK(quad.contains_point(boundary, false));
  CHECK(!quad.contains_point(boundary, true));
  CHECK_THROWS_AS(quad.contains_point(RatVec{Rat(1)}, false), std::invalid_argument);
  CHECK_THROWS_AS(cone_contains(quad, positive_cone(3)), std::invalid_argument);
}

TEST_CASE("maps_into on the Kronecker invariant cone") {
  Cone cand = Cone::from_normals(2, {iv({1, 0}), iv({1, 1})});
  IntMat e3 = mat({{8, 3}, {-3, -1}});  // l=3, sign (+,+)
  CHECK(maps_into(e3, cand, cand, false));
  CHECK(maps_into(e3, cand, cand, true));
  IntMat e2 = mat({{3, 2}, {-2, -1}});  // l=2: the boundary ray (1,-1) is fixed
  CHECK(maps_into(e2, cand, cand, false));
  CHECK(!maps_into(e2, cand, cand, true));
  CHECK(maps_into(IntMat::identity(2), cand, cand, false));
}

TEST_CASE("sign cones: Kronecker table") {
  for (long long ell : {2LL, 4LL}) {
    MutationLoop loop = kronecker_loop(ell);
    Cone pp = sign_cone(loop, parse_sign_string("++"));
    CHECK(pp.normals() == std::vector<IntVec>({iv({1, 0}), iv({ell, 1})}));
    Cone pm = sign_cone(loop, parse_sign_string("+-"));
    CHECK(pm.normals() == std::vector<IntVec>({iv({1, 0}), iv({-ell, -1})}));
    Cone mp = sign_cone(loop, parse_sign_string("-+"));
    CHECK(mp.normals() == std::vector<IntVec>({iv({-1, 0}), iv({0, 1})}));
    Cone mm = sign_cone(loop, parse_sign_string("--"));
    CHECK(mm.normals() == std::vector<IntVec>({iv({-1, 0}), iv({0, -1})}));
    CHECK(mm.rays() == expected_rays({{-1, 0}, {0, -1}}));
  }
}

TEST_CASE("sign cone membership matches path signs") {
  Rng rng(303);
  int checked = 0;
  while (checked < 100) {
    MutationLoop loop = rng.palindromic_loop(static_cast<std::size_t>(rng.uniform(2, 4)), 3, 3);
    TropPoint w = rng.point(loop.rank(), 7, 3);
    SignVec s = path_sign(loop, w);
    if (!is_strict(s)) continue;
    Cone c = sign_cone(loop, s);
    CHECK(c.contains_point(w, false));
    ++checked;
  }
}

TEST_CASE("sign cone interiors are disjoint and closures cover") {
  Rng rng(304);
  MutationLoop loop = markov_loop();
  for (int t = 0; t < 60; ++t) {
    TropPoint w = rng.point(3, 9, 2);
    SignVec s = path_sign(loop, w);
    if (is_strict(s)) {
      // strict-sign points lie in exactly their own open sign cone
      Cone own = sign_cone(loop, s);
      CHECK(own.contains_point(w, true));
      SignVec other = s;
      other[0] = opposite(other[0]);
      CHECK(!sign_cone(loop, other).contains_point(w, true));
    }
  }
}

TEST_CASE("Markov stable sign cone is strictly convex with 3 extreme rays") {
  Cone c = sign_cone(markov_loop(), parse_sign_string("+-+-+-"));
  CHECK(c.full_dimensional());
  CHECK(c.strictly_convex());
  CHECK(c.rays().size() == 3);
  // certified against the half-space description
  for (const IntVec& r : c.rays())
    for (const IntVec& a : c.normals()) CHECK(dot(a, r) >= 0);
}

TEST_CASE("fully-mutating words yield strictly convex full-dimensional sign cones") {
  Rng rng(305);
  int checked = 0;
  while (checked < 60) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
    MutationLoop loop = rng.palindromic_loop(n, 3, 3);
    if (!loop.fully_mutating()) continue;
    TropPoint w = rng.point(n, 7, 2);
    SignVec s = path_sign(loop, w);
    if (!is_strict(s)) continue;
    Cone c = sign_cone(loop, s);
    if (c.full_dimensional()) CHECK(c.strictly_convex());
    ++checked;
  }
}

TEST_CASE("dual generators span grows like the mutated index set") {
  // span{c_0..c_j} = span{e_{k_0}..e_{k_j}} for every prefix
  Rng rng(306);
  for (int t = 0; t < 40; ++t) {
    MutationLoop loop = rng.palindromic_loop(static_cast<std::size_t>(rng.uniform(2, 5)), 3, 4);
    SignVec s(loop.length());
    for (auto& v : s) v = rng.uniform(0, 1) ? Sign::plus : Sign::minus;
    std::vector<IntVec> cs = sign_cone_normals(loop, s);
    for (std::size_t j = 0; j < cs.size(); ++j) {
      std::vector<IntVec> prefix(cs.begin(), cs.begin() + static_cast<long>(j) + 1);
      std::set<int> letters(loop.word.begin(), loop.word.begin() + static_cast<long>(j) + 1);
      CHECK(rank_of_vectors(prefix, loop.rank()) == letters.size());
    }
  }
}
