#include "oracles.hpp"

#include "signstab/stability.hpp"

#include <doctest.h>

#include <cmath>

using namespace signstab;
using namespace oracles;

TEST_CASE("orbit sign stabilization: Markov and Kronecker") {
  auto [lp, lm] = basepoints(3);
  OrbitStabilization s = orbit_sign_stabilization(markov_loop(), lp, 64);
  CHECK(s.stabilized);
  CHECK(sign_string(s.sign) == "+-+-+-");
  CHECK(s.n0 == 1);

  auto [kp, km] = basepoints(2);
  OrbitStabilization k2 = orbit_sign_stabilization(kronecker_loop(2), km, 64);
  CHECK(k2.stabilized);
  CHECK(sign_string(k2.sign) == "++");

  CHECK_THROWS_AS(orbit_sign_stabilization(markov_loop(), pt({0, 0, 0}), 8),
                  std::invalid_argument);
}

TEST_CASE("periodic orbits give certified verdicts") {
  // A2 period-one loop (Fordy-Marsh vector (1)): the basepoint orbit is
  // exactly projectively periodic with non-constant sign.
  Perm swap = Perm::from_images({1, 0});
  MutationLoop a2loop = make_loop(a2_b(), {0}, swap);
  REQUIRE(!validate_loop(a2loop));
  auto [lp, lm] = basepoints(2);
  OrbitStabilization s = orbit_sign_stabilization(a2loop, lp, 64);
  CHECK(s.certified_not_stable);
  CHECK(s.period == 5);

  // Kronecker l=2 at the fixed ray (1,-1): certified stable with sign (+,+)
  OrbitStabilization fixed = orbit_sign_stabilization(kronecker_loop(2), pt({1, -1}), 16);
  CHECK(fixed.stabilized);
  CHECK(fixed.certified);
  CHECK(fixed.period == 1);
  CHECK(sign_string(fixed.sign) == "++");

  // a fixed ray with non-strict sign is a certified obstruction: with a zero
  // exchange matrix the ray (0,1) is invariant and its sign is 0 forever.
  IntMat zero(2, 2);
  MutationLoop trivial = make_loop(ExchangeMatrix(zero), {0});
  REQUIRE(!validate_loop(trivial));
  OrbitStabilization axis = orbit_sign_stabilization(trivial, pt({0, 1}), 16);
  CHECK(axis.certified_not_stable);
  CHECK(axis.period == 1);
}

TEST_CASE("inductive check: Markov terminates at n = 1") {
  StabilityReport rep = inductive_check(markov_loop(), 1, 64);
  CHECK(rep.verdict == Verdict::sign_stable_on_Omega_can);
  CHECK(sign_string(rep.stable_sign) == "+-+-+-");
  REQUIRE(rep.diag.full_dim_cone_counts.size() == 1);
  CHECK(rep.diag.full_dim_cone_counts[0].second == 17);
  REQUIRE(rep.stable.has_value());
  CHECK(rep.stable->e == mat({{9, -4, 4}, {-12, 9, -4}, {4, -4, 1}}));
  CHECK(rep.stable->e_check == mat({{-7, -4, 12}, {-12, -7, 20}, {-20, -12, 33}}));
  CHECK(rep.stable->char_e == rep.stable->char_e_check);
  CHECK(rep.stable->palindromic);
  CHECK(std::abs(rep.stable->lambda - (9 + 4 * std::sqrt(5.0))) < 1e-12);
  CHECK(rep.exit_code() == 0);
}

TEST_CASE("inductive check: Kronecker never terminates") {
  StabilityReport rep = inductive_check(kronecker_loop(3), 4, 64);
  CHECK(rep.verdict == Verdict::inconclusive);
  CHECK(rep.exit_code() == 2);
}

TEST_CASE("heuristic check: Kronecker invariant cone") {
  for (long long ell : {2LL, 3LL, 4LL, 5LL}) {
    Cone cand = Cone::from_normals(2, {iv({1, 0}), iv({1, 1})});
    StabilityReport rep = heuristic_check(kronecker_loop(ell), cand, 64);
    CHECK(rep.verdict == Verdict::sign_stable_on_Omega_can);
    CHECK(sign_string(rep.stable_sign) == "++");
    REQUIRE(rep.stable.has_value());
    std::vector<Int> expect{Int(1), Int(2 - ell * ell), Int(1)};
    CHECK(rep.stable->char_e == expect);
    // strict-interior diagnostic: true for l >= 3, false for l = 2 where the
    // boundary ray (1,-1) is fixed
    CHECK(rep.diag.strict_interior == (ell >= 3));
  }
}

TEST_CASE("heuristic check: failure modes do not claim instability") {
  // the positive quadrant is not invariant for the Markov loop
  StabilityReport rep = heuristic_check(markov_loop(), positive_cone(3), 64);
  CHECK(rep.verdict == Verdict::inconclusive);
  // non-full-dimensional candidate is rejected
  Cone flat = Cone::from_normals(2, {iv({1, 0}), iv({-1, 0})});
  CHECK_THROWS_AS(heuristic_check(kronecker_loop(2), flat, 8), std::invalid_argument);
}

TEST_CASE("cross-method consistency on the Markov loop") {
  StabilityReport ind = inductive_check(markov_loop(), 1, 64);
  Cone cand = sign_cone(markov_loop(), parse_sign_string("+-+-+-"));
  StabilityReport heur = heuristic_check(markov_loop(), cand, 64);
  REQUIRE(ind.verdict == Verdict::sign_stable_on_Omega_can);
  REQUIRE(heur.verdict == Verdict::sign_stable_on_Omega_can);
  CHECK(ind.stable_sign == heur.stable_sign);
  CHECK(ind.stable->e == heur.stable->e);
}

TEST_CASE("stable data consistency with the observed orbit") {
  StabilityReport rep = inductive_check(markov_loop(), 1, 64);
  REQUIRE(rep.stable.has_value());
  // after n0, each traversal is multiplication by E_phi, exactly
  TropOrbit orbit = apply_loop_trop(markov_loop(), basepoints(3).first, 10);
  for (int m = rep.n0_plus; m < 10; ++m)
    CHECK(orbit.points[static_cast<std::size_t>(m) + 1] ==
          rep.stable->e * orbit.points[static_cast<std::size_t>(m)]);
  CHECK(rep.stable->lambda >= 1.0);
}

TEST_CASE("stable-range C and G recursions (dressed by the permutation)") {
  // horizontal case: C^(m+1) = E_phi C^(m) for m >= n0
  StabilityReport rep = inductive_check(markov_loop(), 1, 64);
  std::vector<CGFSnapshot> snaps = cgf_along_loop(markov_loop(), 6);
  for (int m = 1; m < 6; ++m) {
    CHECK(snaps[static_cast<std::size_t>(m) + 1].c == rep.stable->e * snaps[static_cast<std::size_t>(m)].c);
    CHECK(snaps[static_cast<std::size_t>(m) + 1].g_neg ==
          rep.stable->e_check * snaps[static_cast<std::size_t>(m)].g_neg);
  }
}

TEST_CASE("stable-range F-recursion with the correction chain") {
  // For the Markov loop in its stable range:
  // F^(m+1) = Echeck_phi F^(m) + (sum_r Echeck-prefix . eps Delta . E-prefix) Cbar^(m)
  MutationLoop loop = markov_loop();
  StabilityReport rep = inductive_check(loop, 1, 64);
  const SignVec eps = rep.stable_sign;
  const std::size_t h = loop.length();
  const std::size_t n = loop.rank();
  std::vector<ExchangeMatrix> bs = exchange_matrices_along(loop.b0, loop.word);
  std::vector<IntMat> es(h), echecks(h);
  for (std::size_t r = 0; r < h; ++r) {
    SignedEMatrices m = signed_mutation_matrices(bs[r], loop.word[r], eps[r]);
    es[r] = m.e;
    echecks[r] = m.e_check;
  }
  IntMat correction(n, n);
  for (std::size_t mterm = 0; mterm < h; ++mterm) {
    IntMat left = IntMat::identity(n);
    for (std::size_t r = h - 1; r >= h - mterm && r < h; --r) left = left * echecks[r];
    const std::size_t p = h - mterm - 1;  // position of the Delta factor
    IntMat delta(n, n);
    delta.at(static_cast<std::size_t>(loop.word[p]), static_cast<std::size_t>(loop.word[p])) =
        (eps[p] == Sign::plus) ? 1 : -1;
    IntMat right = IntMat::identity(n);
    for (std::size_t r = p; r-- > 0;) right = right * es[r];
    // right = E_{p-2-index chain} ... E_0 reading outward; assembled as
    // E_{h-m-2} ... E_0 by the loop above
    IntMat term = left * delta;
    term = term * right;
    correction = correction + term;
  }
  std::vector<CGFSnapshot> snaps = cgf_along_loop(loop, 7);
  for (int m = 2; m < 7; ++m) {
    const CGFSnapshot& cur = snaps[static_cast<std::size_t>(m)];
    const CGFSnapshot& nxt = snaps[static_cast<std::size_t>(m) + 1];
    CHECK(nxt.f == rep.stable->e_check * cur.f + correction * cur.c_neg);
  }
}

TEST_CASE("two-sided check routes one-sided loops away") {
  StabilityReport rep = two_sided_check(markov_loop(), 64);
  CHECK(rep.verdict == Verdict::inconclusive);  // equal signs on both sides
  bool noted = false;
  for (const std::string& note : rep.diag.notes)
    if (note.find("same sign") != std::string::npos) noted = true;
  CHECK(noted);
}

TEST_CASE("two-sided check certifies the A2 loop as not sign-stable") {
  Perm swap = Perm::from_images({1, 0});
  MutationLoop a2loop = make_loop(a2_b(), {0}, swap);
  StabilityReport rep = two_sided_check(a2loop, 64);
  CHECK(rep.verdict == Verdict::not_sign_stable);
  CHECK(rep.exit_code() == 3);
}

TEST_CASE("perron data lands in the stable cone") {
  StabilityReport rep = inductive_check(markov_loop(), 1, 64);
  PerronData perron = perron_check(markov_loop(), rep, 8);
  CHECK(perron.converged);
  CHECK(perron.residual <= 1e-9);
  CHECK(perron.in_sign_cone);
  CHECK(perron.in_stab_cone);
  CHECK(std::abs(perron.lambda - (9 + 4 * std::sqrt(5.0))) < 1e-9);
  CHECK_THROWS_AS(perron_check(markov_loop(), two_sided_check(markov_loop(), 8), 4),
                  std::invalid_argument);
}

TEST_CASE("auto check picks the right method") {
  StabilityReport m = auto_check(markov_loop(), 2, 64, std::nullopt);
  CHECK(m.verdict == Verdict::sign_stable_on_Omega_can);
  Cone cand = Cone::from_normals(2, {iv({1, 0}), iv({1, 1})});
  StabilityReport k = auto_check(kronecker_loop(3), 2, 64, cand);
  CHECK(k.verdict == Verdict::sign_stable_on_Omega_can);
  CHECK(k.diag.method == "auto/heuristic");
  StabilityReport inc = auto_check(kronecker_loop(3), 2, 64, std::nullopt);
  CHECK(inc.verdict == Verdict::inconclusive);
}

TEST_CASE("regular-B proposition: char(E) = char(E-check) for random strict signs") {
  Rng rng(701);
  int tested = 0;
  while (tested < 40) {
    MutationLoop loop = rng.palindromic_loop(static_cast<std::size_t>(rng.uniform(2, 4)), 3, 3);
    if (loop.b0.mat().det() == 0) continue;  // proposition needs regular B
    SignVec s(loop.length());
    for (auto& v : s) v = rng.uniform(0, 1) ? Sign::plus : Sign::minus;
    StableData d = stable_data(loop, s);
    CHECK(d.char_e == d.char_e_check);
    CHECK(d.palindromic);
    ++tested;
  }
}
