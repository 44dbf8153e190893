#pragma once

#include "signstab/loop.hpp"

namespace signstab {

/// Point of X_(t)(R^trop) (or A-side) in a fixed chart, exact rationals.
using TropPoint = RatVec;

struct TropStep {
  TropPoint point;
  Sign sign;
};

/// Signed tropical X-mutation: eps = sgn(x_k(w)); x'_k = -x_k and
/// x'_i = x_i + [eps b_ik]_+ x_k for i != k.
TropStep trop_x_mutate(const ExchangeMatrix& b, int k, const TropPoint& w);

/// Signed tropical A-mutation: eps = sgn(sum_j b_kj a_j);
/// a'_k = -a_k + sum_j [-eps b_kj]_+ a_j, other coordinates fixed.
TropStep trop_a_mutate(const ExchangeMatrix& b, int k, const TropPoint& v);

/// Tropicalized ensemble map: w = B v.
TropPoint trop_ensemble_map(const ExchangeMatrix& b, const TropPoint& v);

/// Per-mutation signs of one traversal of the loop word starting at w
/// (the permutation contributes no sign).
SignVec path_sign(const MutationLoop& loop, const TropPoint& w);

/// P_sigma E_{k_{h-1},eps_{h-1}} ... E_{k_0,eps_0}, each factor taken at its
/// own vertex along the word. Requires a strict sign vector of full length.
IntMat path_presentation_matrix(const MutationLoop& loop, const SignVec& eps);

struct TropOrbit {
  std::vector<TropPoint> points;  // n+1 points, points[0] = start
  std::vector<SignVec> signs;     // n per-traversal sign vectors
};

/// Iterates the loop n times: mutate along the word, then permute
/// coordinates; collects every intermediate traversal sign.
TropOrbit apply_loop_trop(const MutationLoop& loop, const TropPoint& w, int n);

/// One traversal; cheaper form of apply_loop_trop(loop, w, 1).
std::pair<TropPoint, SignVec> loop_traverse(const MutationLoop& loop, const TropPoint& w);

/// l^+ = (1,...,1) and l^- = (-1,...,-1).
std::pair<TropPoint, TropPoint> basepoints(std::size_t n);

}  // namespace signstab
