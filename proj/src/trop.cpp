#include "signstab/trop.hpp"

#include <stdexcept>

namespace signstab {

static void check_point(const ExchangeMatrix& b, const TropPoint& w) {
  if (w.size() != b.n()) throw std::invalid_argument("tropical point has wrong dimension");
}

TropStep trop_x_mutate(const ExchangeMatrix& b, int k, const TropPoint& w) {
  check_point(b, w);
  if (k < 0 || static_cast<std::size_t>(k) >= b.n()) throw std::out_of_range("mutation index out of range");
  const std::size_t uk = static_cast<std::size_t>(k);
  const Sign eps = sign_of(w[uk]);
  const int e = static_cast<int>(eps);
  TropPoint out = w;
  out[uk] = -w[uk];
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i == uk) continue;
    Int coeff = pos_part(Int(e * b.entry(i, uk)));
    if (coeff != 0) out[i] += Rat(coeff) * w[uk];
  }
  return TropStep{std::move(out), eps};
}

TropStep trop_a_mutate(const ExchangeMatrix& b, int k, const TropPoint& v) {
  check_point(b, v);
  if (k < 0 || static_cast<std::size_t>(k) >= b.n()) throw std::out_of_range("mutation index out of range");
  const std::size_t uk = static_cast<std::size_t>(k);
  Rat image = 0;  // x_k(p(v)) = sum_j b_kj a_j
  for (std::size_t j = 0; j < v.size(); ++j) image += Rat(b.entry(uk, j)) * v[j];
  const Sign eps = sign_of(image);
  // At sign 0 both branches of the min form coincide; the signed coefficient
  // formula must then pick either branch, not drop the sum altogether.
  const int e = eps == Sign::zero ? -1 : static_cast<int>(eps);
  TropPoint out = v;
  Rat acc = -v[uk];
  for (std::size_t j = 0; j < v.size(); ++j) {
    Int coeff = pos_part(Int(-e * b.entry(uk, j)));
    if (coeff != 0) acc += Rat(coeff) * v[j];
  }
  out[uk] = std::move(acc);
  return TropStep{std::move(out), eps};
}

TropPoint trop_ensemble_map(const ExchangeMatrix& b, const TropPoint& v) {
  check_point(b, v);
  return b.mat() * v;
}

std::pair<TropPoint, SignVec> loop_traverse(const MutationLoop& loop, const TropPoint& w) {
  TropPoint p = w;
  SignVec signs;
  signs.reserve(loop.length());
  ExchangeMatrix b = loop.b0;
  for (int k : loop.word) {
    TropStep step = trop_x_mutate(b, k, p);
    p = std::move(step.point);
    signs.push_back(step.sign);
    b = mutate_exchange_matrix(b, k);
  }
  if (!loop.sigma.is_identity()) p = loop.sigma.apply_to_point(p);
  return {std::move(p), std::move(signs)};
}

SignVec path_sign(const MutationLoop& loop, const TropPoint& w) {
  return loop_traverse(loop, w).second;
}

IntMat path_presentation_matrix(const MutationLoop& loop, const SignVec& eps) {
  if (eps.size() != loop.length())
    throw std::invalid_argument("path_presentation_matrix: sign vector length mismatch");
  if (!is_strict(eps)) throw std::invalid_argument("path_presentation_matrix: sign vector is not strict");
  IntMat prod = IntMat::identity(loop.rank());
  ExchangeMatrix b = loop.b0;
  for (std::size_t i = 0; i < loop.word.size(); ++i) {
    SignedEMatrices m = signed_mutation_matrices(b, loop.word[i], eps[i]);
    prod = m.e * prod;
    b = mutate_exchange_matrix(b, loop.word[i]);
  }
  if (!loop.sigma.is_identity()) prod = loop.sigma.matrix() * prod;
  Int d = prod.det();
  if (d != 1 && d != -1) throw std::logic_error("path_presentation_matrix: determinant is not +-1");
  return prod;
}

TropOrbit apply_loop_trop(const MutationLoop& loop, const TropPoint& w, int n) {
  if (n < 0) throw std::invalid_argument("apply_loop_trop: negative iteration count");
  TropOrbit orbit;
  orbit.points.reserve(static_cast<std::size_t>(n) + 1);
  orbit.signs.reserve(static_cast<std::size_t>(n));
  orbit.points.push_back(w);
  for (int m = 0; m < n; ++m) {
    auto [next, signs] = loop_traverse(loop, orbit.points.back());
    orbit.points.push_back(std::move(next));
    orbit.signs.push_back(std::move(signs));
  }
  return orbit;
}

std::pair<TropPoint, TropPoint> basepoints(std::size_t n) {
  if (n == 0) throw std::invalid_argument("basepoints: positive rank required");
  TropPoint plus(n, Rat(1)), minus(n, Rat(-1));
  return {std::move(plus), std::move(minus)};
}

}  // namespace signstab
