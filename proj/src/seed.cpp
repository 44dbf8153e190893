#include "signstab/seed.hpp"

#include <numeric>
#include <stdexcept>

namespace signstab {

Perm::Perm(std::size_t n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }

Perm Perm::from_images(std::vector<int> images) {
  const std::size_t n = images.size();
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("Perm: image list is not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) inv[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
  return from_images(std::move(inv));
}

Perm Perm::compose(const Perm& inner) const {
  if (size() != inner.size()) throw std::invalid_argument("Perm: size mismatch in composition");
  std::vector<int> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = img_[static_cast<std::size_t>(inner.img_[i])];
  return from_images(std::move(out));
}

Perm Perm::power(long n) const {
  Perm base = n >= 0 ? *this : inverse();
  unsigned long k = static_cast<unsigned long>(n >= 0 ? n : -n);
  Perm acc(size());
  while (k) {
    if (k & 1ul) acc = base.compose(acc);
    base = base.compose(base);
    k >>= 1ul;
  }
  return acc;
}

IntMat Perm::matrix() const {
  IntMat p(size(), size());
  for (std::size_t j = 0; j < size(); ++j) p.at(static_cast<std::size_t>(img_[j]), j) = 1;
  return p;
}

ExchangeMatrix::ExchangeMatrix(IntMat b) : b_(std::move(b)) {
  if (b_.rows() != b_.cols()) throw std::invalid_argument("ExchangeMatrix: square matrix required");
  if (b_.rows() == 0) throw std::invalid_argument("ExchangeMatrix: positive rank required");
  if (!b_.is_skew_symmetric())
    throw std::invalid_argument("ExchangeMatrix: matrix is not skew-symmetric");
}

static void check_index(const ExchangeMatrix& b, int k) {
  if (k < 0 || static_cast<std::size_t>(k) >= b.n())
    throw std::out_of_range("mutation index out of range");
}

ExchangeMatrix mutate_exchange_matrix(const ExchangeMatrix& b, int k) {
  check_index(b, k);
  const std::size_t n = b.n();
  const std::size_t uk = static_cast<std::size_t>(k);
  IntMat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == uk || j == uk) {
        out.at(i, j) = -b.entry(i, j);
      } else {
        out.at(i, j) = b.entry(i, j) + pos_part(b.entry(i, uk)) * pos_part(b.entry(uk, j)) -
                       pos_part(Int(-b.entry(i, uk))) * pos_part(Int(-b.entry(uk, j)));
      }
    }
  return ExchangeMatrix(std::move(out));
}

SignedEMatrices signed_mutation_matrices(const ExchangeMatrix& b, int k, Sign eps) {
  check_index(b, k);
  if (eps == Sign::zero) throw std::invalid_argument("signed_mutation_matrices: eps must be +-");
  const std::size_t n = b.n();
  const std::size_t uk = static_cast<std::size_t>(k);
  const int e = static_cast<int>(eps);
  SignedEMatrices out;
  out.k = k;
  out.eps = eps;
  out.e = IntMat::identity(n);
  out.e_check = IntMat::identity(n);
  out.e.at(uk, uk) = -1;
  out.e_check.at(uk, uk) = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == uk) continue;
    out.e.at(i, uk) = pos_part(Int(e * b.entry(i, uk)));
    out.e_check.at(uk, i) = pos_part(Int(-e * b.entry(uk, i)));
  }
  return out;
}

EIdentityReport verify_e_identities(const ExchangeMatrix& b, int k, Sign eps) {
  const SignedEMatrices m = signed_mutation_matrices(b, k, eps);
  const ExchangeMatrix b2 = mutate_exchange_matrix(b, k);
  const SignedEMatrices m2 = signed_mutation_matrices(b2, k, opposite(eps));
  EIdentityReport r;
  r.e_involution = (m.e * m.e).is_identity();
  r.e_check_involution = (m.e_check * m.e_check).is_identity();
  // With E^2 = Id the inverse of E^{(t)}_{k,eps} is itself, so compare against
  // E^{(t')}_{k,-eps} directly.
  r.mutated_inverse = (m.e == m2.e) && (m.e_check == m2.e_check);
  r.transpose_inverse = (m.e_check.transpose() * m.e).is_identity();
  r.b_intertwine = (b.mat() * m.e_check) == (m.e * b2.mat());
  return r;
}

ExchangeMatrix permute_matrix(const ExchangeMatrix& b, const Perm& sigma) {
  if (sigma.size() != b.n()) throw std::invalid_argument("permute_matrix: size mismatch");
  const std::size_t n = b.n();
  IntMat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.at(static_cast<std::size_t>(sigma(static_cast<int>(i))),
             static_cast<std::size_t>(sigma(static_cast<int>(j)))) = b.entry(i, j);
  return ExchangeMatrix(std::move(out));
}

}  // namespace signstab
