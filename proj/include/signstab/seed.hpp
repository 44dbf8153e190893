#pragma once

#include "signstab/matrix.hpp"

namespace signstab {

/// Permutation of {0..n-1}; stored as the image list sigma(i) = images[i].
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t n);  // identity
  static Perm from_images(std::vector<int> images);

  std::size_t size() const { return img_.size(); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm compose(const Perm& inner) const;  // this after inner: i -> this(inner(i))
  Perm power(long n) const;               // negative n allowed

  bool operator==(const Perm& o) const { return img_ == o.img_; }

  /// P_sigma with entries delta_{i,sigma(j)}; acts on coordinate vectors by
  /// (P x)_{sigma(i)} = x_i.
  IntMat matrix() const;

  template <typename T>
  std::vector<T> apply_to_point(const std::vector<T>& x) const {
    std::vector<T> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[static_cast<std::size_t>(img_[i])] = x[i];
    return out;
  }

 private:
  std::vector<int> img_;
};

/// Skew-symmetric integer exchange matrix. Construction validates
/// skew-symmetry; skew-symmetrizable input is rejected, not coerced.
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  explicit ExchangeMatrix(IntMat b);

  std::size_t n() const { return b_.rows(); }
  const IntMat& mat() const { return b_; }
  const Int& entry(std::size_t i, std::size_t j) const { return b_.at(i, j); }

  bool operator==(const ExchangeMatrix& o) const { return b_ == o.b_; }

 private:
  IntMat b_;
};

struct SignedEMatrices {
  IntMat e;        // E_{k,eps}
  IntMat e_check;  // \check{E}_{k,eps}
  int k = 0;       // 0-based mutation index
  Sign eps = Sign::plus;
};

/// Matrix mutation at direction k (0-based).
ExchangeMatrix mutate_exchange_matrix(const ExchangeMatrix& b, int k);

SignedEMatrices signed_mutation_matrices(const ExchangeMatrix& b, int k, Sign eps);

struct EIdentityReport {
  bool e_involution = false;        // E E = Id
  bool e_check_involution = false;  // \check{E} \check{E} = Id
  bool mutated_inverse = false;     // E^{(t)}_{k,eps}^{-1} = E^{(t')}_{k,-eps}
  bool transpose_inverse = false;   // \check{E}^T E = Id
  bool b_intertwine = false;        // B^{(t)} \check{E} = E B^{(t')}
  bool all() const {
    return e_involution && e_check_involution && mutated_inverse && transpose_inverse && b_intertwine;
  }
};

EIdentityReport verify_e_identities(const ExchangeMatrix& b, int k, Sign eps);

/// sigma.B with (sigma.B)_{sigma(i) sigma(j)} = B_{ij}, i.e. P B P^T.
ExchangeMatrix permute_matrix(const ExchangeMatrix& b, const Perm& sigma);

}  // namespace signstab
