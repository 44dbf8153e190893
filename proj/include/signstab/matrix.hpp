#pragma once

#include "signstab/numdefs.hpp"

#include <cstddef>
#include <initializer_list>

namespace signstab {

/// Dense matrix over arbitrary-precision integers. Sizes here are tiny
/// (ambient rank at most ~8), so everything is plain row-major storage.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMat(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const IntMat& o) const { return !(*this == o); }

  IntMat operator*(const IntMat& o) const;
  IntMat operator+(const IntMat& o) const;
  IntMat operator-(const IntMat& o) const;
  IntMat operator-() const;
  IntMat transpose() const;
  IntMat pow(unsigned n) const;

  IntVec operator*(const IntVec& v) const;
  RatVec operator*(const RatVec& v) const;

  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;

  bool is_identity() const;
  bool is_zero() const;
  bool is_skew_symmetric() const;

  /// Elementwise [.]_+.
  IntMat clamp_positive() const;
  /// All rows zeroed except row k (the paper's [.]^{k bullet} selector).
  IntMat select_row(std::size_t k) const;

  Int det() const;  // Bareiss fraction-free elimination
  std::size_t rank() const;

  /// Exact inverse for matrices with det = +-1; throws otherwise.
  IntMat inverse_unimodular() const;
  /// (M^T)^{-1}, the "check" of a unimodular matrix.
  IntMat check() const { return transpose().inverse_unimodular(); }

  Int max_abs() const;
  /// max_i sum_j |m_ij|
  Int max_row_one_norm() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

/// Rank of a set of integer vectors (exact).
std::size_t rank_of_vectors(const std::vector<IntVec>& vs, std::size_t dim);

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const IntVec& a, const RatVec& b);

}  // namespace signstab
