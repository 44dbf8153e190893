#include "signstab/matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace signstab {

double log_big(const Int& x) {
  if (x <= 0) throw std::domain_error("log_big: nonpositive argument");
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(x)) + 1;
  if (bits <= 900) return std::log(x.convert_to<double>());
  const unsigned shift = bits - 64;
  Int top = x >> shift;
  return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

double to_double(const Rat& x) { return x.convert_to<double>(); }

std::string format_double15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return std::string(buf);
}

Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return g < 0 ? Int(-g) : g;
}

void make_primitive(IntVec& v) {
  Int g = content(v);
  if (g > 1)
    for (Int& x : v) x /= g;
}

IntMat::IntMat(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMat: ragged initializer");
    for (long long x : r) a_.emplace_back(x);
  }
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IntMat: dimension mismatch in product");
  IntMat out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) += x * o.at(k, j);
    }
  return out;
}

IntMat IntMat::operator+(const IntMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMat: dimension mismatch in sum");
  IntMat out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

IntMat IntMat::operator-(const IntMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMat: dimension mismatch in difference");
  IntMat out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
  return out;
}

IntMat IntMat::operator-() const {
  IntMat out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
  return out;
}

IntMat IntMat::transpose() const {
  IntMat out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

IntMat IntMat::pow(unsigned n) const {
  if (rows_ != cols_) throw std::invalid_argument("IntMat::pow: square matrix required");
  IntMat acc = IntMat::identity(rows_);
  IntMat base = *this;
  while (n) {
    if (n & 1u) acc = acc * base;
    base = base * base;
    n >>= 1u;
  }
  return acc;
}

IntVec IntMat::operator*(const IntVec& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("IntMat: dimension mismatch in matrix-vector product");
  IntVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

RatVec IntMat::operator*(const RatVec& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("IntMat: dimension mismatch in matrix-vector product");
  RatVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += Rat(at(i, j)) * v[j];
  return out;
}

IntVec IntMat::row(std::size_t i) const {
  IntVec out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
  return out;
}

IntVec IntMat::col(std::size_t j) const {
  IntVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
  return out;
}

bool IntMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntMat::is_zero() const {
  for (const Int& x : a_)
    if (x != 0) return false;
  return true;
}

bool IntMat::is_skew_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

IntMat IntMat::clamp_positive() const {
  IntMat out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = pos_part(a_[i]);
  return out;
}

IntMat IntMat::select_row(std::size_t k) const {
  IntMat out(rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.at(k, j) = at(k, j);
  return out;
}

Int IntMat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("IntMat::det: square matrix required");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMat m = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

std::size_t IntMat::rank() const {
  std::vector<IntVec> rows;
  rows.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) rows.push_back(row(i));
  return rank_of_vectors(rows, cols_);
}

IntMat IntMat::inverse_unimodular() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse_unimodular: square matrix required");
  Int d = det();
  if (d != 1 && d != -1) throw std::domain_error("inverse_unimodular: determinant is not +-1");
  const std::size_t n = rows_;
  // Gauss-Jordan over exact rationals, then read back the (necessarily
  // integral) entries.
  std::vector<RatVec> m(n, RatVec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(at(i, j));
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("inverse_unimodular: singular matrix");
    std::swap(m[p], m[c]);
    Rat piv = m[c][c];
    for (std::size_t j = 0; j < 2 * n; ++j) m[c][j] /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  IntMat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& x = m[i][n + j];
      if (denominator(x) != 1) throw std::logic_error("inverse_unimodular: non-integral inverse");
      out.at(i, j) = numerator(x);
    }
  return out;
}

Int IntMat::max_abs() const {
  Int best = 0;
  for (const Int& x : a_) {
    Int ax = x < 0 ? Int(-x) : x;
    if (ax > best) best = ax;
  }
  return best;
}

Int IntMat::max_row_one_norm() const {
  Int best = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += at(i, j) < 0 ? Int(-at(i, j)) : at(i, j);
    if (s > best) best = s;
  }
  return best;
}

std::size_t rank_of_vectors(const std::vector<IntVec>& vs, std::size_t dim) {
  std::vector<RatVec> m;
  m.reserve(vs.size());
  for (const IntVec& v : vs) {
    if (v.size() != dim) throw std::invalid_argument("rank_of_vectors: dimension mismatch");
    RatVec r(dim);
    for (std::size_t j = 0; j < dim; ++j) r[j] = Rat(v[j]);
    m.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < dim && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      Rat f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < dim; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

}  // namespace signstab
