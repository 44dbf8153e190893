#pragma once

#include "signstab/numdefs.hpp"

#include <cstdint>
#include <map>

namespace signstab {

using ExpVec = std::vector<std::int32_t>;

struct TermBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionNotExact : std::logic_error {
  using std::logic_error::logic_error;
};

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients; exponent vectors are kept in lex order by the map.
class MPoly {
 public:
  MPoly() : nvars_(0) {}
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, Int c);
  static MPoly one(std::size_t nvars) { return constant(nvars, 1); }
  static MPoly variable(std::size_t nvars, std::size_t i);
  static MPoly monomial(std::size_t nvars, ExpVec e, Int c);

  std::size_t nvars() const { return nvars_; }
  std::size_t nterms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::map<ExpVec, Int>& terms() const { return terms_; }

  void add_term(const ExpVec& e, const Int& c);

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  /// Power by squaring; when max_ops > 0, any multiplication whose naive cost
  /// nterms*nterms exceeds the budget throws TermBudgetExceeded.
  MPoly pow(unsigned n, std::size_t max_ops = 0) const;
  bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  /// Exact division; throws DivisionNotExact when the quotient is not a
  /// polynomial with integer coefficients, TermBudgetExceeded when max_ops > 0
  /// and the reduction grows past it.
  MPoly exact_div(const MPoly& divisor, std::size_t max_ops = 0) const;

  std::int64_t total_degree() const;       // 0 for the zero polynomial
  std::int32_t max_degree_in(std::size_t var) const;
  ExpVec min_exponents() const;            // componentwise, zero vector if empty

  bool divisible_by_variable(std::size_t var) const;

  /// Multiply by a monomial with (possibly negative) exponent shift; caller
  /// guarantees resulting exponents stay nonnegative.
  MPoly shifted(const ExpVec& shift) const;

  std::string to_string(const std::vector<std::string>& var_names) const;

 private:
  std::size_t nvars_;
  std::map<ExpVec, Int> terms_;
};

/// Laurent expression num / prod_i x_i^{den_i}: numerator polynomial and a
/// monomial denominator with nonnegative exponents, kept reduced (no variable
/// divides both sides).
struct LaurentExpr {
  MPoly num;
  ExpVec den;

  static LaurentExpr from_poly(MPoly p);
  static LaurentExpr variable(std::size_t nvars, std::size_t i);
  static LaurentExpr one(std::size_t nvars);
  /// x^e with arbitrary integer exponents.
  static LaurentExpr monomial(std::size_t nvars, const std::vector<Int>& exps);

  std::size_t nvars() const { return num.nvars(); }
  bool operator==(const LaurentExpr& o) const { return num == o.num && den == o.den; }

  void reduce();
  std::string to_string(const std::vector<std::string>& var_names) const;
};

/// Multiplication with a cost ceiling: throws TermBudgetExceeded when the
/// naive schoolbook cost nterms(a)*nterms(b) exceeds max_ops (0 = unlimited).
MPoly mul_budgeted(const MPoly& a, const MPoly& b, std::size_t max_ops);

LaurentExpr operator+(const LaurentExpr& a, const LaurentExpr& b);
LaurentExpr operator*(const LaurentExpr& a, const LaurentExpr& b);
LaurentExpr mul_budgeted(const LaurentExpr& a, const LaurentExpr& b, std::size_t max_ops);
/// Exact Laurent division (used by the cluster exchange relation); throws
/// DivisionNotExact when the result is not Laurent.
LaurentExpr laurent_div(const LaurentExpr& a, const LaurentExpr& b, std::size_t max_ops = 0);

/// max(total degree of numerator, total degree of denominator monomial).
std::int64_t degree_reduced(const LaurentExpr& e);

}  // namespace signstab
