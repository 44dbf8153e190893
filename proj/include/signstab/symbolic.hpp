#pragma once

#include "signstab/cgf.hpp"

namespace signstab {

struct SymBudget {
  std::size_t max_terms = 200000;   // per-polynomial ceiling
  std::size_t max_ops = 40000000;   // per-multiplication/division work ceiling
};

/// The initial cluster (A_1, ..., A_N) as Laurent expressions in themselves.
std::vector<LaurentExpr> initial_cluster(std::size_t n);

/// Cluster exchange relation at k; entry k is recomputed by exact Laurent
/// arithmetic, everything else passes through. max_ops > 0 bounds the work of
/// each product and of the exchange division.
std::vector<LaurentExpr> cluster_a_mutate(const ExchangeMatrix& b, int k,
                                          const std::vector<LaurentExpr>& vars,
                                          std::size_t max_ops = 0);

struct AVarRun {
  std::vector<LaurentExpr> vars;
  std::vector<std::int64_t> degrees;  // reduced degree of each final variable
};

/// Iterates the exchange relation along the word. Every intermediate variable
/// must stay Laurent; a non-monomial denominator aborts hard since it signals
/// an implementation bug, not a property of the input.
AVarRun a_variables_along_word(const ExchangeMatrix& b0, const std::vector<int>& word,
                               const SymBudget& budget = {});

struct SeparationReport {
  bool match = false;
  int first_mismatch = -1;  // variable index of the first disagreement
};

/// Checks A_i^{(t)} = prod_j A_j^{g_ij} * F_i(p*X_1, ..., p*X_N) against the
/// directly mutated variables, exactly.
SeparationReport separation_check(const ExchangeMatrix& b0, const std::vector<int>& word,
                                  const SymBudget& budget = {});

/// max_i of the 1-norm of the i-th row of C^{(n)}; the exact degree proxy for
/// the X-transformation from below.
Int x_degree_lower_bound(const MutationLoop& loop, int n);

}  // namespace signstab
