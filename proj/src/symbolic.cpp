#include "signstab/symbolic.hpp"

#include <stdexcept>

namespace signstab {

std::vector<LaurentExpr> initial_cluster(std::size_t n) {
  std::vector<LaurentExpr> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(LaurentExpr::variable(n, i));
  return out;
}

std::vector<LaurentExpr> cluster_a_mutate(const ExchangeMatrix& b, int k,
                                          const std::vector<LaurentExpr>& vars,
                                          std::size_t max_ops) {
  const std::size_t n = b.n();
  if (vars.size() != n) throw std::invalid_argument("cluster_a_mutate: wrong cluster size");
  if (k < 0 || static_cast<std::size_t>(k) >= n) throw std::out_of_range("cluster_a_mutate: index");
  const std::size_t uk = static_cast<std::size_t>(k);
  LaurentExpr m1 = LaurentExpr::one(n), m2 = LaurentExpr::one(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Int& bkj = b.entry(uk, j);
    if (bkj > 0) {
      for (Int e = 0; e < bkj; ++e) m1 = mul_budgeted(m1, vars[j], max_ops);
    } else if (bkj < 0) {
      for (Int e = 0; e < -bkj; ++e) m2 = mul_budgeted(m2, vars[j], max_ops);
    }
  }
  std::vector<LaurentExpr> out = vars;
  out[uk] = laurent_div(m1 + m2, vars[uk], max_ops);
  return out;
}

AVarRun a_variables_along_word(const ExchangeMatrix& b0, const std::vector<int>& word,
                               const SymBudget& budget) {
  AVarRun run;
  run.vars = initial_cluster(b0.n());
  ExchangeMatrix b = b0;
  for (int k : word) {
    run.vars = cluster_a_mutate(b, k, run.vars, budget.max_ops);
    b = mutate_exchange_matrix(b, k);
    for (const LaurentExpr& v : run.vars)
      if (budget.max_terms && v.num.nterms() > budget.max_terms)
        throw TermBudgetExceeded("a_variables_along_word: term budget exceeded");
  }
  run.degrees.reserve(b0.n());
  for (const LaurentExpr& v : run.vars) run.degrees.push_back(degree_reduced(v));
  return run;
}

SeparationReport separation_check(const ExchangeMatrix& b0, const std::vector<int>& word,
                                  const SymBudget& budget) {
  const std::size_t n = b0.n();
  AVarRun direct = a_variables_along_word(b0, word, budget);

  CGFState s = cgf_initial(b0);
  for (int k : word) cgf_step(s, k);
  FPolySet fp = f_polynomials_along_word(b0, word);

  // p*X_k = prod_j A_j^{b0_kj}, a Laurent monomial in the initial cluster.
  std::vector<LaurentExpr> px;
  px.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Int> exps(n);
    for (std::size_t j = 0; j < n; ++j) exps[j] = b0.entry(k, j);
    px.push_back(LaurentExpr::monomial(n, exps));
  }

  SeparationReport rep;
  rep.match = true;
  for (std::size_t i = 0; i < n; ++i) {
    // Evaluate F_i at the ensemble images term by term.
    LaurentExpr value = LaurentExpr::from_poly(MPoly(n));
    for (const auto& [e, c] : fp.polys[i].terms()) {
      LaurentExpr term = LaurentExpr::from_poly(MPoly::constant(n, c));
      for (std::size_t k = 0; k < n; ++k)
        for (std::int32_t r = 0; r < e[k]; ++r) term = term * px[k];
      value = value + term;
    }
    std::vector<Int> gexp(n);
    for (std::size_t j = 0; j < n; ++j) gexp[j] = s.g.at(i, j);
    value = value * LaurentExpr::monomial(n, gexp);
    if (!(value == direct.vars[i])) {
      rep.match = false;
      rep.first_mismatch = static_cast<int>(i);
      break;
    }
  }
  return rep;
}

Int x_degree_lower_bound(const MutationLoop& loop, int n) {
  if (n == 0) return 1;
  std::vector<CGFSnapshot> snaps = cgf_along_loop(loop, n);
  return snaps.back().c.max_row_one_norm();
}

}  // namespace signstab
