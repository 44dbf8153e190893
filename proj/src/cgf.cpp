#include "signstab/cgf.hpp"

#include <stdexcept>

namespace signstab {

CGFState cgf_initial(const ExchangeMatrix& b0) {
  CGFState s;
  const std::size_t n = b0.n();
  s.c = IntMat::identity(n);
  s.g = IntMat::identity(n);
  s.f = IntMat(n, n);
  s.c_neg = IntMat::identity(n);  // C + B F = Id at t_0
  s.b = b0;
  s.b0 = b0;
  return s;
}

Sign tropical_sign_of_row(const IntMat& c, int k) {
  bool nonneg = true, nonpos = true, all_zero = true;
  const std::size_t uk = static_cast<std::size_t>(k);
  for (std::size_t j = 0; j < c.cols(); ++j) {
    const Int& x = c.at(uk, j);
    if (x > 0) nonpos = false;
    if (x < 0) nonneg = false;
    if (x != 0) all_zero = false;
  }
  if (all_zero || (!nonneg && !nonpos))
    throw std::logic_error("tropical sign: c-vector is zero or sign-incoherent");
  return nonneg ? Sign::plus : Sign::minus;
}

void cgf_step(CGFState& state, int k, bool debug_parallel_cneg) {
  if (k < 0 || static_cast<std::size_t>(k) >= state.b.n())
    throw std::out_of_range("cgf_step: index out of range");
  const Sign eps = tropical_sign_of_row(state.c, k);
  const SignedEMatrices m = signed_mutation_matrices(state.b, k, eps);

  IntMat scaled = state.c_neg;  // [eps * C^{-s}]_+ restricted to row k
  if (eps == Sign::minus) scaled = -scaled;
  const IntMat correction = scaled.clamp_positive().select_row(static_cast<std::size_t>(k));

  IntMat parallel_c_neg;
  if (debug_parallel_cneg) {
    // Advance C^{-s} by its own recursion: tropical sign from its row k,
    // E-matrix built from -B.
    const Sign eps_neg = tropical_sign_of_row(state.c_neg, k);
    const ExchangeMatrix minus_b(-state.b.mat());
    const SignedEMatrices mneg = signed_mutation_matrices(minus_b, k, eps_neg);
    parallel_c_neg = mneg.e * state.c_neg;
  }

  state.c = m.e * state.c;
  state.g = m.e_check * state.g;
  state.f = m.e_check * state.f + correction;
  state.b = mutate_exchange_matrix(state.b, k);
  state.c_neg = state.c + state.b.mat() * state.f;
  state.trop_signs.push_back(eps);

  if (debug_parallel_cneg && parallel_c_neg != state.c_neg)
    throw std::logic_error("cgf_step: parallel and identity-derived C^{-s} disagree");
}

std::vector<CGFSnapshot> cgf_along_loop(const MutationLoop& loop, int n) {
  if (n < 0) throw std::invalid_argument("cgf_along_loop: negative power");
  if (validate_loop(loop)) throw std::invalid_argument("cgf_along_loop: loop does not close");
  CGFState s = cgf_initial(loop.b0);
  std::vector<CGFSnapshot> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  const IntMat b0 = loop.b0.mat();
  auto snapshot = [&](SignVec signs) {
    out.push_back(CGFSnapshot{s.c, s.g, s.f, s.c_neg, s.g + s.f * b0, std::move(signs)});
  };
  snapshot({});
  for (int m = 1; m <= n; ++m) {
    const Perm rel = loop.sigma.power(-(m - 1));
    SignVec signs;
    signs.reserve(loop.length());
    for (int k : loop.word) {
      cgf_step(s, rel(k));
      signs.push_back(s.trop_signs.back());
    }
    snapshot(std::move(signs));
  }
  return out;
}

FPolySet f_polynomials_along_word(const ExchangeMatrix& b0, const std::vector<int>& word,
                                  std::size_t max_ops) {
  const std::size_t n = b0.n();
  CGFState s = cgf_initial(b0);
  FPolySet fp;
  fp.polys.assign(n, MPoly::one(n));
  for (int k : word) {
    if (k < 0 || static_cast<std::size_t>(k) >= n)
      throw std::out_of_range("f_polynomials_along_word: index out of range");
    const std::size_t uk = static_cast<std::size_t>(k);
    ExpVec yplus(n, 0), yminus(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      const Int& c = s.c.at(uk, j);
      if (c > 1000000 || c < -1000000)
        throw TermBudgetExceeded("f_polynomials_along_word: exponents out of tractable range");
      yplus[j] = static_cast<std::int32_t>(pos_part(c).convert_to<long long>());
      yminus[j] = static_cast<std::int32_t>(pos_part(Int(-c)).convert_to<long long>());
    }
    MPoly first = MPoly::monomial(n, yplus, 1);
    MPoly second = MPoly::monomial(n, yminus, 1);
    for (std::size_t l = 0; l < n; ++l) {
      const Int& bkl = s.b.entry(uk, l);
      if (bkl > 0) first = mul_budgeted(first, fp.polys[l].pow(bkl.convert_to<unsigned>(), max_ops), max_ops);
      else if (bkl < 0)
        second = mul_budgeted(second, fp.polys[l].pow(Int(-bkl).convert_to<unsigned>(), max_ops), max_ops);
    }
    MPoly numerator = first + second;
    fp.polys[uk] = numerator.exact_div(fp.polys[uk], max_ops);
    cgf_step(s, k);
  }
  return fp;
}

IntMat max_degree_matrix(const FPolySet& fp) {
  const std::size_t n = fp.polys.size();
  IntMat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = fp.polys[i].max_degree_in(j);
  return out;
}

CGFCheckReport verify_cgf_identities(const ExchangeMatrix& b0, const std::vector<int>& word,
                                     const Int& fpoly_degree_budget) {
  CGFCheckReport r;
  r.sign_coherent = true;
  r.tropical_duality = true;
  r.c_neg_identity = true;
  CGFState s = cgf_initial(b0);
  CGFState sneg = cgf_initial(ExchangeMatrix(-b0.mat()));
  try {
    for (int k : word) {
      cgf_step(s, k, /*debug_parallel_cneg=*/true);
      cgf_step(sneg, k);
      if (s.g != s.c.check()) r.tropical_duality = false;
      if (s.c_neg != s.c + s.b.mat() * s.f) r.c_neg_identity = false;
    }
  } catch (const std::logic_error&) {
    r.sign_coherent = false;
    return r;
  }
  r.g_neg_identity = (sneg.g == s.g + s.f * b0.mat());
  r.f_neg_invariant = (sneg.f == s.f);
  // The -s run's C-matrix must also equal the tracked c_neg.
  if (sneg.c != s.c_neg) r.c_neg_identity = false;
  r.f_matrix_matches = true;
  if (s.f.max_abs() <= fpoly_degree_budget) {
    try {
      FPolySet fp = f_polynomials_along_word(b0, word, 20000000);
      r.f_matrix_matches = (max_degree_matrix(fp) == s.f);
      r.f_matrix_checked = true;
    } catch (const TermBudgetExceeded&) {
      // degree bound admitted it but the expansion is still too large
    }
  }
  Int dc = s.c.det(), dg = s.g.det();
  r.unimodular = (dc == 1 || dc == -1) && (dg == 1 || dg == -1);
  return r;
}

}  // namespace signstab
