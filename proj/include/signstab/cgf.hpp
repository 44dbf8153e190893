#pragma once

#include "signstab/loop.hpp"
#include "signstab/mpoly.hpp"

namespace signstab {

/// State of the C/G/F recursions at a vertex reached from t0. c_neg tracks
/// the C-matrix of the opposite seed pattern via the identity
/// C^{-s} = C + B^{(t)} F, re-derived after every step.
struct CGFState {
  IntMat c, g, f, c_neg;
  ExchangeMatrix b;   // current B^{(t)}
  ExchangeMatrix b0;  // initial B^{(t_0)}
  SignVec trop_signs;
};

CGFState cgf_initial(const ExchangeMatrix& b0);

/// Tropical sign of row k of a C-matrix; throws on a sign-incoherent or zero
/// row (an internal invariant breach, not a recoverable condition).
Sign tropical_sign_of_row(const IntMat& c, int k);

/// One mutation step of all recursions at direction k. With
/// debug_parallel_cneg set, c_neg is additionally advanced by its own
/// recursion on -B and compared against the identity-derived value.
void cgf_step(CGFState& state, int k, bool debug_parallel_cneg = false);

struct CGFSnapshot {
  IntMat c, g, f, c_neg;
  IntMat g_neg;  // G^{-s} = G + F B^{(t_0)}
  SignVec traversal_signs;
};

/// Snapshots of the recursions at the traversal boundaries of phi^m for
/// m = 0..n, following the word expansion of expand_loop_power.
std::vector<CGFSnapshot> cgf_along_loop(const MutationLoop& loop, int n);

struct FPolySet {
  std::vector<MPoly> polys;  // N polynomials in y_1..y_N
};

/// F-polynomials at the end of the word, by the exchange recursion with
/// exact polynomial division at every step. max_ops > 0 bounds the work of
/// each polynomial multiplication/division (TermBudgetExceeded past it).
FPolySet f_polynomials_along_word(const ExchangeMatrix& b0, const std::vector<int>& word,
                                  std::size_t max_ops = 0);

/// Row i = componentwise max degrees of F_i.
IntMat max_degree_matrix(const FPolySet& fp);

struct CGFCheckReport {
  bool sign_coherent = false;
  bool tropical_duality = false;   // G = (C^T)^{-1} at every step
  bool c_neg_identity = false;     // C^{-s} = C + B F at every step
  bool g_neg_identity = false;     // G^{-s} = G + F B^{(t_0)} at the end
  bool f_neg_invariant = false;    // F-matrix of the -B run equals F
  bool f_matrix_matches = false;   // F-matrix equals max degrees of F-polynomials
  bool f_matrix_checked = false;   // false when the degree budget skipped the symbolic part
  bool unimodular = false;         // det C = +-1 and det G = +-1 at the end
  bool all() const {
    return sign_coherent && tropical_duality && c_neg_identity && g_neg_identity &&
           f_neg_invariant && f_matrix_matches && unimodular;
  }
};

/// Runs the word on B and on -B and checks every identity the recursions are
/// supposed to satisfy. The F-polynomial/max-degree comparison only runs when
/// the F-matrix entries (exact degree bounds, known beforehand) stay within
/// fpoly_degree_budget; adversarial instances reach degrees past 1e10 where
/// no engine can expand the polynomials.
CGFCheckReport verify_cgf_identities(const ExchangeMatrix& b0, const std::vector<int>& word,
                                     const Int& fpoly_degree_budget = Int(64));

}  // namespace signstab
