#pragma once

#include "signstab/charpoly.hpp"
#include "signstab/cone.hpp"
#include "signstab/trop.hpp"

#include <optional>

namespace signstab {

enum class Verdict {
  sign_stable_on_Omega_can,
  two_sided_sign_stable,
  inconclusive,
  not_sign_stable,
};

std::string verdict_name(Verdict v);

/// Stable presentation matrix and the spectral data derived from it.
struct StableData {
  IntMat e;                     // E_phi
  IntMat e_check;               // (E_phi^T)^{-1}
  std::vector<Int> char_e;      // exact, monic, leading-first
  std::vector<Int> char_e_check;
  bool palindromic = false;     // char_e equals its own reversal up to sign
  int palindrome_sign = 0;
  double lambda = 0;            // rho(E_phi)
  double lambda_err = 0;
  double rho_check = 0;         // rho(E_check) = 1 / min |eigenvalue of E|
  double r_phi = 0;             // max of the two radii
};

struct PerronData {
  double lambda = 0;
  std::vector<double> v;  // sign-normalized dominant eigenvector
  double residual = 0;
  bool converged = false;
  bool in_sign_cone = false;
  bool in_stab_cone = false;  // depth-d approximation of the stable cone
  int stab_depth = 0;
};

struct OrbitStabilization {
  bool stabilized = false;
  bool certified = false;             // via exact projective periodicity
  bool certified_not_stable = false;  // periodic orbit with non-constant or non-strict sign
  SignVec sign;
  int n0 = -1;
  int period = 0;  // 0 when no exact periodicity was found
};

struct StabilityDiagnostics {
  std::string method;
  /// (power n, number of full-dimensional sign cones of gamma^n)
  std::vector<std::pair<int, std::size_t>> full_dim_cone_counts;
  bool strict_interior = false;  // the paper's stronger invariance condition
  int strict_interior_n0 = -1;
  std::vector<std::string> notes;
};

struct StabilityReport {
  Verdict verdict = Verdict::inconclusive;
  SignVec stable_sign;        // per-traversal stable sign (plus side for two-sided)
  SignVec stable_sign_minus;  // only for two-sided verdicts
  int n0_plus = -1;
  int n0_minus = -1;
  std::optional<StableData> stable;        // data of E^{stable_sign}
  std::optional<StableData> stable_minus;  // two-sided only
  std::optional<PerronData> perron;
  StabilityDiagnostics diag;

  int exit_code() const;
};

/// Per-traversal signs along the orbit of w, with exact projective
/// periodicity detection (1-norm canonical rescaling).
OrbitStabilization orbit_sign_stabilization(const MutationLoop& loop, const TropPoint& w, int cap);

/// The inductive method: enumerate full-dimensional sign cones of gamma^n by
/// a pruned prefix tree, look for one mapped strictly into itself, then chase
/// the basepoint orbits into it.
StabilityReport inductive_check(const MutationLoop& loop, int n_max, int orbit_cap);

/// The invariant-cone method with a caller-supplied candidate.
StabilityReport heuristic_check(const MutationLoop& loop, const Cone& cand, int orbit_cap);

/// Separate stabilization on the positive and negative cones with opposite
/// stable signs and equal spectral radii.
StabilityReport two_sided_check(const MutationLoop& loop, int orbit_cap);

StableData stable_data(const MutationLoop& loop, const SignVec& stable_sign);

/// Dominant eigenpair of the stable matrix, checked against the stable sign
/// cone and a depth-d approximation of the stable cone (tolerance 1e-9).
PerronData perron_check(const MutationLoop& loop, const StabilityReport& report, int stab_depth = 8);

/// inductive, then two-sided, then (if provided) heuristic with a user cone.
StabilityReport auto_check(const MutationLoop& loop, int n_max, int orbit_cap,
                           const std::optional<Cone>& user_cone);

}  // namespace signstab
