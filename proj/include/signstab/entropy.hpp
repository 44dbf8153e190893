#pragma once

#include "signstab/stability.hpp"
#include "signstab/symbolic.hpp"

namespace signstab {

struct EntropyEstimate {
  double lower_a = 0;  // log rho(E_check)
  double lower_x = 0;  // log rho(E)
  double upper = 0;    // log R_phi
  std::optional<double> point;  // log lambda when the bounds collapse
};

/// Entropy bounds from the spectral data of a stable (or two-sided stable)
/// report; the point estimate is set exactly when the characteristic
/// polynomials of E and E-check agree up to sign.
EntropyEstimate entropy_bounds(const StabilityReport& report);

enum class GrowthSource { C, G, F, ASymbolic };

struct SlopeTrace {
  std::vector<double> slopes;  // one-step log ratios
  double tail_mean = 0;        // mean over the last half of the range
};

/// Empirical degree-growth slopes: exact big-integer max-norms of the C/G/F
/// snapshots (or reduced symbolic A-degrees), log taken once per step.
SlopeTrace degree_growth_slope(const MutationLoop& loop, int n_lo, int n_hi, GrowthSource source,
                               const SymBudget& budget = {});

struct LyapunovResult {
  double estimate_at_n = 0;  // (1/n) log |M^n v|_inf
  double tail_slope = 0;     // mean one-step log ratio over the last half
};

/// Exact big-integer orbit of v under m, with float logs at the end.
LyapunovResult lyapunov_exponent(const IntMat& m, const RatVec& v, int n);

}  // namespace signstab
