#pragma once

#include "signstab/stability.hpp"

namespace signstab {

/// Data vector of a period-one quiver: first row of B above the diagonal.
struct FMVector {
  IntVec a;  // (a_1, ..., a_{N-1})

  std::size_t rank() const { return a.size() + 1; }
  bool palindromic() const;
};

/// B from the palindromic vector (b_{1,j+1} = a_j plus the diagonal
/// recursion), word (1), sigma: i -> i-1 mod N. Closure is re-validated and a
/// violation aborts.
MutationLoop fm_build(const FMVector& a);

struct FMConeReport {
  Cone cone;
  Sign side = Sign::plus;   // sign of x_1 on the cone
  bool invariant = false;   // phi(cone) inside cone, certified on extreme rays
  bool strict_inside = false;  // phi^N maps every extreme ray into the interior
  int strict_power = 0;        // the power at which that happens (N when it does)
};

/// The invariant cone of the loop on the side where x_1 has sign `side`:
/// {side*x_1 >= 0, side*(x_1 + x_i) >= 0 for i = 2..N}. (The slab cone with
/// coefficients [a_{i-1}]_+ fails invariance on a boundary ray; the unit-
/// coefficient cone is invariant exactly when the companion entries
/// [-side*a_i]_+ have first entry >= 2.)
FMConeReport fm_invariant_cone(const FMVector& a, Sign side);

/// Closed-form check: when some eps has eps*a_1 >= 2 and eps*a_i >= 0 for all
/// i, the loop is sign-stable with stable sign -eps; lambda is the largest
/// root of nu^N - sum_i (eps a_i) nu^{N-i} + 1, cross-checked against the
/// spectral radius of the stable presentation matrix. Otherwise falls back to
/// the generic stability machinery.
StabilityReport fm_stability(const FMVector& a, int orbit_cap = 64, int fallback_n_max = 4);

}  // namespace signstab
