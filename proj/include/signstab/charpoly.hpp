#pragma once

#include "signstab/matrix.hpp"

#include <complex>
#include <optional>

namespace signstab {

/// Exact characteristic polynomial of a square integer matrix via
/// fraction-free Faddeev-LeVerrier; coefficients leading-first, monic.
std::vector<Int> char_poly_exact(const IntMat& m);

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b);

/// Evaluates an integer polynomial exactly at an integer argument.
Int poly_eval(const std::vector<Int>& coeffs, const Int& x);

/// Whether P(1/v) v^deg = +-P(v); sign_out receives +1 / -1 on success.
bool palindromic_up_to_sign(const std::vector<Int>& coeffs, int& sign_out);

/// Square-free part over Q, renormalized to a primitive integer polynomial.
std::vector<Int> square_free_part(const std::vector<Int>& coeffs);

/// All complex roots of the square-free part (each distinct root once),
/// Aberth iteration in extended precision.
std::vector<std::complex<long double>> poly_roots(const std::vector<Int>& coeffs);

struct SpectralRadius {
  double rho = 0;
  double err = 0;  // certified bound on |computed - true| for the dominant root modulus
};

/// Maximal root modulus of an integer polynomial; err is derived from the
/// evaluated residual of the square-free part. Throws if certification at
/// 1e-12 relative accuracy fails.
SpectralRadius spectral_radius_poly(const std::vector<Int>& coeffs);
SpectralRadius spectral_radius(const IntMat& m);

/// Smallest root modulus (used for rho(E-check) = 1 / min |root of char E|).
double min_root_modulus(const std::vector<Int>& coeffs);

struct EigenPair {
  double lambda = 0;
  std::vector<double> v;  // infinity-normalized
  double residual = 0;    // |M v - lambda v|_inf / |v|_inf
  bool converged = false;
  bool exact = false;  // eigenvector obtained from an exact rational kernel
};

/// Dominant eigenpair: power iteration, and when that stalls an inverse
/// iteration with the char-poly root as shift; exact rational kernel when the
/// dominant eigenvalue is an integer root of the characteristic polynomial.
EigenPair dominant_eigenpair(const IntMat& m);

/// Exact kernel vector of (m - lambda I) for an integer eigenvalue; primitive
/// integer coordinates. Empty optional if the kernel is trivial.
std::optional<IntVec> exact_eigenvector(const IntMat& m, const Int& lambda);

}  // namespace signstab
