#include "oracles.hpp"

#include "signstab/charpoly.hpp"

#include <doctest.h>

#include <cmath>

using namespace signstab;
using namespace oracles;

namespace {

std::vector<Int> coeffs(std::initializer_list<long long> xs) {
  std::vector<Int> out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("char_poly_exact: frozen values") {
  CHECK(char_poly_exact(IntMat::identity(3)) == coeffs({1, -3, 3, -1}));
  // Markov stable matrix: (nu - 1)(nu^2 - 18 nu + 1)
  IntMat e = mat({{9, -4, 4}, {-12, 9, -4}, {4, -4, 1}});
  CHECK(char_poly_exact(e) == coeffs({1, -19, 19, -1}));
  // the matrix printed in the Markov example (= C^(1)) is unipotent
  IntMat c1 = mat({{9, 6, 4}, {-12, -7, -4}, {4, 2, 1}});
  CHECK(char_poly_exact(c1) == coeffs({1, -3, 3, -1}));
  // the two-sided 6x6 example: (nu^2 + nu + 1)(nu^4 - nu^3 - 2nu^2 - nu + 1)
  CHECK(poly_mul(coeffs({1, 1, 1}), coeffs({1, -1, -2, -1, 1})) ==
        coeffs({1, 0, -2, -4, -2, 0, 1}));
  CHECK(poly_mul(coeffs({1, -1, 1}), coeffs({1, -1, -2, -1, 1})) ==
        coeffs({1, -2, 0, 0, 0, -2, 1}));
}

TEST_CASE("char_poly matches det and trace on random unimodular matrices") {
  Rng rng(601);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(2, 5));
    IntMat m = rng.unimodular(n, 12);
    std::vector<Int> p = char_poly_exact(m);
    REQUIRE(p.size() == n + 1);
    CHECK(p[0] == 1);
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += m.at(i, i);
    CHECK(p[1] == -tr);
    Int sign = (n % 2 == 0) ? 1 : -1;
    CHECK(p[n] == sign * m.det());
    // Cayley-Hamilton
    IntMat acc(n, n);
    for (const Int& c : p) {
      IntMat d(n, n);
      for (std::size_t i = 0; i < n; ++i) d.at(i, i) = c;
      acc = acc * m + d;
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("palindromic detection") {
  int s = 0;
  CHECK(palindromic_up_to_sign(coeffs({1, -19, 19, -1}), s));
  CHECK(s == -1);
  CHECK(palindromic_up_to_sign(coeffs({1, -2, 1}), s));
  CHECK(s == 1);
  CHECK(!palindromic_up_to_sign(coeffs({1, -3, 3, -1, 7}), s));
}

TEST_CASE("square-free part") {
  // (nu-1)^2 -> (nu-1)
  CHECK(square_free_part(coeffs({1, -2, 1})) == coeffs({1, -1}));
  CHECK(square_free_part(coeffs({1, -19, 19, -1})) == coeffs({1, -19, 19, -1}));
}

TEST_CASE("spectral radius: certified values") {
  SpectralRadius r = spectral_radius_poly(coeffs({1, -18, 1}));
  CHECK(std::abs(r.rho - 17.944271909999159) < 1e-12);
  CHECK(r.err < 1e-12);

  SpectralRadius quartic = spectral_radius_poly(coeffs({1, -1, -2, -1, 1}));
  CHECK(std::abs(quartic.rho - 2.0810189966245) < 1e-10);

  SpectralRadius one = spectral_radius(IntMat::identity(4));
  CHECK(one.rho == doctest::Approx(1.0).epsilon(1e-14));

  // double root at 1: square-free reduction keeps certification exact
  SpectralRadius dbl = spectral_radius_poly(coeffs({1, -2, 1}));
  CHECK(std::abs(dbl.rho - 1.0) < 1e-14);

  CHECK(std::abs(min_root_modulus(coeffs({1, -18, 1})) - (9 - 4 * std::sqrt(5.0))) < 1e-12);
}

TEST_CASE("dominant eigenpair") {
  // integer dominant eigenvalue: exact kernel path
  IntMat diag = mat({{2, 0}, {0, 1}});
  EigenPair p = dominant_eigenpair(diag);
  CHECK(p.exact);
  CHECK(p.lambda == doctest::Approx(2.0));
  CHECK(std::abs(std::abs(p.v[0]) - 1.0) < 1e-12);
  CHECK(std::abs(p.v[1]) < 1e-12);

  // Kronecker l=2 matrix has a Jordan block at 1; the exact kernel handles it
  EigenPair j = dominant_eigenpair(mat({{3, 2}, {-2, -1}}));
  CHECK(j.exact);
  CHECK(j.lambda == doctest::Approx(1.0));
  CHECK(std::abs(j.v[0] + j.v[1]) < 1e-12);  // eigenvector direction (1,-1)

  // irrational dominant eigenvalue: iterative path with certified residual
  IntMat e = mat({{9, -4, 4}, {-12, 9, -4}, {4, -4, 1}});
  EigenPair m = dominant_eigenpair(e);
  CHECK(m.converged);
  CHECK(m.residual <= 1e-9);
  CHECK(std::abs(m.lambda - (9 + 4 * std::sqrt(5.0))) < 1e-9);
  // the paper's fixed direction (1, -(1+sqrt5)/2, (-1+sqrt5)/2)
  double scale = m.v[0];
  CHECK(std::abs(m.v[1] / scale + (1 + std::sqrt(5.0)) / 2) < 1e-7);
  CHECK(std::abs(m.v[2] / scale - (-1 + std::sqrt(5.0)) / 2) < 1e-7);
}

TEST_CASE("exact_eigenvector") {
  IntMat e2 = mat({{3, 2}, {-2, -1}});
  auto v = exact_eigenvector(e2, 1);
  REQUIRE(v.has_value());
  CHECK(((*v) == iv({1, -1}) || (*v) == iv({-1, 1})));
  CHECK(!exact_eigenvector(e2, 5).has_value());
}
