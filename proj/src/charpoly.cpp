#include "signstab/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace signstab {

std::vector<Int> char_poly_exact(const IntMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly_exact: square matrix required");
  const std::size_t n = m.rows();
  std::vector<Int> coeffs(n + 1);
  coeffs[0] = 1;
  IntMat mk = m;  // M_1 = A
  for (std::size_t k = 1; k <= n; ++k) {
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += mk.at(i, i);
    // trace is divisible by k at every Faddeev-LeVerrier step
    coeffs[k] = -tr / Int(k);
    if (k == n) break;
    IntMat shifted = mk;
    for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += coeffs[k];
    mk = m * shifted;
  }
  return coeffs;
}

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Int> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Int poly_eval(const std::vector<Int>& coeffs, const Int& x) {
  Int acc = 0;
  for (const Int& c : coeffs) acc = acc * x + c;
  return acc;
}

bool palindromic_up_to_sign(const std::vector<Int>& coeffs, int& sign_out) {
  const std::size_t n = coeffs.size();
  bool plus = true, minus = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs[i] != coeffs[n - 1 - i]) plus = false;
    if (coeffs[i] != -coeffs[n - 1 - i]) minus = false;
  }
  if (plus) {
    sign_out = 1;
    return true;
  }
  if (minus) {
    sign_out = -1;
    return true;
  }
  sign_out = 0;
  return false;
}

namespace {

using QPoly = std::vector<Rat>;  // leading-first

QPoly trim(QPoly p) {
  std::size_t lead = 0;
  while (lead < p.size() && p[lead] == 0) ++lead;
  return QPoly(p.begin() + static_cast<long>(lead), p.end());
}

QPoly qremainder(QPoly a, const QPoly& b) {
  a = trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a[0] / b[0];
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= f * b[i];
    a = trim(a);
  }
  return a;
}

QPoly qgcd(QPoly a, QPoly b) {
  a = trim(a);
  b = trim(b);
  while (!b.empty()) {
    QPoly r = qremainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lead = a[0];
    for (Rat& c : a) c /= lead;
  }
  return a;
}

QPoly qdiv_exact(const QPoly& a, const QPoly& b0) {
  QPoly r = trim(a);
  QPoly b = trim(b0);
  if (b.empty()) throw std::invalid_argument("qdiv_exact: division by zero polynomial");
  if (r.empty()) return {};
  if (r.size() < b.size()) throw std::logic_error("qdiv_exact: division not exact");
  QPoly q(r.size() - b.size() + 1);
  for (std::size_t qi = 0; qi < q.size(); ++qi) {
    Rat f = r[qi] / b[0];
    q[qi] = f;
    if (f != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[qi + j] -= f * b[j];
  }
  for (std::size_t i = q.size(); i < r.size(); ++i)
    if (r[i] != 0) throw std::logic_error("qdiv_exact: division not exact");
  return q;
}

std::vector<Int> integerize(const QPoly& p) {
  Int lcm = 1;
  for (const Rat& c : p) lcm = boost::multiprecision::lcm(lcm, denominator(c));
  std::vector<Int> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = numerator(p[i] * Rat(lcm));
  Int g = content(out);
  if (g > 1)
    for (Int& c : out) c /= g;
  if (!out.empty() && out[0] < 0)
    for (Int& c : out) c = -c;
  return out;
}

using CLD = std::complex<long double>;

long double cabs(const CLD& z) { return std::abs(z); }

CLD horner(const std::vector<CLD>& c, const CLD& z) {
  CLD acc = 0;
  for (const CLD& a : c) acc = acc * z + a;
  return acc;
}

}  // namespace

std::vector<Int> square_free_part(const std::vector<Int>& coeffs) {
  if (coeffs.size() <= 1) return coeffs;
  QPoly p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) p[i] = Rat(coeffs[i]);
  QPoly dp(coeffs.size() - 1);
  const std::size_t deg = coeffs.size() - 1;
  for (std::size_t i = 0; i < deg; ++i) dp[i] = p[i] * Rat(static_cast<long>(deg - i));
  QPoly g = qgcd(p, dp);
  if (g.size() <= 1) return coeffs;
  return integerize(qdiv_exact(p, g));
}

std::vector<std::complex<long double>> poly_roots(const std::vector<Int>& coeffs) {
  std::vector<Int> sf = square_free_part(coeffs);
  // strip trailing zero coefficients (roots at the origin), remembered below
  std::size_t zeros = 0;
  while (sf.size() > 1 && sf.back() == 0) {
    sf.pop_back();
    ++zeros;
  }
  const std::size_t deg = sf.size() - 1;
  std::vector<CLD> c(sf.size()), dc;
  for (std::size_t i = 0; i < sf.size(); ++i) c[i] = CLD(sf[i].convert_to<long double>(), 0.0L);
  for (std::size_t i = 0; i < deg; ++i) dc.push_back(c[i] * CLD(static_cast<long double>(deg - i), 0.0L));

  std::vector<CLD> z(deg);
  if (deg > 0) {
    long double bound = 0;
    for (std::size_t i = 1; i < c.size(); ++i) bound = std::max(bound, std::abs(c[i] / c[0]));
    long double radius = 1 + bound;
    for (std::size_t i = 0; i < deg; ++i) {
      long double ang = 2.0L * 3.14159265358979323846L * (static_cast<long double>(i) + 0.3L) /
                        static_cast<long double>(deg);
      z[i] = CLD(radius * std::cos(ang) * 0.7L, radius * std::sin(ang) * 0.7L + 0.1L);
    }
    for (int iter = 0; iter < 400; ++iter) {
      long double worst = 0;
      for (std::size_t i = 0; i < deg; ++i) {
        CLD p = horner(c, z[i]);
        CLD dp = horner(dc, z[i]);
        if (dp == CLD(0, 0)) {
          z[i] += CLD(1e-6L, 1e-6L);
          worst = 1;
          continue;
        }
        CLD w = p / dp;
        CLD s = 0;
        for (std::size_t j = 0; j < deg; ++j)
          if (j != i) s += CLD(1, 0) / (z[i] - z[j]);
        CLD corr = w / (CLD(1, 0) - w * s);
        z[i] -= corr;
        worst = std::max(worst, cabs(corr) / (1 + cabs(z[i])));
      }
      if (worst < 1e-18L) break;
    }
  }
  if (zeros > 0) z.push_back(CLD(0, 0));  // square-free part has at most one root at 0
  return z;
}

static SpectralRadius radius_from_roots(const std::vector<Int>& coeffs, bool want_max) {
  if (coeffs.empty() || coeffs[0] == 0)
    throw std::invalid_argument("spectral_radius_poly: zero leading coefficient");
  std::vector<Int> sf = square_free_part(coeffs);
  std::vector<std::complex<long double>> roots = poly_roots(coeffs);
  if (roots.empty()) throw std::invalid_argument("spectral_radius_poly: constant polynomial");
  std::vector<CLD> c(sf.size()), dc;
  const std::size_t deg = sf.size() - 1;
  for (std::size_t i = 0; i < sf.size(); ++i) c[i] = CLD(sf[i].convert_to<long double>(), 0.0L);
  for (std::size_t i = 0; i < deg; ++i) dc.push_back(c[i] * CLD(static_cast<long double>(deg - i), 0.0L));
  std::size_t best = 0;
  for (std::size_t i = 1; i < roots.size(); ++i) {
    if (want_max ? (std::abs(roots[i]) > std::abs(roots[best]))
                 : (std::abs(roots[i]) < std::abs(roots[best])))
      best = i;
  }
  CLD z = roots[best];
  long double resid = 0;
  CLD p = horner(c, z), dp = horner(dc, z);
  if (dp != CLD(0, 0)) resid = static_cast<long double>(deg) * std::abs(p / dp);
  else
    resid = 1;  // cannot certify; handled by caller
  SpectralRadius out;
  out.rho = static_cast<double>(std::abs(z));
  out.err = static_cast<double>(resid);
  return out;
}

SpectralRadius spectral_radius_poly(const std::vector<Int>& coeffs) {
  SpectralRadius r = radius_from_roots(coeffs, true);
  if (!(r.err <= 1e-12 * std::max(1.0, r.rho)))
    throw std::runtime_error("spectral_radius_poly: residual certification failed");
  return r;
}

SpectralRadius spectral_radius(const IntMat& m) { return spectral_radius_poly(char_poly_exact(m)); }

double min_root_modulus(const std::vector<Int>& coeffs) {
  SpectralRadius r = radius_from_roots(coeffs, false);
  return r.rho;
}

std::optional<IntVec> exact_eigenvector(const IntMat& m, const Int& lambda) {
  const std::size_t n = m.rows();
  std::vector<RatVec> a(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j)) - (i == j ? Rat(lambda) : Rat(0));
  // fraction-free-ish Gaussian elimination to find a kernel vector
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  std::vector<char> used(n, 0);
  for (std::size_t c = 0; c < n && row < n; ++c) {
    std::size_t p = row;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][c] == 0) continue;
      Rat f = a[i][c] / a[row][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col.push_back(c);
    used[c] = 1;
    ++row;
  }
  std::size_t free_col = n;
  for (std::size_t c = 0; c < n; ++c)
    if (!used[c]) {
      free_col = c;
      break;
    }
  if (free_col == n) return std::nullopt;
  RatVec v(n);
  v[free_col] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) {
    std::size_t c = pivot_col[r];
    v[c] = -a[r][free_col] / a[r][c];
  }
  Int lcm = 1;
  for (const Rat& x : v) lcm = boost::multiprecision::lcm(lcm, denominator(x));
  IntVec out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = numerator(v[i] * Rat(lcm));
  make_primitive(out);
  return out;
}

EigenPair dominant_eigenpair(const IntMat& m) {
  const std::size_t n = m.rows();
  EigenPair out;
  std::vector<Int> cp = char_poly_exact(m);
  SpectralRadius sr = spectral_radius_poly(cp);

  // Integer dominant eigenvalue: use the exact kernel.
  Int rounded = static_cast<long long>(std::llround(sr.rho));
  for (const Int& cand : {rounded, Int(-rounded)}) {
    if (std::abs(cand.convert_to<double>() - sr.rho) > 1e-9 &&
        std::abs(cand.convert_to<double>() + sr.rho) > 1e-9)
      continue;
    if (poly_eval(cp, cand) != 0) continue;
    auto v = exact_eigenvector(m, cand);
    if (!v) continue;
    double norm = 0;
    for (const Int& x : *v) norm = std::max(norm, std::abs(x.convert_to<double>()));
    out.lambda = cand.convert_to<double>();
    out.v.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.v[i] = (*v)[i].convert_to<double>() / norm;
    out.residual = 0;
    out.converged = true;
    out.exact = true;
    return out;
  }

  // Power iteration in long double.
  std::vector<long double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j).convert_to<long double>();
  auto matvec = [&](const std::vector<long double>& x) {
    std::vector<long double> y(n, 0.0L);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) y[i] += a[i * n + j] * x[j];
    return y;
  };
  auto inf_norm = [&](const std::vector<long double>& x) {
    long double s = 0;
    for (long double t : x) s = std::max(s, std::abs(t));
    return s;
  };
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> uni(0.25, 1.0);
  std::vector<long double> v(n);
  for (auto& x : v) x = uni(rng);
  long double lambda = sr.rho;
  bool ok = false;
  for (int iter = 0; iter < 2000; ++iter) {
    std::vector<long double> w = matvec(v);
    long double nw = inf_norm(w);
    if (nw == 0) break;
    for (auto& x : w) x /= nw;
    // signed Rayleigh-style estimate from the largest component
    std::size_t arg = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (std::abs(v[i]) > std::abs(v[arg])) arg = i;
    std::vector<long double> mv = matvec(v);
    lambda = mv[arg] / v[arg];
    long double resid = 0;
    for (std::size_t i = 0; i < n; ++i) resid = std::max(resid, std::abs(mv[i] - lambda * v[i]));
    if (resid <= 1e-11L * inf_norm(v)) {
      ok = true;
      break;
    }
    v = std::move(w);
  }
  if (!ok) {
    // Shifted inverse iteration with the certified dominant root.
    long double shift = sr.rho * (1.0L + 1e-12L) + 1e-13L;
    std::vector<long double> lu(a);
    for (std::size_t i = 0; i < n; ++i) lu[i * n + i] -= shift;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      for (std::size_t i = c + 1; i < n; ++i)
        if (std::abs(lu[perm[i] * n + c]) > std::abs(lu[perm[p] * n + c])) p = i;
      std::swap(perm[c], perm[p]);
      long double piv = lu[perm[c] * n + c];
      if (piv == 0) piv = 1e-30L;
      for (std::size_t i = c + 1; i < n; ++i) {
        long double f = lu[perm[i] * n + c] / piv;
        lu[perm[i] * n + c] = f;
        for (std::size_t j = c + 1; j < n; ++j) lu[perm[i] * n + j] -= f * lu[perm[c] * n + j];
      }
    }
    auto solve = [&](std::vector<long double> b) {
      std::vector<long double> y(n);
      for (std::size_t i = 0; i < n; ++i) {
        long double s = b[perm[i]];
        for (std::size_t j = 0; j < i; ++j) s -= lu[perm[i] * n + j] * y[j];
        y[i] = s;
      }
      std::vector<long double> x(n);
      for (std::size_t ii = n; ii-- > 0;) {
        long double s = y[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s -= lu[perm[ii] * n + j] * x[j];
        long double piv = lu[perm[ii] * n + ii];
        x[ii] = s / (piv == 0 ? 1e-30L : piv);
      }
      return x;
    };
    for (auto& x : v) x = uni(rng);
    for (int iter = 0; iter < 50; ++iter) {
      v = solve(v);
      long double nv = inf_norm(v);
      for (auto& x : v) x /= nv;
    }
    std::vector<long double> mv = matvec(v);
    std::size_t arg = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (std::abs(v[i]) > std::abs(v[arg])) arg = i;
    lambda = mv[arg] / v[arg];
    long double resid = 0;
    for (std::size_t i = 0; i < n; ++i) resid = std::max(resid, std::abs(mv[i] - lambda * v[i]));
    ok = resid <= 1e-9L * inf_norm(v);
  }
  out.lambda = static_cast<double>(lambda);
  out.v.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.v[i] = static_cast<double>(v[i]);
  std::vector<long double> mv = matvec(v);
  long double resid = 0;
  for (std::size_t i = 0; i < n; ++i) resid = std::max(resid, std::abs(mv[i] - lambda * v[i]));
  out.residual = static_cast<double>(resid / inf_norm(v));
  out.converged = ok;
  return out;
}

}  // namespace signstab
