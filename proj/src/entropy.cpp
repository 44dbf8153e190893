#include "signstab/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace signstab {

EntropyEstimate entropy_bounds(const StabilityReport& report) {
  if ((report.verdict != Verdict::sign_stable_on_Omega_can &&
       report.verdict != Verdict::two_sided_sign_stable) ||
      !report.stable)
    throw std::invalid_argument("entropy_bounds: requires a stable verdict");
  const StableData& d = *report.stable;
  EntropyEstimate est;
  est.lower_x = std::log(d.lambda);
  est.lower_a = std::log(d.rho_check);
  est.upper = std::log(d.r_phi);
  bool collapse = d.palindromic;
  if (report.verdict == Verdict::two_sided_sign_stable && report.stable_minus)
    collapse = collapse && report.stable_minus->palindromic;
  if (collapse) est.point = est.upper;
  return est;
}

SlopeTrace degree_growth_slope(const MutationLoop& loop, int n_lo, int n_hi, GrowthSource source,
                               const SymBudget& budget) {
  if (n_lo < 0 || n_hi <= n_lo) throw std::invalid_argument("degree_growth_slope: bad range");
  SlopeTrace out;
  if (source == GrowthSource::ASymbolic) {
    // degs[t] = max reduced degree of the cluster after t traversals
    std::vector<double> degs{1.0};
    std::vector<LaurentExpr> vars = initial_cluster(loop.rank());
    ExchangeMatrix b = loop.b0;
    for (int m = 0; m < n_hi; ++m) {
      const Perm rel = loop.sigma.power(-m);
      for (int k : loop.word) {
        int kk = rel(k);
        vars = cluster_a_mutate(b, kk, vars, budget.max_ops);
        b = mutate_exchange_matrix(b, kk);
        for (const LaurentExpr& v : vars)
          if (budget.max_terms && v.num.nterms() > budget.max_terms)
            throw TermBudgetExceeded("degree_growth_slope: symbolic term budget exceeded");
      }
      std::int64_t deg = 0;
      for (const LaurentExpr& v : vars) deg = std::max(deg, degree_reduced(v));
      degs.push_back(static_cast<double>(std::max<std::int64_t>(deg, 1)));
    }
    for (int i = n_lo; i < n_hi; ++i)
      out.slopes.push_back(std::log(degs[static_cast<std::size_t>(i + 1)]) -
                           std::log(degs[static_cast<std::size_t>(i)]));
  } else {
    std::vector<CGFSnapshot> snaps = cgf_along_loop(loop, n_hi);
    auto norm = [&](int i) -> Int {
      const CGFSnapshot& s = snaps[static_cast<std::size_t>(i)];
      Int v;
      switch (source) {
        case GrowthSource::C: v = s.c.max_abs(); break;
        case GrowthSource::G: v = s.g.max_abs(); break;
        default: v = s.f.max_abs(); break;
      }
      return v == 0 ? Int(1) : v;
    };
    for (int i = n_lo; i < n_hi; ++i) out.slopes.push_back(log_big(norm(i + 1)) - log_big(norm(i)));
  }
  if (out.slopes.empty()) throw std::invalid_argument("degree_growth_slope: empty slope range");
  std::size_t tail = out.slopes.size() - out.slopes.size() / 2;
  double acc = 0;
  for (std::size_t i = out.slopes.size() - tail; i < out.slopes.size(); ++i) acc += out.slopes[i];
  out.tail_mean = acc / static_cast<double>(tail);
  return out;
}

LyapunovResult lyapunov_exponent(const IntMat& m, const RatVec& v, int n) {
  if (n < 2) throw std::invalid_argument("lyapunov_exponent: need at least two steps");
  bool zero = true;
  for (const Rat& x : v)
    if (x != 0) zero = false;
  if (zero) throw std::invalid_argument("lyapunov_exponent: zero vector");
  if (m.det() == 0) throw std::invalid_argument("lyapunov_exponent: singular matrix");
  // clear denominators; scaling does not affect growth rates
  Int lcm = 1;
  for (const Rat& x : v) lcm = boost::multiprecision::lcm(lcm, denominator(x));
  IntVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = numerator(v[i] * Rat(lcm));
  auto inf_norm = [](const IntVec& x) {
    Int best = 0;
    for (const Int& t : x) {
      Int a = t < 0 ? Int(-t) : t;
      if (a > best) best = a;
    }
    return best == 0 ? Int(1) : best;
  };
  std::vector<double> lognorms;
  lognorms.reserve(static_cast<std::size_t>(n) + 1);
  lognorms.push_back(log_big(inf_norm(w)));
  for (int i = 1; i <= n; ++i) {
    w = m * w;
    lognorms.push_back(log_big(inf_norm(w)));
  }
  LyapunovResult out;
  out.estimate_at_n = (lognorms.back() - lognorms.front()) / static_cast<double>(n);
  const int half = n / 2;
  double acc = 0;
  for (int i = n - half; i < n; ++i) acc += lognorms[static_cast<std::size_t>(i + 1)] - lognorms[static_cast<std::size_t>(i)];
  out.tail_slope = acc / static_cast<double>(half);
  return out;
}

}  // namespace signstab
