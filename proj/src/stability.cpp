#include "signstab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <map>
#include <stdexcept>

namespace signstab {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::sign_stable_on_Omega_can: return "sign_stable_on_Omega_can";
    case Verdict::two_sided_sign_stable: return "two_sided_sign_stable";
    case Verdict::not_sign_stable: return "not_sign_stable";
    default: return "inconclusive";
  }
}

int StabilityReport::exit_code() const {
  switch (verdict) {
    case Verdict::sign_stable_on_Omega_can:
    case Verdict::two_sided_sign_stable: return 0;
    case Verdict::not_sign_stable: return 3;
    default: return 2;
  }
}

namespace {

RatVec canonical_projective(const TropPoint& p) {
  Rat norm = 0;
  for (const Rat& x : p) norm += x < 0 ? Rat(-x) : x;
  RatVec out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] / norm;
  return out;
}

bool all_zero(const TropPoint& p) {
  for (const Rat& x : p)
    if (x != 0) return false;
  return true;
}

int thread_budget() {
  const char* env = std::getenv("SIGNSTAB_THREADS");
  if (!env) return 1;
  int v = std::atoi(env);
  return v >= 1 ? v : 1;
}

}  // namespace

OrbitStabilization orbit_sign_stabilization(const MutationLoop& loop, const TropPoint& w, int cap) {
  if (all_zero(w)) throw std::invalid_argument("orbit_sign_stabilization: zero point rejected");
  if (cap < 1) throw std::invalid_argument("orbit_sign_stabilization: positive cap required");
  OrbitStabilization out;
  std::map<RatVec, int> seen;
  seen.emplace(canonical_projective(w), 0);
  TropPoint p = w;
  std::vector<SignVec> signs;
  signs.reserve(static_cast<std::size_t>(cap));
  for (int m = 1; m <= cap; ++m) {
    auto [next, s] = loop_traverse(loop, p);
    p = std::move(next);
    signs.push_back(std::move(s));
    auto [it, inserted] = seen.emplace(canonical_projective(p), m);
    if (!inserted) {
      const int j = it->second;
      out.period = m - j;
      bool constant_strict = is_strict(signs[static_cast<std::size_t>(j)]);
      for (int i = j; i < m && constant_strict; ++i)
        if (signs[static_cast<std::size_t>(i)] != signs[static_cast<std::size_t>(j)])
          constant_strict = false;
      if (constant_strict) {
        out.stabilized = true;
        out.certified = true;
        out.sign = signs[static_cast<std::size_t>(j)];
        out.n0 = j;
      } else {
        out.certified_not_stable = true;
      }
      return out;
    }
  }
  const SignVec& tail = signs.back();
  if (!is_strict(tail)) return out;
  int n0 = 0;
  for (int i = static_cast<int>(signs.size()) - 1; i >= 0; --i) {
    if (signs[static_cast<std::size_t>(i)] != tail) {
      n0 = i + 1;
      break;
    }
  }
  if (n0 >= cap) return out;  // never settled within the budget
  out.stabilized = true;
  out.sign = tail;
  out.n0 = n0;
  return out;
}

StableData stable_data(const MutationLoop& loop, const SignVec& stable_sign) {
  StableData d;
  d.e = path_presentation_matrix(loop, stable_sign);
  d.e_check = d.e.check();
  d.char_e = char_poly_exact(d.e);
  d.char_e_check = char_poly_exact(d.e_check);
  d.palindromic = palindromic_up_to_sign(d.char_e, d.palindrome_sign);
  SpectralRadius sr = spectral_radius_poly(d.char_e);
  d.lambda = sr.rho;
  d.lambda_err = sr.err;
  d.rho_check = 1.0 / min_root_modulus(d.char_e);
  d.r_phi = std::max(d.lambda, d.rho_check);
  return d;
}

namespace {

struct ConeCandidate {
  SignVec eps;
  Cone cone;
};

struct EnumerationResult {
  std::vector<ConeCandidate> full;  // all full-dimensional leaf cones
};

// Depth-first refinement of sign prefixes; a prefix dies as soon as its cone
// stops being full-dimensional (empty interior).
void enumerate_rec(const MutationLoop& ln, std::size_t depth, SignVec& eps, const Cone& cone,
                   const IntMat& prefix, const ExchangeMatrix& b, EnumerationResult& out) {
  if (depth == ln.word.size()) {
    out.full.push_back(ConeCandidate{eps, cone});
    return;
  }
  const int k = ln.word[depth];
  IntVec c = prefix.row(static_cast<std::size_t>(k));
  const SignedEMatrices mplus = signed_mutation_matrices(b, k, Sign::plus);
  const SignedEMatrices mminus = signed_mutation_matrices(b, k, Sign::minus);
  const ExchangeMatrix bnext = mutate_exchange_matrix(b, k);
  for (Sign s : {Sign::plus, Sign::minus}) {
    IntVec normal = c;
    if (s == Sign::minus)
      for (Int& x : normal) x = -x;
    Cone child = cone.intersect_halfspace(std::move(normal));
    if (!child.full_dimensional()) continue;
    eps.push_back(s);
    enumerate_rec(ln, depth + 1, eps, child, (s == Sign::plus ? mplus.e : mminus.e) * prefix, bnext,
                  out);
    eps.pop_back();
  }
}

EnumerationResult enumerate_full_dim_cones(const MutationLoop& ln) {
  EnumerationResult out;
  const std::size_t n = ln.rank();
  Cone whole = Cone::full_space(n);
  IntMat prefix = IntMat::identity(n);
  if (thread_budget() > 1 && !ln.word.empty()) {
    // the two top-level branches are independent; evaluate them concurrently
    // and merge in the fixed (+ then -) order
    auto branch = [&](Sign s) {
      EnumerationResult res;
      const int k = ln.word[0];
      IntVec normal(n);
      normal[static_cast<std::size_t>(k)] = (s == Sign::plus) ? 1 : -1;
      Cone child = whole.intersect_halfspace(std::move(normal));
      if (!child.full_dimensional()) return res;
      SignVec eps{s};
      const SignedEMatrices m = signed_mutation_matrices(ln.b0, k, s);
      enumerate_rec(ln, 1, eps, child, m.e, mutate_exchange_matrix(ln.b0, k), res);
      return res;
    };
    auto fplus = std::async(std::launch::async, branch, Sign::plus);
    EnumerationResult rminus = branch(Sign::minus);
    EnumerationResult rplus = fplus.get();
    out.full = std::move(rplus.full);
    out.full.insert(out.full.end(), rminus.full.begin(), rminus.full.end());
    return out;
  }
  SignVec eps;
  enumerate_rec(ln, 0, eps, whole, prefix, ln.b0, out);
  return out;
}

bool block_periodic(const SignVec& eps, std::size_t h, SignVec& block_out) {
  if (h == 0 || eps.size() % h != 0) return false;
  block_out.assign(eps.begin(), eps.begin() + static_cast<long>(h));
  for (std::size_t i = h; i < eps.size(); ++i)
    if (eps[i] != block_out[i % h]) return false;
  return true;
}

/// First traversal index at which the orbit point lies strictly inside the
/// cone; -1 if it never does within the cap.
int orbit_entry_strict(const MutationLoop& loop, const TropPoint& start, const Cone& cone, int cap) {
  TropPoint p = start;
  if (cone.contains_point(p, true)) return 0;
  for (int m = 1; m <= cap; ++m) {
    p = loop_traverse(loop, p).first;
    if (cone.contains_point(p, true)) return m;
  }
  return -1;
}

void require_valid(const MutationLoop& loop, const char* who) {
  if (auto mismatch = validate_loop(loop))
    throw std::invalid_argument(std::string(who) + ": loop does not close");
}

}  // namespace

StabilityReport inductive_check(const MutationLoop& loop, int n_max, int orbit_cap) {
  require_valid(loop, "inductive_check");
  StabilityReport rep;
  rep.diag.method = "inductive";
  const auto [lplus, lminus] = basepoints(loop.rank());
  for (int n = 1; n <= n_max; ++n) {
    MutationLoop ln = expand_loop_power(loop, n);
    EnumerationResult cones = enumerate_full_dim_cones(ln);
    rep.diag.full_dim_cone_counts.emplace_back(n, cones.full.size());
    IntMat psigma = ln.sigma.matrix();
    for (const ConeCandidate& cand : cones.full) {
      IntMat e_full = path_presentation_matrix(ln, cand.eps);
      if (!maps_into(e_full, cand.cone, cand.cone, /*strict=*/true)) continue;
      SignVec block;
      if (!block_periodic(cand.eps, loop.length(), block)) {
        rep.diag.notes.push_back("self-mapped cone with non-periodic sign skipped: " +
                                 sign_string(cand.eps));
        continue;
      }
      int jp = orbit_entry_strict(loop, lplus, cand.cone, orbit_cap);
      int jm = orbit_entry_strict(loop, lminus, cand.cone, orbit_cap);
      if (jp < 0 || jm < 0) {
        rep.diag.notes.push_back("cone " + sign_string(cand.eps) +
                                 " is strictly invariant but a basepoint orbit did not enter");
        continue;
      }
      rep.verdict = Verdict::sign_stable_on_Omega_can;
      rep.stable_sign = block;
      rep.n0_plus = jp;
      rep.n0_minus = jm;
      rep.stable = stable_data(loop, block);
      return rep;
    }
  }
  rep.diag.notes.push_back("no strictly self-mapped full-dimensional sign cone up to n_max");
  return rep;
}

StabilityReport heuristic_check(const MutationLoop& loop, const Cone& cand, int orbit_cap) {
  require_valid(loop, "heuristic_check");
  if (cand.ambient_dim() != loop.rank())
    throw std::invalid_argument("heuristic_check: cone dimension mismatch");
  if (!cand.full_dimensional())
    throw std::invalid_argument("heuristic_check: candidate cone is not full-dimensional");
  StabilityReport rep;
  rep.diag.method = "heuristic";

  IntVec ip = cand.interior_point();
  RatVec w(ip.size());
  for (std::size_t i = 0; i < ip.size(); ++i) w[i] = Rat(ip[i]);
  SignVec eps0 = path_sign(loop, w);
  if (!is_strict(eps0)) {
    rep.diag.notes.push_back("interior point has non-strict sign; no candidate sign");
    return rep;
  }

  // (i) cand inside the sign cone of eps0, certified on generators.
  bool contained = true;
  const std::vector<IntVec> normals = sign_cone_normals(loop, eps0);
  for (const IntVec& a : normals) {
    for (const IntVec& r : cand.rays())
      if (dot(a, r) < 0) contained = false;
    for (const IntVec& l : cand.lineality())
      if (dot(a, l) != 0) contained = false;
  }

  // (ii) invariance under the candidate presentation matrix.
  IntMat e = path_presentation_matrix(loop, eps0);
  bool invariant = maps_into(e, cand, cand, /*strict=*/false);

  // (iii) basepoint orbits enter cand and keep the sign eps0 afterwards.
  const auto [lplus, lminus] = basepoints(loop.rank());
  auto entry = [&](const TropPoint& start) {
    TropOrbit orbit = apply_loop_trop(loop, start, orbit_cap);
    for (int j = 0; j <= orbit_cap; ++j) {
      if (!cand.contains_point(orbit.points[static_cast<std::size_t>(j)], false)) continue;
      bool tail_ok = true;
      for (int m = j; m < orbit_cap && tail_ok; ++m)
        if (orbit.signs[static_cast<std::size_t>(m)] != eps0) tail_ok = false;
      if (tail_ok) return j;
    }
    return -1;
  };
  int jp = entry(lplus);
  int jm = entry(lminus);

  // Diagnostic only: the paper's stronger requirement that some power maps
  // cand minus the origin strictly inside.
  if (cand.strictly_convex()) {
    IntMat power = IntMat::identity(loop.rank());
    for (int m = 1; m <= 16; ++m) {
      power = e * power;
      bool all_interior = true;
      for (const IntVec& r : cand.rays())
        if (!cand.contains_point(power * r, true)) all_interior = false;
      if (all_interior) {
        rep.diag.strict_interior = true;
        rep.diag.strict_interior_n0 = m;
        break;
      }
    }
  }

  if (contained && invariant && jp >= 0 && jm >= 0) {
    rep.verdict = Verdict::sign_stable_on_Omega_can;
    rep.stable_sign = eps0;
    rep.n0_plus = jp;
    rep.n0_minus = jm;
    rep.stable = stable_data(loop, eps0);
  } else {
    if (!contained) rep.diag.notes.push_back("candidate is not contained in the sign cone");
    if (!invariant) rep.diag.notes.push_back("candidate is not invariant under the presentation matrix");
    if (jp < 0 || jm < 0) rep.diag.notes.push_back("a basepoint orbit did not settle inside the candidate");
  }
  return rep;
}

StabilityReport two_sided_check(const MutationLoop& loop, int orbit_cap) {
  require_valid(loop, "two_sided_check");
  StabilityReport rep;
  rep.diag.method = "two-sided";
  const auto [lplus, lminus] = basepoints(loop.rank());
  OrbitStabilization op = orbit_sign_stabilization(loop, lplus, orbit_cap);
  OrbitStabilization om = orbit_sign_stabilization(loop, lminus, orbit_cap);
  if (op.certified_not_stable || om.certified_not_stable) {
    rep.verdict = Verdict::not_sign_stable;
    rep.diag.notes.push_back(
        "a basepoint orbit is exactly projectively periodic with non-constant or non-strict sign");
    return rep;
  }
  if (!op.stabilized || !om.stabilized) {
    rep.diag.notes.push_back("basepoint signs did not stabilize within the orbit cap");
    return rep;
  }
  if (op.sign == om.sign) {
    // Same stable sign on both sides: this is the ordinary (one-sided)
    // situation, certified only when both orbits are exactly periodic.
    if (op.certified && om.certified) {
      rep.verdict = Verdict::sign_stable_on_Omega_can;
      rep.stable_sign = op.sign;
      rep.n0_plus = op.n0;
      rep.n0_minus = om.n0;
      rep.stable = stable_data(loop, op.sign);
      rep.diag.notes.push_back("both basepoint orbits are exactly periodic with a common strict sign");
      return rep;
    }
    rep.diag.notes.push_back(
        "both basepoints stabilize to the same sign; use the inductive or heuristic method for a "
        "certified one-sided verdict");
    return rep;
  }
  if (op.sign != negate_signs(om.sign)) {
    rep.diag.notes.push_back("stable signs are neither equal nor opposite");
    return rep;
  }
  StableData dp = stable_data(loop, op.sign);
  StableData dm = stable_data(loop, om.sign);
  if (std::abs(dp.lambda - dm.lambda) > 1e-12 * std::max(1.0, dp.lambda)) {
    rep.diag.notes.push_back("opposite stable signs but unequal spectral radii");
    return rep;
  }
  rep.verdict = Verdict::two_sided_sign_stable;
  rep.stable_sign = op.sign;
  rep.stable_sign_minus = om.sign;
  rep.n0_plus = op.n0;
  rep.n0_minus = om.n0;
  rep.stable = std::move(dp);
  rep.stable_minus = std::move(dm);
  return rep;
}

PerronData perron_check(const MutationLoop& loop, const StabilityReport& report, int stab_depth) {
  if (report.verdict != Verdict::sign_stable_on_Omega_can || !report.stable)
    throw std::invalid_argument("perron_check: requires a sign-stable verdict");
  PerronData out;
  out.stab_depth = stab_depth;
  EigenPair eig = dominant_eigenpair(report.stable->e);
  out.lambda = eig.lambda;
  out.residual = eig.residual;
  out.converged = eig.converged;
  out.v = eig.v;

  auto satisfied = [&](const std::vector<IntVec>& normals, const std::vector<double>& v) {
    double vnorm = 0;
    for (double x : v) vnorm = std::max(vnorm, std::abs(x));
    for (const IntVec& a : normals) {
      double av = 0, anorm = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        double ai = a[i].convert_to<double>();
        av += ai * v[i];
        anorm = std::max(anorm, std::abs(ai));
      }
      if (av < -1e-9 * anorm * vnorm) return false;
    }
    return true;
  };
  const std::vector<IntVec> sign_normals = sign_cone_normals(loop, report.stable_sign);
  // sign-normalize the eigenvector toward the stable cone
  std::vector<double> flipped(out.v.size());
  for (std::size_t i = 0; i < out.v.size(); ++i) flipped[i] = -out.v[i];
  if (!satisfied(sign_normals, out.v) && satisfied(sign_normals, flipped)) out.v = flipped;
  out.in_sign_cone = satisfied(sign_normals, out.v);

  MutationLoop deep = expand_loop_power(loop, stab_depth);
  SignVec block_sign;
  block_sign.reserve(report.stable_sign.size() * static_cast<std::size_t>(stab_depth));
  for (int m = 0; m < stab_depth; ++m)
    block_sign.insert(block_sign.end(), report.stable_sign.begin(), report.stable_sign.end());
  out.in_stab_cone = satisfied(sign_cone_normals(deep, block_sign), out.v);
  return out;
}

StabilityReport auto_check(const MutationLoop& loop, int n_max, int orbit_cap,
                           const std::optional<Cone>& user_cone) {
  StabilityReport r = inductive_check(loop, n_max, orbit_cap);
  if (r.verdict != Verdict::inconclusive) {
    r.diag.method = "auto/inductive";
    return r;
  }
  StabilityReport r2 = two_sided_check(loop, orbit_cap);
  if (r2.verdict != Verdict::inconclusive) {
    r2.diag.method = "auto/two-sided";
    return r2;
  }
  if (user_cone) {
    StabilityReport r3 = heuristic_check(loop, *user_cone, orbit_cap);
    r3.diag.method = "auto/heuristic";
    if (r3.verdict != Verdict::inconclusive) return r3;
    r3.diag.notes.insert(r3.diag.notes.end(), r2.diag.notes.begin(), r2.diag.notes.end());
    return r3;
  }
  r2.diag.method = "auto";
  r2.diag.notes.insert(r2.diag.notes.end(), r.diag.notes.begin(), r.diag.notes.end());
  r2.diag.full_dim_cone_counts = r.diag.full_dim_cone_counts;
  return r2;
}

}  // namespace signstab
