#pragma once

// Independent oracles and random generators shared across the test suite.
// Everything here re-derives expected values from first principles (raw
// entrywise recursions, min-plus evaluation, brute-force enumeration) so that
// the library implementations are checked against a second route.

#include "signstab/cgf.hpp"
#include "signstab/cone.hpp"
#include "signstab/trop.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace oracles {

using namespace signstab;

inline IntMat mat(std::initializer_list<std::initializer_list<long long>> rows) { return IntMat(rows); }

inline ExchangeMatrix markov_b() {
  return ExchangeMatrix(mat({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}));
}

inline MutationLoop markov_loop() {
  return make_loop(markov_b(), {0, 1, 2, 0, 1, 2});
}

inline ExchangeMatrix kronecker_b(long long ell) {
  return ExchangeMatrix(mat({{0, -ell}, {ell, 0}}));
}

inline MutationLoop kronecker_loop(long long ell) { return make_loop(kronecker_b(ell), {0, 1}); }

inline ExchangeMatrix a2_b() { return ExchangeMatrix(mat({{0, 1}, {-1, 0}})); }

inline TropPoint pt(std::initializer_list<long long> xs) {
  TropPoint p;
  for (long long x : xs) p.emplace_back(x);
  return p;
}

inline IntVec iv(std::initializer_list<long long> xs) {
  IntVec v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

// --- tropical oracles: the raw min-plus forms of the mutation rules -------

inline TropPoint trop_x_minplus(const ExchangeMatrix& b, int k, const TropPoint& w) {
  const std::size_t n = b.n(), uk = static_cast<std::size_t>(k);
  TropPoint out = w;
  out[uk] = -w[uk];
  for (std::size_t i = 0; i < n; ++i) {
    if (i == uk) continue;
    const Int& bik = b.entry(i, uk);
    if (bik == 0) continue;
    Rat sgn_term = bik > 0 ? -w[uk] : w[uk];  // -sgn(b_ik) x_k
    Rat m = std::min(Rat(0), sgn_term);
    out[i] = w[i] - Rat(bik) * m;
  }
  return out;
}

inline TropPoint trop_a_min(const ExchangeMatrix& b, int k, const TropPoint& v) {
  const std::size_t n = b.n(), uk = static_cast<std::size_t>(k);
  TropPoint out = v;
  Rat first = 0, second = 0;
  for (std::size_t j = 0; j < n; ++j) {
    first += Rat(pos_part(b.entry(uk, j))) * v[j];
    second += Rat(pos_part(Int(-b.entry(uk, j)))) * v[j];
  }
  out[uk] = -v[uk] + std::min(first, second);
  return out;
}

// --- raw entrywise c-matrix recursion (no E-matrices involved) ------------

inline IntMat c_recursion_raw(const ExchangeMatrix& b0, const std::vector<int>& word) {
  const std::size_t n = b0.n();
  IntMat c = IntMat::identity(n);
  ExchangeMatrix b = b0;
  for (int k : word) {
    const std::size_t uk = static_cast<std::size_t>(k);
    IntMat next(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == uk) next.at(i, j) = -c.at(i, j);
        else
          next.at(i, j) = c.at(i, j) + pos_part(b.entry(i, uk)) * pos_part(c.at(uk, j)) -
                          pos_part(Int(-b.entry(i, uk))) * pos_part(Int(-c.at(uk, j)));
      }
    c = next;
    b = mutate_exchange_matrix(b, k);
  }
  return c;
}

// --- random generators (fixed seeds for determinism) ----------------------

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  int uniform(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(gen);
  }

  ExchangeMatrix skew(std::size_t n, int bound) {
    IntMat b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        int v = uniform(-bound, bound);
        b.at(i, j) = v;
        b.at(j, i) = -v;
      }
    return ExchangeMatrix(std::move(b));
  }

  std::vector<int> word(std::size_t n, int max_len, int min_len = 0) {
    int len = uniform(min_len, max_len);
    std::vector<int> w;
    for (int i = 0; i < len; ++i) w.push_back(uniform(0, static_cast<int>(n) - 1));
    return w;
  }

  // Valid loop via a palindromic word: mutations are involutive on B.
  MutationLoop palindromic_loop(std::size_t n, int bound, int half_len) {
    ExchangeMatrix b = skew(n, bound);
    std::vector<int> half = word(n, half_len, 1);
    std::vector<int> w = half;
    for (auto it = half.rbegin(); it != half.rend(); ++it) w.push_back(*it);
    return make_loop(std::move(b), std::move(w));
  }

  TropPoint point(std::size_t n, int num_bound, int den_bound) {
    TropPoint p(n);
    for (std::size_t i = 0; i < n; ++i)
      p[i] = Rat(uniform(-num_bound, num_bound), uniform(1, den_bound));
    return p;
  }

  // Unimodular integer matrix: product of elementary row operations.
  IntMat unimodular(std::size_t n, int ops) {
    IntMat m = IntMat::identity(n);
    for (int t = 0; t < ops; ++t) {
      std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1));
      std::size_t j = static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1));
      if (i == j) {
        if (uniform(0, 1)) {
          for (std::size_t c = 0; c < n; ++c) m.at(i, c) = -m.at(i, c);
        }
        continue;
      }
      int f = uniform(-2, 2);
      for (std::size_t c = 0; c < n; ++c) m.at(i, c) += f * m.at(j, c);
    }
    return m;
  }
};

// Degrees of the symbolic objects along a word are bounded by the (cheap,
// exact) F- and G-matrix entries; adversarial random instances push these
// past 1e10 where no symbolic engine can expand the polynomials, so the
// symbolic suites sample conditioned on tractability.
inline bool symbolically_tractable(const ExchangeMatrix& b, const std::vector<int>& word,
                                   long long budget = 40) {
  CGFState s = cgf_initial(b);
  for (int k : word) cgf_step(s, k);
  return s.f.max_abs() + s.g.max_abs() <= budget;
}

// --- brute-force V-representation oracle (kernel enumeration) -------------

inline std::vector<IntVec> brute_force_rays(std::size_t dim, const std::vector<IntVec>& normals) {
  // Candidate rays: primitive kernel directions of each (dim-1)-subset of
  // normals; keep those feasible and extreme (tight rank = dim - lin - 1).
  std::vector<IntVec> lin_basis;  // kernel of all normals
  // compute the lineality space exactly
  {
    std::vector<RatVec> m;
    for (const IntVec& a : normals) {
      RatVec r(dim);
      for (std::size_t j = 0; j < dim; ++j) r[j] = Rat(a[j]);
      m.push_back(std::move(r));
    }
    // find a basis of the kernel of the normal matrix
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < dim && rank < m.size(); ++c) {
      std::size_t p = rank;
      while (p < m.size() && m[p][c] == 0) ++p;
      if (p == m.size()) continue;
      std::swap(m[p], m[rank]);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i == rank || m[i][c] == 0) continue;
        Rat f = m[i][c] / m[rank][c];
        for (std::size_t jj = 0; jj < dim; ++jj) m[i][jj] -= f * m[rank][jj];
      }
      pivots.push_back(c);
      ++rank;
    }
    std::vector<char> is_pivot(dim, 0);
    for (std::size_t c : pivots) is_pivot[c] = 1;
    for (std::size_t c = 0; c < dim; ++c) {
      if (is_pivot[c]) continue;
      RatVec v(dim);
      v[c] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][c] / m[r][pivots[r]];
      Int lcm = 1;
      for (const Rat& x : v) lcm = boost::multiprecision::lcm(lcm, denominator(x));
      IntVec iv(dim);
      for (std::size_t j = 0; j < dim; ++j) iv[j] = numerator(v[j] * Rat(lcm));
      make_primitive(iv);
      lin_basis.push_back(std::move(iv));
    }
  }
  const std::size_t lin_dim = lin_basis.size();
  std::vector<IntVec> rays;
  const std::size_t m = normals.size();
  std::vector<std::size_t> idx;
  // iterate over all subsets of size <= dim-1 whose kernel is 1-dim mod lineality
  std::vector<std::size_t> stack;
  auto consider = [&](const std::vector<std::size_t>& subset) {
    std::vector<IntVec> sub;
    for (std::size_t s : subset) sub.push_back(normals[s]);
    if (rank_of_vectors(sub, dim) != dim - lin_dim - 1) return;
    // kernel of subset has dimension lin_dim + 1; find a direction not in lineality
    std::vector<RatVec> mm;
    for (const IntVec& a : sub) {
      RatVec r(dim);
      for (std::size_t j = 0; j < dim; ++j) r[j] = Rat(a[j]);
      mm.push_back(std::move(r));
    }
    for (const IntVec& l : lin_basis) {
      // add lineality directions as extra constraints to mod them out
      RatVec r(dim);
      for (std::size_t j = 0; j < dim; ++j) r[j] = Rat(l[j]);
      mm.push_back(std::move(r));
    }
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < dim && rank < mm.size(); ++c) {
      std::size_t p = rank;
      while (p < mm.size() && mm[p][c] == 0) ++p;
      if (p == mm.size()) continue;
      std::swap(mm[p], mm[rank]);
      for (std::size_t i = 0; i < mm.size(); ++i) {
        if (i == rank || mm[i][c] == 0) continue;
        Rat f = mm[i][c] / mm[rank][c];
        for (std::size_t jj = 0; jj < dim; ++jj) mm[i][jj] -= f * mm[rank][jj];
      }
      pivots.push_back(c);
      ++rank;
    }
    std::vector<char> is_pivot(dim, 0);
    for (std::size_t c : pivots) is_pivot[c] = 1;
    for (std::size_t c = 0; c < dim; ++c) {
      if (is_pivot[c]) continue;
      RatVec v(dim);
      v[c] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -mm[r][c] / mm[r][pivots[r]];
      Int lcm = 1;
      for (const Rat& x : v) lcm = boost::multiprecision::lcm(lcm, denominator(x));
      IntVec cand(dim);
      for (std::size_t j = 0; j < dim; ++j) cand[j] = numerator(v[j] * Rat(lcm));
      make_primitive(cand);
      for (int sgn = 0; sgn < 2; ++sgn) {
        IntVec r = cand;
        if (sgn) {
          for (Int& x : r) x = -x;
        }
        bool feasible = true;
        for (const IntVec& a : normals)
          if (dot(a, r) < 0) feasible = false;
        if (!feasible) continue;
        // extremality: rank of all tight normals must be dim - lin_dim - 1
        std::vector<IntVec> tight;
        for (const IntVec& a : normals)
          if (dot(a, r) == 0) tight.push_back(a);
        if (rank_of_vectors(tight, dim) != dim - lin_dim - 1) continue;
        rays.push_back(reduce_ray_mod_lineality(r, lin_basis));
      }
    }
  };
  // enumerate subsets up to size dim-1 (m is small in tests)
  std::vector<std::size_t> subset;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!subset.empty()) consider(subset);
    if (subset.size() + 1 > dim) return;
    for (std::size_t i = start; i < m; ++i) {
      subset.push_back(i);
      rec(i + 1);
      subset.pop_back();
    }
  };
  if (dim == lin_dim + 1) consider({});  // single-ray-direction case with no tight normals needed
  rec(0);
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

}  // namespace oracles
