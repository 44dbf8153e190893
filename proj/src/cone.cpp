#include "signstab/cone.hpp"

#include <algorithm>
#include <stdexcept>

namespace signstab {

namespace {

// Incremental double description state. The cone is span(lin) + cone(rays);
// cons holds every inserted inequality normal. The pair (lin, rays) is kept
// minimal: rays are extreme modulo lineality.
struct DDState {
  std::size_t dim = 0;
  std::vector<IntVec> lin, rays, cons;
};

DDState dd_full(std::size_t dim) {
  DDState s;
  s.dim = dim;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVec e(dim);
    e[i] = 1;
    s.lin.push_back(std::move(e));
  }
  return s;
}

IntVec combine(const IntVec& u, const Int& cu, const IntVec& v, const Int& cv) {
  IntVec w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = cu * u[i] + cv * v[i];
  make_primitive(w);
  return w;
}

// Constraints tight at both rays, for the rank-based adjacency test.
std::vector<IntVec> common_tight(const DDState& s, const IntVec& r1, const IntVec& r2) {
  std::vector<IntVec> t;
  for (const IntVec& a : s.cons)
    if (dot(a, r1) == 0 && dot(a, r2) == 0) t.push_back(a);
  return t;
}

// Adjacency of extreme rays in the pointed quotient by the lineality space:
// the common tight constraints must cut a 2-dimensional face.
bool adjacent(const DDState& s, const IntVec& r1, const IntVec& r2) {
  const std::size_t quotient_dim = s.dim - s.lin.size();
  if (quotient_dim < 2) return false;
  return rank_of_vectors(common_tight(s, r1, r2), s.dim) == quotient_dim - 2;
}

void dd_insert(DDState& s, IntVec a) {
  make_primitive(a);
  bool zero = std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
  if (zero) {
    s.cons.push_back(std::move(a));
    return;
  }
  // A lineality direction escaping the halfspace becomes the unique new ray;
  // everything else is pushed along it into the hyperplane. This preserves
  // minimality of the ray set.
  std::size_t pivot = s.lin.size();
  for (std::size_t i = 0; i < s.lin.size(); ++i)
    if (dot(a, s.lin[i]) != 0) {
      pivot = i;
      break;
    }
  if (pivot < s.lin.size()) {
    IntVec l0 = s.lin[pivot];
    Int d0 = dot(a, l0);
    if (d0 < 0) {
      for (Int& x : l0) x = -x;
      d0 = -d0;
    }
    std::vector<IntVec> new_lin;
    for (std::size_t i = 0; i < s.lin.size(); ++i) {
      if (i == pivot) continue;
      Int dl = dot(a, s.lin[i]);
      new_lin.push_back(dl == 0 ? s.lin[i] : combine(s.lin[i], d0, l0, -dl));
    }
    std::vector<IntVec> new_rays;
    for (const IntVec& r : s.rays) {
      Int dr = dot(a, r);
      new_rays.push_back(dr == 0 ? r : combine(r, d0, l0, -dr));
    }
    new_rays.push_back(std::move(l0));
    s.lin = std::move(new_lin);
    s.rays = std::move(new_rays);
    s.cons.push_back(std::move(a));
    return;
  }
  // Lineality lies in the hyperplane: classic double-description step.
  std::vector<Int> dots(s.rays.size());
  bool any_neg = false;
  for (std::size_t i = 0; i < s.rays.size(); ++i) {
    dots[i] = dot(a, s.rays[i]);
    if (dots[i] < 0) any_neg = true;
  }
  if (!any_neg) {
    s.cons.push_back(std::move(a));
    return;
  }
  std::vector<IntVec> keep;
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < s.rays.size(); ++i) {
    if (dots[i] >= 0) keep.push_back(s.rays[i]);
    if (dots[i] > 0) pos.push_back(i);
    if (dots[i] < 0) neg.push_back(i);
  }
  for (std::size_t ip : pos)
    for (std::size_t in : neg)
      if (adjacent(s, s.rays[ip], s.rays[in]))
        keep.push_back(combine(s.rays[ip], -dots[in], s.rays[in], dots[ip]));
  s.rays = std::move(keep);
  s.cons.push_back(std::move(a));
}

std::vector<IntVec> sorted_primitive(std::vector<IntVec> vs) {
  for (IntVec& v : vs) make_primitive(v);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

// Canonical lineality basis: reduced row echelon over Q, rescaled to
// primitive integer vectors.
std::vector<IntVec> canonical_basis(const std::vector<IntVec>& vs, std::size_t dim) {
  std::vector<RatVec> m;
  for (const IntVec& v : vs) {
    RatVec r(dim);
    for (std::size_t j = 0; j < dim; ++j) r[j] = Rat(v[j]);
    m.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < dim && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    Rat piv = m[rank][c];
    for (std::size_t j = 0; j < dim; ++j) m[rank][j] /= piv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = 0; j < dim; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < rank; ++i) {
    Int lcm = 1;
    for (std::size_t j = 0; j < dim; ++j) lcm = boost::multiprecision::lcm(lcm, denominator(m[i][j]));
    IntVec v(dim);
    for (std::size_t j = 0; j < dim; ++j) v[j] = numerator(m[i][j] * Rat(lcm));
    make_primitive(v);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

DDState dd_run(std::size_t dim, const std::vector<IntVec>& normals) {
  DDState s = dd_full(dim);
  for (const IntVec& a : normals) {
    if (a.size() != dim) throw std::invalid_argument("Cone: normal has wrong dimension");
    dd_insert(s, a);
  }
  return s;
}

}  // namespace

IntVec reduce_ray_mod_lineality(const IntVec& ray, const std::vector<IntVec>& lineality) {
  IntVec out = ray;
  if (!lineality.empty()) {
    // p = r - L^T (L L^T)^{-1} L r over exact rationals, then primitive.
    const std::size_t k = lineality.size(), n = ray.size();
    std::vector<RatVec> gram(k, RatVec(k + 1));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) gram[i][j] = Rat(dot(lineality[i], lineality[j]));
      gram[i][k] = Rat(dot(lineality[i], ray));
    }
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t p = c;
      while (p < k && gram[p][c] == 0) ++p;
      std::swap(gram[p], gram[c]);
      for (std::size_t i = 0; i < k; ++i) {
        if (i == c || gram[i][c] == 0) continue;
        Rat f = gram[i][c] / gram[c][c];
        for (std::size_t j = c; j <= k; ++j) gram[i][j] -= f * gram[c][j];
      }
    }
    RatVec proj(n);
    for (std::size_t j = 0; j < n; ++j) proj[j] = Rat(ray[j]);
    for (std::size_t i = 0; i < k; ++i) {
      Rat coeff = gram[i][k] / gram[i][i];
      for (std::size_t j = 0; j < n; ++j) proj[j] -= coeff * Rat(lineality[i][j]);
    }
    Int lcm = 1;
    for (const Rat& x : proj) lcm = boost::multiprecision::lcm(lcm, denominator(x));
    for (std::size_t j = 0; j < n; ++j) out[j] = numerator(proj[j] * Rat(lcm));
  }
  make_primitive(out);
  return out;
}

Cone Cone::build(std::size_t dim, std::vector<IntVec> normals, std::vector<IntVec> rays,
                 std::vector<IntVec> lineality) {
  Cone c;
  c.dim_ = dim;
  c.normals_ = std::move(normals);
  c.lineality_ = canonical_basis(lineality, dim);
  for (IntVec& r : rays) r = reduce_ray_mod_lineality(r, c.lineality_);
  c.rays_ = sorted_primitive(std::move(rays));
  return c;
}

Cone Cone::full_space(std::size_t dim) { return from_normals(dim, {}); }

Cone Cone::from_normals(std::size_t dim, std::vector<IntVec> normals) {
  DDState s = dd_run(dim, normals);
  return build(dim, std::move(normals), s.rays, s.lin);
}

std::size_t Cone::dim() const {
  std::vector<IntVec> gens = rays_;
  gens.insert(gens.end(), lineality_.begin(), lineality_.end());
  return rank_of_vectors(gens, dim_);
}

Cone Cone::intersect_halfspace(IntVec normal) const {
  std::vector<IntVec> ns = normals_;
  ns.push_back(std::move(normal));
  return from_normals(dim_, std::move(ns));
}

std::vector<IntVec> Cone::normals_from_generators() const {
  // The dual cone of span(lin)+cone(rays) is cut out by the generators;
  // its generators in turn are an H-representation of this cone.
  std::vector<IntVec> cons = rays_;
  for (const IntVec& l : lineality_) {
    cons.push_back(l);
    IntVec neg(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
    cons.push_back(std::move(neg));
  }
  DDState dual = dd_run(dim_, cons);
  std::vector<IntVec> out = dual.rays;
  for (const IntVec& l : dual.lin) {
    out.push_back(l);
    IntVec neg(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
    out.push_back(std::move(neg));
  }
  return sorted_primitive(std::move(out));
}

template <typename Vec>
static bool contains_impl(const std::vector<IntVec>& normals, const Vec& w, bool strict) {
  for (const IntVec& a : normals) {
    auto d = dot(a, w);
    if (strict ? !(d > 0) : (d < 0)) return false;
  }
  return true;
}

bool Cone::contains_point(const RatVec& w, bool strict) const {
  if (w.size() != dim_) throw std::invalid_argument("contains_point: dimension mismatch");
  return contains_impl(normals_, w, strict);
}

bool Cone::contains_point(const IntVec& w, bool strict) const {
  if (w.size() != dim_) throw std::invalid_argument("contains_point: dimension mismatch");
  return contains_impl(normals_, w, strict);
}

IntVec Cone::interior_point() const {
  if (!full_dimensional()) throw std::domain_error("interior_point: cone is not full-dimensional");
  IntVec x(dim_);
  for (const IntVec& r : rays_)
    for (std::size_t i = 0; i < dim_; ++i) x[i] += r[i];
  if (rays_.empty()) x[0] = 0;  // whole space (possibly with lineality only)
  if (!contains_point(x, /*strict=*/normals_.empty() ? false : true)) {
    // Full-dimensional cones always admit the ray sum as an interior point
    // unless there are no rays at all (pure lineality = whole space).
    if (!normals_.empty()) throw std::logic_error("interior_point: ray sum not interior");
  }
  return x;
}

bool cone_contains(const Cone& outer, const Cone& inner) {
  if (outer.ambient_dim() != inner.ambient_dim())
    throw std::invalid_argument("cone_contains: ambient dimension mismatch");
  for (const IntVec& r : inner.rays())
    if (!outer.contains_point(r, false)) return false;
  for (const IntVec& l : inner.lineality()) {
    IntVec neg(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
    if (!outer.contains_point(l, false) || !outer.contains_point(neg, false)) return false;
  }
  return true;
}

bool maps_into(const IntMat& m, const Cone& src, const Cone& dst, bool strict) {
  if (m.rows() != m.cols()) throw std::invalid_argument("maps_into: square matrix required");
  if (m.rows() != src.ambient_dim() || src.ambient_dim() != dst.ambient_dim())
    throw std::invalid_argument("maps_into: dimension mismatch");
  for (const IntVec& r : src.rays())
    if (!dst.contains_point(m * r, strict)) return false;
  for (const IntVec& l : src.lineality()) {
    IntVec img = m * l;
    if (strict) {
      // Lineality must land in dst's lineality space: every normal tight.
      for (const IntVec& a : dst.normals())
        if (dot(a, img) != 0) return false;
    } else {
      IntVec neg(img.size());
      for (std::size_t i = 0; i < img.size(); ++i) neg[i] = -img[i];
      if (!dst.contains_point(img, false) || !dst.contains_point(neg, false)) return false;
    }
  }
  return true;
}

Cone positive_cone(std::size_t n) {
  std::vector<IntVec> normals;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n);
    e[i] = 1;
    normals.push_back(std::move(e));
  }
  return Cone::from_normals(n, std::move(normals));
}

Cone negative_cone(std::size_t n) {
  std::vector<IntVec> normals;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n);
    e[i] = -1;
    normals.push_back(std::move(e));
  }
  return Cone::from_normals(n, std::move(normals));
}

std::vector<IntVec> sign_cone_normals(const MutationLoop& loop, const SignVec& eps) {
  if (eps.size() != loop.length())
    throw std::invalid_argument("sign_cone: sign vector length mismatch");
  if (!is_strict(eps)) throw std::invalid_argument("sign_cone: sign vector is not strict");
  std::vector<IntVec> out;
  out.reserve(eps.size());
  IntMat prefix = IntMat::identity(loop.rank());
  ExchangeMatrix b = loop.b0;
  for (std::size_t i = 0; i < loop.word.size(); ++i) {
    IntVec c = prefix.row(static_cast<std::size_t>(loop.word[i]));
    if (eps[i] == Sign::minus)
      for (Int& x : c) x = -x;
    out.push_back(std::move(c));
    SignedEMatrices m = signed_mutation_matrices(b, loop.word[i], eps[i]);
    prefix = m.e * prefix;
    b = mutate_exchange_matrix(b, loop.word[i]);
  }
  return out;
}

Cone sign_cone(const MutationLoop& loop, const SignVec& eps) {
  return Cone::from_normals(loop.rank(), sign_cone_normals(loop, eps));
}

}  // namespace signstab
