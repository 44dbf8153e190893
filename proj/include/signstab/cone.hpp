#pragma once

#include "signstab/loop.hpp"

namespace signstab {

/// Convex polyhedral cone at the origin with an integer H-representation and
/// an exact V-representation (extreme rays + lineality basis) computed by
/// incremental double description. Rays are primitive and lex-sorted so that
/// equal cones print identically.
class Cone {
 public:
  static Cone full_space(std::size_t dim);
  static Cone from_normals(std::size_t dim, std::vector<IntVec> normals);

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<IntVec>& normals() const { return normals_; }
  const std::vector<IntVec>& rays() const { return rays_; }
  const std::vector<IntVec>& lineality() const { return lineality_; }

  /// Dimension of the span of the cone.
  std::size_t dim() const;
  bool full_dimensional() const { return dim() == dim_; }
  bool strictly_convex() const { return lineality_.empty(); }

  /// New cone with one more halfspace {<normal, x> >= 0}.
  Cone intersect_halfspace(IntVec normal) const;

  /// H-representation recomputed from the V-representation (dual double
  /// description); used for round-trip checks.
  std::vector<IntVec> normals_from_generators() const;

  bool contains_point(const RatVec& w, bool strict) const;
  bool contains_point(const IntVec& w, bool strict) const;

  /// A rational point in the interior (sum of extreme rays); requires a
  /// full-dimensional cone.
  IntVec interior_point() const;

 private:
  static Cone build(std::size_t dim, std::vector<IntVec> normals, std::vector<IntVec> rays,
                    std::vector<IntVec> lineality);

  std::size_t dim_ = 0;
  std::vector<IntVec> normals_;
  std::vector<IntVec> rays_;
  std::vector<IntVec> lineality_;
};

/// Canonical representative of a ray class modulo a lineality space: the
/// primitive integer vector on the orthogonal projection away from the span.
IntVec reduce_ray_mod_lineality(const IntVec& ray, const std::vector<IntVec>& lineality);

bool cone_contains(const Cone& outer, const Cone& inner);

/// True iff m maps src into dst: every extreme ray lands in dst (interior of
/// dst if strict) and lineality generators land in dst's lineality space.
bool maps_into(const IntMat& m, const Cone& src, const Cone& dst, bool strict);

Cone positive_cone(std::size_t n);
Cone negative_cone(std::size_t n);

/// H-normals eps_i * c_i of the sign cone, where c_i is the k_i-th row of the
/// partial presentation-matrix product along the word.
std::vector<IntVec> sign_cone_normals(const MutationLoop& loop, const SignVec& eps);

/// The cone {w : the traversal sign of w is eps}, as closure.
Cone sign_cone(const MutationLoop& loop, const SignVec& eps);

}  // namespace signstab
