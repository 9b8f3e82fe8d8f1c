#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lpproj/linear_map.hpp"
#include "lpproj/rational.hpp"

namespace lpproj {

// The hyperplane <x, normal> = offset. Its positive side is
// <x, normal> >= offset.
struct Hyperplane {
  Vector normal;
  Rational offset;
};

// A linear constraint <normal, x> (<= or =) offset with primitive normal.
struct Constraint {
  IntVector normal;
  Rational offset;
};

// One element of N(P): the facet F(P, v) for v = direction / |direction|.
//
// `support` is the unnormalized support value max <x, direction> over P, so
// h(P, v) = support / |direction| and both share their sign exactly. The
// (n-1)-volume is volume_factor * |direction|; volume_factor is exact.
struct Facet {
  IntVector direction;
  Rational support;
  Rational sq_norm;
  Rational volume_factor;
  double volume = 0.0;
  std::vector<std::size_t> vertex_ids;

  bool operator==(const Facet& o) const {
    return direction == o.direction && support == o.support;
  }
};

class Polytope {
 public:
  // The empty polytope in n-space.
  static Polytope empty(int n);
  // conv(points) in n-space; all points must have length n.
  static Polytope hull(int n, std::span<const Vector> points);

  int ambient_dim() const { return n_; }
  // Intrinsic dimension; -1 for the empty polytope.
  int dim() const { return dim_; }
  bool is_empty() const { return dim_ < 0; }
  bool is_full_dimensional() const { return dim_ == n_; }

  // Extreme points, sorted lexicographically.
  const std::vector<Vector>& vertices() const { return vertices_; }
  // Facets of a full-dimensional polytope; empty otherwise.
  const std::vector<Facet>& facets() const { return facets_; }
  // The outer-normal set N(P) entering the operator sums: the facets when
  // dim P = n, the two sides of P itself when dim P = n - 1, empty otherwise.
  const std::vector<Facet>& normal_facets() const {
    return dim_ == n_ ? facets_ : two_sided_;
  }

  // Constraint description: P = {x : equalities hold, inequalities hold}.
  const std::vector<Constraint>& equalities() const { return equalities_; }
  const std::vector<Constraint>& inequalities() const { return inequalities_; }

  // Exact n-volume (0 unless full-dimensional).
  const Rational& volume() const { return volume_; }
  bool contains(const Vector& x) const;

  // Pairs of vertex indices joined by an edge.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  bool operator==(const Polytope& o) const { return n_ == o.n_ && vertices_ == o.vertices_; }

 private:
  struct RelativeFacet {
    IntVector normal;  // in the coordinate chart `chart_`
    std::vector<std::size_t> vertex_ids;
  };

  int n_ = 0;
  int dim_ = -1;
  std::vector<Vector> vertices_;
  std::vector<Facet> facets_;
  std::vector<Facet> two_sided_;
  std::vector<Constraint> equalities_;
  std::vector<Constraint> inequalities_;
  std::vector<int> chart_;  // coordinates on which projection is injective
  std::vector<RelativeFacet> relative_facets_;
  Rational volume_ = 0;
};

struct CutResult {
  Polytope plus;
  Polytope minus;
  Polytope section;
};

Polytope convex_hull(std::span<const Vector> points);

double facet_volume(const Polytope& p, const Facet& f);
Rational support_value(const Polytope& p, const Vector& u);
Rational support_value(const Polytope& p, const IntVector& u);

Polytope apply_map(const Polytope& p, const LinearMap& phi);
Polytope translate(const Polytope& p, const Vector& shift);
Polytope dilate(const Polytope& p, const Rational& s);

CutResult halfspace_cut(const Polytope& p, const Hyperplane& h);
Polytope intersect(const Polytope& a, const Polytope& b);
Polytope conv_origin(const Polytope& p);
std::vector<Facet> facets_facing_origin(const Polytope& p);
// conv of the facet's vertices.
Polytope facet_polytope(const Polytope& p, const Facet& f);

bool contains_origin(const Polytope& p);
// Whether the origin lies in the affine hull of p.
bool origin_in_affine_hull(const Polytope& p);

Polytope standard_simplex(int n);
Polytope probe_simplex(int n);
Polytope shifted_simplex(int n);  // e_1 + T^n
Polytope unit_cube(int n);

}  // namespace lpproj
