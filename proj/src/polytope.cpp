#include "lpproj/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hull.hpp"
#include "lpproj/errors.hpp"

namespace lpproj {

namespace {

Rational sq_norm(const IntVector& w) {
  Integer s = 0;
  for (const auto& x : w) s += x * x;
  return Rational(s);
}

Facet make_facet(IntVector w, Rational a, Rational factor, std::vector<std::size_t> ids) {
  Facet f;
  f.direction = std::move(w);
  f.support = std::move(a);
  f.sq_norm = sq_norm(f.direction);
  f.volume_factor = std::move(factor);
  f.volume = f.volume_factor.get_d() * std::sqrt(f.sq_norm.get_d());
  f.vertex_ids = std::move(ids);
  return f;
}

IntVector negated(const IntVector& w) {
  IntVector out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = -w[i];
  return out;
}

}  // namespace

Polytope Polytope::empty(int n) {
  if (n < 1) throw DimensionError("ambient dimension must be at least 1");
  Polytope p;
  p.n_ = n;
  p.dim_ = -1;
  return p;
}

Polytope Polytope::hull(int n, std::span<const Vector> points) {
  Polytope p = empty(n);
  for (const auto& x : points) {
    if (x.size() != static_cast<std::size_t>(n)) throw DimensionError("point has wrong dimension");
  }
  if (points.empty()) return p;

  std::vector<Vector> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  const auto basis = detail::affine_basis(pts);
  const int d = static_cast<int>(basis.size()) - 1;
  p.dim_ = d;

  std::vector<Vector> diffs;
  for (std::size_t i = 1; i < basis.size(); ++i) diffs.push_back(sub(pts[basis[i]], pts[basis[0]]));

  if (d == n) {
    auto raw = detail::full_hull(pts, basis);
    std::map<std::size_t, std::size_t> index;
    for (auto i : raw.vertex_ids) {
      index[i] = p.vertices_.size();
      p.vertices_.push_back(pts[i]);
    }
    for (auto& rf : raw.facets) {
      std::vector<std::size_t> ids;
      for (auto i : rf.ids) ids.push_back(index.at(i));
      p.facets_.push_back(make_facet(std::move(rf.normal), std::move(rf.offset),
                                     std::move(rf.volume_factor), std::move(ids)));
    }
    std::sort(p.facets_.begin(), p.facets_.end(),
              [](const Facet& a, const Facet& b) { return a.direction < b.direction; });
    for (const auto& f : p.facets_) {
      p.inequalities_.push_back({f.direction, f.support});
      p.relative_facets_.push_back({f.direction, f.vertex_ids});
    }
    for (int i = 0; i < n; ++i) p.chart_.push_back(i);
    p.volume_ = std::move(raw.volume);
    return p;
  }

  for (auto& v : nullspace(diffs, n)) {
    IntVector w = primitive(v);
    Rational a = dot(w, pts[basis[0]]);
    p.equalities_.push_back({std::move(w), std::move(a)});
  }
  if (d == 0) {
    p.vertices_.push_back(pts[basis[0]]);
    return p;
  }

  p.chart_ = pivot_columns(diffs);
  std::vector<Vector> proj;
  proj.reserve(pts.size());
  for (const auto& x : pts) {
    Vector q;
    for (int c : p.chart_) q.push_back(x[static_cast<std::size_t>(c)]);
    proj.push_back(std::move(q));
  }
  auto raw = detail::full_hull(proj, basis);
  std::map<std::size_t, std::size_t> index;
  for (auto i : raw.vertex_ids) {
    index[i] = p.vertices_.size();
    p.vertices_.push_back(pts[i]);
  }
  for (auto& rf : raw.facets) {
    std::vector<std::size_t> ids;
    for (auto i : rf.ids) ids.push_back(index.at(i));
    IntVector lifted(static_cast<std::size_t>(n), Integer(0));
    for (std::size_t j = 0; j < p.chart_.size(); ++j)
      lifted[static_cast<std::size_t>(p.chart_[j])] = rf.normal[j];
    p.inequalities_.push_back({std::move(lifted), rf.offset});
    p.relative_facets_.push_back({std::move(rf.normal), std::move(ids)});
  }

  if (d == n - 1) {
    // P is its own facet, seen from both sides of its affine hull.
    const auto& eq = p.equalities_[0];
    std::size_t k = 0;
    while (std::find(p.chart_.begin(), p.chart_.end(), static_cast<int>(k)) != p.chart_.end()) ++k;
    Rational wk = Rational(eq.normal[k]);
    if (sgn(wk) < 0) wk = -wk;
    Rational factor = raw.volume / wk;
    std::vector<std::size_t> all(p.vertices_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    p.two_sided_.push_back(make_facet(eq.normal, eq.offset, factor, all));
    p.two_sided_.push_back(make_facet(negated(eq.normal), -eq.offset, factor, all));
    std::sort(p.two_sided_.begin(), p.two_sided_.end(),
              [](const Facet& a, const Facet& b) { return a.direction < b.direction; });
  }
  return p;
}

bool Polytope::contains(const Vector& x) const {
  if (x.size() != static_cast<std::size_t>(n_)) throw DimensionError("contains: wrong dimension");
  if (is_empty()) return false;
  for (const auto& c : equalities_) {
    if (dot(c.normal, x) != c.offset) return false;
  }
  for (const auto& c : inequalities_) {
    if (dot(c.normal, x) > c.offset) return false;
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> Polytope::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (dim_ < 1) return out;
  std::vector<std::vector<std::size_t>> incident(vertices_.size());
  for (std::size_t f = 0; f < relative_facets_.size(); ++f) {
    for (auto v : relative_facets_[f].vertex_ids) incident[v].push_back(f);
  }
  std::vector<std::size_t> common;
  std::vector<IntVector> normals;
  for (std::size_t u = 0; u < vertices_.size(); ++u) {
    for (std::size_t v = u + 1; v < vertices_.size(); ++v) {
      common.clear();
      std::set_intersection(incident[u].begin(), incident[u].end(), incident[v].begin(),
                            incident[v].end(), std::back_inserter(common));
      if (static_cast<int>(common.size()) + 1 < dim_) continue;
      normals.clear();
      for (auto f : common) normals.push_back(relative_facets_[f].normal);
      if (rank(std::span<const IntVector>(normals)) == dim_ - 1) out.emplace_back(u, v);
    }
  }
  return out;
}

Polytope convex_hull(std::span<const Vector> points) {
  if (points.empty()) throw PreconditionError("convex_hull: empty point set");
  return Polytope::hull(static_cast<int>(points[0].size()), points);
}

double facet_volume(const Polytope& p, const Facet& f) {
  for (const auto& g : p.normal_facets()) {
    if (g == f) return g.volume;
  }
  throw PreconditionError("facet does not belong to the polytope");
}

Rational support_value(const Polytope& p, const Vector& u) {
  if (u.size() != static_cast<std::size_t>(p.ambient_dim()))
    throw DimensionError("support_value: wrong dimension");
  if (p.is_empty()) throw PreconditionError("support_value of the empty polytope");
  Rational best = dot(p.vertices()[0], u);
  for (const auto& x : p.vertices()) {
    Rational s = dot(x, u);
    if (s > best) best = s;
  }
  return best;
}

Rational support_value(const Polytope& p, const IntVector& u) {
  return support_value(p, to_rational(u));
}

Polytope apply_map(const Polytope& p, const LinearMap& phi) {
  if (phi.dim() != p.ambient_dim()) throw DimensionError("apply_map: dimension mismatch");
  if (!phi.invertible()) throw PreconditionError("apply_map: singular map");
  std::vector<Vector> image;
  image.reserve(p.vertices().size());
  for (const auto& x : p.vertices()) image.push_back(phi.apply(x));
  return Polytope::hull(p.ambient_dim(), image);
}

Polytope translate(const Polytope& p, const Vector& shift) {
  if (shift.size() != static_cast<std::size_t>(p.ambient_dim()))
    throw DimensionError("translate: dimension mismatch");
  std::vector<Vector> moved;
  for (const auto& x : p.vertices()) moved.push_back(add(x, shift));
  return Polytope::hull(p.ambient_dim(), moved);
}

Polytope dilate(const Polytope& p, const Rational& s) {
  if (sgn(s) < 0) throw PreconditionError("dilate: negative factor");
  std::vector<Vector> moved;
  for (const auto& x : p.vertices()) moved.push_back(scaled(x, s));
  return Polytope::hull(p.ambient_dim(), moved);
}

CutResult halfspace_cut(const Polytope& p, const Hyperplane& h) {
  const int n = p.ambient_dim();
  if (h.normal.size() != static_cast<std::size_t>(n)) throw DimensionError("cut: wrong dimension");
  if (is_zero(h.normal)) throw PreconditionError("cut: hyperplane normal is zero");
  if (p.is_empty()) return {p, p, p};

  const auto& verts = p.vertices();
  std::vector<Rational> s(verts.size());
  std::vector<Vector> plus, minus, section;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    s[i] = dot(h.normal, verts[i]) - h.offset;
    const int sg = sgn(s[i]);
    if (sg >= 0) plus.push_back(verts[i]);
    if (sg <= 0) minus.push_back(verts[i]);
    if (sg == 0) section.push_back(verts[i]);
  }
  for (auto [u, v] : p.edges()) {
    if (sgn(s[u]) * sgn(s[v]) >= 0) continue;
    Rational t = s[u] / (s[u] - s[v]);
    Vector x = add(verts[u], scaled(sub(verts[v], verts[u]), t));
    plus.push_back(x);
    minus.push_back(x);
    section.push_back(std::move(x));
  }
  return {Polytope::hull(n, plus), Polytope::hull(n, minus), Polytope::hull(n, section)};
}

Polytope intersect(const Polytope& a, const Polytope& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("intersect: dimension mismatch");
  if (a.is_empty() || b.is_empty()) return Polytope::empty(a.ambient_dim());
  Polytope out = a;
  for (const auto& c : b.equalities()) {
    if (out.is_empty()) break;
    out = halfspace_cut(out, {to_rational(c.normal), c.offset}).section;
  }
  for (const auto& c : b.inequalities()) {
    if (out.is_empty()) break;
    const bool redundant = std::all_of(out.vertices().begin(), out.vertices().end(),
                                       [&](const Vector& x) { return dot(c.normal, x) <= c.offset; });
    if (!redundant) out = halfspace_cut(out, {to_rational(c.normal), c.offset}).minus;
  }
  return out;
}

Polytope conv_origin(const Polytope& p) {
  std::vector<Vector> pts = p.vertices();
  pts.push_back(zero_vector(p.ambient_dim()));
  return Polytope::hull(p.ambient_dim(), pts);
}

std::vector<Facet> facets_facing_origin(const Polytope& p) {
  if (!p.is_full_dimensional()) throw PreconditionError("facets_facing_origin: P is not full-dimensional");
  std::vector<Facet> out;
  for (const auto& f : p.facets()) {
    if (sgn(f.support) < 0) out.push_back(f);
  }
  return out;
}

Polytope facet_polytope(const Polytope& p, const Facet& f) {
  std::vector<Vector> pts;
  for (auto i : f.vertex_ids) pts.push_back(p.vertices().at(i));
  return Polytope::hull(p.ambient_dim(), pts);
}

bool contains_origin(const Polytope& p) { return p.contains(zero_vector(p.ambient_dim())); }

bool origin_in_affine_hull(const Polytope& p) {
  if (p.is_empty()) return false;
  return std::all_of(p.equalities().begin(), p.equalities().end(),
                     [](const Constraint& c) { return sgn(c.offset) == 0; });
}

Polytope standard_simplex(int n) {
  if (n < 1) throw DimensionError("standard_simplex: n must be at least 1");
  std::vector<Vector> pts{zero_vector(n)};
  for (int i = 0; i < n; ++i) pts.push_back(unit_vector(n, i));
  return Polytope::hull(n, pts);
}

Polytope probe_simplex(int n) {
  if (n < 1) throw DimensionError("probe_simplex: n must be at least 1");
  std::vector<Vector> pts;
  for (int i = 0; i < n; ++i) pts.push_back(unit_vector(n, i));
  return Polytope::hull(n, pts);
}

Polytope shifted_simplex(int n) { return translate(standard_simplex(n), unit_vector(n, 0)); }

Polytope unit_cube(int n) {
  if (n < 1) throw DimensionError("unit_cube: n must be at least 1");
  std::vector<Vector> pts;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Vector x = zero_vector(n);
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) x[static_cast<std::size_t>(i)] = 1;
    }
    pts.push_back(std::move(x));
  }
  return Polytope::hull(n, pts);
}

}  // namespace lpproj
