#include "hull.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lpproj::detail {

namespace {

Rational factorial(std::size_t k) {
  Integer f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<unsigned long>(i);
  return Rational(f);
}

Rational abs_q(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

// Incremental echelon basis over the integers; add() reports whether the
// vector raised the rank.
class IntBasis {
 public:
  bool add(IntVector v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto pc = pivots_[r];
      if (sgn(v[pc]) == 0) continue;
      const Integer a = rows_[r][pc], b = v[pc];
      Integer g = 0;
      for (std::size_t j = 0; j < v.size(); ++j) {
        v[j] = v[j] * a - rows_[r][j] * b;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[j].get_mpz_t());
      }
      if (g > 1) {
        for (auto& x : v) x /= g;
      }
    }
    std::size_t pc = 0;
    while (pc < v.size() && sgn(v[pc]) == 0) ++pc;
    if (pc == v.size()) return false;
    rows_.push_back(std::move(v));
    pivots_.push_back(pc);
    return true;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<IntVector> rows_;
  std::vector<std::size_t> pivots_;
};

// Area of a convex polygon given by its vertices in any order.
Rational polygon_area(const std::vector<Vector>& pts) {
  Vector c = zero_vector(2);
  for (const auto& x : pts) c = add(c, x);
  c = scaled(c, Rational(1, static_cast<unsigned long>(pts.size())));
  std::vector<Vector> rel;
  rel.reserve(pts.size());
  for (const auto& x : pts) rel.push_back(sub(x, c));
  auto upper = [](const Vector& v) { return sgn(v[1]) > 0 || (sgn(v[1]) == 0 && sgn(v[0]) > 0); };
  std::sort(rel.begin(), rel.end(), [&](const Vector& a, const Vector& b) {
    const bool ua = upper(a), ub = upper(b);
    if (ua != ub) return ua;
    return sgn(a[0] * b[1] - a[1] * b[0]) > 0;
  });
  Rational twice = 0;
  for (std::size_t i = 0; i < rel.size(); ++i) {
    const auto& a = rel[i];
    const auto& b = rel[(i + 1) % rel.size()];
    twice += a[0] * b[1] - a[1] * b[0];
  }
  return abs_q(twice) / 2;
}

// Volume of the convex hull of distinct points affinely spanning R^d, all of
// which are vertices.
Rational full_volume(const std::vector<Vector>& pts) {
  const std::size_t d = pts[0].size();
  if (d == 2) return polygon_area(pts);
  if (pts.size() == d + 1) {
    std::vector<std::size_t> ids(pts.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    return simplex_volume(pts, ids);
  }
  return full_hull(pts, affine_basis(pts)).volume;
}

// vol_{d-1}(facet) / |normal|, via the projection that drops one coordinate
// on which the normal is nonzero: vol(F) = vol(proj F) * |w| / |w_k|.
Rational volume_factor(const std::vector<Vector>& pts, const RawFacet& f) {
  const std::size_t d = pts[0].size();
  if (d == 1) return 1;
  std::size_t k = 0;
  while (sgn(f.normal[k]) == 0) ++k;
  std::vector<Vector> proj;
  proj.reserve(f.ids.size());
  for (auto i : f.ids) {
    Vector q;
    q.reserve(d - 1);
    for (std::size_t j = 0; j < d; ++j) {
      if (j != k) q.push_back(pts[i][j]);
    }
    proj.push_back(std::move(q));
  }
  Rational vol = full_volume(proj);
  return vol / abs_q(Rational(f.normal[k]));
}

}  // namespace

std::vector<std::size_t> affine_basis(const std::vector<Vector>& pts) {
  std::vector<std::size_t> ids;
  if (pts.empty()) return ids;
  ids.push_back(0);
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;
  const std::size_t n = pts[0].size();
  for (std::size_t i = 1; i < pts.size() && rows.size() < n; ++i) {
    Vector diff = sub(pts[i], pts[0]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto pc = pivots[r];
      if (sgn(diff[pc]) == 0) continue;
      Rational f = diff[pc] / rows[r][pc];
      for (std::size_t j = 0; j < n; ++j) diff[j] -= f * rows[r][j];
    }
    std::size_t pc = 0;
    while (pc < n && sgn(diff[pc]) == 0) ++pc;
    if (pc == n) continue;
    rows.push_back(std::move(diff));
    pivots.push_back(pc);
    ids.push_back(i);
  }
  return ids;
}

Rational simplex_volume(const std::vector<Vector>& pts, const std::vector<std::size_t>& ids) {
  const std::size_t d = pts[ids[0]].size();
  if (d == 0) return 1;
  Matrix m;
  m.reserve(d);
  for (std::size_t i = 1; i < ids.size(); ++i) m.push_back(sub(pts[ids[i]], pts[ids[0]]));
  return abs_q(determinant(std::move(m))) / factorial(d);
}

RawHull full_hull(const std::vector<Vector>& pts, const std::vector<std::size_t>& simplex) {
  const std::size_t d = pts[0].size();
  if (simplex.size() != d + 1) throw std::logic_error("full_hull: points do not span");
  RawHull out;

  if (d == 1) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i][0] < pts[lo][0]) lo = i;
      if (pts[i][0] > pts[hi][0]) hi = i;
    }
    out.vertex_ids = {std::min(lo, hi), std::max(lo, hi)};
    out.facets.push_back({IntVector{Integer(-1)}, Rational(-pts[lo][0]), {lo}, Rational(1)});
    out.facets.push_back({IntVector{Integer(1)}, pts[hi][0], {hi}, Rational(1)});
    out.volume = pts[hi][0] - pts[lo][0];
    return out;
  }

  Vector center = zero_vector(static_cast<int>(d));
  for (auto i : simplex) center = add(center, pts[i]);
  center = scaled(center, Rational(1, static_cast<unsigned long>(d + 1)));

  struct Work {
    IntVector w;
    Rational a;
    std::vector<std::size_t> ids;
  };

  auto plane_through = [&](std::vector<std::size_t> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<Vector> rows;
    rows.reserve(ids.size() - 1);
    for (std::size_t i = 1; i < ids.size(); ++i) rows.push_back(sub(pts[ids[i]], pts[ids[0]]));
    auto ns = nullspace(std::move(rows), static_cast<int>(d));
    if (ns.size() != 1) throw std::logic_error("full_hull: degenerate facet");
    Work f{primitive(ns[0]), 0, std::move(ids)};
    f.a = dot(f.w, pts[f.ids[0]]);
    if (dot(f.w, center) > f.a) {
      for (auto& x : f.w) x = -x;
      f.a = -f.a;
    }
    return f;
  };

  // x_i = X_i / den_i with X_i integral, for cheap exact side tests.
  std::vector<IntVector> X(pts.size());
  std::vector<Integer> den(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Integer l = 1;
    for (const auto& x : pts[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    X[i].reserve(d);
    for (const auto& x : pts[i]) X[i].push_back(x.get_num() * (l / x.get_den()));
    den[i] = std::move(l);
  }
  // Numerator of <w, x_i> - a over the positive denominator den_i * den(a).
  auto slack = [&](const Work& f, std::size_t i) {
    Integer s = 0;
    for (std::size_t j = 0; j < d; ++j) s += f.w[j] * X[i][j];
    return Integer(s * f.a.get_den() - f.a.get_num() * den[i]);
  };
  auto homogeneous = [&](std::size_t i) {
    IntVector h = X[i];
    h.push_back(den[i]);
    return h;
  };

  std::vector<Work> facets;
  for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      if (i != skip) ids.push_back(simplex[i]);
    }
    facets.push_back(plane_through(std::move(ids)));
  }

  std::vector<bool> seeded(pts.size(), false);
  for (auto i : simplex) seeded[i] = true;

  std::vector<Integer> slacks;
  std::vector<int> side;
  for (std::size_t idx = 0; idx < pts.size(); ++idx) {
    if (seeded[idx]) continue;
    slacks.resize(facets.size());
    side.assign(facets.size(), 0);
    bool any_visible = false;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      slacks[f] = slack(facets[f], idx);
      side[f] = sgn(slacks[f]);
      if (side[f] > 0) any_visible = true;
    }
    if (!any_visible) continue;

    std::map<IntVector, Work> created;
    std::vector<std::size_t> common;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (side[f] <= 0) continue;
      for (std::size_t g = 0; g < facets.size(); ++g) {
        if (side[g] != -1) continue;
        common.clear();
        std::set_intersection(facets[f].ids.begin(), facets[f].ids.end(), facets[g].ids.begin(),
                              facets[g].ids.end(), std::back_inserter(common));
        if (common.size() + 1 < d) continue;
        // The common points span a ridge iff their homogeneous rank is d - 1.
        IntBasis basis;
        for (auto i : common) {
          if (basis.add(homogeneous(i)) && basis.size() == d - 1) break;
        }
        if (basis.size() != d - 1) continue;
        // Rotate f about the ridge onto x: a positive combination of the two
        // supporting inequalities that is tight at x.
        const Integer lambda = -slacks[g] * facets[f].a.get_den();
        const Integer mu = slacks[f] * facets[g].a.get_den();
        Vector w(d);
        for (std::size_t j = 0; j < d; ++j) w[j] = Rational(lambda * facets[f].w[j] + mu * facets[g].w[j]);
        Work nf{primitive(w), 0, common};
        nf.ids.insert(std::upper_bound(nf.ids.begin(), nf.ids.end(), idx), idx);
        nf.a = dot(nf.w, pts[idx]);
        auto it = created.find(nf.w);
        if (it == created.end()) {
          created.emplace(nf.w, std::move(nf));
        } else {
          std::vector<std::size_t> merged;
          std::set_union(it->second.ids.begin(), it->second.ids.end(), nf.ids.begin(), nf.ids.end(),
                         std::back_inserter(merged));
          it->second.ids = std::move(merged);
        }
      }
    }

    std::vector<Work> next;
    next.reserve(facets.size() + created.size());
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (side[f] > 0) continue;
      if (side[f] == 0) {
        auto& ids = facets[f].ids;
        ids.insert(std::upper_bound(ids.begin(), ids.end(), idx), idx);
      }
      next.push_back(std::move(facets[f]));
    }
    for (auto& [key, nf] : created) next.push_back(std::move(nf));
    facets = std::move(next);
  }

  // A boundary point is a vertex iff the normals of its facets span R^d.
  std::map<std::size_t, std::vector<const IntVector*>> incident;
  for (const auto& f : facets) {
    for (auto i : f.ids) incident[i].push_back(&f.w);
  }
  std::vector<bool> is_vertex(pts.size(), false);
  for (auto& [i, normals] : incident) {
    if (normals.size() < d) continue;
    IntBasis basis;
    for (const auto* w : normals) {
      if (basis.add(*w) && basis.size() == d) break;
    }
    if (basis.size() == d) {
      is_vertex[i] = true;
      out.vertex_ids.push_back(i);
    }
  }

  for (auto& f : facets) {
    RawFacet rf{std::move(f.w), std::move(f.a), {}, 0};
    for (auto i : f.ids) {
      if (is_vertex[i]) rf.ids.push_back(i);
    }
    rf.volume_factor = volume_factor(pts, rf);
    out.facets.push_back(std::move(rf));
  }

  if (out.vertex_ids.size() == d + 1) {
    out.volume = simplex_volume(pts, out.vertex_ids);
  } else {
    const Vector& apex = pts[out.vertex_ids[0]];
    Rational sum = 0;
    for (const auto& f : out.facets) sum += (f.offset - dot(f.normal, apex)) * f.volume_factor;
    out.volume = sum / Rational(static_cast<unsigned long>(d));
  }
  return out;
}

}  // namespace lpproj::detail
