#include "lpproj/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "lpproj/errors.hpp"
#include "lpproj/json_io.hpp"

namespace lpproj {

using nlohmann::json;

namespace {

constexpr int kMaxAttempts = 16;

// Row-major double copy of a rational matrix, for applying to samples.
struct DoubleMap {
  explicit DoubleMap(const LinearMap& m) : n(static_cast<std::size_t>(m.dim())) {
    a.reserve(n * n);
    for (const auto& row : m.entries()) {
      for (const auto& x : row) a.push_back(x.get_d());
    }
  }
  std::vector<double> operator()(const std::vector<double>& u) const {
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) y[i] += a[i * n + j] * u[j];
    }
    return y;
  }
  std::size_t n;
  std::vector<double> a;
};

json map_to_json(const LinearMap& m) {
  json rows = json::array();
  for (const auto& row : m.entries()) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

json hyperplane_to_json(const Hyperplane& h) {
  json normal = json::array();
  for (const auto& x : h.normal) normal.push_back(to_string(x));
  return json{{"normal", std::move(normal)}, {"offset", to_string(h.offset)}};
}

// Signed term values of an identity at one direction; the identity states
// that they sum to zero.
using TermValues = std::function<void(const std::vector<double>& u, std::vector<double>& vals)>;

struct Residual {
  double value = 0.0;
  std::vector<double> direction;
};

Residual max_residual(const Directions& dirs, const TermValues& terms) {
  Residual worst;
  std::vector<double> vals;
  for (const auto& u : dirs) {
    vals.clear();
    terms(u, vals);
    double sum = 0.0, scale = 0.0;
    for (double v : vals) {
      sum += v;
      scale = std::max(scale, std::abs(v));
    }
    double r = std::abs(sum) / (1.0 + scale);
    if (std::isnan(r)) r = std::numeric_limits<double>::infinity();
    if (r > worst.value || worst.direction.empty()) {
      worst.value = std::max(worst.value, r);
      if (r >= worst.value) worst.direction = u;
    }
  }
  return worst;
}

CheckReport make_report(std::string name, double tol, const Residual& r, json inputs) {
  CheckReport rep;
  rep.name = std::move(name);
  rep.cases = 1;
  rep.max_residual = r.value;
  rep.tolerance = tol;
  inputs["direction"] = r.direction;
  rep.worst_case = std::move(inputs);
  rep.passed = r.value <= tol;
  return rep;
}

Rational random_rational(Rng& rng, int range) {
  const auto den = rng.uniform_int(1, 4);
  const auto num = rng.uniform_int(-range * den, range * den);
  Rational q(static_cast<long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

Vector random_point(int n, Rng& rng, int range) {
  Vector v;
  for (int i = 0; i < n; ++i) v.push_back(random_rational(rng, range));
  return v;
}

// ---- prepared forms shared between kinds within a suite case --------------

Residual valuation_residual(const OperatorKind& kind, const Polytope& P, const CutResult& cut,
                            double p, const Directions& dirs) {
  const auto whole = apply(kind, P, p);
  const auto section = apply(kind, cut.section, p);
  const auto plus = apply(kind, cut.plus, p);
  const auto minus = apply(kind, cut.minus, p);
  return max_residual(dirs, [&](const std::vector<double>& u, std::vector<double>& v) {
    v.push_back(whole(u));
    v.push_back(section(u));
    v.push_back(-plus(u));
    v.push_back(-minus(u));
  });
}

struct InclusionExclusion {
  Polytope whole;
  std::vector<std::pair<int, Polytope>> terms;  // sign, intersection
};

InclusionExclusion prepare_inclusion_exclusion(const std::vector<Polytope>& pieces) {
  if (pieces.empty()) throw PreconditionError("inclusion-exclusion needs at least one piece");
  const int n = pieces[0].ambient_dim();
  std::vector<Vector> all;
  for (const auto& q : pieces) {
    if (q.ambient_dim() != n) throw DimensionError("pieces live in different dimensions");
    all.insert(all.end(), q.vertices().begin(), q.vertices().end());
  }
  InclusionExclusion ie{Polytope::hull(n, all), {}};
  const std::size_t m = pieces.size();
  Rational volume_sum = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    Polytope meet = Polytope::empty(n);
    bool first = true;
    int size = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask & (std::size_t{1} << i))) continue;
      ++size;
      meet = first ? pieces[i] : intersect(meet, pieces[i]);
      first = false;
    }
    const int sign = size % 2 == 1 ? 1 : -1;
    volume_sum += sign * meet.volume();
    ie.terms.emplace_back(sign, std::move(meet));
  }
  if (volume_sum != ie.whole.volume())
    throw PreconditionError("union of the pieces is not convex");
  return ie;
}

Residual inclusion_exclusion_residual(const OperatorKind& kind, const InclusionExclusion& ie,
                                      double p, const Directions& dirs) {
  const auto whole = apply(kind, ie.whole, p);
  std::vector<std::pair<int, SignedLpFunction>> values;
  for (const auto& [sign, q] : ie.terms) values.emplace_back(sign, apply(kind, q, p));
  return max_residual(dirs, [&](const std::vector<double>& u, std::vector<double>& v) {
    v.push_back(whole(u));
    for (const auto& [sign, f] : values) v.push_back(-sign * f(u));
  });
}

Residual contravariance_residual(const OperatorKind& kind, const Polytope& P, const Polytope& image,
                                 const LinearMap& phi, double p, const Directions& dirs) {
  const auto lhs = apply(kind, image, p);
  const auto rhs = apply(kind, P, p);
  const DoubleMap inv(phi.inverse());
  return max_residual(dirs, [&](const std::vector<double>& u, std::vector<double>& v) {
    v.push_back(lhs(u));
    v.push_back(-rhs(inv(u)));
  });
}

Residual gl_residual(const OperatorKind& kind, const Polytope& P, const Polytope& image,
                     const LinearMap& phi, double p, const Directions& dirs) {
  if (sgn(phi.det()) <= 0) throw PreconditionError("GL law needs det > 0");
  const double det = phi.det().get_d();
  const double n = static_cast<double>(P.ambient_dim());
  const auto lhs = apply(kind, image, p);
  const auto rhs = apply(kind, P, p, std::pow(det, 1.0 / n));
  const double factor = std::pow(det, p / n);
  const DoubleMap inv(phi.inverse());
  return max_residual(dirs, [&](const std::vector<double>& u, std::vector<double>& v) {
    v.push_back(lhs(u));
    v.push_back(-factor * rhs(inv(u)));
  });
}

Residual homogeneity_residual(const OperatorKind& kind, const Polytope& P, const Rational& s,
                              double p, const Directions& dirs) {
  const auto base = apply(kind, P, p);
  const auto scaled_op = apply(kind, dilate(P, s), p);
  const double factor = std::pow(s.get_d(), P.ambient_dim() - p);
  return max_residual(dirs, [&](const std::vector<double>& u, std::vector<double>& v) {
    v.push_back(scaled_op(u));
    v.push_back(-factor * base(u));
  });
}

bool dissection_holds(int n, const Rational& lambda) {
  const auto simplex = standard_simplex(n);
  const auto cut = halfspace_cut(simplex, dissection_hyperplane(n, lambda));
  return cut.plus == apply_map(simplex, dissection_phi(n, lambda)) &&
         cut.minus == apply_map(simplex, dissection_psi(n, lambda));
}

Residual functional_equation_residual(const OperatorKind& kind, int n, double p, const Rational& s,
                                      const Rational& lambda, const Directions& xs) {
  const auto body = dilate(standard_simplex(n), s);
  const double l = lambda.get_d();
  const double dn = static_cast<double>(n);
  const auto whole = apply(kind, body, p);
  const auto left = apply(kind, body, p, std::pow(l, 1.0 / dn));
  const auto right = apply(kind, body, p, std::pow(1.0 - l, 1.0 / dn));
  const double wl = std::pow(l, p / dn), wr = std::pow(1.0 - l, p / dn);
  const DoubleMap phi_inv(dissection_phi(n, lambda).inverse());
  const DoubleMap psi_inv(dissection_psi(n, lambda).inverse());
  return max_residual(xs, [&](const std::vector<double>& x, std::vector<double>& v) {
    v.push_back(whole(x));
    v.push_back(-wl * left(phi_inv(x)));
    v.push_back(-wr * right(psi_inv(x)));
  });
}

struct SimpleDecomposition {
  Polytope P;
  Polytope cone;                  // P_o
  std::vector<Polytope> facet_cones;  // (F_i)_o
};

SimpleDecomposition prepare_simple_decomposition(const Polytope& P) {
  SimpleDecomposition sd{P, conv_origin(P), {}};
  for (const auto& f : facets_facing_origin(P)) sd.facet_cones.push_back(conv_origin(facet_polytope(P, f)));
  return sd;
}

Residual simple_decomposition_residual(const OperatorKind& kind, const SimpleDecomposition& sd,
                                       double p, const Directions& dirs) {
  const auto lhs = apply(kind, sd.P, p);
  const auto cone = apply(kind, sd.cone, p);
  std::vector<SignedLpFunction> pieces;
  for (const auto& q : sd.facet_cones) pieces.push_back(apply(kind, q, p));
  return max_residual(dirs, [&](const std::vector<double>& u, std::vector<double>& v) {
    v.push_back(lhs(u));
    v.push_back(-cone(u));
    for (const auto& f : pieces) v.push_back(f(u));
  });
}

std::string report_name(std::string_view suite, const OperatorKind& kind) {
  return std::string(suite) + "/" + kind.name();
}

std::vector<CheckReport> empty_reports(std::string_view suite, const std::vector<OperatorKind>& kinds,
                                       double tol) {
  std::vector<CheckReport> reports;
  for (const auto& k : kinds) {
    CheckReport r;
    r.name = report_name(suite, k);
    r.tolerance = tol;
    reports.push_back(std::move(r));
  }
  return reports;
}

bool is_delta(const OperatorKind& k) {
  return k.tag == OperatorTag::DeltaPlus || k.tag == OperatorTag::DeltaMinus;
}

}  // namespace

// ---- CheckReport ------------------------------------------------------------

void CheckReport::absorb(const CheckReport& other) {
  if (cases == 0 || other.max_residual > max_residual || std::isnan(other.max_residual)) {
    if (cases == 0 || other.max_residual > max_residual) worst_case = other.worst_case;
    max_residual = std::isnan(other.max_residual) ? std::numeric_limits<double>::infinity()
                                                  : std::max(max_residual, other.max_residual);
  }
  cases += other.cases;
  passed = max_residual <= tolerance;
}

json to_json(const CheckReport& r) {
  return json{{"name", r.name},
              {"cases", r.cases},
              {"max_residual", r.max_residual},
              {"tolerance", r.tolerance},
              {"passed", r.passed},
              {"worst_case", r.worst_case}};
}

// ---- generators -------------------------------------------------------------

Polytope random_polytope(int n, Rng& rng, bool contains_origin) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const auto m = static_cast<int>(rng.uniform_int(2 * n, 4 * n));
    std::vector<Vector> pts;
    if (!contains_origin) {
      Vector shift;
      for (int i = 0; i < n; ++i) shift.push_back(Rational(static_cast<long>(rng.uniform_int(-2, 2))));
      for (int k = 0; k < m; ++k) pts.push_back(add(random_point(n, rng, 2), shift));
    } else if (rng.uniform_int(0, 2) != 0) {
      // centrally symmetric: o in the interior
      for (int k = 0; k < (m + 1) / 2; ++k) {
        Vector x = random_point(n, rng, 2);
        pts.push_back(scaled(x, Rational(-1)));
        pts.push_back(std::move(x));
      }
    } else {
      // o as a vertex of a polytope inside a random orthant
      std::vector<int> orient;
      for (int i = 0; i < n; ++i) orient.push_back(rng.uniform_int(0, 1) ? 1 : -1);
      pts.push_back(zero_vector(n));
      for (int k = 0; k < m; ++k) {
        Vector x;
        for (int i = 0; i < n; ++i) {
          Rational c = random_rational(rng, 2);
          if (sgn(c) < 0) c = -c;
          x.push_back(c * orient[static_cast<std::size_t>(i)]);
        }
        pts.push_back(std::move(x));
      }
    }
    auto P = Polytope::hull(n, pts);
    if (P.is_full_dimensional()) return P;
  }
  throw std::runtime_error("random_polytope: degenerate samples");
}

Polytope random_origin_avoiding_polytope(int n, Rng& rng) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const auto m = static_cast<int>(rng.uniform_int(2 * n, 4 * n));
    Vector shift;
    for (int i = 0; i < n; ++i) shift.push_back(Rational(static_cast<long>(rng.uniform_int(-2, 2))));
    const auto k = static_cast<std::size_t>(rng.uniform_int(0, n - 1));
    shift[k] = Rational(static_cast<long>(rng.uniform_int(2, 3) * (rng.uniform_int(0, 1) ? 1 : -1)));
    std::vector<Vector> pts;
    for (int j = 0; j < m; ++j) pts.push_back(add(random_point(n, rng, 1), shift));
    auto P = Polytope::hull(n, pts);
    if (P.is_full_dimensional() && !contains_origin(P)) return P;
  }
  throw std::runtime_error("random_origin_avoiding_polytope: degenerate samples");
}

Polytope random_lower_dim_polytope(int n, int d, Rng& rng, AffineMode mode) {
  if (d < 0 || d >= n) throw PreconditionError("lower-dimensional polytope needs 0 <= d < n");
  if (mode == AffineMode::OriginOffHull && d == n) throw PreconditionError("o always in aff P");
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Vector> basis;
    for (int j = 0; j < d; ++j) {
      Vector b;
      for (int i = 0; i < n; ++i) b.push_back(Rational(static_cast<long>(rng.uniform_int(-2, 2))));
      basis.push_back(std::move(b));
    }
    if (d > 0 && rank(basis) != d) continue;
    Vector base = zero_vector(n);
    if (mode == AffineMode::Generic || mode == AffineMode::OriginOffHull) base = random_point(n, rng, 2);
    if (mode == AffineMode::OriginOffHull) {
      auto with_base = basis;
      with_base.push_back(base);
      if (rank(with_base) != d + 1) continue;
    }
    const auto m = static_cast<int>(rng.uniform_int(d + 1, 2 * d + 3));
    std::vector<Vector> pts;
    for (int k = 0; k < m; ++k) {
      Vector x = base;
      for (int j = 0; j < d; ++j)
        x = add(x, scaled(basis[static_cast<std::size_t>(j)], random_rational(rng, 2)));
      if (mode == AffineMode::ContainsOrigin) pts.push_back(scaled(x, Rational(-1)));
      pts.push_back(std::move(x));
    }
    if (mode == AffineMode::ContainsOrigin) pts.push_back(zero_vector(n));
    auto P = Polytope::hull(n, pts);
    if (P.dim() == d) return P;
  }
  throw std::runtime_error("random_lower_dim_polytope: degenerate samples");
}

LinearMap random_unimodular(int n, Rng& rng) {
  LinearMap phi = LinearMap::identity(n);
  const auto factors = rng.uniform_int(5, 15);
  for (std::int64_t f = 0; f < factors; ++f) {
    Matrix m = LinearMap::identity(n).entries();
    if (n >= 3 && rng.uniform_int(0, 3) == 0) {
      // 3-cycle of coordinates
      std::vector<std::size_t> idx(static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      for (std::size_t i = 0; i < 3; ++i) {
        const auto j = static_cast<std::size_t>(rng.uniform_int(static_cast<std::int64_t>(i), n - 1));
        std::swap(idx[i], idx[j]);
      }
      for (auto i : {idx[0], idx[1], idx[2]}) m[i][i] = 0;
      m[idx[1]][idx[0]] = 1;
      m[idx[2]][idx[1]] = 1;
      m[idx[0]][idx[2]] = 1;
    } else {
      const auto i = static_cast<std::size_t>(rng.uniform_int(0, n - 1));
      auto j = static_cast<std::size_t>(rng.uniform_int(0, n - 2));
      if (j >= i) ++j;
      static constexpr long kShears[] = {-2, -1, 1, 2};
      m[i][j] = Rational(kShears[rng.uniform_int(0, 3)]);
    }
    phi = LinearMap(std::move(m)) * phi;
  }
  return phi;
}

LinearMap random_positive_det(int n, Rng& rng) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Matrix m;
    for (int i = 0; i < n; ++i) m.push_back(random_point(n, rng, 2));
    LinearMap phi(m);
    if (sgn(phi.det()) == 0) continue;
    if (sgn(phi.det()) < 0) {
      for (auto& x : m[0]) x = -x;
      phi = LinearMap(std::move(m));
    }
    return phi;
  }
  throw std::runtime_error("random_positive_det: singular samples");
}

Hyperplane random_cut(const Polytope& P, Rng& rng, bool through_origin) {
  const int n = P.ambient_dim();
  Vector normal;
  do {
    normal.clear();
    for (int i = 0; i < n; ++i) normal.push_back(Rational(static_cast<long>(rng.uniform_int(-3, 3))));
  } while (is_zero(normal));
  if (through_origin) return {normal, Rational(0)};
  Rational lo = dot(P.vertices()[0], normal), hi = lo;
  for (const auto& x : P.vertices()) {
    Rational v = dot(x, normal);
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  const auto k = rng.uniform_int(0, 8);  // 0 and 8 touch the boundary
  Rational level(static_cast<long>(k), 8);
  level.canonicalize();
  return {normal, lo + (hi - lo) * level};
}

Directions direction_sample(int n, Rng& rng) { return direction_sample(n, rng.next()); }

LinearMap dissection_phi(int n, const Rational& lambda) {
  std::vector<Vector> cols;
  for (int i = 0; i < n; ++i) cols.push_back(unit_vector(n, i));
  cols[1] = add(scaled(unit_vector(n, 0), 1 - lambda), scaled(unit_vector(n, 1), lambda));
  return LinearMap::from_columns(cols);
}

LinearMap dissection_psi(int n, const Rational& lambda) {
  std::vector<Vector> cols;
  for (int i = 0; i < n; ++i) cols.push_back(unit_vector(n, i));
  cols[0] = add(scaled(unit_vector(n, 0), 1 - lambda), scaled(unit_vector(n, 1), lambda));
  return LinearMap::from_columns(cols);
}

Hyperplane dissection_hyperplane(int n, const Rational& lambda) {
  return {add(scaled(unit_vector(n, 0), lambda), scaled(unit_vector(n, 1), lambda - 1)), Rational(0)};
}

// ---- single-case checks -------------------------------------------------------

CheckReport check_valuation(const OperatorKind& kind, const Polytope& P, const Hyperplane& H,
                            double p, double tol, const Directions& dirs) {
  const auto cut = halfspace_cut(P, H);
  return make_report("valuation/" + kind.name(), tol, valuation_residual(kind, P, cut, p, dirs),
                     {{"polytope", to_json(P)}, {"cut", hyperplane_to_json(H)}});
}

CheckReport check_inclusion_exclusion(const OperatorKind& kind, const std::vector<Polytope>& pieces,
                                      double p, double tol, const Directions& dirs) {
  const auto ie = prepare_inclusion_exclusion(pieces);
  json inputs = json::array();
  for (const auto& q : pieces) inputs.push_back(to_json(q));
  return make_report("inclusion-exclusion/" + kind.name(), tol,
                     inclusion_exclusion_residual(kind, ie, p, dirs), {{"pieces", inputs}});
}

CheckReport check_contravariance(const OperatorKind& kind, const Polytope& P, const LinearMap& phi,
                                 double p, double tol, const Directions& dirs) {
  if (phi.det() != 1) throw PreconditionError("contravariance check needs det(phi) = 1");
  const auto image = apply_map(P, phi);
  return make_report("contravariance/" + kind.name(), tol,
                     contravariance_residual(kind, P, image, phi, p, dirs),
                     {{"polytope", to_json(P)}, {"map", map_to_json(phi)}});
}

CheckReport check_gl_law(const OperatorKind& kind, const Polytope& P, const LinearMap& phi, double p,
                         double tol, const Directions& dirs) {
  const auto image = apply_map(P, phi);
  return make_report("gl-law/" + kind.name(), tol, gl_residual(kind, P, image, phi, p, dirs),
                     {{"polytope", to_json(P)}, {"map", map_to_json(phi)}});
}

CheckReport check_homogeneity(const OperatorKind& kind, int n, double p,
                              const std::vector<Rational>& s_values, double tol) {
  Directions axes;
  for (int i = 0; i < n; ++i) {
    for (double s : {1.0, -1.0}) {
      std::vector<double> u(static_cast<std::size_t>(n), 0.0);
      u[static_cast<std::size_t>(i)] = s;
      axes.push_back(std::move(u));
    }
  }
  const auto simplex = standard_simplex(n);
  CheckReport rep;
  rep.name = "homogeneity/" + kind.name();
  rep.tolerance = tol;
  for (const auto& s : s_values) {
    rep.absorb(make_report(rep.name, tol, homogeneity_residual(kind, simplex, s, p, axes),
                           {{"polytope", to_json(simplex)}, {"s", to_string(s)}}));
  }
  return rep;
}

CheckReport check_functional_equation(const OperatorKind& kind, int n, double p, const Rational& s,
                                      const Rational& lambda, const std::vector<double>& x,
                                      double tol) {
  if (n < 2) throw PreconditionError("functional equation needs n >= 2");
  if (sgn(lambda) <= 0 || lambda >= 1) throw PreconditionError("lambda must lie in (0, 1)");
  if (sgn(s) <= 0) throw PreconditionError("s must be positive");
  Residual r = functional_equation_residual(kind, n, p, s, lambda, {x});
  if (!dissection_holds(n, lambda)) r.value = std::max(r.value, 1.0);
  return make_report("functional-eq/" + kind.name(), tol, r,
                     {{"s", to_string(s)}, {"lambda", to_string(lambda)}});
}

CheckReport check_simple_decomposition(const OperatorKind& kind, const Polytope& P, double p,
                                       double tol, const Directions& dirs) {
  const auto sd = prepare_simple_decomposition(P);
  return make_report("simple-decomposition/" + kind.name(), tol,
                     simple_decomposition_residual(kind, sd, p, dirs), {{"polytope", to_json(P)}});
}

CheckReport check_vanishes(const OperatorKind& kind, const Polytope& P, double p) {
  const auto f = apply(kind, P, p);
  Residual r{static_cast<double>(f.term_count()), {}};
  return make_report("simplicity/" + kind.name(), 0.0, r,
                     {{"polytope", to_json(P)}, {"dim", P.dim()}});
}

CheckReport check_classification_roundtrip(int n, double p, const std::array<double, 4>& c,
                                           double coef_tol, double function_tol,
                                           const std::vector<Polytope>& polytopes,
                                           const Directions& dirs) {
  const auto original = OperatorKind::combination(c[0], c[1], c[2], c[3]);
  const auto d = fit_constants([&](const Polytope& P) { return apply(original, P, p); }, n);
  double coef_residual = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    coef_residual = std::max(coef_residual, std::abs(d[i] - c[i]) / (1.0 + std::abs(c[i])));
  if (std::isnan(coef_residual)) coef_residual = std::numeric_limits<double>::infinity();

  // Negative fitted values would make the combination undefined; clamp and
  // let the coefficient residual report the discrepancy.
  const auto fitted = OperatorKind::combination(std::max(d[0], 0.0), std::max(d[1], 0.0),
                                                std::max(d[2], 0.0), std::max(d[3], 0.0));
  Residual function_residual;
  for (const auto& P : polytopes) {
    const auto a = apply(original, P, p);
    const auto b = apply(fitted, P, p);
    auto r = max_residual(dirs, [&](const std::vector<double>& u, std::vector<double>& v) {
      v.push_back(a(u));
      v.push_back(-b(u));
    });
    if (r.value > function_residual.value || function_residual.direction.empty()) function_residual = r;
  }
  CheckReport rep;
  rep.name = "classification";
  rep.cases = 1;
  rep.tolerance = coef_tol;
  // Report the function residual on the coefficient scale so a single
  // max_residual <= tolerance test covers both criteria.
  rep.max_residual = std::max(coef_residual, function_residual.value * (coef_tol / function_tol));
  rep.worst_case = {{"c", c},
                    {"fitted", d},
                    {"coef_residual", coef_residual},
                    {"function_residual", function_residual.value},
                    {"direction", function_residual.direction}};
  rep.passed = coef_residual <= coef_tol && function_residual.value <= function_tol;
  return rep;
}

// ---- suites -------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "valuation",   "inclusion-exclusion", "contravariance",       "gl-law",        "homogeneity",
      "functional-eq", "simplicity",        "simple-decomposition", "classification"};
  return names;
}

double default_tolerance(std::string_view suite) {
  if (suite == "gl-law") return 1e-7;
  if (suite == "homogeneity") return 1e-9;
  if (suite == "simplicity") return 0.0;
  if (suite == "classification") return 1e-9;
  return 1e-8;
}

std::vector<CheckReport> run_suite(std::string_view suite, const SuiteConfig& cfg) {
  if (cfg.n < 2) throw PreconditionError("n must be at least 2");
  if (!(cfg.p > 1.0)) throw PreconditionError("p must be greater than 1");
  if (cfg.cases < 1) throw PreconditionError("cases must be at least 1");
  if (cfg.tol && !(*cfg.tol > 0.0)) throw PreconditionError("tol must be positive");

  if (suite == "all") {
    std::vector<CheckReport> all;
    for (const auto& name : suite_names()) {
      if (name == "classification" && cfg.n < 3) continue;
      auto part = run_suite(name, cfg);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  if (suite == "classification" && cfg.n < 3)
    throw PreconditionError("classification requires n >= 3");

  const int n = cfg.n;
  const double p = cfg.p;
  const double tol = cfg.tol.value_or(default_tolerance(suite));
  const Rng root(cfg.seed);
  Rng dir_rng = root.split(0xD15EC7);
  const Directions dirs = direction_sample(n, dir_rng);
  std::vector<OperatorKind> kinds = cfg.corrupted ? std::vector<OperatorKind>{{OperatorTag::Corrupted, {}}}
                                                  : all_operator_kinds();
  auto reports = empty_reports(suite, kinds, tol);
  auto case_rng = [&](int c) { return root.split(static_cast<std::uint64_t>(c) + 1); };
  // Pi_p^+- only accept polytopes with o; the other kinds alternate between
  // origin-containing and generic geometry.
  auto use_origin = [&](const OperatorKind& k, int c) { return k.needs_origin() || c % 2 == 1; };

  auto record = [&](std::size_t k, const Residual& r, json inputs) {
    reports[k].absorb(make_report(reports[k].name, tol, r, std::move(inputs)));
  };

  if (suite == "valuation") {
    for (int c = 0; c < cfg.cases; ++c) {
      Rng rng = case_rng(c);
      const auto Po = random_polytope(n, rng, true);
      const auto Ho = random_cut(Po, rng, true);
      const auto Pg = random_polytope(n, rng, false);
      const auto Hg = random_cut(Pg, rng, false);
      const auto cut_o = halfspace_cut(Po, Ho);
      const auto cut_g = halfspace_cut(Pg, Hg);
      for (std::size_t k = 0; k < kinds.size(); ++k) {
        const bool o = use_origin(kinds[k], c);
        const auto& P = o ? Po : Pg;
        const auto& H = o ? Ho : Hg;
        record(k, valuation_residual(kinds[k], P, o ? cut_o : cut_g, p, dirs),
               {{"case", c}, {"polytope", to_json(P)}, {"cut", hyperplane_to_json(H)}});
      }
    }
  } else if (suite == "inclusion-exclusion") {
    for (int c = 0; c < cfg.cases; ++c) {
      Rng rng = case_rng(c);
      std::array<InclusionExclusion, 2> prepared;
      std::array<json, 2> inputs;
      for (int g = 0; g < 2; ++g) {
        const bool o = g == 0;
        const auto P = random_polytope(n, rng, o);
        const auto H1 = random_cut(P, rng, o);
        const auto H2 = random_cut(P, rng, o);
        const auto first = halfspace_cut(P, H1);
        const auto second = halfspace_cut(first.plus, H2);
        prepared[static_cast<std::size_t>(g)] =
            prepare_inclusion_exclusion({first.minus, second.minus, second.plus});
        inputs[static_cast<std::size_t>(g)] = {{"case", c},
                                               {"polytope", to_json(P)},
                                               {"cuts", {hyperplane_to_json(H1), hyperplane_to_json(H2)}}};
      }
      for (std::size_t k = 0; k < kinds.size(); ++k) {
        const std::size_t g = use_origin(kinds[k], c) ? 0 : 1;
        record(k, inclusion_exclusion_residual(kinds[k], prepared[g], p, dirs), inputs[g]);
      }
    }
  } else if (suite == "contravariance" || suite == "gl-law") {
    const bool special = suite == "contravariance";
    for (int c = 0; c < cfg.cases; ++c) {
      Rng rng = case_rng(c);
      const auto phi = special ? random_unimodular(n, rng) : random_positive_det(n, rng);
      const auto Po = random_polytope(n, rng, true);
      const auto Pg = random_polytope(n, rng, false);
      const auto image_o = apply_map(Po, phi);
      const auto image_g = apply_map(Pg, phi);
      for (std::size_t k = 0; k < kinds.size(); ++k) {
        const bool o = use_origin(kinds[k], c);
        const auto& P = o ? Po : Pg;
        const auto& image = o ? image_o : image_g;
        auto r = special ? contravariance_residual(kinds[k], P, image, phi, p, dirs)
                         : gl_residual(kinds[k], P, image, phi, p, dirs);
        record(k, r, {{"case", c}, {"polytope", to_json(P)}, {"map", map_to_json(phi)}});
      }
    }
  } else if (suite == "homogeneity") {
    const std::vector<Rational> s_values = {Rational(1, 2), Rational(2), Rational(3)};
    for (std::size_t k = 0; k < kinds.size(); ++k) {
      auto r = check_homogeneity(kinds[k], n, p, s_values, tol);
      r.worst_case["case"] = "simplex";
      reports[k].absorb(r);
    }
    for (int c = 0; c < cfg.cases; ++c) {
      Rng rng = case_rng(c);
      const auto Po = random_polytope(n, rng, true);
      const auto Pg = random_polytope(n, rng, false);
      const auto& s = s_values[static_cast<std::size_t>(rng.uniform_int(0, 2))];
      for (std::size_t k = 0; k < kinds.size(); ++k) {
        const auto& P = use_origin(kinds[k], c) ? Po : Pg;
        record(k, homogeneity_residual(kinds[k], P, s, p, dirs),
               {{"case", c}, {"polytope", to_json(P)}, {"s", to_string(s)}});
      }
    }
  } else if (suite == "functional-eq") {
    Directions xs;
    std::vector<double> x(static_cast<std::size_t>(n), 0.0);
    x[0] = 1.0;
    x[1] = 1.0;
    xs.push_back(x);
    x[1] = -1.0;
    xs.push_back(x);
    if (n >= 3) {
      std::vector<double> e3(static_cast<std::size_t>(n), 0.0);
      e3[2] = 1.0;
      xs.push_back(e3);
    }
    Rng x_rng = root.split(0xF0E9);
    while (xs.size() < 20) {
      std::vector<double> u(static_cast<std::size_t>(n));
      for (auto& v : u) v = x_rng.normal();
      xs.push_back(std::move(u));
    }
    const std::vector<Rational> lambdas = {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3)};
    const std::vector<Rational> scales = {Rational(1), Rational(2)};
    for (const auto& lambda : lambdas) {
      const bool exact = dissection_holds(n, lambda);
      for (const auto& s : scales) {
        for (std::size_t k = 0; k < kinds.size(); ++k) {
          auto r = functional_equation_residual(kinds[k], n, p, s, lambda, xs);
          if (!exact) r.value = std::max(r.value, 1.0);
          record(k, r, {{"lambda", to_string(lambda)}, {"s", to_string(s)}, {"dissection_exact", exact}});
        }
      }
    }
  } else if (suite == "simplicity") {
    for (int c = 0; c < cfg.cases; ++c) {
      Rng rng = case_rng(c);
      const auto with_origin =
          random_lower_dim_polytope(n, static_cast<int>(rng.uniform_int(0, n - 1)), rng, AffineMode::ContainsOrigin);
      const auto generic =
          random_lower_dim_polytope(n, static_cast<int>(rng.uniform_int(0, n - 1)), rng, AffineMode::Generic);
      // Pi~ and Pi^neg vanish on dim <= n-2, and on dim n-1 when o is in aff P.
      const auto thin = (c % 2 == 0 || n < 2)
                            ? random_lower_dim_polytope(n, static_cast<int>(rng.uniform_int(0, n - 2)), rng,
                                                        AffineMode::Generic)
                            : random_lower_dim_polytope(n, n - 1, rng, AffineMode::OriginInHull);
      for (std::size_t k = 0; k < kinds.size(); ++k) {
        const auto& P = kinds[k].needs_origin() ? with_origin : is_delta(kinds[k]) ? generic : thin;
        auto rep = check_vanishes(kinds[k], P, p);
        rep.name = reports[k].name;
        rep.tolerance = tol;
        rep.passed = rep.max_residual <= tol;
        rep.worst_case["case"] = c;
        reports[k].absorb(rep);
      }
    }
  } else if (suite == "simple-decomposition") {
    std::vector<std::size_t> active;
    for (std::size_t k = 0; k < kinds.size(); ++k) {
      if (is_delta(kinds[k]) || kinds[k].tag == OperatorTag::Corrupted) active.push_back(k);
    }
    for (int c = 0; c < cfg.cases; ++c) {
      Rng rng = case_rng(c);
      const auto sd = prepare_simple_decomposition(random_origin_avoiding_polytope(n, rng));
      for (auto k : active) {
        record(k, simple_decomposition_residual(kinds[k], sd, p, dirs),
               {{"case", c}, {"polytope", to_json(sd.P)}});
      }
    }
    std::vector<CheckReport> kept;
    for (auto k : active) kept.push_back(reports[k]);
    reports = std::move(kept);
  } else if (suite == "classification") {
    Rng poly_rng = root.split(0xC1A55);
    std::vector<Polytope> polytopes;
    for (int i = 0; i < 20; ++i) {
      if (i % 3 == 0) {
        polytopes.push_back(random_polytope(n, poly_rng, true));
      } else if (i % 3 == 1) {
        polytopes.push_back(random_polytope(n, poly_rng, false));
      } else {
        polytopes.push_back(random_origin_avoiding_polytope(n, poly_rng));
      }
    }
    const double function_tol = cfg.tol.value_or(1e-8);
    CheckReport agg;
    agg.name = "classification";
    agg.tolerance = tol;
    for (int c = 0; c < cfg.cases; ++c) {
      Rng rng = case_rng(c);
      std::array<double, 4> coef{};
      if (c == 0) {
        coef = {1.0, 0.0, 0.0, 0.0};
      } else if (c == 1) {
        coef = {0.0, 0.0, 0.0, 0.0};
      } else {
        for (auto& x : coef) x = 3.0 * rng.uniform01();
      }
      auto rep = check_classification_roundtrip(n, p, coef, tol, function_tol, polytopes, dirs);
      const bool ok = rep.passed;
      agg.absorb(rep);
      agg.passed = agg.passed && ok;
    }
    if (agg.max_residual <= tol) agg.passed = true;
    reports = {agg};
  }
  return reports;
}

}  // namespace lpproj
