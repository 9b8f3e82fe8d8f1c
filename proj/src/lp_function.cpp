#include "lpproj/lp_function.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "lpproj/errors.hpp"
#include "lpproj/rng.hpp"

namespace lpproj {

namespace {

bool term_less(const LpTerm& a, const LpTerm& b) {
  return std::tie(a.direction, a.sign) < std::tie(b.direction, b.sign);
}

bool same_key(const LpTerm& a, const LpTerm& b) {
  return a.sign == b.sign && a.direction == b.direction;
}

// Largest value of the term on the unit sphere.
double term_weight(const LpTerm& t, double p) {
  double sq = 0.0;
  for (const auto& x : t.direction) sq += x.get_d() * x.get_d();
  return t.coef * std::pow(sq, p / 2.0);
}

Side flip(Side s) { return s == Side::Plus ? Side::Minus : Side::Plus; }

void check_compatible(const LpFunction& f, const LpFunction& g, const char* what) {
  if (f.dim() != g.dim() || f.p() != g.p())
    throw DimensionError(std::string(what) + ": mismatched p or n");
}

std::vector<LpTerm> canonical_terms(double p, int n, std::vector<LpTerm> terms) {
  for (auto& t : terms) {
    if (t.direction.size() != static_cast<std::size_t>(n))
      throw DimensionError("LpTerm direction has wrong length");
    if (!std::isfinite(t.coef) || t.coef < 0.0)
      throw PreconditionError("LpTerm coefficient must be finite and nonnegative");
    Integer g = 0;
    for (const auto& x : t.direction) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) throw PreconditionError("LpTerm direction is zero");
    if (g != 1) {
      for (auto& x : t.direction) x /= g;
      t.coef *= std::pow(g.get_d(), p);
    }
    auto first = std::find_if(t.direction.begin(), t.direction.end(),
                              [](const Integer& x) { return sgn(x) != 0; });
    if (sgn(*first) < 0) {
      for (auto& x : t.direction) x = -x;
      t.sign = flip(t.sign);
    }
  }
  std::sort(terms.begin(), terms.end(), term_less);
  std::vector<LpTerm> merged;
  for (auto& t : terms) {
    if (!merged.empty() && same_key(merged.back(), t)) {
      merged.back().coef += t.coef;
    } else {
      merged.push_back(std::move(t));
    }
  }
  double max_weight = 0.0;
  for (const auto& t : merged) max_weight = std::max(max_weight, term_weight(t, p));
  const double cutoff = LpFunction::kDropTolerance * max_weight;
  std::erase_if(merged, [&](const LpTerm& t) { return t.coef == 0.0 || term_weight(t, p) < cutoff; });
  return merged;
}

}  // namespace

LpFunction::LpFunction(double p, int n) : LpFunction(p, n, {}) {}

LpFunction::LpFunction(double p, int n, std::vector<LpTerm> terms) : p_(p), n_(n) {
  if (!(p > 1.0) || !std::isfinite(p)) throw PreconditionError("p must be a real number > 1");
  if (n < 1) throw DimensionError("n must be at least 1");
  terms_ = canonical_terms(p, n, std::move(terms));
  dirs_.reserve(terms_.size() * static_cast<std::size_t>(n));
  for (const auto& t : terms_) {
    for (const auto& x : t.direction) dirs_.push_back(x.get_d());
  }
}

double LpFunction::operator()(std::span<const double> u) const {
  if (u.size() != static_cast<std::size_t>(n_)) throw DimensionError("eval: wrong dimension");
  double acc = 0.0;
  const double* w = dirs_.data();
  for (const auto& t : terms_) {
    double d = 0.0;
    for (int i = 0; i < n_; ++i) d += w[i] * u[static_cast<std::size_t>(i)];
    w += n_;
    if (t.sign == Side::Minus) d = -d;
    if (d > 0.0) acc += t.coef * std::pow(d, p_);
  }
  return acc;
}

double eval(const LpFunction& f, std::span<const double> u) { return f(u); }

LpFunction lp_add(const LpFunction& f, const LpFunction& g) {
  check_compatible(f, g, "lp_add");
  std::vector<LpTerm> terms = f.terms();
  terms.insert(terms.end(), g.terms().begin(), g.terms().end());
  return LpFunction(f.p(), f.dim(), std::move(terms));
}

LpFunction scalar_body(const LpFunction& f, double c) {
  if (!(c >= 0.0)) throw PreconditionError("scalar_body: factor must be nonnegative");
  return scale_coefficients(f, std::pow(c, f.p()));
}

LpFunction scale_coefficients(const LpFunction& f, double c) {
  if (!(c >= 0.0)) throw PreconditionError("scale_coefficients: factor must be nonnegative");
  std::vector<LpTerm> terms = f.terms();
  for (auto& t : terms) t.coef *= c;
  return LpFunction(f.p(), f.dim(), std::move(terms));
}

LpFunction compose_inverse(const LpFunction& f, const LinearMap& phi) {
  if (phi.dim() != f.dim()) throw DimensionError("compose_inverse: dimension mismatch");
  const LinearMap inv = phi.inverse();
  const auto n = static_cast<std::size_t>(f.dim());
  std::vector<LpTerm> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    // <w, phi^{-1} u> = <phi^{-t} w, u>
    Vector image(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        if (sgn(t.direction[i]) != 0) image[j] += inv.at(static_cast<int>(i), static_cast<int>(j)) * t.direction[i];
      }
    }
    IntVector w = primitive(image);
    std::size_t k = 0;
    while (sgn(w[k]) == 0) ++k;
    const Rational scale = image[k] / Rational(w[k]);
    terms.push_back({std::move(w), t.sign, t.coef * std::pow(scale.get_d(), f.p())});
  }
  return LpFunction(f.p(), f.dim(), std::move(terms));
}

bool structurally_equal(const LpFunction& f, const LpFunction& g, double tol) {
  check_compatible(f, g, "equal");
  if (f.terms().size() != g.terms().size()) return false;
  for (std::size_t i = 0; i < f.terms().size(); ++i) {
    const auto& a = f.terms()[i];
    const auto& b = g.terms()[i];
    if (!same_key(a, b)) return false;
    const double scale = std::max({1.0, a.coef, b.coef});
    if (std::abs(a.coef - b.coef) > tol * scale) return false;
  }
  return true;
}

bool equal(const LpFunction& f, const LpFunction& g, double tol) {
  if (structurally_equal(f, g, tol)) return true;
  double worst = 0.0, scale = 0.0;
  for (const auto& u : direction_sample(f.dim())) {
    const double a = f(u), b = g(u);
    worst = std::max(worst, std::abs(a - b));
    scale = std::max({scale, std::abs(a), std::abs(b)});
  }
  return worst <= tol * (1.0 + scale);
}

double sup_distance(const LpFunction& f, const LpFunction& g,
                    const std::vector<std::vector<double>>& dirs) {
  check_compatible(f, g, "sup_distance");
  double worst = 0.0;
  for (const auto& d : dirs) {
    double norm = 0.0;
    for (double x : d) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    std::vector<double> u(d);
    for (double& x : u) x /= norm;
    const double a = std::pow(f(u), 1.0 / f.p());
    const double b = std::pow(g(u), 1.0 / g.p());
    worst = std::max(worst, std::abs(a - b));
  }
  return worst;
}

SignedLpFunction::SignedLpFunction(double p, int n) : pos_(p, n), neg_(p, n) {}

SignedLpFunction::SignedLpFunction(LpFunction pos)
    : SignedLpFunction(pos, LpFunction(pos.p(), pos.dim())) {}

SignedLpFunction::SignedLpFunction(LpFunction pos, LpFunction neg)
    : pos_(std::move(pos)), neg_(std::move(neg)) {
  check_compatible(pos_, neg_, "SignedLpFunction");
  std::vector<LpTerm> a = pos_.terms(), b = neg_.terms();
  const double p = pos_.p();
  double max_weight = 0.0;
  for (const auto& t : a) max_weight = std::max(max_weight, term_weight(t, p));
  for (const auto& t : b) max_weight = std::max(max_weight, term_weight(t, p));
  bool cancelled = false;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (term_less(a[i], b[j])) {
      ++i;
    } else if (term_less(b[j], a[i])) {
      ++j;
    } else {
      const double m = std::min(a[i].coef, b[j].coef);
      a[i].coef -= m;
      b[j].coef -= m;
      cancelled = true;
      ++i;
      ++j;
    }
  }
  if (!cancelled) return;
  const double cutoff = LpFunction::kDropTolerance * max_weight;
  auto small = [&](const LpTerm& t) { return term_weight(t, p) <= cutoff; };
  std::erase_if(a, small);
  std::erase_if(b, small);
  pos_ = LpFunction(pos_.p(), pos_.dim(), std::move(a));
  neg_ = LpFunction(neg_.p(), neg_.dim(), std::move(b));
}

SignedLpFunction s_add(const SignedLpFunction& f, const SignedLpFunction& g) {
  return SignedLpFunction(lp_add(f.pos(), g.pos()), lp_add(f.neg(), g.neg()));
}

SignedLpFunction s_negate(const SignedLpFunction& f) { return SignedLpFunction(f.neg(), f.pos()); }

SignedLpFunction s_scale(const SignedLpFunction& f, double c) {
  return SignedLpFunction(scale_coefficients(f.pos(), c), scale_coefficients(f.neg(), c));
}

double s_eval(const SignedLpFunction& f, std::span<const double> u) { return f(u); }

SignedLpFunction s_compose_inverse(const SignedLpFunction& f, const LinearMap& phi) {
  return SignedLpFunction(compose_inverse(f.pos(), phi), compose_inverse(f.neg(), phi));
}

std::vector<std::vector<double>> direction_sample(int n, std::uint64_t seed) {
  if (n < 1) throw DimensionError("direction_sample: n must be at least 1");
  const auto dim = static_cast<std::size_t>(n);
  std::vector<std::vector<double>> dirs;
  for (std::size_t i = 0; i < dim; ++i) {
    for (double s : {1.0, -1.0}) {
      std::vector<double> u(dim, 0.0);
      u[i] = s;
      dirs.push_back(std::move(u));
    }
  }
  const double r = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      for (double si : {1.0, -1.0}) {
        for (double sj : {1.0, -1.0}) {
          std::vector<double> u(dim, 0.0);
          u[i] = si * r;
          u[j] = sj * r;
          dirs.push_back(std::move(u));
        }
      }
    }
  }
  Rng rng(seed);
  for (int k = 0; k < kRandomDirections; ++k) {
    std::vector<double> u(dim);
    double norm = 0.0;
    do {
      norm = 0.0;
      for (auto& x : u) {
        x = rng.normal();
        norm += x * x;
      }
    } while (norm < 1e-12);
    norm = std::sqrt(norm);
    for (auto& x : u) x /= norm;
    dirs.push_back(std::move(u));
  }
  return dirs;
}

}  // namespace lpproj
