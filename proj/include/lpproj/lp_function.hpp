#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lpproj/linear_map.hpp"
#include "lpproj/rational.hpp"

namespace lpproj {

// <w, u>_+ = max(<w,u>, 0) and <w, u>_- = max(-<w,u>, 0).
enum class Side { Plus, Minus };

// coef * <direction, .>_sign^p
struct LpTerm {
  IntVector direction;
  Side sign = Side::Plus;
  double coef = 0.0;
};

// A finite sum of terms coef * <w, .>_{+/-}^p: the p-th power of the support
// function of an L_p-Minkowski combination of segments [o, w].
//
// Terms are kept canonical: each direction is primitive with its first
// nonzero entry positive (<-w, .>_- is rewritten as <w, .>_+), the list is
// sorted by (direction, sign) without duplicates, and terms whose maximum
// on the unit sphere is below 1e-14 times the largest such maximum are dropped.
class LpFunction {
 public:
  static constexpr double kDropTolerance = 1e-14;

  // The zero function.
  LpFunction(double p, int n);
  LpFunction(double p, int n, std::vector<LpTerm> terms);

  double p() const { return p_; }
  int dim() const { return n_; }
  const std::vector<LpTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  double operator()(std::span<const double> u) const;

 private:
  double p_;
  int n_;
  std::vector<LpTerm> terms_;
  std::vector<double> dirs_;  // terms_ directions as doubles, row-major
};

double eval(const LpFunction& f, std::span<const double> u);
LpFunction lp_add(const LpFunction& f, const LpFunction& g);
// h(cK, .)^p = c^p h(K, .)^p.
LpFunction scalar_body(const LpFunction& f, double c);
// Multiplies every coefficient by c >= 0 (the C_p scalar action).
LpFunction scale_coefficients(const LpFunction& f, double c);
// f o phi^{-1}.
LpFunction compose_inverse(const LpFunction& f, const LinearMap& phi);

// Canonical term lists agree coefficientwise within tol (relative to
// max(1, |coef|)).
bool structurally_equal(const LpFunction& f, const LpFunction& g, double tol);
// Structural equality, or agreement on the default direction sample within
// tol * (1 + largest sampled value).
bool equal(const LpFunction& f, const LpFunction& g, double tol);
// max |f(u)^{1/p} - g(u)^{1/p}| over the normalized directions.
double sup_distance(const LpFunction& f, const LpFunction& g,
                    const std::vector<std::vector<double>>& dirs);

// The formal difference pos - neg, with common (direction, sign) mass
// cancelled.
class SignedLpFunction {
 public:
  SignedLpFunction(double p, int n);
  explicit SignedLpFunction(LpFunction pos);
  SignedLpFunction(LpFunction pos, LpFunction neg);

  double p() const { return pos_.p(); }
  int dim() const { return pos_.dim(); }
  const LpFunction& pos() const { return pos_; }
  const LpFunction& neg() const { return neg_; }
  bool is_zero() const { return pos_.is_zero() && neg_.is_zero(); }
  std::size_t term_count() const { return pos_.terms().size() + neg_.terms().size(); }

  double operator()(std::span<const double> u) const { return pos_(u) - neg_(u); }

 private:
  LpFunction pos_;
  LpFunction neg_;
};

SignedLpFunction s_add(const SignedLpFunction& f, const SignedLpFunction& g);
SignedLpFunction s_negate(const SignedLpFunction& f);
SignedLpFunction s_scale(const SignedLpFunction& f, double c);
double s_eval(const SignedLpFunction& f, std::span<const double> u);
SignedLpFunction s_compose_inverse(const SignedLpFunction& f, const LinearMap& phi);

// All +-e_i, all (+-e_i +-e_j)/sqrt(2) for i < j, then 200 pseudo-random
// unit vectors drawn from `seed`.
std::vector<std::vector<double>> direction_sample(int n, std::uint64_t seed = 0x5eed);
inline constexpr int kRandomDirections = 200;

}  // namespace lpproj
