#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lpproj/operators.hpp"
#include "lpproj/polytope.hpp"
#include "lpproj/rng.hpp"

namespace lpproj {

using Directions = std::vector<std::vector<double>>;

struct CheckReport {
  std::string name;
  int cases = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  nlohmann::json worst_case = nlohmann::json::object();
  bool passed = true;

  // Folds another report in: cases add up, the worst residual wins.
  void absorb(const CheckReport& other);
};

nlohmann::json to_json(const CheckReport& r);

// ---- generators -----------------------------------------------------------

// Hull of 2n..4n small-denominator rational points, full-dimensional.
// With contains_origin the origin lies in P (interior or vertex).
Polytope random_polytope(int n, Rng& rng, bool contains_origin);
// Full-dimensional and o not in P.
Polytope random_origin_avoiding_polytope(int n, Rng& rng);

enum class AffineMode {
  Generic,          // arbitrary affine hull
  ContainsOrigin,   // o in P
  OriginInHull,     // o in aff P
  OriginOffHull,    // o not in aff P (needs d < n)
};
// A polytope of dimension exactly d (0 <= d < n).
Polytope random_lower_dim_polytope(int n, int d, Rng& rng, AffineMode mode);

// Product of 5..15 integer elementary shears and even coordinate
// permutations; det is exactly 1.
LinearMap random_unimodular(int n, Rng& rng);
// Small rational entries, det > 0.
LinearMap random_positive_det(int n, Rng& rng);
// A hyperplane meeting P; through o when requested, otherwise at a random
// (sometimes boundary) level between min and max of <x, normal> on P.
Hyperplane random_cut(const Polytope& P, Rng& rng, bool through_origin);
// The structured directions of direction_sample plus 200 unit vectors from rng.
Directions direction_sample(int n, Rng& rng);

// The maps of the simplex dissection T^n = phi_l T^n  u  psi_l T^n.
LinearMap dissection_phi(int n, const Rational& lambda);
LinearMap dissection_psi(int n, const Rational& lambda);
// The hyperplane through o with normal lambda e_1 - (1 - lambda) e_2.
Hyperplane dissection_hyperplane(int n, const Rational& lambda);

// ---- single-case checks ---------------------------------------------------
// Residuals are relative: |identity defect| / (1 + largest |term|), maximised
// over the directions.

CheckReport check_valuation(const OperatorKind& kind, const Polytope& P, const Hyperplane& H,
                            double p, double tol, const Directions& dirs);
// pieces must have a convex union; throws PreconditionError otherwise.
CheckReport check_inclusion_exclusion(const OperatorKind& kind, const std::vector<Polytope>& pieces,
                                      double p, double tol, const Directions& dirs);
CheckReport check_contravariance(const OperatorKind& kind, const Polytope& P, const LinearMap& phi,
                                 double p, double tol, const Directions& dirs);
CheckReport check_gl_law(const OperatorKind& kind, const Polytope& P, const LinearMap& phi, double p,
                         double tol, const Directions& dirs);
// op(sT^n) = s^{n-p} op(T^n) at +-e_i.
CheckReport check_homogeneity(const OperatorKind& kind, int n, double p,
                              const std::vector<Rational>& s_values, double tol);
// The three-term relation at x, plus the exact dissection identities
// T^n cut by H_l equal phi_l T^n and psi_l T^n (residual 1 if they fail).
CheckReport check_functional_equation(const OperatorKind& kind, int n, double p, const Rational& s,
                                      const Rational& lambda, const std::vector<double>& x,
                                      double tol);
// Delta(P) = Delta(P_o) - sum_i Delta((F_i)_o) over the facets facing o.
CheckReport check_simple_decomposition(const OperatorKind& kind, const Polytope& P, double p,
                                       double tol, const Directions& dirs);
// Residual is the number of terms in op(P); exact zero expected.
CheckReport check_vanishes(const OperatorKind& kind, const Polytope& P, double p);
// Builds Combination(c), fits (d1..d4) through probe evaluations, and
// compares Combination(d) with Combination(c) on the given polytopes.
CheckReport check_classification_roundtrip(int n, double p, const std::array<double, 4>& c,
                                           double coef_tol, double function_tol,
                                           const std::vector<Polytope>& polytopes,
                                           const Directions& dirs);

// ---- suites ---------------------------------------------------------------

struct SuiteConfig {
  int n = 3;
  double p = 2.0;
  int cases = 50;
  std::uint64_t seed = 7;
  std::optional<double> tol;  // overrides the per-suite default tolerance
  bool corrupted = false;     // run the negative-control operator instead
};

// valuation, inclusion-exclusion, contravariance, gl-law, homogeneity,
// functional-eq, simplicity, simple-decomposition, classification.
const std::vector<std::string>& suite_names();
double default_tolerance(std::string_view suite);

// One report per operator kind. "all" runs every suite. Throws
// std::invalid_argument for an unknown suite and PreconditionError for
// classification with n < 3.
std::vector<CheckReport> run_suite(std::string_view suite, const SuiteConfig& config);

}  // namespace lpproj
