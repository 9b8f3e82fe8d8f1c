// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lpproj/operators.hpp"
#include "lpproj/verify.hpp"

using namespace lpproj;

namespace {

constexpr double kExactTol = 1e-12;
constexpr double kValuationTol = 1e-8;
constexpr double kContravarianceTol = 1e-8;
constexpr double kGlTol = 1e-7;
constexpr double kHomogeneityTol = 1e-9;
constexpr double kFunctionalTol = 1e-8;
constexpr double kDecompositionTol = 1e-8;
constexpr double kCoefficientTol = 1e-9;
constexpr double kSimplexSeconds = 1.0;
constexpr double kValuationSeconds = 120.0;

const std::vector<int> kDims = {3, 4};
const std::vector<double> kExponents = {1.5, 2.0, 3.0};
constexpr std::uint64_t kSeed = 20240607;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double factorial(int k) {
  double f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

struct Outcome {
  bool passed = true;
  double worst = 0.0;
  std::string detail;

  void note(double residual, double tol, const std::string& where) {
    if (std::isnan(residual)) residual = INFINITY;
    if (residual > worst) {
      worst = residual;
      if (residual > tol) detail = where;
    }
    if (residual > tol) passed = false;
  }
};

int failures = 0;

void report(int id, const char* title, const Outcome& o, double tol, const std::string& extra = "") {
  std::printf("criterion %2d %s  %s: max residual %.3g (tol %.0e)%s%s%s\n", id,
              o.passed ? "PASS" : "FAIL", title, o.worst, tol, extra.c_str(),
              o.detail.empty() ? "" : ", worst at ", o.detail.c_str());
  std::fflush(stdout);
  if (!o.passed) ++failures;
}

std::vector<double> axis(int n, int i, double s) {
  std::vector<double> e(static_cast<std::size_t>(n), 0.0);
  e[static_cast<std::size_t>(i)] = s;
  return e;
}

std::string where(int n, double p) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "n=%d p=%g", n, p);
  return buf;
}

// Runs a suite over the (n, p) grid and folds every report into one outcome.
Outcome run_grid(const char* suite, int cases, std::optional<double> tol, bool corrupted = false) {
  Outcome o;
  for (int n : kDims) {
    for (double p : kExponents) {
      SuiteConfig cfg;
      cfg.n = n;
      cfg.p = p;
      cfg.cases = cases;
      cfg.seed = kSeed;
      cfg.tol = tol;
      cfg.corrupted = corrupted;
      for (const auto& r : run_suite(suite, cfg)) {
        o.note(r.max_residual, r.tolerance, r.name + " " + where(n, p));
        if (!r.passed) o.passed = false;
      }
    }
  }
  return o;
}

void criterion_1() {
  const auto t0 = Clock::now();
  Outcome o;
  for (int n : {3, 4, 5}) {
    for (double p : {1.5, 2.0, 2.5, 3.0}) {
      const auto T = standard_simplex(n);
      const auto plus = pi_plus(T, p), minus = pi_minus(T, p);
      const double expect = 1 / factorial(n - 1);
      for (int i = 0; i < n; ++i) {
        const auto e = axis(n, i, 1.0), me = axis(n, i, -1.0);
        o.note(std::abs(plus(e) - expect) / expect, kExactTol, "pi-plus " + where(n, p));
        o.note(std::abs(plus(me)) / expect, kExactTol, "pi-plus at -e_i " + where(n, p));
        o.note(std::abs(minus(me) - expect) / expect, kExactTol, "pi-minus " + where(n, p));
        o.note(std::abs(minus(e)) / expect, kExactTol, "pi-minus at e_i " + where(n, p));
      }
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= kSimplexSeconds) o.passed = false;
  char buf[64];
  std::snprintf(buf, sizeof buf, ", %.3f s (limit %.0f s)", secs, kSimplexSeconds);
  report(1, "simplex evaluations", o, kExactTol, buf);
}

void criterion_2() {
  Outcome o;
  // Rows: Pi~^+, Pi^{+,neg}, Pi~^-, Pi^{-,neg}; columns: e_2 - e_1, e_1 - e_2;
  // entries are (n-1)! times the value.
  const double table[4][2] = {{0, 0}, {1, 0}, {0, 0}, {0, 1}};
  Rng rng(kSeed);
  for (int n : {3, 4, 5}) {
    for (double p : {1.5, 2.0, 2.5, 3.0}) {
      const auto S = shifted_simplex(n);
      const double unit = 1 / factorial(n - 1);
      const auto tilde = pi_plus_pos(S, p);
      for (int k = 0; k < 10; ++k) {
        std::vector<double> u(static_cast<std::size_t>(n));
        double sum = 0;
        for (auto& x : u) {
          x = rng.normal();
          sum += x;
        }
        const double expect = std::pow(2.0, 1 - p) * unit * std::pow(std::max(sum, 0.0), p);
        o.note(std::abs(tilde(u) - expect) / std::max(expect, unit), kExactTol,
               "shifted pi-plus-pos " + where(n, p));
      }
      const LpFunction ops[4] = {tilde, pi_plus_neg(S, p), pi_minus_pos(S, p), pi_minus_neg(S, p)};
      for (int col = 0; col < 2; ++col) {
        auto u = axis(n, 1, col == 0 ? 1.0 : -1.0);
        u[0] = -u[1];
        for (int r = 0; r < 4; ++r) {
          const double expect = table[r][col] * unit;
          o.note(std::abs(ops[r](u) - expect) / unit, kExactTol, "table entry " + where(n, p));
        }
      }
    }
  }
  report(2, "shifted-simplex evaluations", o, kExactTol);
}

void criterion_3() {
  const auto t0 = Clock::now();
  Outcome o = run_grid("valuation", 200, kValuationTol);
  const double secs = seconds_since(t0);
  if (secs >= kValuationSeconds) o.passed = false;
  char buf[64];
  std::snprintf(buf, sizeof buf, ", %.1f s (limit %.0f s)", secs, kValuationSeconds);
  report(3, "valuation identity", o, kValuationTol, buf);
}

void criterion_7() {
  Outcome o = run_grid("functional-eq", 1, kFunctionalTol);
  for (int n : {2, 3, 4, 5}) {
    for (const auto& lambda : {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3)}) {
      const auto T = standard_simplex(n);
      const auto cut = halfspace_cut(T, dissection_hyperplane(n, lambda));
      const bool exact = cut.plus.vertices() == apply_map(T, dissection_phi(n, lambda)).vertices() &&
                         cut.minus.vertices() == apply_map(T, dissection_psi(n, lambda)).vertices();
      o.note(exact ? 0.0 : 1.0, kFunctionalTol, "dissection n=" + std::to_string(n));
    }
  }
  report(7, "functional equation and dissection", o, kFunctionalTol);
}

void criterion_8() {
  Outcome o;
  const auto& kinds = all_operator_kinds();
  for (int n : {3, 4, 5}) {
    Rng rng = Rng(kSeed).split(static_cast<std::uint64_t>(n));
    for (int c = 0; c < 50; ++c) {
      const double p = kExponents[static_cast<std::size_t>(c) % kExponents.size()];
      const int low = static_cast<int>(rng.uniform_int(0, n - 1));
      const auto with_origin = random_lower_dim_polytope(n, low, rng, AffineMode::ContainsOrigin);
      const auto generic =
          random_lower_dim_polytope(n, static_cast<int>(rng.uniform_int(0, n - 1)), rng, AffineMode::Generic);
      const auto thin =
          random_lower_dim_polytope(n, static_cast<int>(rng.uniform_int(0, n - 2)), rng, AffineMode::Generic);
      const auto flat = random_lower_dim_polytope(n, n - 1, rng, AffineMode::OriginInHull);
      for (const auto& kind : kinds) {
        const std::string tag = kind.name() + " n=" + std::to_string(n);
        auto count = [&](const Polytope& P) {
          return check_vanishes(kind, P, p).max_residual;
        };
        if (kind.needs_origin()) {
          o.note(count(with_origin), 0.0, tag);
        } else if (kind.tag == OperatorTag::DeltaPlus || kind.tag == OperatorTag::DeltaMinus) {
          o.note(count(generic), 0.0, tag);
        } else {
          o.note(count(thin), 0.0, tag + " dim<=n-2");
          o.note(count(flat), 0.0, tag + " dim=n-1");
        }
      }
    }
  }
  report(8, "simplicity (exact zero)", o, 0.0);
}

void criterion_11() {
  Outcome o;
  std::string lines;
  for (const char* suite : {"valuation", "contravariance"}) {
    SuiteConfig cfg;
    cfg.n = 3;
    cfg.p = 2.0;
    cfg.cases = 200;
    cfg.seed = kSeed;
    cfg.tol = std::string(suite) == "valuation" ? kValuationTol : kContravarianceTol;
    cfg.corrupted = true;
    const auto reports = run_suite(suite, cfg);
    bool detected = false;
    for (const auto& r : reports) {
      detected = detected || !r.passed;
      char buf[96];
      std::snprintf(buf, sizeof buf, ", %s residual %.3g", r.name.c_str(), r.max_residual);
      lines += buf;
    }
    if (!detected) {
      o.passed = false;
      o.detail = std::string(suite) + " did not detect the perturbation";
    }
  }
  std::printf("criterion 11 %s  negative control detected by valuation and contravariance%s%s%s\n",
              o.passed ? "PASS" : "FAIL", lines.c_str(), o.detail.empty() ? "" : ": ",
              o.detail.c_str());
  std::fflush(stdout);
  if (!o.passed) ++failures;
}

}  // namespace

int main() {
  std::printf("acceptance: n in {3, 4} x p in {1.5, 2, 3} unless stated, seed %llu\n",
              static_cast<unsigned long long>(kSeed));
  const std::vector<std::pair<int, std::function<void()>>> criteria = {
      {1, criterion_1},
      {2, criterion_2},
      {3, criterion_3},
      {4, [] { report(4, "SL(n) contravariance", run_grid("contravariance", 200, kContravarianceTol), kContravarianceTol); }},
      {5, [] { report(5, "GL(n) law", run_grid("gl-law", 100, kGlTol), kGlTol); }},
      {6, [] { report(6, "homogeneity exponent n-p", run_grid("homogeneity", 20, kHomogeneityTol), kHomogeneityTol); }},
      {7, criterion_7},
      {8, criterion_8},
      {9, [] { report(9, "simple-valuation decomposition", run_grid("simple-decomposition", 100, kDecompositionTol), kDecompositionTol); }},
      {10, [] {
         // Two fixed quadruples followed by 50 random ones; the suite's own
         // tolerances are 1e-9 on coefficients and 1e-8 on functions.
         Outcome o = run_grid("classification", 52, std::nullopt);
         report(10, "classification round-trip (function tol 1e-8)", o, kCoefficientTol);
       }},
      {11, criterion_11},
  };
  for (const auto& [id, run] : criteria) {
    try {
      run();
    } catch (const std::exception& e) {
      std::printf("criterion %2d FAIL  exception: %s\n", id, e.what());
      ++failures;
    }
  }
  std::printf("acceptance: %d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
