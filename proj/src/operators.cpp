#include "lpproj/operators.hpp"

#include <cmath>
#include <cstdio>

#include "lpproj/errors.hpp"

namespace lpproj {

namespace {

enum class Select { AvoidsOrigin, Positive, Negative };

void check_args(double p, double dilation) {
  if (!(p > 1.0) || !std::isfinite(p)) throw PreconditionError("p must be a real number > 1");
  if (!(dilation > 0.0) || !std::isfinite(dilation))
    throw PreconditionError("dilation must be a positive real");
}

// sum over selected v in N(sP) of vol(F(sP,v)) |h(sP,v)|^{1-p} <v,.>_side^p.
// With v = w/|w|, vol = factor*|w| and h = a/|w| this term equals
// factor * |a|^{1-p} * <w,.>_side^p, so no square roots enter.
LpFunction facet_sum(const Polytope& P, double p, double dilation, Select select, Side side,
                     double corrupt = 0.0) {
  check_args(p, dilation);
  const int n = P.ambient_dim();
  const double volume_scale = std::pow(dilation, n - 1);
  std::vector<LpTerm> terms;
  for (const auto& f : P.normal_facets()) {
    const int sg = sgn(f.support);
    bool take = false;
    switch (select) {
      case Select::AvoidsOrigin: take = sg != 0; break;
      case Select::Positive: take = sg > 0; break;
      case Select::Negative: take = sg < 0; break;
    }
    if (!take) continue;
    const double h = std::abs(f.support.get_d()) * dilation;
    double coef = f.volume_factor.get_d() * volume_scale * std::pow(h, 1.0 - p);
    if (corrupt != 0.0 && f.vertex_ids.size() == static_cast<std::size_t>(n) &&
        sgn(f.direction[0]) > 0)
      coef *= 1.0 + corrupt;
    terms.push_back({f.direction, side, coef});
  }
  return LpFunction(p, n, std::move(terms));
}

void require_origin(const Polytope& P, const char* op) {
  if (!P.is_empty() && !contains_origin(P))
    throw PreconditionError(std::string(op) + " requires a polytope containing the origin");
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

LpFunction pi_plus(const Polytope& P, double p, double dilation) {
  require_origin(P, "pi-plus");
  return facet_sum(P, p, dilation, Select::AvoidsOrigin, Side::Plus);
}

LpFunction pi_minus(const Polytope& P, double p, double dilation) {
  require_origin(P, "pi-minus");
  return facet_sum(P, p, dilation, Select::AvoidsOrigin, Side::Minus);
}

LpFunction pi_plus_pos(const Polytope& P, double p, double dilation) {
  return facet_sum(P, p, dilation, Select::Positive, Side::Plus);
}

LpFunction pi_minus_pos(const Polytope& P, double p, double dilation) {
  return facet_sum(P, p, dilation, Select::Positive, Side::Minus);
}

LpFunction pi_plus_neg(const Polytope& P, double p, double dilation) {
  return facet_sum(P, p, dilation, Select::Negative, Side::Plus);
}

LpFunction pi_minus_neg(const Polytope& P, double p, double dilation) {
  return facet_sum(P, p, dilation, Select::Negative, Side::Minus);
}

SignedLpFunction delta_plus(const Polytope& P, double p, double dilation) {
  return SignedLpFunction(pi_plus_pos(P, p, dilation), pi_minus_neg(P, p, dilation));
}

SignedLpFunction delta_minus(const Polytope& P, double p, double dilation) {
  return SignedLpFunction(pi_minus_pos(P, p, dilation), pi_plus_neg(P, p, dilation));
}

OperatorKind OperatorKind::combination(double c1, double c2, double c3, double c4) {
  for (double c : {c1, c2, c3, c4}) {
    if (!(c >= 0.0) || !std::isfinite(c))
      throw PreconditionError("combination coefficients must be finite and nonnegative");
  }
  return {OperatorTag::Combination, {c1, c2, c3, c4}};
}

bool OperatorKind::needs_origin() const {
  return tag == OperatorTag::PiPlus || tag == OperatorTag::PiMinus;
}

std::string OperatorKind::name() const {
  switch (tag) {
    case OperatorTag::PiPlus: return "pi-plus";
    case OperatorTag::PiMinus: return "pi-minus";
    case OperatorTag::PiPlusPos: return "pi-plus-pos";
    case OperatorTag::PiMinusPos: return "pi-minus-pos";
    case OperatorTag::PiPlusNeg: return "pi-plus-neg";
    case OperatorTag::PiMinusNeg: return "pi-minus-neg";
    case OperatorTag::DeltaPlus: return "delta-plus";
    case OperatorTag::DeltaMinus: return "delta-minus";
    case OperatorTag::Corrupted: return "corrupted";
    case OperatorTag::Combination: break;
  }
  std::string s = "combination(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", c[i]);
    s += buf;
  }
  return s + ")";
}

std::optional<OperatorKind> parse_operator(std::string_view name) {
  for (auto tag : {OperatorTag::PiPlus, OperatorTag::PiMinus, OperatorTag::PiPlusPos,
                   OperatorTag::PiMinusPos, OperatorTag::PiPlusNeg, OperatorTag::PiMinusNeg,
                   OperatorTag::DeltaPlus, OperatorTag::DeltaMinus, OperatorTag::Corrupted}) {
    OperatorKind k{tag, {}};
    if (k.name() == name) return k;
  }
  return std::nullopt;
}

const std::vector<OperatorKind>& all_operator_kinds() {
  static const std::vector<OperatorKind> kinds = {
      {OperatorTag::PiPlus, {}},     {OperatorTag::PiMinus, {}},    {OperatorTag::PiPlusPos, {}},
      {OperatorTag::PiMinusPos, {}}, {OperatorTag::PiPlusNeg, {}},  {OperatorTag::PiMinusNeg, {}},
      {OperatorTag::DeltaPlus, {}},  {OperatorTag::DeltaMinus, {}},
  };
  return kinds;
}

SignedLpFunction apply(const OperatorKind& kind, const Polytope& P, double p, double dilation) {
  switch (kind.tag) {
    case OperatorTag::PiPlus: return SignedLpFunction(pi_plus(P, p, dilation));
    case OperatorTag::PiMinus: return SignedLpFunction(pi_minus(P, p, dilation));
    case OperatorTag::PiPlusPos: return SignedLpFunction(pi_plus_pos(P, p, dilation));
    case OperatorTag::PiMinusPos: return SignedLpFunction(pi_minus_pos(P, p, dilation));
    case OperatorTag::PiPlusNeg: return SignedLpFunction(pi_plus_neg(P, p, dilation));
    case OperatorTag::PiMinusNeg: return SignedLpFunction(pi_minus_neg(P, p, dilation));
    case OperatorTag::DeltaPlus: return delta_plus(P, p, dilation);
    case OperatorTag::DeltaMinus: return delta_minus(P, p, dilation);
    case OperatorTag::Corrupted:
      return SignedLpFunction(
          facet_sum(P, p, dilation, Select::Positive, Side::Plus, 1e-3));
    case OperatorTag::Combination: break;
  }
  for (double c : kind.c) {
    if (!(c >= 0.0)) throw PreconditionError("combination coefficients must be nonnegative");
  }
  LpFunction sum = scale_coefficients(pi_plus_pos(P, p, dilation), kind.c[0]);
  sum = lp_add(sum, scale_coefficients(pi_minus_pos(P, p, dilation), kind.c[1]));
  sum = lp_add(sum, scale_coefficients(pi_plus_neg(P, p, dilation), kind.c[2]));
  sum = lp_add(sum, scale_coefficients(pi_minus_neg(P, p, dilation), kind.c[3]));
  return SignedLpFunction(std::move(sum));
}

std::array<double, 4> fit_constants(const Valuation& phi, int n) {
  if (n < 3) throw PreconditionError("fit_constants requires n >= 3");
  const double scale = factorial(n - 1);
  const auto simplex = standard_simplex(n);
  const auto shifted = shifted_simplex(n);
  std::vector<double> e1(static_cast<std::size_t>(n), 0.0);
  e1[0] = 1.0;
  std::vector<double> minus_e1(e1);
  minus_e1[0] = -1.0;
  std::vector<double> e2_minus_e1(static_cast<std::size_t>(n), 0.0);
  e2_minus_e1[0] = -1.0;
  e2_minus_e1[1] = 1.0;
  std::vector<double> e1_minus_e2(static_cast<std::size_t>(n), 0.0);
  e1_minus_e2[0] = 1.0;
  e1_minus_e2[1] = -1.0;

  const auto at_simplex = phi(simplex);
  const auto at_shifted = phi(shifted);
  return {scale * at_simplex(e1), scale * at_simplex(minus_e1), scale * at_shifted(e2_minus_e1),
          scale * at_shifted(e1_minus_e2)};
}

}  // namespace lpproj
