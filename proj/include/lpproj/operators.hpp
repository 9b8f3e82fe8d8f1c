#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "lpproj/lp_function.hpp"
#include "lpproj/polytope.hpp"

namespace lpproj {

// The operators are evaluated from facet data (N(P), h(P,v), vol_{n-1}F).
// Every entry point takes an optional real dilation s > 0 and then acts on
// sP: supports scale by s and facet volumes by s^{n-1}, while all sign
// decisions stay exact because they only depend on P.

// h(Pi_p^+ P, .)^p: sum over facets with o not in F(P,v); requires o in P.
LpFunction pi_plus(const Polytope& P, double p, double dilation = 1.0);
LpFunction pi_minus(const Polytope& P, double p, double dilation = 1.0);
// Facets with h(P,v) > 0.
LpFunction pi_plus_pos(const Polytope& P, double p, double dilation = 1.0);
LpFunction pi_minus_pos(const Polytope& P, double p, double dilation = 1.0);
// Facets with h(P,v) < 0, weighted by |h(P,v)|^{1-p}.
LpFunction pi_plus_neg(const Polytope& P, double p, double dilation = 1.0);
LpFunction pi_minus_neg(const Polytope& P, double p, double dilation = 1.0);
// Delta^+ = h(Pi~^+ P)^p - h(Pi^{-,neg} P)^p, Delta^- = h(Pi~^- P)^p - h(Pi^{+,neg} P)^p.
SignedLpFunction delta_plus(const Polytope& P, double p, double dilation = 1.0);
SignedLpFunction delta_minus(const Polytope& P, double p, double dilation = 1.0);

enum class OperatorTag {
  PiPlus,
  PiMinus,
  PiPlusPos,
  PiMinusPos,
  PiPlusNeg,
  PiMinusNeg,
  DeltaPlus,
  DeltaMinus,
  Combination,
  // Negative control: Pi~^+ with the coefficient of every simplicial facet
  // whose direction has a positive first entry scaled by 1 + 1e-3.
  Corrupted,
};

struct OperatorKind {
  OperatorTag tag = OperatorTag::PiPlus;
  // Coefficients of Pi~^+, Pi~^-, Pi^{+,neg}, Pi^{-,neg} for Combination.
  std::array<double, 4> c{};

  static OperatorKind combination(double c1, double c2, double c3, double c4);
  // True for Pi_p^+ and Pi_p^-, which are only defined on polytopes with o.
  bool needs_origin() const;
  std::string name() const;
  bool operator==(const OperatorKind&) const = default;
};

// pi-plus, pi-minus, pi-plus-pos, pi-minus-pos, pi-plus-neg, pi-minus-neg,
// delta-plus, delta-minus, corrupted.
std::optional<OperatorKind> parse_operator(std::string_view name);

// The six projection-body operators and Delta_p^+-.
const std::vector<OperatorKind>& all_operator_kinds();

SignedLpFunction apply(const OperatorKind& kind, const Polytope& P, double p, double dilation = 1.0);

using Valuation = std::function<SignedLpFunction(const Polytope&)>;

// Probe constants (d1, d2, d3, d4): (n-1)! times the values of phi at
// (T^n, e_1), (T^n, -e_1), (e_1 + T^n, e_2 - e_1), (e_1 + T^n, e_1 - e_2).
std::array<double, 4> fit_constants(const Valuation& phi, int n);

}  // namespace lpproj
