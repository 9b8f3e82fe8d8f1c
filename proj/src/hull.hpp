#pragma once

#include <cstddef>
#include <vector>

#include "lpproj/rational.hpp"

namespace lpproj::detail {

struct RawFacet {
  IntVector normal;  // primitive, outward
  Rational offset;   // <normal, x> <= offset on the hull
  std::vector<std::size_t> ids;  // vertex indices into the input, sorted
  Rational volume_factor;        // vol_{d-1}(facet) / |normal|
};

struct RawHull {
  std::vector<std::size_t> vertex_ids;  // sorted
  std::vector<RawFacet> facets;
  Rational volume;
};

// Indices of a maximal affinely independent subset, greedily in input order.
std::vector<std::size_t> affine_basis(const std::vector<Vector>& pts);

// Beneath-beyond hull of distinct points spanning R^d (d = pts[0].size()),
// seeded with the affinely independent `simplex`. Exact throughout.
RawHull full_hull(const std::vector<Vector>& pts, const std::vector<std::size_t>& simplex);

// |det(p_i - p_0)| / d! for d + 1 points in R^d.
Rational simplex_volume(const std::vector<Vector>& pts, const std::vector<std::size_t>& ids);

}  // namespace lpproj::detail
