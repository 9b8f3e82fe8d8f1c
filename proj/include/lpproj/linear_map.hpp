#pragma once

#include <span>
#include <vector>

#include "lpproj/rational.hpp"

namespace lpproj {

// An n x n matrix with exact rational entries and its cached determinant.
class LinearMap {
 public:
  explicit LinearMap(Matrix entries);

  static LinearMap identity(int n);
  static LinearMap diagonal(const Vector& diag);
  static LinearMap scaling(int n, const Rational& s);
  // Maps e_i to the i-th given image vector.
  static LinearMap from_columns(const std::vector<Vector>& images);

  int dim() const { return static_cast<int>(entries_.size()); }
  const Rational& det() const { return det_; }
  const Matrix& entries() const { return entries_; }
  const Rational& at(int row, int col) const {
    return entries_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  }
  bool invertible() const { return sgn(det_) != 0; }

  Vector apply(const Vector& x) const;
  std::vector<double> apply(std::span<const double> x) const;

  // Throws PreconditionError when singular.
  LinearMap inverse() const;
  LinearMap transpose() const;
  LinearMap operator*(const LinearMap& rhs) const;
  bool operator==(const LinearMap& rhs) const { return entries_ == rhs.entries_; }

 private:
  Matrix entries_;
  Rational det_;
};

}  // namespace lpproj
