#include "lpproj/linear_map.hpp"

#include "lpproj/errors.hpp"

namespace lpproj {

LinearMap::LinearMap(Matrix entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  if (n == 0) throw DimensionError("LinearMap: empty matrix");
  for (const auto& row : entries_) {
    if (row.size() != n) throw DimensionError("LinearMap: matrix is not square");
  }
  det_ = determinant(entries_);
}

LinearMap LinearMap::identity(int n) { return scaling(n, Rational(1)); }

LinearMap LinearMap::diagonal(const Vector& diag) {
  const std::size_t n = diag.size();
  Matrix m(n, Vector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = diag[i];
  return LinearMap(std::move(m));
}

LinearMap LinearMap::scaling(int n, const Rational& s) {
  return diagonal(Vector(static_cast<std::size_t>(n), s));
}

LinearMap LinearMap::from_columns(const std::vector<Vector>& images) {
  const std::size_t n = images.size();
  Matrix m(n, Vector(n, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) {
    if (images[j].size() != n) throw DimensionError("LinearMap: column length mismatch");
    for (std::size_t i = 0; i < n; ++i) m[i][j] = images[j][i];
  }
  return LinearMap(std::move(m));
}

Vector LinearMap::apply(const Vector& x) const {
  if (x.size() != entries_.size()) throw DimensionError("LinearMap::apply: length mismatch");
  Vector y(x.size(), Rational(0));
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (sgn(entries_[i][j]) != 0) y[i] += entries_[i][j] * x[j];
    }
  }
  return y;
}

std::vector<double> LinearMap::apply(std::span<const double> x) const {
  if (x.size() != entries_.size()) throw DimensionError("LinearMap::apply: length mismatch");
  std::vector<double> y(x.size(), 0.0);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += entries_[i][j].get_d() * x[j];
  }
  return y;
}

LinearMap LinearMap::inverse() const {
  auto inv = lpproj::inverse(entries_);
  if (!inv) throw PreconditionError("linear map is singular");
  return LinearMap(std::move(*inv));
}

LinearMap LinearMap::transpose() const {
  const std::size_t n = entries_.size();
  Matrix t(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[j][i] = entries_[i][j];
  }
  return LinearMap(std::move(t));
}

LinearMap LinearMap::operator*(const LinearMap& rhs) const {
  const std::size_t n = entries_.size();
  if (rhs.entries_.size() != n) throw DimensionError("LinearMap product: size mismatch");
  Matrix m(n, Vector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(entries_[i][k]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) m[i][j] += entries_[i][k] * rhs.entries_[k][j];
    }
  }
  return LinearMap(std::move(m));
}

}  // namespace lpproj
