#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lpproj {

// GMP keeps mpq_class values canonical (lowest terms, positive denominator)
// after every arithmetic operation; parse_rational canonicalizes on input.
using Integer = mpz_class;
using Rational = mpq_class;
using Vector = std::vector<Rational>;
using IntVector = std::vector<Integer>;
using Matrix = std::vector<Vector>;  // row-major

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

Vector unit_vector(int n, int i);
Vector zero_vector(int n);
Vector to_rational(const IntVector& v);
std::vector<double> to_double(const Vector& v);
std::vector<double> to_double(const IntVector& v);

Rational dot(const Vector& a, const Vector& b);
Rational dot(const IntVector& a, const Vector& b);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scaled(const Vector& a, const Rational& s);
bool is_zero(const Vector& v);

// Rank of the row set, by exact elimination.
int rank(std::vector<Vector> rows);
int rank(std::span<const IntVector> rows);

// Affine rank of a point set: dimension of its affine hull (-1 when empty).
int affine_rank(std::span<const Vector> points);

// Basis of {x : <row, x> = 0 for every row}, n = ambient length.
std::vector<Vector> nullspace(std::vector<Vector> rows, int n);

// Column indices of the pivots after reducing `rows` to echelon form.
std::vector<int> pivot_columns(std::vector<Vector> rows);

// The unique primitive integer vector positively proportional to v (v != 0).
IntVector primitive(const Vector& v);

Rational determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace lpproj
