#include "lpproj/rational.hpp"

#include <algorithm>
#include <cctype>

#include "lpproj/errors.hpp"

namespace lpproj {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

// Reduces rows in place to row echelon form; returns pivot columns.
std::vector<int> echelon(std::vector<Vector>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && sgn(rows[sel][col]) == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][col]) == 0) continue;
      Rational f = rows[i][col] / rows[r][col];
      for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("malformed rational '" + std::string(text) + "'");
  if (num[0] == '+') num.remove_prefix(1);
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(std::string(num), 10), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Vector unit_vector(int n, int i) {
  Vector v(static_cast<std::size_t>(n), Rational(0));
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

Vector zero_vector(int n) { return Vector(static_cast<std::size_t>(n), Rational(0)); }

Vector to_rational(const IntVector& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

std::vector<double> to_double(const Vector& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_d());
  return out;
}

std::vector<double> to_double(const IntVector& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_d());
  return out;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("add: length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("sub: length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector scaled(const Vector& a, const Rational& s) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

int rank(std::vector<Vector> rows) { return static_cast<int>(echelon(rows).size()); }

int rank(std::span<const IntVector> rows) {
  std::vector<Vector> r;
  r.reserve(rows.size());
  for (const auto& row : rows) r.push_back(to_rational(row));
  return rank(std::move(r));
}

int affine_rank(std::span<const Vector> points) {
  if (points.empty()) return -1;
  std::vector<Vector> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  return rank(std::move(diffs));
}

std::vector<int> pivot_columns(std::vector<Vector> rows) { return echelon(rows); }

std::vector<Vector> nullspace(std::vector<Vector> rows, int n) {
  const auto pivots = echelon(rows);
  // back-substitute to reduced form
  for (std::size_t r = rows.size(); r-- > 0;) {
    const auto pc = static_cast<std::size_t>(pivots[r]);
    Rational inv = 1 / rows[r][pc];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (sgn(rows[i][pc]) == 0) continue;
      Rational f = rows[i][pc];
      for (std::size_t j = pc; j < static_cast<std::size_t>(n); ++j) rows[i][j] -= f * rows[r][j];
    }
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Vector> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector v = zero_vector(n);
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r)
      v[static_cast<std::size_t>(pivots[r])] = -rows[r][static_cast<std::size_t>(free)];
    basis.push_back(std::move(v));
  }
  return basis;
}

IntVector primitive(const Vector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector w(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    w[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
  }
  if (g == 0) throw PreconditionError("primitive: zero vector");
  for (auto& x : w) x /= g;
  return w;
}

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && sgn(m[sel][col]) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      std::swap(m[sel], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(m[i][col]) == 0) continue;
      Rational f = m[i][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix a = m;
  Matrix inv(n, Vector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && sgn(a[sel][col]) == 0) ++sel;
    if (sel == n) return std::nullopt;
    std::swap(a[sel], a[col]);
    std::swap(inv[sel], inv[col]);
    Rational p = 1 / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= p;
      inv[col][j] *= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || sgn(a[i][col]) == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace lpproj
