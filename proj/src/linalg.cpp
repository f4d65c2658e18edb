#include "cremona/linalg.hpp"

#include <cstdint>

namespace cremona {

namespace {

std::vector<Vector> nullspace_mod_p(const Matrix& a, std::size_t ncols, const Field& field) {
  const std::uint64_t p = field.characteristic();
  std::vector<std::vector<std::uint64_t>> m;
  m.reserve(a.size());
  for (const auto& row : a) {
    std::vector<std::uint64_t> r(ncols);
    for (std::size_t j = 0; j < ncols; ++j) r[j] = row[j].residue();
    m.push_back(std::move(r));
  }
  auto mulmod = [p](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % p);
  };
  auto inv = [&](std::uint64_t x) {
    std::uint64_t r = 1, b = x, e = p - 2;
    while (e) {
      if (e & 1) r = mulmod(r, b);
      b = mulmod(b, b);
      e >>= 1;
    }
    return r;
  };

  std::vector<std::size_t> pivots;
  std::vector<int> pivot_row(ncols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    const std::uint64_t s = inv(m[r][c]);
    for (std::size_t j = c; j < ncols; ++j) m[r][j] = mulmod(m[r][j], s);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::uint64_t f = m[i][c];
      for (std::size_t j = c; j < ncols; ++j) {
        if (m[r][j] == 0) continue;
        const std::uint64_t t = mulmod(f, m[r][j]);
        m[i][j] = m[i][j] >= t ? m[i][j] - t : m[i][j] + p - t;
      }
    }
    pivot_row[c] = static_cast<int>(r);
    pivots.push_back(c);
    ++r;
  }

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (pivot_row[f] >= 0) continue;
    Vector v(ncols, Scalar::zero(field));
    v[f] = Scalar::one(field);
    for (std::size_t c : pivots) {
      const std::uint64_t x = m[static_cast<std::size_t>(pivot_row[c])][f];
      if (x) v[c] = Scalar::from_int(field, static_cast<long>(p - x));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> nullspace_rational(const Matrix& a, std::size_t ncols, const Field& field) {
  // Integer copy, each row scaled by the lcm of its denominators.
  std::vector<std::vector<mpz_class>> m;
  m.reserve(a.size());
  for (const auto& row : a) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < ncols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), row[j].rational().get_den_mpz_t());
    std::vector<mpz_class> r(ncols);
    for (std::size_t j = 0; j < ncols; ++j) {
      const mpq_class& q = row[j].rational();
      r[j] = q.get_num() * (l / q.get_den());
    }
    m.push_back(std::move(r));
  }

  // Fraction-free row echelon form: every entry stays an integer minor.
  std::vector<std::size_t> pivots;
  std::vector<int> pivot_row(ncols, -1);
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) {
        mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivot_row[c] = static_cast<int>(r);
    pivots.push_back(c);
    ++r;
  }

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (pivot_row[f] >= 0) continue;
    std::vector<mpq_class> x(ncols, mpq_class(0));
    x[f] = 1;
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      const std::size_t c = *it;
      const auto& row = m[static_cast<std::size_t>(pivot_row[c])];
      mpq_class s = 0;
      for (std::size_t j = c + 1; j < ncols; ++j)
        if (row[j] != 0 && x[j] != 0) s += mpq_class(row[j]) * x[j];
      x[c] = -s / mpq_class(row[c]);
    }
    Vector v;
    v.reserve(ncols);
    for (auto& q : x) v.push_back(Scalar::from_rational(field, q));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<Vector> nullspace(const Matrix& a, std::size_t ncols, const Field& field) {
  for (const auto& row : a)
    if (row.size() != ncols) throw ShapeError("nullspace: ragged matrix");
  return field.is_prime() ? nullspace_mod_p(a, ncols, field) : nullspace_rational(a, ncols, field);
}

std::optional<Vector> solve(Matrix a, Vector b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw ShapeError("solve: right-hand side has the wrong length");
  for (const auto& row : a)
    if (row.size() != n) throw ShapeError("solve: matrix is not square");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    const Scalar s = a[c][c].inverse();
    for (std::size_t j = c; j < n; ++j) a[c][j] *= s;
    b[c] *= s;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      const Scalar f = a[i][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  return b;
}

Scalar determinant(Matrix a) {
  const std::size_t n = a.size();
  if (n == 0) throw ShapeError("determinant: empty matrix");
  for (const auto& row : a)
    if (row.size() != n) throw ShapeError("determinant: matrix is not square");
  Scalar det = Scalar::one(a[0][0].field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) return Scalar::zero(det.field());
    if (piv != c) {
      std::swap(a[c], a[piv]);
      det = -det;
    }
    det *= a[c][c];
    const Scalar s = a[c][c].inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      const Scalar f = a[i][c] * s;
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

}  // namespace cremona
