#pragma once

// Independent reference computations for the tests. None of these call the
// library routine they are used to check.

#include <cstdint>
#include <random>
#include <vector>

#include "cremona/families.hpp"

namespace oracle {

using namespace cremona;

inline HomogeneousPoly derivative(const HomogeneousPoly& p, std::size_t i) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    const unsigned e = t.mono[i];
    if (e == 0) continue;
    terms.push_back(Term{t.mono.with_exponent(i, e - 1), t.coeff * Scalar::from_int(p.field(), e)});
  }
  const unsigned deg = p.degree() == 0 ? 0 : p.degree() - 1;
  return HomogeneousPoly::from_terms(p.field(), p.nvars(), std::move(terms), deg);
}

/// Laplace expansion along the first row.
inline HomogeneousPoly laplace(const std::vector<std::vector<HomogeneousPoly>>& m) {
  const std::size_t k = m.size();
  if (k == 1) return m[0][0];
  std::optional<HomogeneousPoly> sum;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<HomogeneousPoly>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<HomogeneousPoly> row;
      for (std::size_t j = 0; j < k; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(std::move(row));
    }
    HomogeneousPoly term = m[0][c] * laplace(minor);
    if (c % 2) term = -term;
    sum = sum ? *sum + term : term;
  }
  return *sum;
}

inline HomogeneousPoly jacobian_by_cofactors(std::span<const HomogeneousPoly> f) {
  std::vector<std::vector<HomogeneousPoly>> m;
  for (const auto& fi : f) {
    std::vector<HomogeneousPoly> row;
    for (std::size_t j = 0; j < f.size(); ++j) row.push_back(derivative(fi, j));
    m.push_back(std::move(row));
  }
  return laplace(m);
}

inline long det_mod(const std::vector<std::vector<long>>& m, long p) {
  const std::size_t k = m.size();
  if (k == 1) return ((m[0][0] % p) + p) % p;
  long sum = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<long>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<long> row;
      for (std::size_t j = 0; j < k; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(std::move(row));
    }
    const long t = m[0][c] * det_mod(minor, p) % p;
    sum = (sum + (c % 2 ? p - t : t)) % p;
  }
  return sum;
}

/// |PGL(k, F_p)| by testing every k x k matrix.
inline std::uint64_t projective_linear_count(std::size_t k, long p) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k * k; ++i) total *= static_cast<std::uint64_t>(p);
  std::uint64_t invertible = 0;
  std::vector<std::vector<long>> m(k, std::vector<long>(k));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (auto& row : m)
      for (auto& x : row) {
        x = static_cast<long>(c % p);
        c /= p;
      }
    if (det_mod(m, p) != 0) ++invertible;
  }
  return invertible / static_cast<std::uint64_t>(p - 1);
}

inline std::vector<mpq_class> coefficients(const MapTuple& t) {
  std::vector<mpq_class> v;
  const auto monos = monomials_of_degree(t.n() + 1, t.degree());
  for (const auto& c : t.components())
    for (const auto& m : monos) v.push_back(c.coefficient(m).rational());
  return v;
}

inline mpq_class dot(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// 1 - cos^2 of the angle between two vectors.
inline mpq_class sine_sq(const std::vector<mpq_class>& v, const std::vector<mpq_class>& w) {
  const mpq_class vw = dot(v, w);
  return 1 - vw * vw / (dot(v, v) * dot(w, w));
}

/// Squared sine from t to the span of {(g0*m : ... : gn*m)} over monomials m,
/// by Gram-Schmidt and the norm of the orthogonal residual.
inline mpq_class fiber_sine_sq(const MapTuple& t, const MapTuple& g) {
  const std::size_t nv = t.n() + 1;
  std::vector<std::vector<mpq_class>> basis;
  for (const auto& m : monomials_of_degree(nv, t.degree() - g.degree())) {
    std::vector<HomogeneousPoly> comps;
    for (const auto& gi : g.components()) comps.push_back(gi.times_monomial(m));
    auto u = coefficients(MapTuple(std::move(comps)));
    for (const auto& b : basis) {
      const mpq_class c = dot(u, b) / dot(b, b);
      for (std::size_t i = 0; i < u.size(); ++i) u[i] -= c * b[i];
    }
    basis.push_back(std::move(u));
  }
  auto r = coefficients(t);
  const mpq_class norm = dot(r, r);
  for (const auto& b : basis) {
    const mpq_class c = dot(r, b) / dot(b, b);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= c * b[i];
  }
  return dot(r, r) / norm;
}

/// Closed form for the distance from (x0^2 : x0 x1 + x2^2/k : x0 x2) to the
/// identity fiber in W_2: the fiber vectors a = x0, x1, x2 are orthogonal,
/// the projection has squared norm 3 and |f|^2 = 3 + 1/k^2.
inline mpq_class f2k_fiber_closed_form(long k) { return mpq_class(1, 3 * k * k + 1); }

inline HomogeneousPoly random_form(const Field& field, std::size_t nvars, unsigned degree, std::mt19937_64& rng,
                                   int spread = 3, double density = 0.6) {
  std::uniform_int_distribution<int> coeff(-spread, spread);
  std::bernoulli_distribution keep(density);
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(nvars, degree))
    if (keep(rng)) terms.push_back(Term{m, Scalar::from_int(field, coeff(rng))});
  return HomogeneousPoly::from_terms(field, nvars, std::move(terms), degree);
}

inline MapTuple random_tuple(const Field& field, std::size_t n, unsigned degree, std::mt19937_64& rng) {
  for (;;) {
    std::vector<HomogeneousPoly> comps;
    bool any = false;
    for (std::size_t i = 0; i <= n; ++i) {
      comps.push_back(random_form(field, n + 1, degree, rng));
      any = any || !comps.back().is_zero();
    }
    if (any) return MapTuple(std::move(comps));
  }
}

inline Matrix random_matrix(const Field& field, std::size_t k, std::mt19937_64& rng, int spread = 3) {
  std::uniform_int_distribution<int> coeff(-spread, spread);
  Matrix m(k, Vector(k, Scalar::zero(field)));
  for (auto& row : m)
    for (auto& x : row) x = Scalar::from_int(field, coeff(rng));
  return m;
}

inline MapTuple linear_tuple(const Matrix& m) {
  const Field field = m[0][0].field();
  std::vector<HomogeneousPoly> comps;
  for (const auto& row : m) {
    HomogeneousPoly c(field, m.size(), 1);
    for (std::size_t j = 0; j < row.size(); ++j)
      c = c + HomogeneousPoly::variable(field, m.size(), j).scaled(row[j]);
    comps.push_back(c);
  }
  return MapTuple(std::move(comps));
}

inline Scalar scalar_det(const Matrix& m) {
  const Field field = m[0][0].field();
  std::vector<std::vector<HomogeneousPoly>> pm;
  for (const auto& row : m) {
    std::vector<HomogeneousPoly> r;
    for (const auto& x : row) r.push_back(HomogeneousPoly::constant(field, 1, x));
    pm.push_back(std::move(r));
  }
  const HomogeneousPoly d = laplace(pm);
  return d.is_zero() ? Scalar::zero(field) : d.terms().front().coeff;
}

}  // namespace oracle
