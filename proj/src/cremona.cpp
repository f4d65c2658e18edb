#include "cremona/cremona.hpp"

#include <map>

namespace cremona {

namespace {

std::vector<HomogeneousPoly> variables(const Field& field, std::size_t nv) {
  std::vector<HomogeneousPoly> x;
  for (std::size_t i = 0; i < nv; ++i) x.push_back(HomogeneousPoly::variable(field, nv, i));
  return x;
}

/// a with h = a * id, or nullopt if h is not a nonzero multiple of the identity.
std::optional<HomogeneousPoly> identity_cofactor(std::span<const HomogeneousPoly> h) {
  const std::size_t nv = h.size();
  const auto x = variables(h.front().field(), nv);
  std::optional<HomogeneousPoly> a;
  for (std::size_t i = 0; i < nv && !a; ++i) {
    if (h[i].is_zero()) continue;
    try {
      a = divide_exact(h[i], x[i]);
    } catch (const NonExactDivision&) {
      return std::nullopt;
    }
  }
  if (!a) return std::nullopt;
  for (std::size_t i = 0; i < nv; ++i)
    if (!(h[i] == *a * x[i])) return std::nullopt;
  return a;
}

std::optional<HomogeneousPoly> composition_cofactor(const MapTuple& g, const MapTuple& f) {
  std::vector<HomogeneousPoly> h;
  for (const auto& gi : g.components()) h.push_back(substitute(gi, f.components()));
  return identity_cofactor(h);
}

std::uint64_t degree_bound(unsigned d, std::size_t n) {
  std::uint64_t b = 1;
  for (std::size_t i = 1; i < n; ++i) {
    b *= d;
    if (b > 255) return 255;  // exponent limit of Monomial
  }
  return b;
}

bool is_reduced(const MapTuple& t) { return gcd_tuple(t.components()).degree() == 0; }

/// Candidate inverse search in one degree.
class InverseSearch {
 public:
  explicit InverseSearch(const MapTuple& f) : f_(f), nv_(f.n() + 1), field_(f.field()) {
    images_.emplace(Monomial(), HomogeneousPoly::one(field_, nv_));
  }

  struct Outcome {
    std::optional<CremonaMap> map;
    bool non_dominant = false;
  };

  Outcome attempt(unsigned e) {
    const auto monos = monomials_of_degree(nv_, e);
    const std::size_t m = monos.size();
    std::vector<const HomogeneousPoly*> img;
    img.reserve(m);
    for (const auto& mu : monos) img.push_back(&image(mu));

    // Unknown (s, k) is the coefficient of monos[k] in g_s, column s*m + k.
    // Each pair i < j contributes G_i x_j - G_j x_i = 0, one row per monomial.
    const std::size_t ncols = nv_ * m;
    Matrix rows;
    const Scalar zero = Scalar::zero(field_);
    for (std::size_t i = 0; i < nv_; ++i) {
      for (std::size_t j = i + 1; j < nv_; ++j) {
        std::map<Monomial, std::size_t> row_of;
        auto row = [&](const Monomial& mono) -> Vector& {
          auto [it, fresh] = row_of.emplace(mono, rows.size());
          if (fresh) rows.emplace_back(ncols, zero);
          return rows[it->second];
        };
        const Monomial xi = Monomial::variable(i), xj = Monomial::variable(j);
        for (std::size_t k = 0; k < m; ++k) {
          for (const auto& t : img[k]->terms()) {
            row(t.mono * xj)[i * m + k] += t.coeff;
            row(t.mono * xi)[j * m + k] -= t.coeff;
          }
        }
      }
    }
    const auto basis = nullspace(rows, ncols, field_);
    if (basis.empty()) return Outcome{};
    // A nonzero g with g o f = 0 only exists when f is not dominant, in which
    // case no degree can produce a certificate.
    return check(basis.front(), monos, img);
  }

 private:
  const HomogeneousPoly& image(const Monomial& mu) {
    if (auto it = images_.find(mu); it != images_.end()) return it->second;
    std::size_t i = 0;
    while (mu[i] == 0) ++i;
    HomogeneousPoly p = image(mu.with_exponent(i, mu[i] - 1)) * f_[i];
    return images_.emplace(mu, std::move(p)).first->second;
  }

  Outcome check(const Vector& v, const std::vector<Monomial>& monos,
               const std::vector<const HomogeneousPoly*>& img) {
    const std::size_t m = monos.size();
    const unsigned e = monos.front().degree();
    std::vector<HomogeneousPoly> h;
    std::vector<HomogeneousPoly> g;
    bool any = false;
    for (std::size_t s = 0; s < nv_; ++s) {
      std::vector<Term> terms;
      HomogeneousPoly hs(field_, nv_, e * f_.degree());
      for (std::size_t k = 0; k < m; ++k) {
        const Scalar& c = v[s * m + k];
        if (c.is_zero()) continue;
        terms.push_back(Term{monos[k], c});
        hs = hs + img[k]->scaled(c);
      }
      any = any || !terms.empty();
      g.push_back(HomogeneousPoly::from_terms(field_, nv_, std::move(terms), e));
      h.push_back(std::move(hs));
    }
    if (!any) return Outcome{};
    if (!identity_cofactor(h)) return Outcome{std::nullopt, true};  // a = 0
    const MapTuple inv = normalize(MapTuple(std::move(g))).reduced;
    return Outcome{CremonaMap::from_pair(f_, inv), false};
  }

  const MapTuple& f_;
  std::size_t nv_;
  Field field_;
  std::map<Monomial, HomogeneousPoly> images_;
};

}  // namespace

MapTuple substitute_tuple(const MapTuple& g, const MapTuple& f) {
  if (g.n() != f.n()) throw ShapeError("composition of maps of different dimension");
  std::vector<HomogeneousPoly> h;
  for (const auto& gi : g.components()) h.push_back(substitute(gi, f.components()));
  return MapTuple(std::move(h));
}

CremonaMap CremonaMap::from_pair(const MapTuple& forward, const MapTuple& inverse) {
  if (forward.n() != inverse.n()) throw CertificateError("forward and inverse differ in dimension");
  if (forward.field() != inverse.field()) throw CertificateError("forward and inverse differ in field");
  if (!is_reduced(forward)) throw CertificateError("forward tuple is not reduced");
  if (!is_reduced(inverse)) throw CertificateError("inverse tuple is not reduced");
  if (inverse.degree() > degree_bound(forward.degree(), forward.n()))
    throw CertificateError("inverse degree " + std::to_string(inverse.degree()) + " exceeds the bound");
  auto a = composition_cofactor(inverse, forward);
  if (!a) throw CertificateError("inverse o forward is not a nonzero multiple of the identity");
  auto a_inv = composition_cofactor(forward, inverse);
  if (!a_inv) throw CertificateError("forward o inverse is not a nonzero multiple of the identity");
  return CremonaMap(forward, inverse, std::move(*a), std::move(*a_inv));
}

bool CremonaMap::verify() const {
  auto a = composition_cofactor(inverse_, forward_);
  auto b = composition_cofactor(forward_, inverse_);
  return a && b && *a == cofactor_ && *b == inverse_cofactor_;
}

Certification certify_detailed(const MapTuple& t, const CertifyOptions& options) {
  Certification out;
  const MapTuple f = normalize(t).reduced;
  out.reduced_degree = f.degree();
  if (f.degree() == 0) return out;
  bool jacobian_nonzero = false;
  if (f.field().is_rational() && options.jacobian_filter) {
    // Characteristic 0: a vanishing Jacobian means the map is not dominant.
    if (jacobian_det(f.components()).is_zero()) {
      out.non_dominant = true;
      return out;
    }
    jacobian_nonzero = true;
  }
  std::uint64_t bound = degree_bound(f.degree(), f.n());
  if (options.max_inverse_degree) bound = std::min<std::uint64_t>(bound, *options.max_inverse_degree);
  InverseSearch search(f);
  for (unsigned e = 1; e <= bound; ++e) {
    ++out.degrees_tried;
    auto outcome = search.attempt(e);
    if (outcome.map) {
      out.map = std::move(outcome.map);
      return out;
    }
    if (outcome.non_dominant) {
      out.non_dominant = true;
      return out;
    }
  }
  out.dominant_without_certificate = jacobian_nonzero;
  return out;
}

std::optional<CremonaMap> certify_birational(const MapTuple& t) { return certify_detailed(t).map; }

CremonaMap inverse(const CremonaMap& f) {
  try {
    return CremonaMap::from_pair(f.inverse(), f.forward());
  } catch (const CertificateError& e) {
    throw CertificateError(std::string("inverse: stored certificate is corrupt: ") + e.what());
  }
}

CremonaMap compose(const CremonaMap& f, const CremonaMap& g) {
  if (f.n() != g.n()) throw ShapeError("compose: maps of different dimension");
  const MapTuple forward = normalize(substitute_tuple(f.forward(), g.forward())).reduced;
  const MapTuple backward = normalize(substitute_tuple(g.inverse(), f.inverse())).reduced;
  return CremonaMap::from_pair(forward, backward);
}

Vector canonical_point(std::span<const Scalar> point) {
  Vector out(point.begin(), point.end());
  for (const auto& c : out) {
    if (c.is_zero()) continue;
    const Scalar s = c.inverse();
    for (auto& x : out) x *= s;
    return out;
  }
  throw DomainError("the zero vector is not a projective point");
}

std::optional<Vector> apply_to_point(const CremonaMap& f, std::span<const Scalar> point) {
  if (point.size() != f.n() + 1)
    throw ShapeError("point has " + std::to_string(point.size()) + " coordinates, expected " +
                     std::to_string(f.n() + 1));
  const Vector p = canonical_point(point);
  Vector image;
  for (const auto& c : f.forward().components()) image.push_back(c.evaluate(p));
  for (const auto& c : image)
    if (!c.is_zero()) return canonical_point(image);
  return std::nullopt;
}

unsigned true_degree(const CremonaMap& f) { return f.forward().degree(); }
unsigned true_degree(const MapTuple& t) { return normalize(t).reduced.degree(); }

CremonaMap identity(const Field& field, std::size_t n) {
  const MapTuple id = MapTuple::identity(field, n);
  return CremonaMap::from_pair(id, id);
}

CremonaMap standard_involution(const Field& field, std::size_t n) {
  if (n < 1) throw ShapeError("standard involution needs n >= 1");
  const std::size_t nv = n + 1;
  std::vector<HomogeneousPoly> c;
  for (std::size_t i = 0; i < nv; ++i) {
    std::vector<unsigned> e(nv, 1);
    e[i] = 0;
    c.push_back(HomogeneousPoly::monomial(field, nv, Monomial(std::span<const unsigned>(e)), Scalar::one(field)));
  }
  MapTuple t(std::move(c));
  return CremonaMap::from_pair(t, t);
}

CremonaMap standard_quadratic(const Field& field) { return standard_involution(field, 2); }

CremonaMap linear_from_matrix(const Matrix& m) {
  const std::size_t nv = m.size();
  if (nv < 2) throw ShapeError("linear map needs at least a 2x2 matrix");
  for (const auto& row : m)
    if (row.size() != nv) throw ShapeError("linear map: matrix is not square");
  const Field field = m[0][0].field();
  if (determinant(m).is_zero()) throw DomainError("linear map: matrix is singular");
  std::vector<HomogeneousPoly> c;
  for (const auto& row : m) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < nv; ++j)
      if (!row[j].is_zero()) terms.push_back(Term{Monomial::variable(j), row[j]});
    c.push_back(HomogeneousPoly::from_terms(field, nv, std::move(terms), 1));
  }
  auto f = certify_birational(MapTuple(std::move(c)));
  if (!f) throw CertificateError("linear map with nonzero determinant failed to certify");
  return *f;
}

MapTuple de_jonquieres_tuple(const HomogeneousPoly& q) {
  const std::size_t nv = q.nvars();
  if (nv < 3) throw ShapeError("de Jonquieres map needs n >= 2");
  if (q.uses_variable(1)) throw ShapeError("de Jonquieres form must not involve x1");
  const unsigned m = q.degree();
  if (m < 1) throw ShapeError("de Jonquieres form must have degree >= 1");
  const Field& field = q.field();
  const HomogeneousPoly lead = HomogeneousPoly::monomial(field, nv, Monomial::variable(0, m - 1), Scalar::one(field));
  std::vector<HomogeneousPoly> c;
  c.push_back(lead * HomogeneousPoly::variable(field, nv, 0));
  c.push_back(lead * HomogeneousPoly::variable(field, nv, 1) + q.with_nominal_degree(m));
  for (std::size_t i = 2; i < nv; ++i) c.push_back(lead * HomogeneousPoly::variable(field, nv, i));
  return MapTuple(std::move(c));
}

CremonaMap de_jonquieres(const HomogeneousPoly& q) {
  return CremonaMap::from_pair(normalize(de_jonquieres_tuple(q)).reduced,
                               normalize(de_jonquieres_tuple(-q)).reduced);
}

}  // namespace cremona
