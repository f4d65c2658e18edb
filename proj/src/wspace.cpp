#include "cremona/wspace.hpp"

#include <cmath>
#include <map>

#include "cremona/linalg.hpp"

namespace cremona {

MapTuple::MapTuple(std::vector<HomogeneousPoly> components) : components_(std::move(components)) {
  if (components_.size() < 2) throw ShapeError("a map tuple needs at least two components");
  const std::size_t nv = components_.size();
  std::optional<unsigned> d;
  for (std::size_t i = 0; i < nv; ++i) {
    const auto& c = components_[i];
    if (c.field() != components_[0].field()) throw ShapeError("map tuple components over different fields");
    if (c.nvars() != nv)
      throw ShapeError("component " + std::to_string(i) + " lives in " + std::to_string(c.nvars()) +
                       " variables, expected " + std::to_string(nv));
    if (c.is_zero()) continue;
    if (d && *d != c.degree())
      throw ShapeError("component " + std::to_string(i) + " has degree " + std::to_string(c.degree()) +
                       ", expected " + std::to_string(*d));
    d = c.degree();
  }
  if (!d) throw DomainError("all components of the map tuple are zero");
  degree_ = *d;
  std::optional<Scalar> lead;
  for (auto& c : components_) {
    if (c.is_zero()) {
      c = c.with_nominal_degree(degree_);
    } else if (!lead) {
      lead = c.leading().coeff;
    }
  }
  if (!lead->is_one()) {
    const Scalar s = lead->inverse();
    for (auto& c : components_) c = c.scaled(s);
  }
}

MapTuple MapTuple::identity(const Field& field, std::size_t n) {
  std::vector<HomogeneousPoly> c;
  for (std::size_t i = 0; i <= n; ++i) c.push_back(HomogeneousPoly::variable(field, n + 1, i));
  return MapTuple(std::move(c));
}

std::string MapTuple::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += " : ";
    s += components_[i].to_string();
  }
  return s + "]";
}

ReducedForm normalize(const MapTuple& t) {
  HomogeneousPoly g = gcd_tuple(t.components());
  if (g.degree() == 0) return ReducedForm{t, HomogeneousPoly::one(t.field(), t.n() + 1)};
  std::vector<HomogeneousPoly> reduced;
  reduced.reserve(t.n() + 1);
  for (const auto& c : t.components()) reduced.push_back(divide_exact(c, g));
  return ReducedForm{MapTuple(std::move(reduced)), std::move(g)};
}

std::optional<HomogeneousPoly> is_multiple_of_identity(const MapTuple& t) {
  const std::size_t nv = t.n() + 1;
  std::vector<HomogeneousPoly> x;
  for (std::size_t i = 0; i < nv; ++i) x.push_back(HomogeneousPoly::variable(t.field(), nv, i));
  if (t.degree() == 0) return std::nullopt;
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = i + 1; j < nv; ++j)
      if (!(t[i] * x[j] == t[j] * x[i])) return std::nullopt;
  for (std::size_t i = 0; i < nv; ++i)
    if (!t[i].is_zero()) return divide_exact(t[i], x[i]);
  return std::nullopt;
}

std::vector<mpq_class> coefficient_vector(const MapTuple& t) {
  if (!t.field().is_rational()) throw DomainError("coefficient vectors are only defined over Q");
  const auto monos = monomials_of_degree(t.n() + 1, t.degree());
  std::map<Monomial, std::size_t> index;
  for (std::size_t k = 0; k < monos.size(); ++k) index.emplace(monos[k], k);
  std::vector<mpq_class> v(monos.size() * (t.n() + 1), mpq_class(0));
  for (std::size_t i = 0; i <= t.n(); ++i)
    for (const auto& term : t[i].terms()) v[i * monos.size() + index.at(term.mono)] = term.coeff.rational();
  return v;
}

mpq_class chordal_distance_sq(std::span<const mpq_class> v, std::span<const mpq_class> w) {
  if (v.size() != w.size()) throw ShapeError("chordal distance: vectors of different length");
  mpq_class vv = 0, ww = 0, vw = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    vv += v[i] * v[i];
    ww += w[i] * w[i];
    vw += v[i] * w[i];
  }
  if (vv == 0 || ww == 0) throw DomainError("chordal distance of a zero vector");
  // Lagrange's identity turns the pairwise sum into |v|^2|w|^2 - <v,w>^2.
  mpq_class r = (vv * ww - vw * vw) / (vv * ww);
  r.canonicalize();
  return r;
}

namespace {

void check_metric_inputs(const MapTuple& p, const MapTuple& q) {
  if (!p.field().is_rational() || !q.field().is_rational())
    throw DomainError("the Weyl metric needs an archimedean field; " + p.field().to_string() + " has none");
  if (p.n() != q.n()) throw ShapeError("distance between tuples of different dimension");
}

}  // namespace

mpq_class distance_sq(const MapTuple& p, const MapTuple& q) {
  check_metric_inputs(p, q);
  if (p.degree() != q.degree())
    throw ShapeError("distance between tuples of degree " + std::to_string(p.degree()) + " and " +
                     std::to_string(q.degree()));
  const auto v = coefficient_vector(p);
  const auto w = coefficient_vector(q);
  return chordal_distance_sq(v, w);
}

double distance(const MapTuple& p, const MapTuple& q) { return std::sqrt(distance_sq(p, q).get_d()); }

mpq_class fiber_distance_sq(const MapTuple& t, const MapTuple& g) {
  check_metric_inputs(t, g);
  if (g.degree() > t.degree())
    throw ShapeError("fiber distance: map degree " + std::to_string(g.degree()) + " exceeds tuple degree " +
                     std::to_string(t.degree()));
  if (gcd_tuple(g.components()).degree() != 0) throw DomainError("fiber distance: target tuple is not reduced");

  const std::size_t nv = t.n() + 1;
  const auto monos = monomials_of_degree(nv, t.degree());
  std::map<Monomial, std::size_t> index;
  for (std::size_t k = 0; k < monos.size(); ++k) index.emplace(monos[k], k);
  auto flatten = [&](std::span<const HomogeneousPoly> comps) {
    std::map<std::size_t, mpq_class> sparse;
    for (std::size_t i = 0; i < nv; ++i)
      for (const auto& term : comps[i].terms()) sparse[i * monos.size() + index.at(term.mono)] = term.coeff.rational();
    return sparse;
  };
  auto dot = [](const std::map<std::size_t, mpq_class>& a, const std::map<std::size_t, mpq_class>& b) {
    mpq_class s = 0;
    for (const auto& [k, x] : a)
      if (auto it = b.find(k); it != b.end()) s += x * it->second;
    return s;
  };

  const auto v = flatten(t.components());
  std::vector<std::map<std::size_t, mpq_class>> basis;
  for (const auto& alpha : monomials_of_degree(nv, t.degree() - g.degree())) {
    std::vector<HomogeneousPoly> comps;
    for (const auto& gi : g.components()) comps.push_back(gi.times_monomial(alpha));
    basis.push_back(flatten(comps));
  }

  // Orthogonal projection of v onto span(basis) through the Gram system.
  const Field q = Field::rational();
  Matrix gram(basis.size(), Vector(basis.size()));
  Vector rhs(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    rhs[i] = Scalar::from_rational(q, dot(basis[i], v));
    for (std::size_t j = 0; j < basis.size(); ++j) gram[i][j] = Scalar::from_rational(q, dot(basis[i], basis[j]));
  }
  const auto c = solve(gram, rhs);
  if (!c) throw DomainError("fiber distance: degenerate fiber basis");
  mpq_class proj = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) proj += rhs[i].rational() * (*c)[i].rational();
  const mpq_class vv = dot(v, v);
  mpq_class r = (vv - proj) / vv;
  r.canonicalize();
  return r;
}

}  // namespace cremona
