#include "cremona/families.hpp"

#include <optional>

namespace cremona {

namespace {

/// Degree of a monomial restricted to variables [from, to).
unsigned partial_degree(const Monomial& m, std::size_t from, std::size_t to) {
  unsigned d = 0;
  for (std::size_t i = from; i < to; ++i) d += m[i];
  return d;
}

}  // namespace

ParametricFamily::ParametricFamily(std::size_t n, std::size_t param_count, std::vector<HomogeneousPoly> components,
                                   std::vector<HomogeneousPoly> constraints)
    : n_(n), param_count_(param_count), components_(std::move(components)), constraints_(std::move(constraints)) {
  if (n < 1) throw ShapeError("family needs n >= 1");
  if (param_count < 1) throw ShapeError("family needs at least one parameter");
  if (components_.size() != n + 1)
    throw ShapeError("family has " + std::to_string(components_.size()) + " components, expected " +
                     std::to_string(n + 1));
  const std::size_t nx = n + 1;
  const std::size_t nv = nvars();
  std::optional<std::pair<unsigned, unsigned>> bideg;
  for (const auto& c : components_) {
    if (c.nvars() != nv || c.field() != components_.front().field())
      throw ShapeError("family components must share field and variables");
    for (const auto& t : c.terms()) {
      const std::pair<unsigned, unsigned> b{partial_degree(t.mono, 0, nx), partial_degree(t.mono, nx, nv)};
      if (bideg && *bideg != b) throw ShapeError("family components are not bihomogeneous of one bidegree");
      bideg = b;
    }
  }
  if (!bideg) throw DomainError("all components of the family are zero");
  degree_ = bideg->first;
  param_degree_ = bideg->second;
  for (const auto& c : constraints_) {
    if (c.nvars() != nv || c.field() != field()) throw ShapeError("constraint must share field and variables");
    for (const auto& t : c.terms())
      if (partial_degree(t.mono, 0, nx) != 0) throw ShapeError("constraints may only involve the parameters");
  }
}

std::string ParametricFamily::variable_name(std::size_t i) const {
  return i <= n_ ? "x" + std::to_string(i) : "a" + std::to_string(i - n_ - 1);
}

std::string ParametricFamily::to_string() const {
  auto name = [this](std::size_t i) { return variable_name(i); };
  std::string s = "[";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += " : ";
    s += components_[i].to_string(name);
  }
  s += "] over {";
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    if (i) s += ", ";
    s += constraints_[i].to_string(name);
  }
  s += "} params (a0..a" + std::to_string(param_count_ - 1) + ")";
  return s;
}

namespace {

Vector checked_point(const ParametricFamily& family, std::span<const Scalar> point) {
  if (point.size() != family.param_count())
    throw ShapeError("parameter point has " + std::to_string(point.size()) + " coordinates, expected " +
                     std::to_string(family.param_count()));
  for (const auto& c : point)
    if (c.field() != family.field()) throw ShapeError("parameter point over the wrong field");
  return canonical_point(point);
}

std::string point_string(std::span<const Scalar> p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ":" : "") + p[i].to_string();
  return s + ")";
}

}  // namespace

bool on_base(const ParametricFamily& family, std::span<const Scalar> point) {
  const Vector p = checked_point(family, point);
  Vector full(family.n() + 1, Scalar::zero(family.field()));
  full.insert(full.end(), p.begin(), p.end());
  for (const auto& c : family.constraints())
    if (!c.evaluate(full).is_zero()) return false;
  return true;
}

MapTuple specialize(const ParametricFamily& family, std::span<const Scalar> point) {
  const Vector p = checked_point(family, point);
  Vector full(family.n() + 1, Scalar::zero(family.field()));
  full.insert(full.end(), p.begin(), p.end());
  for (std::size_t i = 0; i < family.constraints().size(); ++i)
    if (!family.constraints()[i].evaluate(full).is_zero())
      throw OffBaseError("point " + point_string(p) + " violates constraint " + std::to_string(i) + ": " +
                         family.constraints()[i].to_string([&](std::size_t v) { return family.variable_name(v); }) +
                         " = 0");
  std::vector<HomogeneousPoly> comps;
  bool any = false;
  for (const auto& c : family.components()) {
    comps.push_back(specialize_trailing(c, family.n() + 1, p).with_nominal_degree(family.degree()));
    any = any || !comps.back().is_zero();
  }
  if (!any) throw VanishingFamilyError("every component vanishes at " + point_string(p));
  return MapTuple(std::move(comps));
}

DegreeProfile degree_profile(const ParametricFamily& family, std::span<const Vector> points) {
  DegreeProfile profile;
  profile.entries.reserve(points.size());
  for (const auto& pt : points) {
    const MapTuple t = specialize(family, pt);
    const MapTuple r = normalize(t).reduced;
    profile.entries.push_back(ProfileEntry{canonical_point(pt), r.degree(), is_multiple_of_identity(r).has_value()});
  }
  return profile;
}

SymbolicReduction symbolic_reduce(const ParametricFamily& family) {
  HomogeneousPoly g = gcd_tuple(family.components());
  std::vector<HomogeneousPoly> reduced;
  for (const auto& c : family.components()) reduced.push_back(divide_exact(c, g));
  std::vector<HomogeneousPoly> constraints(family.constraints().begin(), family.constraints().end());
  return SymbolicReduction{ParametricFamily(family.n(), family.param_count(), std::move(reduced), std::move(constraints)),
                           std::move(g)};
}

MapTuple reduced_lift_at_point(const ParametricFamily& family, std::span<const Scalar> point) {
  if (!on_base(family, point)) return specialize(family, point);  // throws OffBaseError
  return specialize(symbolic_reduce(family).reduced, point);
}

ParametricFamily pullback(const ParametricFamily& family, std::span<const HomogeneousPoly> param_map) {
  if (param_map.size() != family.param_count())
    throw ShapeError("pullback: expected " + std::to_string(family.param_count()) + " parameter images");
  const std::size_t k = param_map.front().nvars();
  std::optional<unsigned> deg;
  for (const auto& p : param_map) {
    if (p.nvars() != k || p.field() != family.field()) throw ShapeError("pullback: inconsistent parameter map");
    if (!p.is_zero()) {
      if (deg && *deg != p.degree()) throw ShapeError("pullback: parameter images of unequal degree");
      deg = p.degree();
    }
  }
  const std::size_t nx = family.n() + 1;
  const std::size_t nv = nx + k;
  std::vector<std::size_t> shift(k);
  for (std::size_t j = 0; j < k; ++j) shift[j] = nx + j;
  std::vector<HomogeneousPoly> images;
  for (const auto& p : param_map) images.push_back(rename_variables(p, nv, shift).with_nominal_degree(deg.value_or(0)));

  auto pull = [&](const HomogeneousPoly& c) {
    std::vector<std::vector<HomogeneousPoly>> powers(images.size());
    auto power = [&](std::size_t j, unsigned e) -> const HomogeneousPoly& {
      auto& pw = powers[j];
      if (pw.empty()) pw.push_back(HomogeneousPoly::one(family.field(), nv));
      while (pw.size() <= e) pw.push_back(pw.back() * images[j]);
      return pw[e];
    };
    HomogeneousPoly out(family.field(), nv, 0);
    bool first = true;
    for (const auto& t : c.terms()) {
      std::vector<unsigned> xe(nv, 0);
      for (std::size_t i = 0; i < nx; ++i) xe[i] = t.mono[i];
      HomogeneousPoly term =
          HomogeneousPoly::monomial(family.field(), nv, Monomial(std::span<const unsigned>(xe)), t.coeff);
      for (std::size_t j = 0; j < images.size(); ++j)
        if (t.mono[nx + j]) term = term * power(j, t.mono[nx + j]);
      out = first ? term : out + term;
      first = false;
    }
    return out;
  };

  std::vector<HomogeneousPoly> comps;
  for (const auto& c : family.components()) comps.push_back(pull(c));
  std::vector<HomogeneousPoly> constraints;
  for (const auto& c : family.constraints()) {
    HomogeneousPoly p = pull(c);
    if (!p.is_zero()) constraints.push_back(std::move(p));
  }
  return ParametricFamily(family.n(), k, std::move(comps), std::move(constraints));
}

// ---------------------------------------------------------------------------
// Fixtures

namespace {

struct Ring {
  Field field;
  std::size_t nx;
  std::size_t nv;
  HomogeneousPoly x(std::size_t i) const { return HomogeneousPoly::variable(field, nv, i); }
  HomogeneousPoly a(std::size_t j) const { return HomogeneousPoly::variable(field, nv, nx + j); }
  HomogeneousPoly c(long v) const { return HomogeneousPoly::constant(field, nv, Scalar::from_int(field, v)); }
};

}  // namespace

ParametricFamily pencil_family(const Field& field, std::size_t n) {
  if (n < 2) throw ShapeError("pencil_family needs n >= 2");
  const Ring r{field, n + 1, n + 4};
  const HomogeneousPoly main = r.a(0) * r.x(2) + r.a(2) * r.x(0);
  const HomogeneousPoly second = r.a(0) * r.x(2) + r.a(1) * r.x(0);
  std::vector<HomogeneousPoly> comps;
  for (std::size_t i = 0; i <= n; ++i) comps.push_back(r.x(i) * (i == 1 ? second : main));
  return ParametricFamily(n, 3, std::move(comps));
}

ParametricFamily nodal_cubic_family(const Field& field, std::size_t n) {
  if (n < 2) throw ShapeError("nodal_cubic_family needs n >= 2");
  const Ring r{field, n + 1, n + 4};
  const auto x0 = r.x(0);
  const auto x2 = r.x(2);
  const auto a = r.a(0), b = r.a(1), c = r.a(2);
  const HomogeneousPoly R = a * x2 * x2 + c * x0 * x2 + b * x0 * x0;
  const HomogeneousPoly S = a * x2 * x2 + (b + c) * x0 * x2 + (a + b) * x0 * x0;
  std::vector<HomogeneousPoly> comps;
  for (std::size_t i = 0; i <= n; ++i) comps.push_back(r.x(i) * (i == 1 ? S : R));
  const HomogeneousPoly cubic = a * b * c - a * a * a - b * b * b;
  return ParametricFamily(n, 3, std::move(comps), {cubic});
}

std::vector<HomogeneousPoly> phi_parametrization(const Field& field) {
  const auto u = HomogeneousPoly::variable(field, 2, 0);
  const auto v = HomogeneousPoly::variable(field, 2, 1);
  return {u * u * v, u * v * v, u * u * u + v * v * v};
}

Vector phi_point(const Scalar& u, const Scalar& v) { return {u * u * v, u * v * v, u * u * u + v * v * v}; }

ParametricFamily nodal_cubic_pullback(const Field& field, std::size_t n) {
  const auto phi = phi_parametrization(field);
  return pullback(nodal_cubic_family(field, n), phi);
}

MapTuple f_mk(const Field& field, unsigned m, long k, std::size_t n) {
  if (n < 2) throw ShapeError("f_mk needs n >= 2");
  if (m < 1 || k == 0) throw ShapeError("f_mk needs m >= 1 and k != 0");
  const HomogeneousPoly q = HomogeneousPoly::monomial(field, n + 1, Monomial::variable(2, m),
                                                      Scalar::from_ratio(field, 1, k));
  return de_jonquieres_tuple(q);
}

MapTuple f_m(const Field& field, unsigned d, long m, std::size_t n) {
  if (n < 2) throw ShapeError("f_m needs n >= 2");
  if (d < 1 || m == 0) throw ShapeError("f_m needs d >= 1 and m != 0");
  const std::size_t nv = n + 1;
  auto mono = [&](std::size_t i, unsigned e) {
    return HomogeneousPoly::monomial(field, nv, Monomial::variable(i, e), Scalar::one(field));
  };
  const HomogeneousPoly x2p = mono(2, d - 1);
  const HomogeneousPoly x0p = mono(0, d - 1).scaled(Scalar::from_ratio(field, 1, m));
  std::vector<HomogeneousPoly> comps;
  comps.push_back(mono(0, 1) * x2p);
  comps.push_back(mono(1, 1) * (x2p + x0p));
  comps.push_back(mono(2, d));
  for (std::size_t i = 3; i < nv; ++i) comps.push_back(mono(i, 1) * x2p);
  return MapTuple(std::move(comps));
}

}  // namespace cremona
