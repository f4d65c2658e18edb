#pragma once

// Parametric families of map tuples: morphisms from a parameter variety A to
// Bir(P^n), given by tuples whose coefficients are forms in the parameters.

#include <vector>

#include "cremona/cremona.hpp"

namespace cremona {

class OffBaseError : public DomainError {
 public:
  using DomainError::DomainError;
};

class VanishingFamilyError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Components and constraints live in one ring with variables
/// x0..xn followed by a0..ak. Each component is bihomogeneous of degree d in
/// x and of one common degree in a; constraints involve a only.
class ParametricFamily {
 public:
  ParametricFamily(std::size_t n, std::size_t param_count, std::vector<HomogeneousPoly> components,
                   std::vector<HomogeneousPoly> constraints = {});

  const Field& field() const { return components_.front().field(); }
  std::size_t n() const { return n_; }
  std::size_t param_count() const { return param_count_; }
  std::size_t nvars() const { return n_ + 1 + param_count_; }
  unsigned degree() const { return degree_; }
  unsigned param_degree() const { return param_degree_; }
  std::span<const HomogeneousPoly> components() const { return components_; }
  std::span<const HomogeneousPoly> constraints() const { return constraints_; }

  /// Variable names: x0..xn, then a0..ak.
  std::string variable_name(std::size_t i) const;
  /// "[p0 : ... : pn] over {c1, c2} params (a0..ak)"
  std::string to_string() const;

 private:
  std::size_t n_;
  std::size_t param_count_;
  std::vector<HomogeneousPoly> components_;
  std::vector<HomogeneousPoly> constraints_;
  unsigned degree_ = 0;
  unsigned param_degree_ = 0;
};

/// Exact membership of a parameter point in the base variety.
bool on_base(const ParametricFamily& family, std::span<const Scalar> point);

/// The tuple at a parameter point. Throws OffBaseError when a constraint does
/// not vanish and VanishingFamilyError when every component vanishes.
MapTuple specialize(const ParametricFamily& family, std::span<const Scalar> point);

struct ProfileEntry {
  Vector point;  // canonical representative
  unsigned reduced_degree;
  bool is_identity;
};

struct DegreeProfile {
  std::vector<ProfileEntry> entries;
};

DegreeProfile degree_profile(const ParametricFamily& family, std::span<const Vector> points);

struct SymbolicReduction {
  ParametricFamily reduced;
  HomogeneousPoly cofactor;  // common factor of the components in x and a
};

/// Divide out the gcd of the components in the free polynomial ring over x and a.
SymbolicReduction symbolic_reduce(const ParametricFamily& family);

/// Value at a point of the lift obtained by removing the common factor over
/// the whole family. On a constant-degree locus this is the reduced tuple,
/// the only value a lift to H_m can take there.
MapTuple reduced_lift_at_point(const ParametricFamily& family, std::span<const Scalar> point);

/// Precompose the parameters with a map from a new parameter space:
/// a_j -> param_map[j], each a form of one common degree in new_param_count variables.
ParametricFamily pullback(const ParametricFamily& family, std::span<const HomogeneousPoly> param_map);

// Fixtures.

/// (x0(a0 x2 + a2 x0) : x1(a0 x2 + a1 x0) : x2(a0 x2 + a2 x0) : ... : xn(a0 x2 + a2 x0)) over P^2.
ParametricFamily pencil_family(const Field& field, std::size_t n = 2);

/// (x0 R : x1 S : x2 R : ... : xn R) over the cubic a0 a1 a2 = a0^3 + a1^3 with
/// R = a0 x2^2 + a2 x0 x2 + a1 x0^2 and S = a0 x2^2 + (a1 + a2) x0 x2 + (a0 + a1) x0^2.
ParametricFamily nodal_cubic_family(const Field& field, std::size_t n = 2);

/// (u:v) -> (u^2 v : u v^2 : u^3 + v^3), a parametrization of the nodal cubic.
std::vector<HomogeneousPoly> phi_parametrization(const Field& field);
Vector phi_point(const Scalar& u, const Scalar& v);

/// nodal_cubic_family pulled back along phi; parameters (a0:a1) = (u:v).
ParametricFamily nodal_cubic_pullback(const Field& field, std::size_t n = 2);

/// Homogenization of (x1 + x2^m / k, x2, ..., xn).
MapTuple f_mk(const Field& field, unsigned m, long k, std::size_t n = 2);

/// (x0 x2^(d-1) : x1 (x2^(d-1) + x0^(d-1)/m) : x2^d : x3 x2^(d-1) : ... : xn x2^(d-1)).
MapTuple f_m(const Field& field, unsigned d, long m, std::size_t n = 2);

}  // namespace cremona
