#include "doctest.h"

#include <cmath>

#include "cremona/text.hpp"
#include "oracles.hpp"

using namespace cremona;

namespace {

const Field Q = Field::rational();

MapTuple T(const std::string& s, const Field& f = Q, std::size_t n = 2) { return parse_tuple(s, f, n); }

}  // namespace

TEST_CASE("tuples are stored up to scale") {
  CHECK(T("[2*x0 : 4*x1 : 6*x2]") == T("[x0 : 2*x1 : 3*x2]"));
  CHECK(T("[0 : 3*x1 : x2]").to_string() == "[0 : x1 : 1/3*x2]");
  CHECK_THROWS_AS(T("[0 : 0 : 0]"), ParseError);
  const auto zero = HomogeneousPoly(Q, 3, 1);
  CHECK_THROWS_AS(MapTuple({zero, zero, zero}), DomainError);
  CHECK_THROWS_AS(MapTuple({HomogeneousPoly::variable(Q, 3, 0), HomogeneousPoly::variable(Q, 3, 1)}), ShapeError);
  CHECK_THROWS_AS(MapTuple({HomogeneousPoly::variable(Q, 3, 0), HomogeneousPoly::variable(Q, 3, 1),
                            HomogeneousPoly::variable(Q, 3, 2) * HomogeneousPoly::variable(Q, 3, 2)}),
                  ShapeError);
}

TEST_CASE("normalize strips the common factor") {
  const auto r = normalize(T("[x0*(x2+x0) : x1*(x2+x0) : x2*(x2+x0)]"));
  CHECK(r.reduced == MapTuple::identity(Q, 2));
  CHECK(r.cofactor == parse_poly("x2 + x0", Q, 3));
  const auto s = normalize(T("[x1*x2 : x0*x2 : x0*x1]"));
  CHECK(s.reduced == T("[x1*x2 : x0*x2 : x0*x1]"));
  CHECK(s.cofactor == HomogeneousPoly::one(Q, 3));
  const auto z = normalize(T("[x0^2 : 0 : x0*x2]"));
  CHECK(z.reduced == T("[x0 : 0 : x2]"));
  CHECK(z.cofactor == parse_poly("x0", Q, 3));
}

TEST_CASE("normalize is idempotent and rebuilds its input") {
  std::mt19937_64 rng(21);
  for (const Field& f : {Q, Field::prime(3)}) {
    for (int it = 0; it < 40; ++it) {
      const auto base = oracle::random_tuple(f, 2, 1 + it % 2, rng);
      const auto c = oracle::random_form(f, 3, 1, rng);
      if (c.is_zero()) continue;
      std::vector<HomogeneousPoly> comps;
      for (const auto& b : base.components()) comps.push_back(b * c);
      const MapTuple t(std::move(comps));
      const auto r = normalize(t);
      CHECK(normalize(r.reduced).reduced == r.reduced);
      CHECK(normalize(r.reduced).cofactor == HomogeneousPoly::one(f, 3));
      CHECK(r.reduced.degree() + r.cofactor.degree() == t.degree());
      std::vector<HomogeneousPoly> back;
      for (const auto& q : r.reduced.components()) back.push_back(q * r.cofactor);
      CHECK(MapTuple(std::move(back)) == t);
    }
  }
}

TEST_CASE("multiple of the identity") {
  const auto a = is_multiple_of_identity(T("[x0*(x2+x0) : x1*(x2+x0) : x2*(x2+x0)]"));
  REQUIRE(a);
  CHECK(a->monic() == parse_poly("x0 + x2", Q, 3));
  CHECK_FALSE(is_multiple_of_identity(T("[x1*x2 : x0*x2 : x0*x1]")));
  CHECK(is_multiple_of_identity(MapTuple::identity(Q, 3)));
}

TEST_CASE("Weyl distance matches the direct formula") {
  std::mt19937_64 rng(22);
  for (int it = 0; it < 100; ++it) {
    const auto p = oracle::random_tuple(Q, 2, 2, rng);
    const auto q = oracle::random_tuple(Q, 2, 2, rng);
    CHECK(distance_sq(p, q) == oracle::sine_sq(oracle::coefficients(p), oracle::coefficients(q)));
  }
  CHECK(distance_sq(T("[x0^2:x1^2:x2^2]"), T("[x1*x2 : x0*x2 : x0*x1]")) == 1);
  CHECK(distance_sq(T("[x0 : x1 : x2]"), T("[x0 : x1 : x2 + x0]")) == mpq_class(1, 4));
}

TEST_CASE("Weyl distance axioms") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 200; ++it) {
    const auto p = oracle::random_tuple(Q, 2, 2, rng);
    const auto q = oracle::random_tuple(Q, 2, 2, rng);
    const auto r = oracle::random_tuple(Q, 2, 2, rng);
    CHECK(distance_sq(p, q) == distance_sq(q, p));
    CHECK(distance_sq(p, p) == 0);
    CHECK((distance_sq(p, q) == 0) == (p == q));
    CHECK(distance(p, r) <= distance(p, q) + distance(q, r) + 1e-9);
  }
}

TEST_CASE("distance is only defined over Q") {
  const Field f5 = Field::prime(5);
  CHECK_THROWS_AS(distance_sq(MapTuple::identity(f5, 2), MapTuple::identity(f5, 2)), DomainError);
  CHECK_THROWS_AS(distance_sq(MapTuple::identity(Q, 2), T("[x0^2:x1^2:x2^2]")), ShapeError);
}

TEST_CASE("fiber distance of the de Jonquieres sequence") {
  for (long k = 1; k <= 6; ++k) {
    const auto f = f_mk(Q, 2, k);
    const mpq_class d = fiber_distance_sq(f, MapTuple::identity(Q, 2));
    CHECK(d == oracle::f2k_fiber_closed_form(k));
    CHECK(d == oracle::fiber_sine_sq(f, MapTuple::identity(Q, 2)));
  }
}

TEST_CASE("fiber distance agrees with Gram-Schmidt projection") {
  std::mt19937_64 rng(24);
  const auto sigma = T("[x1*x2 : x0*x2 : x0*x1]");
  for (int it = 0; it < 30; ++it) {
    const auto t = oracle::random_tuple(Q, 2, 3, rng);
    CHECK(fiber_distance_sq(t, MapTuple::identity(Q, 2)) == oracle::fiber_sine_sq(t, MapTuple::identity(Q, 2)));
    CHECK(fiber_distance_sq(t, sigma) == oracle::fiber_sine_sq(t, sigma));
  }
}

TEST_CASE("fiber distance vanishes exactly on the fiber") {
  const auto t = T("[x0*(x0 - 2*x1) : x1*(x0 - 2*x1) : x2*(x0 - 2*x1)]");
  CHECK(fiber_distance_sq(t, MapTuple::identity(Q, 2)) == 0);
  CHECK(fiber_distance_sq(T("[x1*x2 : x0*x2 : x0*x1]"), MapTuple::identity(Q, 2)) > 0);
  CHECK_THROWS(fiber_distance_sq(MapTuple::identity(Q, 2), T("[x1*x2 : x0*x2 : x0*x1]")));
  CHECK_THROWS_AS(fiber_distance_sq(t, t), DomainError);
}
