#include "doctest.h"

#include "cremona/text.hpp"
#include "oracles.hpp"

using namespace cremona;

namespace {

const Field Q = Field::rational();

HomogeneousPoly P(const std::string& s, const Field& f = Q, std::size_t nv = 3) { return parse_poly(s, f, nv); }

}  // namespace

TEST_CASE("scalars over Q stay in lowest terms") {
  const Scalar a = Scalar::from_ratio(Q, 6, -4);
  CHECK(a.to_string() == "-3/2");
  CHECK((a * a.inverse()).is_one());
  CHECK((a + Scalar::from_ratio(Q, 3, 2)).is_zero());
  CHECK_THROWS_AS(Scalar::from_ratio(Q, 1, 0), DomainError);
  CHECK_THROWS_AS(Scalar::zero(Q).inverse(), DomainError);
}

TEST_CASE("prime field arithmetic") {
  const Field f7 = Field::prime(7);
  for (long v = 1; v < 7; ++v) CHECK((Scalar::from_int(f7, v) * Scalar::from_int(f7, v).inverse()).is_one());
  CHECK(Scalar::from_int(f7, -1) == Scalar::from_int(f7, 6));
  CHECK(Scalar::from_ratio(f7, 1, 2) == Scalar::from_int(f7, 4));
  CHECK(Scalar::from_int(f7, 3).pow(6).is_one());
  CHECK_THROWS_AS(Scalar::from_ratio(f7, 1, 14), DomainError);
  CHECK_THROWS(Field::prime(4));
  CHECK_THROWS(Field::prime(1));
  CHECK(Field::from_string("fp:101") == Field::prime(101));
  CHECK(Field::from_string("q") == Q);
  CHECK_THROWS(Field::from_string("fp:x"));
  CHECK_THROWS(Field::from_string("r"));
}

TEST_CASE("grlex order and monomial enumeration") {
  const auto ms = monomials_of_degree(3, 2);
  REQUIRE(ms.size() == 6);
  CHECK(monomial_count(3, 2) == 6);
  CHECK(monomial_count(4, 3) == 20);
  for (std::size_t i = 1; i < ms.size(); ++i) CHECK(ms[i - 1] > ms[i]);
  CHECK(ms.front() == Monomial::variable(0, 2));
  CHECK(ms.back() == Monomial::variable(2, 2));
  CHECK(Monomial::variable(0) * Monomial::variable(1) == Monomial(std::vector<unsigned>{1, 1, 0}));
  CHECK_THROWS_AS(Monomial::variable(0, 200) * Monomial::variable(0, 100), ShapeError);
}

TEST_CASE("construction checks homogeneity") {
  CHECK_THROWS_AS(HomogeneousPoly::from_terms(Q, 3, {Term{Monomial::variable(0), Scalar::one(Q)},
                                                     Term{Monomial::variable(1, 2), Scalar::one(Q)}}),
                  ShapeError);
  const auto p = P("x0*x1 + x1*x0 - 2*x0*x1");
  CHECK(p.is_zero());
  CHECK(P("x0^2 + 3/2*x1*x2").to_string() == "x0^2 + 3/2*x1*x2");
}

TEST_CASE("exact division examples") {
  CHECK(divide_exact(P("x0^2 + 2*x0*x2 + x2^2"), P("x0 + x2")) == P("x0 + x2"));
  CHECK(divide_exact(P("x0^3*x1"), P("x0^3")) == P("x1"));
  CHECK_THROWS_AS(divide_exact(P("x0^2 + x1^2"), P("x0 + x1")), NonExactDivision);
  CHECK_THROWS_AS(divide_exact(P("x0"), HomogeneousPoly(Q, 3, 1)), DomainError);
}

TEST_CASE("gcd examples") {
  CHECK(gcd(P("x0^2 - x1^2"), P("x0^2 + 2*x0*x1 + x1^2")) == P("x0 + x1"));
  CHECK(gcd(P("x0*x2 + x2^2"), P("x1*x2")) == P("x2"));
  CHECK(gcd(P("x0"), P("x1")) == HomogeneousPoly::one(Q, 3));
  CHECK(gcd(HomogeneousPoly(Q, 3, 2), P("3*x0*x1")) == P("x0*x1"));
  const std::vector<HomogeneousPoly> zeros{HomogeneousPoly(Q, 3, 1), HomogeneousPoly(Q, 3, 1)};
  CHECK_THROWS_AS(gcd_tuple(zeros), DomainError);
  const Field f2 = Field::prime(2);
  // x0^2 + x1^2 = (x0 + x1)^2 in characteristic 2.
  CHECK(gcd(P("x0^2 + x1^2", f2), P("x0*x2 + x1*x2", f2)) == P("x0 + x1", f2));
}

TEST_CASE("Jacobian examples") {
  const auto id = MapTuple::identity(Q, 2);
  CHECK(jacobian_det(id.components()) == HomogeneousPoly::one(Q, 3));
  const std::vector<HomogeneousPoly> sigma{P("x1*x2"), P("x0*x2"), P("x0*x1")};
  const auto j = jacobian_det(sigma);
  CHECK(j == oracle::jacobian_by_cofactors(sigma));
  CHECK(j == P("2*x0*x1*x2"));
  const Field f2 = Field::prime(2);
  const std::vector<HomogeneousPoly> sigma2{P("x1*x2", f2), P("x0*x2", f2), P("x0*x1", f2)};
  CHECK(jacobian_det(sigma2).is_zero());
}

TEST_CASE("ring axioms on random forms") {
  std::mt19937_64 rng(11);
  for (const Field& f : {Q, Field::prime(7), Field::prime(2)}) {
    for (int it = 0; it < 60; ++it) {
      const auto p = oracle::random_form(f, 3, 2, rng);
      const auto q = oracle::random_form(f, 3, 2, rng);
      const auto r = oracle::random_form(f, 3, 2, rng);
      const auto s = oracle::random_form(f, 3, 1, rng);
      CHECK((p + q) + r == p + (q + r));
      CHECK(p + q == q + p);
      CHECK(p * s == s * p);
      CHECK((p * s) * q == p * (s * q));
      CHECK(s * (p + q) == s * p + s * q);
      CHECK((p - p).is_zero());
      CHECK(add(p, q) == p + q);
      CHECK(mul(p, s) == p * s);
    }
  }
}

TEST_CASE("substitution is multiplicative") {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 40; ++it) {
    const auto p = oracle::random_form(Q, 3, 2, rng);
    const auto q = oracle::random_form(Q, 3, 1, rng);
    const auto f = oracle::random_tuple(Q, 2, 2, rng);
    CHECK(substitute(p * q, f.components()) == substitute(p, f.components()) * substitute(q, f.components()));
    CHECK(substitute(p + p, f.components()) == substitute(p, f.components()) + substitute(p, f.components()));
  }
}

TEST_CASE("gcd_tuple divides every input and leaves coprime quotients") {
  std::mt19937_64 rng(13);
  for (const Field& f : {Q, Field::prime(5)}) {
    for (int it = 0; it < 40; ++it) {
      const auto c = oracle::random_form(f, 3, 1 + it % 2, rng);
      if (c.is_zero()) continue;
      std::vector<HomogeneousPoly> polys;
      for (int k = 0; k < 3; ++k) polys.push_back(c * oracle::random_form(f, 3, 2, rng));
      if (std::all_of(polys.begin(), polys.end(), [](const auto& p) { return p.is_zero(); })) continue;
      const auto g = gcd_tuple(polys);
      CHECK(divide_exact(g, c.monic()).degree() == g.degree() - c.degree());
      std::vector<HomogeneousPoly> quotients;
      for (const auto& p : polys) quotients.push_back(divide_exact(p, g));
      CHECK(gcd_tuple(quotients) == HomogeneousPoly::one(f, 3));
    }
  }
}

TEST_CASE("Euler relation") {
  std::mt19937_64 rng(14);
  for (const Field& f : {Q, Field::prime(3), Field::prime(5)}) {
    for (unsigned d = 1; d <= 4; ++d) {
      const auto p = oracle::random_form(f, 3, d, rng);
      HomogeneousPoly sum(f, 3, d);
      for (std::size_t i = 0; i < 3; ++i) sum = sum + HomogeneousPoly::variable(f, 3, i) * partial_derivative(p, i);
      CHECK(sum == p.scaled(Scalar::from_int(f, d)));
      for (std::size_t i = 0; i < 3; ++i) CHECK(partial_derivative(p, i) == oracle::derivative(p, i));
    }
  }
}

TEST_CASE("Jacobian of a linear tuple is the matrix determinant") {
  std::mt19937_64 rng(15);
  for (const Field& f : {Q, Field::prime(3)}) {
    for (std::size_t k = 2; k <= 4; ++k) {
      for (int it = 0; it < 10; ++it) {
        const Matrix m = oracle::random_matrix(f, k, rng);
        std::vector<HomogeneousPoly> rows;
        for (const auto& r : m) {
          HomogeneousPoly c(f, k, 1);
          for (std::size_t j = 0; j < k; ++j) c = c + HomogeneousPoly::variable(f, k, j).scaled(r[j]);
          rows.push_back(c);
        }
        const Scalar expected = oracle::scalar_det(m);
        CHECK(jacobian_det(rows) == HomogeneousPoly::constant(f, k, expected));
        CHECK(determinant(m) == expected);
      }
    }
  }
}

TEST_CASE("Jacobian agrees with cofactor expansion on random tuples") {
  std::mt19937_64 rng(16);
  for (const Field& f : {Q, Field::prime(7)}) {
    for (int it = 0; it < 15; ++it) {
      const auto t = oracle::random_tuple(f, 2, 2, rng);
      CHECK(jacobian_det(t.components()) == oracle::jacobian_by_cofactors(t.components()));
    }
    const auto t = oracle::random_tuple(f, 3, 2, rng);
    CHECK(jacobian_det(t.components()) == oracle::jacobian_by_cofactors(t.components()));
  }
}

TEST_CASE("nullspace vectors solve the system") {
  std::mt19937_64 rng(17);
  for (const Field& f : {Q, Field::prime(5)}) {
    for (int it = 0; it < 30; ++it) {
      const std::size_t rows = 2 + it % 3, cols = 4 + it % 2;
      Matrix a(rows, Vector(cols, Scalar::zero(f)));
      std::uniform_int_distribution<int> c(-2, 2);
      for (auto& r : a)
        for (auto& x : r) x = Scalar::from_int(f, c(rng));
      const auto basis = nullspace(a, cols, f);
      CHECK(basis.size() >= cols - rows);
      for (const auto& v : basis) {
        for (const auto& r : a) {
          Scalar s = Scalar::zero(f);
          for (std::size_t j = 0; j < cols; ++j) s += r[j] * v[j];
          CHECK(s.is_zero());
        }
      }
    }
    const Matrix square = oracle::random_matrix(f, 3, rng);
    CHECK(nullspace(square, 3, f).empty() == !oracle::scalar_det(square).is_zero());
  }
}

TEST_CASE("solve returns the unique solution") {
  const Matrix a{{Scalar::from_int(Q, 2), Scalar::from_int(Q, 1)}, {Scalar::from_int(Q, 1), Scalar::from_int(Q, 3)}};
  const auto x = solve(a, {Scalar::from_int(Q, 3), Scalar::from_int(Q, 4)});
  REQUIRE(x);
  CHECK((*x)[0] == Scalar::one(Q));
  CHECK((*x)[1] == Scalar::one(Q));
  const Matrix singular{{Scalar::one(Q), Scalar::one(Q)}, {Scalar::one(Q), Scalar::one(Q)}};
  CHECK_FALSE(solve(singular, {Scalar::one(Q), Scalar::one(Q)}));
}
