#include "doctest.h"

#include <set>

#include "cremona/census.hpp"
#include "oracles.hpp"

using namespace cremona;

TEST_CASE("class counting and canonical vectors") {
  CHECK(coefficient_count(2, 1) == 9);
  CHECK(coefficient_count(2, 2) == 18);
  CHECK(coefficient_count(1, 3) == 8);
  CHECK(class_count(2, 1, 2) == 511);
  CHECK(class_count(1, 1, 3) == 40);
  CHECK(class_count(2, 2, 2) == 262143);
  CHECK_THROWS_AS(class_count(3, 4, 101), BudgetExceeded);

  std::set<std::vector<std::uint64_t>> seen;
  const std::uint64_t classes = class_count(1, 1, 3);
  for (std::uint64_t i = 0; i < classes; ++i) {
    const auto v = class_vector(i, 4, 3);
    const auto lead = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
    REQUIRE(lead != v.end());
    CHECK(*lead == 1);
    CHECK(std::all_of(v.begin(), v.end(), [](auto x) { return x < 3; }));
    seen.insert(v);
  }
  CHECK(seen.size() == classes);
}

TEST_CASE("degree-1 census equals the matrix brute force") {
  struct Case {
    std::size_t n;
    std::uint64_t p;
  };
  for (const auto [n, p] : {Case{2, 2}, Case{1, 3}, Case{1, 2}, Case{1, 5}, Case{2, 3}}) {
    const auto r = enumerate_hd(n, 1, p);
    CHECK(r.birational == oracle::projective_linear_count(n + 1, static_cast<long>(p)));
    CHECK(r.examined == r.total_classes);
    CHECK(r.certificate_failures == 0);
    CHECK(r.strata.size() == 1);
    CHECK(r.strata.at(1) == r.birational);
  }
  CHECK(enumerate_hd(2, 1, 2).birational == 168);
  CHECK(enumerate_hd(1, 1, 3).birational == 24);
}

TEST_CASE("census reports do not depend on the partition count") {
  for (const auto& [n, d, p] : {std::tuple<std::size_t, unsigned, std::uint64_t>{2, 1, 2}, {1, 2, 3}, {1, 3, 2}}) {
    const auto one = enumerate_hd(n, d, p, {.partitions = 1});
    for (unsigned parts : {4u, 16u}) {
      const auto many = enumerate_hd(n, d, p, {.partitions = parts});
      CHECK(same_counts(one, many));
      CHECK(many.partitions == parts);
    }
  }
}

TEST_CASE("degree-2 census on the projective line") {
  // Plane quadratic Cremona maps need n >= 2; on P^1 every birational map is linear.
  const auto r = enumerate_hd(1, 2, 3);
  CHECK(r.total_classes == 364);
  CHECK(r.certificate_failures == 0);
  CHECK(r.strata.count(2) == 0);
  // Degree-1 maps in a degree-2 slot: PGL(2, F_3) times the 4 lines of P(k[x0, x1]_1).
  CHECK(r.strata.at(1) == 24 * 4);
}

TEST_CASE("budget and argument checks") {
  CHECK_THROWS_AS(enumerate_hd(2, 2, 3, {.budget = 1000}), BudgetExceeded);
  CHECK_THROWS(enumerate_hd(2, 1, 4));
  CHECK_THROWS(sample_random(2, 1, 6, 10, 1));
}

TEST_CASE("sampling") {
  const auto empty = sample_random(2, 2, 3, 0, 5);
  CHECK(empty.examined == 0);
  CHECK(empty.birational == 0);
  CHECK(empty.strata.empty());
  CHECK(empty.generator == kSampleGenerator);
  CHECK(empty.seed == 5u);

  const auto full = sample_random(2, 1, 2, 511, 99, {.partitions = 3});
  const auto exact = enumerate_hd(2, 1, 2);
  CHECK(full.examined == 511);
  CHECK(full.birational == exact.birational);
  CHECK(full.strata == exact.strata);
  CHECK(sample_random(2, 1, 2, 5000, 99).examined == 511);

  const auto a = sample_random(2, 2, 3, 400, 2024);
  const auto b = sample_random(2, 2, 3, 400, 2024, {.partitions = 4});
  CHECK(same_counts(a, b));
  CHECK(a.certificate_failures == 0);
  const auto c = sample_random(2, 2, 3, 400, 2025);
  CHECK(c.examined == 400);
}
