#include <doctest.h>

#include "polyhex/error.hpp"
#include "polyhex/oracle.hpp"
#include "polyhex/recognize.hpp"
#include "test_support.hpp"

using namespace polyhex;
using polyhex::testing::poly;

TEST_CASE("directed animals by recursion") {
  CHECK(oracle::directed_by_recursion(1) == std::set<Polyomino>{poly({{0, 0}})});
  CHECK(oracle::directed_by_recursion(2).size() == 3);
  CHECK(oracle::directed_by_recursion(3).size() == 10);
  CHECK_THROWS_AS(oracle::directed_by_recursion(10), Error);
}

TEST_CASE("naive enumeration") {
  CHECK(oracle::naive_enumerate(1).size() == 1);
  CHECK(oracle::naive_enumerate(2).size() == 3);
  CHECK(oracle::naive_enumerate(4).size() == 44);
  CHECK_THROWS_AS(oracle::naive_enumerate(9), Error);
}

TEST_CASE("literal domination agrees with the scan used in hexcore tests") {
  for (int x = -4; x <= 4; ++x)
    for (int y = -4; y <= 4; ++y)
      for (int u = -4; u <= 4; ++u)
        for (int v = -4; v <= 4; ++v)
          CHECK(oracle::dominates_literal({x, y}, {u, v}) == testing::dominates_by_scan({x, y}, {u, v}));
}

TEST_CASE("directedness by recursion on fixed shapes") {
  CHECK(oracle::is_directed_by_recursion({{0, 0}}));
  CHECK(oracle::is_directed_by_recursion({{0, 0}, {1, 0}, {2, 0}}));
  CHECK_FALSE(oracle::is_directed_by_recursion({{0, 0}, {1, 0}, {2, -1}}));
  CHECK_FALSE(oracle::is_directed_by_recursion({{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 1}}));
}

TEST_CASE("witness search examples") {
  const auto single = oracle::witness_search(poly({{0, 0}}), 4);
  REQUIRE(single.found);
  CHECK(single.witness->k() == 1);

  const Polyomino two = poly({{0, 0}, {1, 0}, {2, 0}, {2, -1}});
  const auto w = oracle::witness_search(two, 4);
  REQUIRE(w.found);
  CHECK(*w.witness == canonical_decomposition(two));

  const auto none = oracle::witness_search(make_polyomino(testing::kP7), 7);
  CHECK_FALSE(none.found);
  CHECK_FALSE(none.witness.has_value());

  // k_max caps the number of components.
  CHECK_FALSE(oracle::witness_search(two, 1).found);
}

TEST_CASE("witness search size bound") {
  std::vector<Cell> line;
  for (int x = 0; x < 13; ++x) line.push_back({x, 0});
  CHECK_THROWS_AS(oracle::witness_search(make_polyomino(line), 13), Error);
}
