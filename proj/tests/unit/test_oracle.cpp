#include "doctest.h"
#include "fixtures.hpp"
#include "triso/errors.hpp"
#include "triso/multi_isolate.hpp"
#include "triso/oracle.hpp"

using namespace test;

TEST_CASE("mult_by_derivatives at the stacked origin") {
  auto t = stacked_origin();
  AlgebraicPoint pt = point({"x", "y", "z"}, {I("0", "0"), I("0", "0"), I("0", "0")});
  CHECK(mult_by_derivatives(t, pt, 0) == 3);
  CHECK(mult_by_derivatives(t, pt, 1) == 2);
  CHECK(mult_by_derivatives(t, pt, 2) == 2);

  AlgebraicPoint off = point({"x - 1", "y", "z"}, {I("1", "1"), I("0", "0"), I("0", "0")});
  CHECK_THROWS_AS(mult_by_derivatives(t, off, 0), NotARoot);
}

TEST_CASE("mult_by_derivatives agrees with reported exponents on the fixtures") {
  for (const auto& t : {multi_branch(), degree_drop(), fat_point(), stacked_origin(), quartic_pair()}) {
    auto m = multi_isolate(t);
    for (const auto& s : m.solutions) {
      AlgebraicPoint pt = branch_point(m.branches[s.branch_id], s.box);
      for (std::size_t k = 0; k < t.size(); ++k) CHECK(mult_by_derivatives(t, pt, k) == s.exponents[k]);
    }
  }
}

TEST_CASE("surd comparisons") {
  SurdValue v{1, 1};  // 1 + sqrt2
  CHECK(compare(v, 2, R("2")) > 0);
  CHECK(compare(v, 2, R("5/2")) < 0);
  CHECK(contains(I("2", "5/2"), v, 2));
  CHECK_FALSE(contains(I("5/2", "3"), v, 2));
  CHECK(compare({0, -1}, 2, R("-1")) < 0);
  CHECK(compare({3, 0}, 2, R("3")) == 0);
}

TEST_CASE("planted system by hand") {
  std::vector<std::string> xy{"x", "y"};
  auto m = multi_isolate(system_of({"(x - 1)^2*(x + 2)", "(y - x)^3"}, xy));
  REQUIRE(m.solutions.size() == 2);
  CHECK(m.solutions[0].box == Box({I("-2", "-2"), I("-2", "-2")}));
  CHECK(m.solutions[0].multiplicity == 3);
  CHECK(m.solutions[1].box == Box({I("1", "1"), I("1", "1")}));
  CHECK(m.solutions[1].multiplicity == 6);
}

TEST_CASE("plant_system construction invariants") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    std::size_t n = 1 + seed % 3;
    PlantedSystem ps = plant_system(n, 6, seed);
    CHECK(ps.system.size() == n);
    for (std::size_t k = 0; k < n; ++k) CHECK(ps.system[k].degree(k) <= 6);
    for (const auto& r : ps.expected) {
      unsigned long prod = 1;
      for (unsigned e : r.exponents) prod *= e;
      CHECK(prod == r.multiplicity);
      CHECK(r.coords.size() == n);
    }
    PlantedSystem again = plant_system(n, 6, seed);
    CHECK(again.system.polys() == ps.system.polys());
  }
  CHECK_THROWS_AS(plant_system(4, 6, 0), std::invalid_argument);
  CHECK(plant_system(1, 4, 3).system.nvars() == 1);
}

TEST_CASE("planted recovery on a few seeds") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    PlantedSystem ps = plant_system(1 + seed % 3, 6, seed);
    auto m = multi_isolate(ps.system);
    REQUIRE(m.solutions.size() == ps.expected.size());
    for (const auto& r : ps.expected) {
      int hits = 0;
      for (const auto& s : m.solutions) {
        bool inside = true;
        for (std::size_t k = 0; k < r.coords.size(); ++k) inside = inside && contains(s.box[k], r.coords[k], ps.surd);
        if (inside) {
          ++hits;
          CHECK(s.multiplicity == r.multiplicity);
          CHECK(s.exponents == r.exponents);
        }
      }
      CHECK(hits == 1);
    }
  }
}
