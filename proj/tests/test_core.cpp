#include "doctest.h"
#include "oracles.hpp"

#include "fusion/core.hpp"
#include "fusion/lattice.hpp"
#include "fusion/provider.hpp"

#include <random>

using namespace fusion;

TEST_CASE("labels compare by id in shortlex order") {
  CHECK(IrrLabel{"u1", 2} == IrrLabel{"u1", 7});
  LabelOrder less;
  CHECK(less({"b", 1}, {"aa", 1}));
  CHECK(less({"a", 1}, {"b", 1}));
  CHECK_FALSE(less({"b", 1}, {"b", 3}));
}

TEST_CASE("decompositions are multisets with exact dimensions") {
  Decomposition d;
  d.add({"x", 2}, 3);
  d.add({"y", 5}, 1);
  d.add({"x", 2}, 0);
  CHECK(d.multiplicity({"x", 2}) == 3);
  CHECK(d.total_dimension() == 11);
  CHECK(d.total_multiplicity() == 4);
  CHECK_FALSE(d.as_single());
  CHECK(Decomposition::single({"z", 4}).as_single()->id == "z");
  Decomposition e;
  e.add({"y", 5}, 1);
  e.add({"x", 2}, 3);
  CHECK(d == e);
  CHECK(to_string(d) == "3*x + y");
}

TEST_CASE("virtual elements drop zero coefficients") {
  VirtualElement a = VirtualElement::of({"x", 2}, 2) + VirtualElement::of({"y", 3});
  VirtualElement b = VirtualElement::of({"x", 2}, 2);
  VirtualElement c = a - b;
  CHECK(c.size() == 1);
  CHECK(c.coefficient({"y", 3}) == 1);
  CHECK(c.dimension() == 3);
  CHECK((a - a).is_zero());
  CHECK_FALSE((b - a).is_effective());
  CHECK(a.to_decomposition().total_dimension() == 7);
}

TEST_CASE("budgets reject zero fields") {
  Budget b;
  CHECK_NOTHROW(b.validate());
  b.max_rounds = 0;
  CHECK_THROWS_AS(b.validate(), std::invalid_argument);
}

TEST_CASE("integer lattice membership agrees with the adjugate criterion") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> entry(-6, 6);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::array<std::array<long, 3>, 3> m{};
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    if (oracle::det3(m) == 0) continue;
    IntegerLattice lattice(3);
    for (int col = 0; col < 3; ++col) lattice.add({m[0][col], m[1][col], m[2][col]});
    // A redundant generator must not change the lattice.
    lattice.add({m[0][0] + 2 * m[0][1], m[1][0] + 2 * m[1][1], m[2][0] + 2 * m[2][1]});
    CHECK(lattice.rank() == 3);
    for (int probe = 0; probe < 20; ++probe) {
      const std::array<long, 3> v{entry(rng), entry(rng), entry(rng)};
      CHECK(lattice.contains({v[0], v[1], v[2]}) == oracle::in_full_rank_lattice(m, v));
      ++checked;
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("integer lattice of lower rank") {
  IntegerLattice lattice(3);
  lattice.add({2, 4, 6});
  lattice.add({3, 6, 9});
  CHECK(lattice.rank() == 1);
  CHECK(lattice.contains({1, 2, 3}));
  CHECK_FALSE(lattice.contains({1, 2, 4}));
  CHECK(lattice.contains({0, 0, 0}));
  lattice.add({0, 0, 5});
  CHECK(lattice.rank() == 2);
  CHECK(lattice.contains({1, 2, 8}));
  CHECK_FALSE(lattice.contains({0, 0, 1}));
  for (const auto& row : lattice.basis()) {
    bool seen_pivot = false;
    for (const auto& x : row)
      if (!seen_pivot && x != 0) {
        CHECK(x > 0);
        seen_pivot = true;
      }
  }
}

TEST_CASE("lattice membership with large entries stays exact") {
  IntegerLattice lattice(2);
  const Integer big = Integer(1) << 100;
  lattice.add({big, 0});
  lattice.add({0, 3});
  CHECK(lattice.contains({big * 5, 9}));
  CHECK_FALSE(lattice.contains({big + 1, 0}));
}
