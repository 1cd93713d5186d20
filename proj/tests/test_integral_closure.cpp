#include <doctest.h>

#include <stdexcept>

#include <random>

#include "test_util.hpp"
#include "wreg/errors.hpp"
#include "wreg/integral_closure.hpp"

using namespace wreg;
using testutil::ideal;
using testutil::mono;

TEST_CASE("closure of (x1^2, x2^2) picks up x1 x2") {
  MonomialIdeal i = ideal(2, {{2, 0}, {0, 2}});
  MonomialIdeal expected = ideal(2, {{2, 0}, {1, 1}, {0, 2}});
  CHECK(ideal_equals(ideal_integral_closure(i), expected));
  CHECK_FALSE(is_integrally_closed_algebraic(i));

  // power-membership witness for the new generator: (x1 x2)^2 = x1^2 x2^2
  CHECK(ideal_contains(ideal_power(i, 2), mono_power(mono({1, 1}), 2)));
}

TEST_CASE("principal monomial ideals are integrally closed") {
  MonomialIdeal i = ideal(2, {{1, 1}});
  CHECK(is_integrally_closed_algebraic(i));
  CHECK(ideal_equals(ideal_integral_closure(i), i));
}

TEST_CASE("the all-heavy triangle edge ideal is not closed") {
  MonomialIdeal i = ideal(3, {{2, 2, 0}, {0, 2, 2}, {2, 0, 2}});
  CHECK_FALSE(is_integrally_closed_algebraic(i));
}

TEST_CASE("newton polyhedron membership") {
  MonomialIdeal i = ideal(2, {{2, 0}, {0, 2}});
  CHECK(in_newton_polyhedron(i, mono({1, 1})));
  CHECK_FALSE(in_newton_polyhedron(i, mono({1, 0})));
  CHECK(in_newton_polyhedron(i, mono({5, 7})));
}

TEST_CASE("zero ideal is rejected") {
  CHECK_THROWS_AS(ideal_integral_closure(MonomialIdeal::zero(2)), std::invalid_argument);
  CHECK_THROWS_AS(is_integrally_closed_algebraic(MonomialIdeal::zero(2)), std::invalid_argument);
}

TEST_CASE("closure is idempotent and dominates the ideal") {
  std::mt19937 rng(31);
  for (int round = 0; round < 25; ++round) {
    MonomialIdeal i = testutil::random_ideal(rng, 3, 4, 3);
    if (i.is_unit()) continue;
    MonomialIdeal closure = ideal_integral_closure(i);
    for (const Monomial& g : i.generators()) CHECK(ideal_contains(closure, g));
    CHECK(ideal_equals(ideal_integral_closure(closure), closure));
    CHECK(is_integrally_closed_algebraic(closure));
  }
}

TEST_CASE("every new closure generator has a power-membership witness") {
  std::mt19937 rng(37);
  for (int round = 0; round < 25; ++round) {
    MonomialIdeal i = testutil::random_ideal(rng, 3, 4, 3);
    if (i.is_unit()) continue;
    MonomialIdeal closure = ideal_integral_closure(i);
    for (const Monomial& g : closure.generators()) {
      if (ideal_contains(i, g)) continue;
      bool witnessed = false;
      for (int m = 2; m <= 4 && !witnessed; ++m)
        witnessed = ideal_contains(ideal_power(i, m), mono_power(g, m));
      CHECK_MESSAGE(witnessed, "no power witness for ", g.str());
    }
  }
}

TEST_CASE("box cap is reported") {
  ClosureOptions opt;
  opt.max_box = 8;
  MonomialIdeal i = ideal(2, {{4, 0}, {0, 4}});
  CHECK_THROWS_AS(ideal_integral_closure(i, opt), ResourceCapError);
}
