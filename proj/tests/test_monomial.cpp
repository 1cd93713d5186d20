#include <doctest.h>

#include <stdexcept>

#include <random>

#include "test_util.hpp"
#include "wreg/monomial.hpp"

using namespace wreg;
using testutil::ideal;
using testutil::mono;

TEST_CASE("divisibility is componentwise") {
  CHECK(mono_divides(mono({1, 1, 0}), mono({2, 2, 0})));
  CHECK_FALSE(mono_divides(mono({0, 0, 1}), mono({1, 1, 0})));
  Monomial u = mono({3, 0, 2});
  CHECK(mono_divides(u, u));
  CHECK_THROWS_AS(mono_divides(mono({1}), mono({1, 2})), std::invalid_argument);
}

TEST_CASE("lcm and colon of monomials") {
  CHECK(mono_lcm(mono({1, 1, 0}), mono({0, 1, 1})) == mono({1, 1, 1}));
  CHECK(mono_colon(mono({2, 2, 0}), mono({1, 0, 1})) == mono({1, 2, 0}));
  Monomial u = mono({2, 1, 3});
  CHECK(mono_colon(u, u).is_one());
}

TEST_CASE("minimal generating sets") {
  CHECK(ideal(2, {{1, 1}, {2, 2}}).generators() == std::vector<Monomial>{mono({1, 1})});
  CHECK(ideal(2, {{1, 0}, {0, 1}, {1, 1}}).generator_count() == 2);

  // product of I(C^3, w = (2,1,1)) with itself, via explicit expansion and
  // pairwise-divisibility pruning, independent of ideal_product
  std::vector<Monomial> edges = {mono({2, 2, 0}), mono({0, 1, 1}), mono({1, 0, 1})};
  std::vector<Monomial> expanded;
  for (const Monomial& a : edges)
    for (const Monomial& b : edges) expanded.push_back(mono_product(a, b));
  std::vector<Monomial> minimal;
  for (const Monomial& candidate : expanded) {
    bool keep = true;
    for (const Monomial& other : expanded)
      if (other != candidate && mono_divides(other, candidate)) keep = false;
    if (keep) minimal.push_back(candidate);
  }
  std::sort(minimal.begin(), minimal.end(), graded_lex_less);
  minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());

  MonomialIdeal square = ideal_power(MonomialIdeal(3, edges), 2);
  CHECK(square.generators() == minimal);
  CHECK(square.generator_count() == 6);
}

TEST_CASE("sum, product, power") {
  MonomialIdeal a = ideal(3, {{1, 1, 0}});
  MonomialIdeal b = ideal(3, {{0, 1, 1}});
  CHECK(ideal_sum(a, b).generator_count() == 2);
  CHECK(ideal_power(a, 3).generators() == std::vector<Monomial>{mono({3, 3, 0})});
  CHECK_THROWS_AS(ideal_power(a, 0), std::invalid_argument);
}

TEST_CASE("colon by a monomial") {
  // (x1^2 x2^2, x2^2 x3^2, x3 x1) : x3 = (x2^2 x3, x1)
  MonomialIdeal i = ideal(3, {{2, 2, 0}, {0, 2, 2}, {1, 0, 1}});
  MonomialIdeal expected = ideal(3, {{0, 2, 1}, {1, 0, 0}});
  CHECK(ideal_equals(ideal_colon_mono(i, mono({0, 0, 1})), expected));

  CHECK(ideal_equals(ideal_colon_mono(i, Monomial::one(3)), i));
  MonomialIdeal principal = ideal(2, {{1, 1}});
  CHECK(ideal_colon_mono(principal, mono({1, 1})).is_unit());
}

TEST_CASE("intersection and ideal colon") {
  CHECK(ideal_equals(ideal_intersect(ideal(3, {{1, 1, 0}}), ideal(3, {{0, 1, 1}})),
                     ideal(3, {{1, 1, 1}})));
  CHECK(ideal_equals(ideal_colon_ideal(ideal(3, {{1, 1, 0}, {0, 1, 1}}), ideal(3, {{0, 1, 0}})),
                     ideal(3, {{1, 0, 0}, {0, 0, 1}})));
  CHECK_THROWS_AS(ideal_colon_ideal(ideal(2, {{1, 1}}), MonomialIdeal::zero(2)),
                  std::invalid_argument);

  SUBCASE("containments") {
    std::mt19937 rng(7);
    for (int round = 0; round < 30; ++round) {
      MonomialIdeal i = testutil::random_ideal(rng, 3, 4, 3);
      MonomialIdeal j = testutil::random_ideal(rng, 3, 4, 3);
      MonomialIdeal meet = ideal_intersect(i, j);
      for (const Monomial& g : meet.generators()) CHECK(ideal_contains(i, g));
      MonomialIdeal back = ideal_product(ideal_colon_ideal(i, j), j);
      for (const Monomial& g : back.generators()) CHECK(ideal_contains(i, g));
    }
  }
}

TEST_CASE("membership and equality") {
  MonomialIdeal i = ideal(2, {{1, 1}});
  CHECK(ideal_contains(i, mono({2, 3})));
  CHECK_FALSE(ideal_contains(i, mono({1, 0})));
  CHECK(ideal_equals(ideal(2, {{1, 1}, {2, 2}}), i));
}

TEST_CASE("minimalization is idempotent on random input") {
  std::mt19937 rng(11);
  for (int round = 0; round < 50; ++round) {
    MonomialIdeal i = testutil::random_ideal(rng, 4, 6, 3);
    CHECK(ideal_equals(ideal_minimalize(4, i.generators()), i));
  }
}

TEST_CASE("power additivity on small ideals") {
  std::mt19937 rng(13);
  for (int round = 0; round < 10; ++round) {
    MonomialIdeal i = testutil::random_ideal(rng, 3, 3, 2);
    for (int s = 1; s <= 3; ++s)
      for (int t = 1; t + s <= 4; ++t)
        CHECK(ideal_equals(ideal_power(i, s + t),
                           ideal_product(ideal_power(i, s), ideal_power(i, t))));
  }
}

TEST_CASE("iterated colon equals colon by product") {
  std::mt19937 rng(17);
  for (int round = 0; round < 40; ++round) {
    MonomialIdeal i = testutil::random_ideal(rng, 3, 4, 3);
    Monomial u = testutil::random_monomial(rng, 3, 2);
    Monomial v = testutil::random_monomial(rng, 3, 2);
    CHECK(ideal_equals(ideal_colon_mono(ideal_colon_mono(i, u), v),
                       ideal_colon_mono(i, mono_product(u, v))));
  }
}

TEST_CASE("colon membership characterizes multiplication") {
  std::mt19937 rng(19);
  for (int round = 0; round < 10; ++round) {
    MonomialIdeal i = testutil::random_ideal(rng, 2, 3, 2);
    Monomial m = testutil::random_monomial(rng, 2, 2);
    MonomialIdeal colon = ideal_colon_mono(i, m);
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b) {
        Monomial u = mono({a, b});
        CHECK(ideal_contains(colon, u) == ideal_contains(i, mono_product(u, m)));
      }
  }
}

TEST_CASE("polarization") {
  Polarization p = polarize(ideal(2, {{2, 2}}));
  CHECK(p.ideal.vars() == 4);
  CHECK(p.ideal.generators() == std::vector<Monomial>{mono({1, 1, 1, 1})});
  CHECK(p.variables == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(p.flat_index(0, 1) == 1);
  CHECK(p.flat_index(1, 2) == -1);

  // squarefree ideals are fixed points
  MonomialIdeal sq = ideal(3, {{1, 1, 0}, {0, 1, 1}});
  CHECK(ideal_equals(polarize(sq).ideal, sq));

  // I(C^3, w = (2,1,1)) -> (x11 x12 x21 x22, x21 x31, x31 x11)
  Polarization c3 = polarize(ideal(3, {{2, 2, 0}, {0, 1, 1}, {1, 0, 1}}));
  CHECK(c3.ideal.vars() == 5);  // copies: x1 x2 twice, x3 once
  CHECK(ideal_equals(c3.ideal,
                     ideal(5, {{1, 1, 1, 1, 0}, {0, 0, 1, 0, 1}, {1, 0, 0, 0, 1}})));

  CHECK_THROWS_AS(polarize(MonomialIdeal::zero(2)), std::invalid_argument);

  SUBCASE("always squarefree") {
    std::mt19937 rng(23);
    for (int round = 0; round < 30; ++round) {
      MonomialIdeal i = testutil::random_ideal(rng, 3, 4, 3);
      Polarization p = polarize(i);
      for (const Monomial& g : p.ideal.generators()) CHECK(g.is_squarefree());
    }
  }
}

TEST_CASE("zero and unit ideals") {
  CHECK(MonomialIdeal::zero(3).is_zero());
  CHECK(MonomialIdeal::unit(3).is_unit());
  CHECK(ideal(3, {{0, 0, 0}, {1, 0, 0}}).is_unit());
  CHECK_FALSE(ideal_contains(MonomialIdeal::zero(2), mono({1, 1})));
  CHECK(ideal_contains(MonomialIdeal::unit(2), mono({0, 0})));
}

TEST_CASE("canonical generator order is graded lexicographic") {
  MonomialIdeal i = ideal(2, {{0, 3}, {2, 0}, {1, 1}});
  std::vector<Monomial> expected = {mono({1, 1}), mono({2, 0}), mono({0, 3})};
  CHECK(i.generators() == expected);
}
