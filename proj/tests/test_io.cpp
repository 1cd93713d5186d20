#include <doctest.h>

#include <stdexcept>

#include <random>

#include "test_util.hpp"
#include "wreg/betti.hpp"
#include "wreg/io.hpp"

using namespace wreg;
using testutil::ideal;

TEST_CASE("ideal JSON") {
  MonomialIdeal i = ideal(3, {{2, 2, 0}, {0, 1, 1}, {1, 0, 1}});
  CHECK(ideal_equals(ideal_from_json(ideal_to_json(i)), i));

  // the reader minimalizes
  MonomialIdeal loaded = ideal_from_json(R"({"n": 2, "gens": [[1, 1], [2, 2]]})");
  CHECK(loaded.generator_count() == 1);

  CHECK_THROWS(ideal_from_json(R"({"n": 2, "gens": [[1, 1, 1]]})"));

  SUBCASE("round trip on random ideals") {
    std::mt19937 rng(61);
    for (int round = 0; round < 25; ++round) {
      MonomialIdeal r = testutil::random_ideal(rng, 4, 5, 3);
      CHECK(ideal_equals(ideal_from_json(ideal_to_json(r)), r));
    }
  }
}

TEST_CASE("graph JSON") {
  WeightedGraph g = graph_from_json(R"({"shape": "cycle", "weights": [2, 1, 1]})");
  CHECK(g.shape() == GraphShape::Cycle);
  CHECK(g.vertex_count() == 3);
  CHECK(g.weight_between(0, 1) == 2);

  // explicit 1-based edges
  WeightedGraph h = graph_from_json(
      R"({"shape": "general", "n": 4, "edges": [[1, 2, 2], [3, 4, 1]]})");
  CHECK(h.weight_between(0, 1) == 2);
  CHECK(h.weight_between(2, 3) == 1);

  WeightedGraph round = graph_from_json(graph_to_json(g));
  CHECK(round.shape() == GraphShape::Cycle);
  CHECK(round.weight_between(2, 0) == 1);

  CHECK_THROWS(graph_from_json(R"({"shape": "cycle", "n": 3, "edges": [[1, 2, 1]]})"));
  CHECK_THROWS(graph_from_json(R"({"shape": "blob", "n": 2, "edges": []})"));
}

TEST_CASE("Betti table JSON is sorted by (i, j)") {
  BettiTable t;
  t.characteristic = 2;
  t.subject = BettiSubject::Ideal;
  t.entries[{1, 3}] = 1;
  t.entries[{0, 2}] = 2;
  CHECK(betti_table_to_json(t) ==
        R"({"characteristic":2,"entries":[[0,2,2],[1,3,1]],"subject":"ideal"})");
}
