#include <doctest.h>

#include <stdexcept>

#include "test_util.hpp"
#include "wreg/graph.hpp"
#include "wreg/integral_closure.hpp"

using namespace wreg;
using testutil::ideal;

TEST_CASE("constructors enforce shape constraints") {
  WeightedGraph c3 = build_cycle({2, 1, 1});
  CHECK(c3.vertex_count() == 3);
  CHECK(c3.edges().size() == 3);
  CHECK(c3.shape() == GraphShape::Cycle);
  CHECK_THROWS_AS(build_cycle({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_cycle({2, 0, 1}), std::invalid_argument);

  WeightedGraph p4 = build_path({2, 1, 1});
  CHECK(p4.vertex_count() == 4);
  CHECK(p4.edges().size() == 3);
  CHECK_THROWS_AS(build_general(3, {{0, 0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(build_general(3, {{0, 1, 1}, {1, 0, 2}}), std::invalid_argument);
}

TEST_CASE("edge ideals of weighted graphs") {
  CHECK(ideal_equals(edge_ideal(build_cycle({2, 1, 1})),
                     ideal(3, {{2, 2, 0}, {0, 1, 1}, {1, 0, 1}})));
  CHECK(ideal_equals(edge_ideal(build_path({3})), ideal(2, {{3, 3}})));
  CHECK(ideal_equals(edge_ideal(build_cycle({2, 1, 2, 1})),
                     ideal(4, {{2, 2, 0, 0}, {0, 1, 1, 0}, {0, 0, 2, 2}, {1, 0, 0, 1}})));
  CHECK_THROWS_AS(edge_ideal(build_general(3, {})), std::invalid_argument);
}

TEST_CASE("induced subgraphs keep the ambient ring and weights") {
  WeightedGraph c4 = build_cycle({1, 1, 1, 1});
  WeightedGraph sub = induced_subgraph(c4, {0, 1, 2});
  CHECK(sub.vertex_count() == 4);
  CHECK(sub.vertices() == std::vector<int>{0, 1, 2});
  CHECK(sub.edges().size() == 2);

  WeightedGraph c6 = build_cycle({2, 1, 2, 1, 2, 1});
  WeightedGraph sub4 = induced_subgraph(c6, {0, 1, 2, 3});
  REQUIRE(sub4.edges().size() == 3);
  CHECK(sub4.weight_between(0, 1) == 2);
  CHECK(sub4.weight_between(1, 2) == 1);
  CHECK(sub4.weight_between(2, 3) == 2);

  CHECK(induced_subgraph(c4, {}).edges().empty());
  CHECK_THROWS_AS(induced_subgraph(c4, {5}), std::invalid_argument);

  SUBCASE("edge ideal of an induced subgraph is the edge sub-ideal") {
    WeightedGraph g = build_cycle({2, 1, 3, 1, 1});
    std::vector<int> keep = {0, 1, 2, 4};
    MonomialIdeal from_subgraph = edge_ideal(induced_subgraph(g, keep));
    std::vector<Monomial> inside;
    for (const WeightedEdge& e : g.edges()) {
      bool u_in = std::find(keep.begin(), keep.end(), e.u) != keep.end();
      bool v_in = std::find(keep.begin(), keep.end(), e.v) != keep.end();
      if (u_in && v_in) {
        std::vector<int> exp(g.vertex_count(), 0);
        exp[e.u] = e.weight;
        exp[e.v] = e.weight;
        inside.emplace_back(std::move(exp));
      }
    }
    CHECK(ideal_equals(from_subgraph, ideal_minimalize(g.vertex_count(), inside)));
  }
}

TEST_CASE("combinatorial integral-closure verdicts") {
  CHECK_FALSE(is_integrally_closed_combinatorial(build_cycle({2, 2, 2})));
  CHECK(is_integrally_closed_combinatorial(build_cycle({2, 1, 2, 1, 2, 1})));
  // induced pair of disjoint non-trivial edges on {x1, x2, x4, x5}
  CHECK_FALSE(is_integrally_closed_combinatorial(build_cycle({2, 1, 1, 2, 1, 1, 1})));
  CHECK(is_integrally_closed_combinatorial(build_path({1, 1})));
  CHECK(is_integrally_closed_combinatorial(build_cycle({1, 1, 1, 1, 1})));
  CHECK_FALSE(is_integrally_closed_combinatorial(build_path({2, 2})));
}

TEST_CASE("combinatorial and algebraic oracles agree on small sweeps") {
  for (int n = 3; n <= 5; ++n) {
    std::vector<int> w(n, 1);
    for (;;) {
      WeightedGraph g = build_cycle(w);
      CHECK_MESSAGE(is_integrally_closed_combinatorial(g) ==
                        is_integrally_closed_algebraic(edge_ideal(g)),
                    "cycle disagreement at n=", n);
      int k = n - 1;
      while (k >= 0 && w[k] == 2) w[k--] = 1;
      if (k < 0) break;
      ++w[k];
    }
  }
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> w(n - 1, 1);
    for (;;) {
      WeightedGraph g = build_path(w);
      CHECK(is_integrally_closed_combinatorial(g) ==
            is_integrally_closed_algebraic(edge_ideal(g)));
      int k = n - 2;
      while (k >= 0 && w[k] == 3) w[k--] = 1;
      if (k < 0) break;
      ++w[k];
    }
  }
}

TEST_CASE("closure verdict is invariant under rotation and reflection") {
  std::vector<std::vector<int>> samples = {{2, 1, 2, 1, 1, 1}, {3, 1, 1, 2, 1, 1}, {2, 2, 1, 1, 1, 1}};
  for (const std::vector<int>& w : samples) {
    int n = static_cast<int>(w.size());
    bool base = is_integrally_closed_combinatorial(build_cycle(w));
    for (int s = 0; s < n; ++s) {
      std::vector<int> rot(n);
      for (int k = 0; k < n; ++k) rot[k] = w[(k + s) % n];
      CHECK(is_integrally_closed_combinatorial(build_cycle(rot)) == base);
      std::reverse(rot.begin(), rot.end());
      CHECK(is_integrally_closed_combinatorial(build_cycle(rot)) == base);
    }
  }
}

TEST_CASE("delete_vertex removes incident edges only") {
  WeightedGraph c5 = build_cycle({2, 1, 1, 1, 1});
  WeightedGraph g = delete_vertex(c5, 2);
  CHECK(g.vertices() == std::vector<int>{0, 1, 3, 4});
  CHECK(g.edges().size() == 3);
  CHECK(g.weight_between(1, 2) == 0);
}
