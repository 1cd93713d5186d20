#include <doctest.h>

#include <stdexcept>

#include "test_util.hpp"
#include "wreg/betti.hpp"
#include "wreg/closed_forms.hpp"
#include "wreg/errors.hpp"
#include "wreg/graph.hpp"
#include "wreg/sweep.hpp"

using namespace wreg;

TEST_CASE("path predictions") {
  CHECK(predict_reg_path_power({1, 1, 1}, 1) == 1);
  CHECK(predict_reg_path_power({2, 1, 1}, 1) == 3);
  CHECK(predict_reg_path_power({2, 1, 1}, 2) == 7);
  CHECK(predict_reg_path_power({3}, 1) == 5);        // single edge: reg(S/(x1^3 x2^3)) = 5
  CHECK(predict_reg_path_power({1, 1, 1, 1, 1}, 1) == 2);
  CHECK_THROWS_AS(predict_reg_path_power({2, 2}, 1), NotIntegrallyClosedError);
  CHECK_THROWS_AS(predict_reg_path_power({1, 0}, 1), std::invalid_argument);
}

TEST_CASE("cycle predictions") {
  CHECK(predict_reg_cycle_power({3, {3, 1, 1}, 2}) == 11);
  CHECK(predict_reg_cycle_power({6, {1, 1, 1, 1, 1, 1}, 1}) == 2);
  CHECK(predict_reg_cycle_power({7, {2, 1, 2, 1, 1, 1, 1}, 2}) == 8);
  CHECK_THROWS_AS(predict_reg_cycle_power({3, {2, 2, 2}, 1}), NotIntegrallyClosedError);
  CHECK_THROWS_AS(predict_reg_cycle_power({3, {2, 1}, 1}), std::invalid_argument);
}

TEST_CASE("regular sequence formula") {
  CHECK(predict_reg_regular_sequence(2, 3, 2) == 6);
  CHECK(predict_reg_regular_sequence(1, 5, 7) == 7);
  CHECK(predict_reg_regular_sequence(2, 1, 3) == 6);
  CHECK_THROWS_AS(predict_reg_regular_sequence(0, 1, 1), std::invalid_argument);
}

TEST_CASE("cycle prediction is rotation and reflection invariant") {
  std::vector<int> w = {2, 1, 3, 1, 1, 1};
  int n = static_cast<int>(w.size());
  int base = predict_reg_cycle_power({n, w, 2});
  for (int s = 0; s < n; ++s) {
    std::vector<int> rot(n);
    for (int k = 0; k < n; ++k) rot[k] = w[(k + s) % n];
    CHECK(predict_reg_cycle_power({n, rot, 2}) == base);
    std::reverse(rot.begin(), rot.end());
    CHECK(predict_reg_cycle_power({n, rot, 2}) == base);
  }
}

TEST_CASE("prediction grows linearly in the power") {
  for (int t = 1; t <= 4; ++t) {
    CHECK(predict_reg_cycle_power({5, {3, 1, 1, 1, 1}, t + 1}) -
              predict_reg_cycle_power({5, {3, 1, 1, 1, 1}, t}) ==
          6);
    CHECK(predict_reg_cycle_power({5, {1, 1, 1, 1, 1}, t + 1}) -
              predict_reg_cycle_power({5, {1, 1, 1, 1, 1}, t}) ==
          2);
    CHECK(predict_reg_path_power({1, 2, 1}, t + 1) - predict_reg_path_power({1, 2, 1}, t) == 4);
  }
}

TEST_CASE("t = 1 dispatch agrees with the single-power formulas") {
  for (int n = 3; n <= 9; ++n) {
    for (const std::vector<int>& w : enumerate_weight_vectors(n, {1, 2, 3}, true, true)) {
      if (!is_integrally_closed_combinatorial(build_cycle(w))) continue;
      int omega = *std::max_element(w.begin(), w.end());
      int expected = omega == 1 ? (n + 1) / 3 : 2 * omega + n / 3 - 2;
      CHECK(predict_reg_cycle_power({n, w, 1}) == expected);
    }
  }
}

TEST_CASE("tied maximal edges at distance two agree with the engine") {
  // both argmax positions are admissible on paper; the anchored choice must
  // reproduce the exact value
  MonomialIdeal p5 = edge_ideal(build_path({2, 1, 2, 1}));
  CHECK(predict_reg_path_power({2, 1, 2, 1}, 1) == regularity_quotient(p5, 32003));

  MonomialIdeal p6 = edge_ideal(build_path({2, 1, 2, 1, 1}));
  CHECK(predict_reg_path_power({2, 1, 2, 1, 1}, 1) == regularity_quotient(p6, 32003));
}
