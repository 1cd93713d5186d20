#include "wreg/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "wreg/errors.hpp"
#include "wreg/graph.hpp"

namespace wreg {

namespace {

// floor division (the formulas use floor of possibly negative numerators)
int fdiv(int a, int b) {
  int q = a / b, r = a % b;
  return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

void check_weights(const std::vector<int>& weights) {
  for (int w : weights)
    if (w < 1) throw std::invalid_argument("weights must be positive");
}

// Base regularity reg(S/I(P_w^n)) of a non-trivial integrally closed path,
// computed from every qualifying maximal edge in both orientations.  A
// qualifying index i has w_i maximal, w_i >= w_{i+2} when that edge exists,
// and anchors every non-trivial edge inside {e_i, e_{i+2}} (an integrally
// closed path has at most two non-trivial edges, at distance exactly two;
// the two-case formula accounts for the second one through w_{i+2} only).
// All qualifying choices must give the same value.
int nontrivial_path_base(const std::vector<int>& weights) {
  const int m = static_cast<int>(weights.size());  // edge count
  const int n = m + 1;
  const int omega = *std::max_element(weights.begin(), weights.end());

  std::vector<int> values;
  for (int orientation = 0; orientation < 2; ++orientation) {
    std::vector<int> w = weights;
    if (orientation) std::reverse(w.begin(), w.end());
    for (int i = 1; i <= m; ++i) {  // 1-based edge index
      if (w[i - 1] != omega) continue;
      bool has_next2 = i + 2 <= m;
      if (has_next2 && w[i + 1] > omega) continue;  // literal side condition
      bool anchors_all = true;
      for (int k = 1; k <= m; ++k)
        if (w[k - 1] >= 2 && k != i && k != i + 2) anchors_all = false;
      if (!anchors_all) continue;
      if (n <= 4) {
        values.push_back(2 * omega - 1);
        continue;
      }
      int value = 2 * omega + fdiv(i - 1, 3) + fdiv(n - (i + 1), 3);
      if (has_next2) {
        int other = 2 * w[i + 1] + fdiv(i - 2, 3) + fdiv(n - i, 3);
        value = std::max(value, other);
      }
      values.push_back(value - 1);
    }
  }
  if (values.empty())
    throw TheoremViolationError("no maximal edge satisfies the side condition on path");
  for (int v : values)
    if (v != values.front())
      throw TheoremViolationError("qualifying maximal edges disagree on path regularity");
  return values.front();
}

}  // namespace

int predict_reg_path_power(const std::vector<int>& weights, int t) {
  if (weights.empty()) throw std::invalid_argument("path needs at least one edge");
  check_weights(weights);
  if (t < 1) throw std::invalid_argument("power must be >= 1");

  WeightedGraph path = build_path(weights);
  if (!is_integrally_closed_combinatorial(path))
    throw NotIntegrallyClosedError("path is not integrally closed");

  const int n = static_cast<int>(weights.size()) + 1;
  if (path.is_trivial()) return (n + 1) / 3 + 2 * (t - 1);

  int omega = *std::max_element(weights.begin(), weights.end());
  return nontrivial_path_base(weights) + 2 * (t - 1) * omega;
}

int predict_reg_cycle_power(const CyclePowerQuery& q) {
  if (q.n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  if (static_cast<int>(q.weights.size()) != q.n)
    throw std::invalid_argument("weight count must equal cycle length");
  check_weights(q.weights);
  if (q.power < 1) throw std::invalid_argument("power must be >= 1");

  WeightedGraph cycle = build_cycle(q.weights);
  if (!is_integrally_closed_combinatorial(cycle))
    throw NotIntegrallyClosedError("cycle is not integrally closed");

  if (cycle.is_trivial()) return (q.n + 1) / 3 + 2 * (q.power - 1);
  int omega = cycle.max_weight();
  return 2 * omega * q.power + q.n / 3 - 2;
}

long long predict_reg_regular_sequence(int d, int m, int t) {
  if (d < 1 || m < 1 || t < 1)
    throw std::invalid_argument("predict_reg_regular_sequence: all arguments must be >= 1");
  return static_cast<long long>(d) * t + static_cast<long long>(d - 1) * (m - 1);
}

}  // namespace wreg
