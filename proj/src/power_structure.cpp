#include "wreg/power_structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "wreg/errors.hpp"
#include "wreg/graph.hpp"

namespace wreg {

namespace {

int cyclic(int index, int n) { return (index - 1 + 10 * n) % n + 1; }  // 1-based wraparound

std::vector<int> rotate_left(const std::vector<int>& v, int s) {
  int n = static_cast<int>(v.size());
  std::vector<int> out(n);
  for (int k = 0; k < n; ++k) out[k] = v[(k + s) % n];
  return out;
}

// product exponent vector of L_1^{a_1} ... L_n^{a_n}
std::vector<int> tuple_exponents(const OneWeightedCycle& cycle, const std::vector<int>& tuple) {
  int n = cycle.n;
  std::vector<int> e(n, 0);
  for (int k = 0; k < n; ++k) {
    e[k] += tuple[k] * cycle.weights[k];
    e[(k + 1) % n] += tuple[k] * cycle.weights[k];
  }
  return e;
}

// all compositions of t into n nonnegative parts
void enumerate_tuples(int n, int t, std::vector<int>& cur,
                      const std::function<void(const std::vector<int>&)>& emit) {
  int pos = static_cast<int>(cur.size());
  if (pos == n - 1) {
    cur.push_back(t);
    emit(cur);
    cur.pop_back();
    return;
  }
  for (int a = 0; a <= t; ++a) {
    cur.push_back(a);
    enumerate_tuples(n, t - a, cur, emit);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> factorizations_of(const OneWeightedCycle& cycle,
                                                const std::vector<int>& exponents, int t) {
  std::vector<std::vector<int>> found;
  std::vector<int> cur;
  enumerate_tuples(cycle.n, t, cur, [&](const std::vector<int>& tuple) {
    if (tuple_exponents(cycle, tuple) == exponents) found.push_back(tuple);
  });
  return found;
}

bool edge_divides_cached(const OneWeightedCycle& cycle, const Monomial& m1, int k,
                         const Monomial& m2, int t, std::map<int, MonomialIdeal>& powers) {
  if (k == t) return m1 == m2;
  if (!mono_divides(m1, m2)) return false;
  auto it = powers.find(t - k);
  if (it == powers.end()) it = powers.emplace(t - k, cycle_power_ideal(cycle, t - k)).first;
  Monomial quotient = mono_colon(m2, m1);
  const auto& gens = it->second.generators();
  return std::find(gens.begin(), gens.end(), quotient) != gens.end();
}

void check_order_index(const OrderedGenerators& gens, int i) {
  if (i < 1 || i > gens.prefix_c)
    throw std::invalid_argument("order index " + std::to_string(i) + " outside [c] = [1," +
                                std::to_string(gens.prefix_c) + "]");
}

}  // namespace

OneWeightedCycle normalize_one_weighted_cycle(const std::vector<int>& weights) {
  int n = static_cast<int>(weights.size());
  if (n < 4) throw std::invalid_argument("the one-weighted-edge setting needs n >= 4");
  int heavy = -1;
  for (int k = 0; k < n; ++k) {
    if (weights[k] < 1) throw std::invalid_argument("weights must be positive");
    if (weights[k] >= 2) {
      if (heavy >= 0) throw std::invalid_argument("exactly one non-trivial edge required");
      heavy = k;
    }
  }
  if (heavy < 0) throw std::invalid_argument("exactly one non-trivial edge required");
  OneWeightedCycle c;
  c.n = n;
  c.rotation = heavy;
  c.weights = rotate_left(weights, heavy);
  return c;
}

Monomial cycle_edge_monomial(const OneWeightedCycle& cycle, int i) {
  int k = cyclic(i, cycle.n) - 1;  // 0-based edge
  std::vector<int> e(cycle.n, 0);
  e[k] = cycle.weights[k];
  e[(k + 1) % cycle.n] = cycle.weights[k];
  return Monomial(std::move(e));
}

MonomialIdeal cycle_power_ideal(const OneWeightedCycle& cycle, int t) {
  if (t == 0) return MonomialIdeal::unit(cycle.n);
  std::vector<Monomial> edges;
  for (int i = 1; i <= cycle.n; ++i) edges.push_back(cycle_edge_monomial(cycle, i));
  return ideal_power(MonomialIdeal(cycle.n, edges), t);
}

EdgeFactorization edge_factorize(const Monomial& m, const std::vector<int>& weights, int t) {
  if (t < 1) throw std::invalid_argument("power must be >= 1");
  OneWeightedCycle cycle = normalize_one_weighted_cycle(weights);
  if (m.vars() != cycle.n) throw std::invalid_argument("monomial/cycle variable mismatch");

  std::vector<int> norm_exps = rotate_left(m.exponents(), cycle.rotation);
  MonomialIdeal power = cycle_power_ideal(cycle, t);
  const auto& pg = power.generators();
  if (std::find(pg.begin(), pg.end(), Monomial(norm_exps)) == pg.end())
    throw std::invalid_argument("monomial is not a minimal generator of the t-th power");

  std::vector<std::vector<int>> found = factorizations_of(cycle, norm_exps, t);
  if (found.size() != 1)
    throw TheoremViolationError("generator admits " + std::to_string(found.size()) +
                                " edge factorizations (expected exactly 1)");

  EdgeFactorization f;
  f.power = t;
  f.exponents.resize(cycle.n);
  // tuple back to the caller's edge labels
  for (int k = 0; k < cycle.n; ++k) f.exponents[(k + cycle.rotation) % cycle.n] = found[0][k];
  return f;
}

OrderedGenerators ordered_generators(const std::vector<int>& weights, int t) {
  if (t < 1) throw std::invalid_argument("power must be >= 1");
  OrderedGenerators out;
  out.cycle = normalize_one_weighted_cycle(weights);
  out.power = t;

  MonomialIdeal power = cycle_power_ideal(out.cycle, t);
  for (const Monomial& g : power.generators()) {
    std::vector<std::vector<int>> found = factorizations_of(out.cycle, g.exponents(), t);
    if (found.size() != 1)
      throw TheoremViolationError("generator " + g.str() + " admits " +
                                  std::to_string(found.size()) + " edge factorizations");
    OrderedGenerator item;
    item.monomial = g;
    item.factorization.exponents = found[0];
    item.factorization.power = t;
    out.items.push_back(std::move(item));
  }
  std::sort(out.items.begin(), out.items.end(), [](const OrderedGenerator& a, const OrderedGenerator& b) {
    return a.factorization.exponents > b.factorization.exponents;  // descending lex
  });
  for (std::size_t k = 0; k + 1 < out.items.size(); ++k)
    if (out.items[k].factorization.exponents == out.items[k + 1].factorization.exponents)
      throw TheoremViolationError("ordered generators contain a lex tie");
  out.prefix_c = 0;
  for (const OrderedGenerator& item : out.items)
    if (item.factorization.exponents[0] >= 1) ++out.prefix_c;
  // the a_1 >= 1 region must be an order prefix
  for (int k = 0; k < out.prefix_c; ++k)
    if (out.items[k].factorization.exponents[0] < 1)
      throw TheoremViolationError("L_1-divisible generators do not form a prefix");
  return out;
}

bool edge_divides(const Monomial& m1, int k, const Monomial& m2, int t,
                  const std::vector<int>& weights) {
  if (k < 1 || k > t) throw std::invalid_argument("edge_divides: need 1 <= k <= t");
  OneWeightedCycle cycle = normalize_one_weighted_cycle(weights);
  Monomial a(rotate_left(m1.exponents(), cycle.rotation));
  Monomial b(rotate_left(m2.exponents(), cycle.rotation));
  MonomialIdeal pk = cycle_power_ideal(cycle, k);
  MonomialIdeal pt = cycle_power_ideal(cycle, t);
  const auto& gk = pk.generators();
  const auto& gt = pt.generators();
  if (std::find(gk.begin(), gk.end(), a) == gk.end())
    throw std::invalid_argument("edge_divides: m1 is not a minimal generator of I^k");
  if (std::find(gt.begin(), gt.end(), b) == gt.end())
    throw std::invalid_argument("edge_divides: m2 is not a minimal generator of I^t");
  std::map<int, MonomialIdeal> cache;
  return edge_divides_cached(cycle, a, k, b, t, cache);
}

MonomialIdeal colon_tail(const OrderedGenerators& gens, int i) {
  check_order_index(gens, i);
  std::vector<Monomial> tail;
  for (std::size_t k = static_cast<std::size_t>(i); k < gens.items.size(); ++k)
    tail.push_back(gens.items[k].monomial);
  MonomialIdeal j(gens.cycle.n, tail);
  return ideal_colon_mono(j, gens.items[i - 1].monomial);
}

MonomialIdeal colon_tail(const std::vector<int>& weights, int t, int i) {
  return colon_tail(ordered_generators(weights, t), i);
}

MonomialIdeal predicted_colon_tail(const OrderedGenerators& gens, int i) {
  check_order_index(gens, i);
  const OneWeightedCycle& cycle = gens.cycle;
  const int n = cycle.n;
  const int t = gens.power;
  const OrderedGenerator& item = gens.items[i - 1];

  std::vector<int> support;  // 1-based edge indices i_1 < ... < i_{k_i}
  for (int k = 0; k < n; ++k)
    if (item.factorization.exponents[k] > 0) support.push_back(k + 1);
  if (support.empty() || support.front() != 1)
    throw TheoremViolationError("element of C without L_1 in its factorization");

  // K_i = ((L_2,...,L_n):L_1) + sum_{j=2}^{p_i} (L_{i_j+1} : L_{i_j})
  std::vector<Monomial> others;
  for (int e = 2; e <= n; ++e) others.push_back(cycle_edge_monomial(cycle, e));
  MonomialIdeal ki = ideal_colon_mono(MonomialIdeal(n, others), cycle_edge_monomial(cycle, 1));

  int k_i = static_cast<int>(support.size());
  int p_i = (support.back() == n) ? k_i - 1 : k_i;
  for (int j = 2; j <= p_i; ++j) {
    int edge = support[j - 1];
    Monomial colon = mono_colon(cycle_edge_monomial(cycle, edge + 1), cycle_edge_monomial(cycle, edge));
    ki = ideal_sum(ki, MonomialIdeal::principal(colon));
  }

  // Q_i = sum_{j=0}^{q_i} (x_{n-2j}), q_i from the consecutive edge-division
  // chain L_{n+1-2s} |edge L_i^{(t)}; the chain starts at L_{n+1} = L_1 and
  // the search stops after floor(n/2) steps (indices repeat beyond that).
  std::map<int, MonomialIdeal> powers;
  int q_i = -1;
  for (int s = 0; s <= n / 2; ++s) {
    Monomial edge = cycle_edge_monomial(cycle, cyclic(n + 1 - 2 * s, n));
    if (!edge_divides_cached(cycle, edge, 1, item.monomial, t, powers)) break;
    q_i = s;
  }
  if (q_i < 0) throw TheoremViolationError("L_1 does not edge-divide an element of C");

  MonomialIdeal qi = MonomialIdeal::zero(n);
  for (int j = 0; j <= q_i; ++j) {
    int var = cyclic(n - 2 * j, n) - 1;  // 0-based variable
    qi = ideal_sum(qi, MonomialIdeal::principal(Monomial::variable(n, var)));
  }
  return ideal_sum(ki, qi);
}

MonomialIdeal predicted_colon_tail(const std::vector<int>& weights, int t, int i) {
  return predicted_colon_tail(ordered_generators(weights, t), i);
}

LiWitness find_li_witness(const OrderedGenerators& gens, int i, int j) {
  check_order_index(gens, i);
  const int r = static_cast<int>(gens.items.size());
  if (j <= i || j > r) throw std::invalid_argument("find_li_witness: need i < j <= r");
  const OneWeightedCycle& cycle = gens.cycle;
  const int n = cycle.n;
  const int t = gens.power;
  const Monomial& mi = gens.items[i - 1].monomial;
  Monomial target = mono_colon(gens.items[j - 1].monomial, mi);

  std::map<int, MonomialIdeal> powers;
  for (int k = i + 1; k <= r; ++k) {
    Monomial cand = mono_colon(gens.items[k - 1].monomial, mi);
    if (!mono_divides(cand, target)) continue;  // need (L_j:L_i) inside (L_k:L_i)

    // form 1: (L_k:L_i) = (L_{l2}:L_{l1}), l1 < l2, with the edge divisions
    for (int l1 = 1; l1 <= n; ++l1) {
      for (int l2 = l1 + 1; l2 <= n; ++l2) {
        if (cand != mono_colon(cycle_edge_monomial(cycle, l2), cycle_edge_monomial(cycle, l1)))
          continue;
        if (edge_divides_cached(cycle, cycle_edge_monomial(cycle, l2), 1,
                                gens.items[k - 1].monomial, t, powers) &&
            edge_divides_cached(cycle, cycle_edge_monomial(cycle, l1), 1, mi, t, powers))
          return {k, 1};
      }
    }
    // form 2: (L_k:L_i) = (x_{n-2d}) with the division chains down to s = 0
    for (int d = 0; d <= n / 2; ++d) {
      if (cand != Monomial::variable(n, cyclic(n - 2 * d, n) - 1)) continue;
      bool chain = true;
      for (int s = 0; s <= d && chain; ++s) {
        chain = edge_divides_cached(cycle, cycle_edge_monomial(cycle, cyclic(n - 2 * s, n)), 1,
                                    gens.items[k - 1].monomial, t, powers) &&
                edge_divides_cached(cycle, cycle_edge_monomial(cycle, cyclic(n + 1 - 2 * s, n)), 1,
                                    mi, t, powers);
      }
      if (chain) return {k, 2};
    }
  }
  throw TheoremViolationError("no colon witness L_k for the pair (i=" + std::to_string(i) +
                              ", j=" + std::to_string(j) + ")");
}

LiWitness find_li_witness(const std::vector<int>& weights, int t, int i, int j) {
  return find_li_witness(ordered_generators(weights, t), i, j);
}

}  // namespace wreg
