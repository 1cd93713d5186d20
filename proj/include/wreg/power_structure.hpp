#ifndef WREG_POWER_STRUCTURE_HPP
#define WREG_POWER_STRUCTURE_HPP

#include <vector>

#include "wreg/monomial.hpp"

namespace wreg {

// Machinery for an n-cycle (n >= 4) with exactly one non-trivial edge.
// Inputs may carry the non-trivial edge anywhere; they are rotated into the
// normalized frame (edge 1 non-trivial) in which the paper's order is
// defined.  Edge indices in this module are 1-based: L_1, ..., L_n with
// L_i = (x_i x_{i+1})^{w_i} and cyclic convention L_{n+m} = L_m.

struct OneWeightedCycle {
  int n = 0;
  std::vector<int> weights;  // normalized: weights[0] >= 2, all others 1
  int rotation = 0;          // caller edge (k + rotation) mod n became normalized edge k
};

// Accepts a weight vector with exactly one entry >= 2 and returns the
// normalized description.
OneWeightedCycle normalize_one_weighted_cycle(const std::vector<int>& weights);

// The edge monomial L_i (1-based, cyclic) of a normalized cycle.
Monomial cycle_edge_monomial(const OneWeightedCycle& cycle, int i);

// G(I(C)^t) in the normalized frame; results are cached per power.
MonomialIdeal cycle_power_ideal(const OneWeightedCycle& cycle, int t);

struct EdgeFactorization {
  std::vector<int> exponents;  // exponents[k] = a_{k+1}, the multiplicity of edge k+1
  int power = 0;               // sum of exponents
};

// The unique tuple (a_1..a_n), sum = t, with m = L_1^{a_1} ... L_n^{a_n}.
// Exponents are indexed by the caller's edges.  Exhaustive enumeration over
// all compositions; finding zero or several tuples signals a violated
// uniqueness statement and raises TheoremViolationError.
EdgeFactorization edge_factorize(const Monomial& m, const std::vector<int>& weights, int t);

struct OrderedGenerator {
  Monomial monomial;  // normalized frame
  EdgeFactorization factorization;
};

// G(I^t) sorted strictly descending by lex order on factorization exponents.
// The generators with a_1 >= 1 form the prefix of length `prefix_c` (the set
// C of L_1-edge-divisible generators).
struct OrderedGenerators {
  OneWeightedCycle cycle;
  int power = 0;
  std::vector<OrderedGenerator> items;
  int prefix_c = 0;
};

OrderedGenerators ordered_generators(const std::vector<int>& weights, int t);

// m1 in G(I^k) divides m2 in G(I^t) as an edge: m2 = m1 * m3 for some
// m3 in G(I^{t-k}) (for k = t: m1 == m2).
bool edge_divides(const Monomial& m1, int k, const Monomial& m2, int t,
                  const std::vector<int>& weights);

// Exact colon (J_i : L_i^{(t)}) where J_i = (L_{i+1}^{(t)}, ..., L_r^{(t)}),
// for an order index i in [c].
MonomialIdeal colon_tail(const std::vector<int>& weights, int t, int i);
MonomialIdeal colon_tail(const OrderedGenerators& gens, int i);

// The closed-form K_i + Q_i for the same colon.
MonomialIdeal predicted_colon_tail(const std::vector<int>& weights, int t, int i);
MonomialIdeal predicted_colon_tail(const OrderedGenerators& gens, int i);

struct LiWitness {
  int k = 0;     // order index with (L_j : L_i) contained in (L_k : L_i)
  int form = 0;  // 1: (L_k : L_i) = (L_{l2} : L_{l1}); 2: = (x_{n-2d})
};

// Witness for the colon-containment statement on the ordered generators.
// Raises TheoremViolationError when no k > i works.
LiWitness find_li_witness(const std::vector<int>& weights, int t, int i, int j);
LiWitness find_li_witness(const OrderedGenerators& gens, int i, int j);

}  // namespace wreg

#endif
