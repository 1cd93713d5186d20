#ifndef WREG_BETTI_HPP
#define WREG_BETTI_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wreg/monomial.hpp"

namespace wreg {

struct EngineOptions {
  std::size_t max_lattice = 200000;
  int max_variables = 24;
  unsigned workers = 0;  // 0 = hardware concurrency
};

enum class BettiSubject { Ideal, Quotient };

// Graded Betti numbers beta_{i,j}; only nonzero multiplicities are stored.
struct BettiTable {
  int characteristic = 0;
  BettiSubject subject = BettiSubject::Ideal;
  std::map<std::pair<int, int>, long long> entries;  // (i, j) -> multiplicity

  long long at(int i, int j) const;
  int regularity() const;  // max j - i over nonzero entries
  std::string str() const;
};

// All joins (componentwise maxima) of nonempty subsets of the generator
// exponent vectors, sorted.  Nonzero multigraded Betti numbers occur only at
// these multidegrees.
std::vector<std::vector<int>> lcm_lattice(const MonomialIdeal& ideal,
                                          const EngineOptions& opt = {});

// beta_{i,a}(ideal) for i = 0..vars, from the reduced homology of the upper
// Koszul complex K^a = { sigma : x^{a - e_sigma} in ideal } over GF(p).
std::vector<long long> koszul_betti(const MonomialIdeal& ideal, const std::vector<int>& multidegree,
                                    int p);

BettiTable betti_table(const MonomialIdeal& ideal, int p, const EngineOptions& opt = {});
BettiTable betti_table_quotient(const MonomialIdeal& ideal, int p, const EngineOptions& opt = {});

// One pass over the lattice, several characteristics (face enumeration is
// shared; only the ranks are recomputed per prime).
std::vector<BettiTable> betti_tables(const MonomialIdeal& ideal, const std::vector<int>& primes,
                                     const EngineOptions& opt = {});

int regularity(const MonomialIdeal& ideal, int p, const EngineOptions& opt = {});
int regularity_quotient(const MonomialIdeal& ideal, int p, const EngineOptions& opt = {});

// Lemma-polar check: the Betti tables of an ideal and its polarization agree
// in total degrees.
bool verify_polarization_invariance(const MonomialIdeal& ideal, int p,
                                    const EngineOptions& opt = {});

// Betti-splitting identity for a generator partition G(I) = G(J) u G(K):
// beta_{i,j}(I) = beta_{i,j}(J) + beta_{i,j}(K) + beta_{i-1,j}(J n K).
bool is_betti_splitting(const MonomialIdeal& i, const MonomialIdeal& j, const MonomialIdeal& k,
                        int p, const EngineOptions& opt = {});

}  // namespace wreg

#endif
