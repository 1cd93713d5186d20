#include "wreg/betti.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "wreg/errors.hpp"
#include "wreg/parallel.hpp"

namespace wreg {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void check_prime(int p) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime, got " + std::to_string(p));
}

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<int> join(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> j(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) j[i] = std::max(a[i], b[i]);
  return j;
}

// Dense rank over GF(p).  Rows are eliminated in place.
int rank_mod_p(std::vector<std::vector<int>>& m, int p) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    // normalize pivot row to 1
    long long inv = 1, base = m[rank][c], e = p - 2;  // Fermat inverse
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (int cc = c; cc < cols; ++cc) m[rank][cc] = static_cast<int>(m[rank][cc] * inv % p);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      long long f = m[r][c];
      for (int cc = c; cc < cols; ++cc)
        m[r][cc] = static_cast<int>(((m[r][cc] - f * m[rank][cc]) % p + p) % p);
    }
    ++rank;
  }
  return rank;
}

constexpr std::size_t kMaxBoundaryEntries = 20000000;

// Reduced homology dimensions of a simplicial complex given by a face bitset
// over k vertices, for each prime in `primes`.  Output[q][c] = dim of the
// reduced homology in dimension c-1 over GF(primes[q]), c = 0..k.  A complex
// with face[0] == 0 is void: all dimensions zero.
std::vector<std::vector<long long>> homology_dims(int k, const std::vector<uint8_t>& face,
                                                  const std::vector<int>& primes) {
  std::vector<std::vector<long long>> out(primes.size(), std::vector<long long>(k + 1, 0));
  if (!face.empty() && !face[0]) return out;

  // faces bucketed by popcount; masks ascend within each bucket
  std::vector<std::vector<uint32_t>> cls(k + 1);
  for (uint32_t msk = 0; msk < face.size(); ++msk)
    if (face[msk]) cls[__builtin_popcount(msk)].push_back(msk);

  // rank of the boundary map class c -> class c-1, per prime
  std::vector<std::vector<int>> rank(primes.size(), std::vector<int>(k + 2, 0));
  for (int c = 1; c <= k; ++c) {
    const auto& hi = cls[c];
    const auto& lo = cls[c - 1];
    if (hi.empty() || lo.empty()) continue;
    if (hi.size() * lo.size() > kMaxBoundaryEntries)
      throw ResourceCapError("boundary matrix too large (" + std::to_string(hi.size()) + "x" +
                             std::to_string(lo.size()) + ")");
    // signed incidence matrix, rows = lower faces
    std::vector<std::vector<int>> base(lo.size(), std::vector<int>(hi.size(), 0));
    for (std::size_t col = 0; col < hi.size(); ++col) {
      uint32_t msk = hi[col];
      int pos = 0;
      for (int v = 0; v < k; ++v) {
        if (!(msk & (1u << v))) continue;
        uint32_t sub = msk & ~(1u << v);
        auto it = std::lower_bound(lo.begin(), lo.end(), sub);
        std::size_t row = static_cast<std::size_t>(it - lo.begin());
        base[row][col] = (pos % 2 == 0) ? 1 : -1;
        ++pos;
      }
    }
    for (std::size_t q = 0; q < primes.size(); ++q) {
      int p = primes[q];
      std::vector<std::vector<int>> m = base;
      for (auto& row : m)
        for (int& x : row) x = ((x % p) + p) % p;
      rank[q][c] = rank_mod_p(m, p);
    }
  }
  for (std::size_t q = 0; q < primes.size(); ++q)
    for (int c = 0; c <= k; ++c)
      out[q][c] = static_cast<long long>(cls[c].size()) - rank[q][c] - rank[q][c + 1];
  return out;
}

struct KoszulData {
  int supp_size = 0;               // vertices of K^a
  uint32_t full = 0;               // mask of all vertices
  std::vector<uint32_t> tight;     // per dividing generator: vars where it meets a
  bool in_ideal = false;           // x^a in I
  bool is_generator = false;       // a in G(I)
};

KoszulData koszul_data(const MonomialIdeal& ideal, const std::vector<int>& a) {
  KoszulData d;
  std::vector<int> supp;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > 0) supp.push_back(static_cast<int>(j));
  d.supp_size = static_cast<int>(supp.size());
  if (d.supp_size > 31)
    throw ResourceCapError("multidegree support exceeds 31 variables");
  d.full = (d.supp_size == 0) ? 0 : ((uint32_t{1} << d.supp_size) - 1);
  for (const Monomial& g : ideal.generators()) {
    bool div = true;
    for (int j = 0; j < g.vars() && div; ++j) div = g.exponent(j) <= a[j];
    if (!div) continue;
    d.in_ideal = true;
    uint32_t t = 0;
    bool equal = true;
    for (int s = 0; s < d.supp_size; ++s) {
      if (g.exponent(supp[s]) == a[supp[s]])
        t |= uint32_t{1} << s;
      else
        equal = false;
    }
    if (equal && g.degree() == std::accumulate(a.begin(), a.end(), 0LL)) d.is_generator = true;
    d.tight.push_back(t);
  }
  return d;
}

// beta_{i,a} for i = 0..n via whichever of the Koszul complex or its nerve is
// smaller.  The Koszul complex is the union of the full simplices on the
// complements of the tight sets; the nerve of that cover (faces: generator
// sets whose tight sets do not jointly cover supp(a)) is homotopy equivalent
// to it, which lets large-support multidegrees fall back to a complex on
// #generators vertices instead of #variables.
std::vector<std::vector<long long>> koszul_betti_multi(const MonomialIdeal& ideal,
                                                       const std::vector<int>& a,
                                                       const std::vector<int>& primes) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<long long>> out(primes.size(), std::vector<long long>(n + 1, 0));
  KoszulData d = koszul_data(ideal, a);

  if (!d.in_ideal) return out;  // void complex
  if (d.is_generator) {
    for (auto& b : out) b[0] = 1;  // K^a = {empty face}
    return out;
  }
  if (d.supp_size == 0) return out;  // a = 0 and not a generator: unreachable for proper ideals

  // cone point: a vertex tight for no generator lies in every facet
  uint32_t tight_union = 0;
  for (uint32_t t : d.tight) tight_union |= t;
  if (tight_union != d.full) return out;
  // a generator slack everywhere spans the whole simplex
  for (uint32_t t : d.tight)
    if (t == 0) return out;

  std::vector<uint32_t> nerve_gens;
  for (uint32_t t : d.tight)
    if (t != d.full) nerve_gens.push_back(t);
  const int m = static_cast<int>(nerve_gens.size());

  bool use_koszul = d.supp_size <= m;
  int k = use_koszul ? d.supp_size : m;
  if (k >= 25) throw ResourceCapError("Koszul complex too large (" + std::to_string(k) + " vertices)");

  std::vector<uint8_t> face(std::size_t{1} << k, 0);
  if (use_koszul) {
    for (uint32_t msk = 0; msk < face.size(); ++msk) {
      for (uint32_t t : d.tight)
        if ((msk & t) == 0) {
          face[msk] = 1;
          break;
        }
    }
  } else {
    // union of tight sets must miss part of supp(a); prune via downward closure
    for (uint32_t msk = 0; msk < face.size(); ++msk) {
      if (msk) {
        int low = __builtin_ctz(msk);
        if (!face[msk & ~(uint32_t{1} << low)]) continue;
      }
      uint32_t u = 0;
      for (int g = 0; g < k; ++g)
        if (msk & (uint32_t{1} << g)) u |= nerve_gens[g];
      face[msk] = (u != d.full);
    }
  }

  std::vector<std::vector<long long>> h = homology_dims(k, face, primes);
  for (std::size_t q = 0; q < primes.size(); ++q) {
    // beta_i = dim of reduced homology in dimension i-1
    for (int i = 1; i <= n && i <= k; ++i) out[q][i] = h[q][i];
    if (use_koszul) out[q][0] = h[q][0];  // only {empty} gives beta_0, handled above anyway
  }
  return out;
}

}  // namespace

long long BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

int BettiTable::regularity() const {
  if (entries.empty()) throw std::logic_error("regularity of an empty Betti table");
  int r = INT32_MIN;
  for (const auto& [key, mult] : entries)
    if (mult > 0) r = std::max(r, key.second - key.first);
  return r;
}

std::string BettiTable::str() const {
  std::ostringstream os;
  os << (subject == BettiSubject::Ideal ? "ideal" : "quotient") << " table, char "
     << characteristic << ":";
  for (const auto& [key, mult] : entries)
    os << " b(" << key.first << "," << key.second << ")=" << mult;
  return os.str();
}

std::vector<std::vector<int>> lcm_lattice(const MonomialIdeal& ideal, const EngineOptions& opt) {
  if (ideal.is_zero()) throw std::invalid_argument("lcm_lattice: zero ideal");
  if (ideal.vars() > opt.max_variables)
    throw ResourceCapError("variable count " + std::to_string(ideal.vars()) + " exceeds cap " +
                           std::to_string(opt.max_variables));

  // every join of a generator subset is reachable by repeatedly joining one
  // more generator, so a worklist against the generators suffices
  std::unordered_set<std::vector<int>, VecHash> seen;
  std::vector<std::vector<int>> queue;
  for (const Monomial& g : ideal.generators())
    if (seen.insert(g.exponents()).second) queue.push_back(g.exponents());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::vector<int> cur = queue[head];  // copy: queue may reallocate
    for (const Monomial& g : ideal.generators()) {
      std::vector<int> j = join(cur, g.exponents());
      if (seen.insert(j).second) {
        queue.push_back(std::move(j));
        if (queue.size() > opt.max_lattice)
          throw ResourceCapError("lcm lattice exceeds cap (" + std::to_string(opt.max_lattice) +
                                 ")");
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<long long> koszul_betti(const MonomialIdeal& ideal, const std::vector<int>& multidegree,
                                    int p) {
  check_prime(p);
  if (static_cast<int>(multidegree.size()) != ideal.vars())
    throw std::invalid_argument("koszul_betti: multidegree length mismatch");
  for (int e : multidegree)
    if (e < 0) throw std::invalid_argument("koszul_betti: negative multidegree");
  return koszul_betti_multi(ideal, multidegree, {p})[0];
}

std::vector<BettiTable> betti_tables(const MonomialIdeal& ideal, const std::vector<int>& primes,
                                     const EngineOptions& opt) {
  for (int p : primes) check_prime(p);
  if (ideal.is_zero()) throw std::invalid_argument("betti_tables: zero ideal");
  std::vector<std::vector<int>> lattice = lcm_lattice(ideal, opt);

  // per-multidegree results, filled in parallel, merged in lattice order
  std::vector<std::vector<std::vector<long long>>> per_point(lattice.size());
  parallel_for(lattice.size(), opt.workers,
               [&](std::size_t idx) { per_point[idx] = koszul_betti_multi(ideal, lattice[idx], primes); });

  std::vector<BettiTable> tables(primes.size());
  for (std::size_t q = 0; q < primes.size(); ++q) {
    tables[q].characteristic = primes[q];
    tables[q].subject = BettiSubject::Ideal;
    for (std::size_t idx = 0; idx < lattice.size(); ++idx) {
      long long total = 0;
      for (int e : lattice[idx]) total += e;
      const auto& betti = per_point[idx][q];
      for (std::size_t i = 0; i < betti.size(); ++i)
        if (betti[i] > 0) tables[q].entries[{static_cast<int>(i), static_cast<int>(total)}] += betti[i];
    }
  }
  return tables;
}

BettiTable betti_table(const MonomialIdeal& ideal, int p, const EngineOptions& opt) {
  return betti_tables(ideal, {p}, opt)[0];
}

BettiTable betti_table_quotient(const MonomialIdeal& ideal, int p, const EngineOptions& opt) {
  BettiTable t = betti_table(ideal, p, opt);
  BettiTable q;
  q.characteristic = p;
  q.subject = BettiSubject::Quotient;
  q.entries[{0, 0}] = 1;
  for (const auto& [key, mult] : t.entries) q.entries[{key.first + 1, key.second}] = mult;
  return q;
}

int regularity(const MonomialIdeal& ideal, int p, const EngineOptions& opt) {
  return betti_table(ideal, p, opt).regularity();
}

int regularity_quotient(const MonomialIdeal& ideal, int p, const EngineOptions& opt) {
  return regularity(ideal, p, opt) - 1;
}

bool verify_polarization_invariance(const MonomialIdeal& ideal, int p, const EngineOptions& opt) {
  if (ideal.is_zero()) throw std::invalid_argument("verify_polarization_invariance: zero ideal");
  BettiTable original = betti_table(ideal, p, opt);
  BettiTable polarized = betti_table(polarize(ideal).ideal, p, opt);
  return original.entries == polarized.entries;
}

bool is_betti_splitting(const MonomialIdeal& i, const MonomialIdeal& j, const MonomialIdeal& k,
                        int p, const EngineOptions& opt) {
  if (j.is_zero() || k.is_zero())
    throw std::invalid_argument("is_betti_splitting: both parts must be nonzero");
  std::vector<Monomial> merged = j.generators();
  merged.insert(merged.end(), k.generators().begin(), k.generators().end());
  std::vector<Monomial> sorted = merged;
  std::sort(sorted.begin(), sorted.end(), graded_lex_less);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("is_betti_splitting: generator sets overlap");
  if (sorted != i.generators())
    throw std::invalid_argument("is_betti_splitting: G(J) and G(K) do not partition G(I)");

  BettiTable ti = betti_table(i, p, opt);
  BettiTable tj = betti_table(j, p, opt);
  BettiTable tk = betti_table(k, p, opt);
  BettiTable tjk = betti_table(ideal_intersect(j, k), p, opt);

  std::map<std::pair<int, int>, long long> expect;
  for (const auto& [key, mult] : tj.entries) expect[key] += mult;
  for (const auto& [key, mult] : tk.entries) expect[key] += mult;
  for (const auto& [key, mult] : tjk.entries) expect[{key.first + 1, key.second}] += mult;
  return expect == ti.entries;
}

}  // namespace wreg
