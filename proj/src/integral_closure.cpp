#include "wreg/integral_closure.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "wreg/errors.hpp"

namespace wreg {

namespace {

// Exact rational arithmetic on int64 with __int128 intermediates.  Tableau
// entries stay tiny here (generator exponents are small and the LPs have at
// most ~a dozen pivots), but every product is range-checked anyway.
struct Frac {
  long long num = 0;
  long long den = 1;

  Frac() = default;
  Frac(long long n) : num(n) {}
  Frac(long long n, long long d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (den == 0) throw std::overflow_error("fraction with zero denominator");
  }

  bool is_zero() const { return num == 0; }
  bool positive() const { return num > 0; }
  bool negative() const { return num < 0; }
};

long long checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow in simplex");
  return static_cast<long long>(v);
}

Frac make(__int128 n, __int128 d) { return Frac(checked(n), checked(d)); }

Frac operator*(const Frac& a, const Frac& b) {
  return make(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
}

Frac operator-(const Frac& a, const Frac& b) {
  return make(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
              static_cast<__int128>(a.den) * b.den);
}

Frac operator/(const Frac& a, const Frac& b) {
  if (b.num == 0) throw std::domain_error("division by zero fraction");
  return make(static_cast<__int128>(a.num) * b.den, static_cast<__int128>(a.den) * b.num);
}

int cmp(const Frac& a, const Frac& b) {
  __int128 l = static_cast<__int128>(a.num) * b.den;
  __int128 r = static_cast<__int128>(b.num) * a.den;
  return l < r ? -1 : (l > r ? 1 : 0);
}

// Decide max{ 1^T lambda : G^T lambda <= a, lambda >= 0 } >= 1 by primal
// simplex with Bland's rule.  gens[g][j] is the j-th exponent of generator g.
// Both the data and the start (lambda = 0) are nonnegative, so no phase 1.
//
// Scaling argument: a >= sum lambda_g g with total mass sigma >= 1 implies
// a >= sum (lambda_g / sigma) g, so the optimum being >= 1 is equivalent to
// membership of `a` in conv(gens) + R_{>=0}^n.
bool mass_at_least_one(const std::vector<std::vector<int>>& gens, const std::vector<int>& a) {
  const int m = static_cast<int>(gens.size());
  const int n = static_cast<int>(a.size());
  const int cols = m + n;  // structural variables then slacks

  // row-major tableau: n constraint rows (rhs last), then the objective row
  std::vector<std::vector<Frac>> t(n + 1, std::vector<Frac>(cols + 1));
  for (int j = 0; j < n; ++j) {
    for (int g = 0; g < m; ++g) t[j][g] = Frac(gens[g][j]);
    t[j][m + j] = Frac(1);
    t[j][cols] = Frac(a[j]);
  }
  for (int g = 0; g < m; ++g) t[n][g] = Frac(-1);  // reduced costs; objective value at t[n][cols]

  std::vector<int> basis(n);
  for (int j = 0; j < n; ++j) basis[j] = m + j;

  for (;;) {
    if (cmp(t[n][cols], Frac(1)) >= 0) return true;  // objective cell reached mass 1

    // Bland: smallest column with negative reduced cost
    int enter = -1;
    for (int c = 0; c < cols; ++c)
      if (t[n][c].negative()) {
        enter = c;
        break;
      }
    if (enter < 0) return false;  // optimal and objective < 1

    // ratio test; Bland tie-break on smallest basis variable
    int leave = -1;
    Frac best;
    for (int r = 0; r < n; ++r) {
      if (!t[r][enter].positive()) continue;
      Frac ratio = t[r][cols] / t[r][enter];
      if (leave < 0 || cmp(ratio, best) < 0 ||
          (cmp(ratio, best) == 0 && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave < 0) return true;  // unbounded above, so mass 1 is reachable

    // pivot
    Frac piv = t[leave][enter];
    for (int c = 0; c <= cols; ++c) t[leave][c] = t[leave][c] / piv;
    for (int r = 0; r <= n; ++r) {
      if (r == leave || t[r][enter].is_zero()) continue;
      Frac f = t[r][enter];
      for (int c = 0; c <= cols; ++c) t[r][c] = t[r][c] - f * t[leave][c];
    }
    basis[leave] = enter;
  }
}

struct Box {
  std::vector<int> dims;  // per-variable extent (max exponent + 1)
  std::size_t size = 1;
};

Box closure_box(const MonomialIdeal& i, const ClosureOptions& opt) {
  Box b;
  b.dims.assign(i.vars(), 1);
  for (const Monomial& g : i.generators())
    for (int j = 0; j < i.vars(); ++j) b.dims[j] = std::max(b.dims[j], g.exponent(j) + 1);
  for (int d : b.dims) {
    b.size *= static_cast<std::size_t>(d);
    if (b.size > opt.max_box)
      throw ResourceCapError("integral closure box exceeds cap (" + std::to_string(opt.max_box) +
                             ")");
  }
  return b;
}

std::size_t flat(const std::vector<int>& point, const Box& b) {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < point.size(); ++j) idx = idx * b.dims[j] + point[j];
  return idx;
}

// Scans the box in increasing total degree.  `on_member` receives every box
// point in the polyhedron; returning false aborts the scan.
template <typename F>
void scan_polyhedron(const MonomialIdeal& ideal, const ClosureOptions& opt, F&& on_member) {
  const int n = ideal.vars();
  Box box = closure_box(ideal, opt);

  std::vector<std::vector<int>> gens;
  long long min_deg = -1;
  for (const Monomial& g : ideal.generators()) {
    gens.push_back(g.exponents());
    if (min_deg < 0 || g.degree() < min_deg) min_deg = g.degree();
  }

  // enumerate points sorted by degree so that a - e_j precedes a
  std::vector<std::vector<int>> points;
  points.reserve(box.size);
  std::vector<int> cur(n, 0);
  for (;;) {
    points.push_back(cur);
    int j = n - 1;
    while (j >= 0 && cur[j] + 1 >= box.dims[j]) cur[j--] = 0;
    if (j < 0) break;
    ++cur[j];
  }
  std::stable_sort(points.begin(), points.end(),
                   [](const std::vector<int>& x, const std::vector<int>& y) {
                     long long dx = std::accumulate(x.begin(), x.end(), 0LL);
                     long long dy = std::accumulate(y.begin(), y.end(), 0LL);
                     return dx < dy;
                   });

  std::vector<uint8_t> member(box.size, 0);
  std::vector<int> below(n);
  for (const std::vector<int>& a : points) {
    long long deg = std::accumulate(a.begin(), a.end(), 0LL);
    if (deg < min_deg) continue;

    bool in = false;
    // a >= some b already known to be in the polyhedron
    for (int j = 0; j < n && !in; ++j) {
      if (a[j] == 0) continue;
      below = a;
      --below[j];
      in = member[flat(below, box)] != 0;
    }
    if (!in) in = ideal_contains(ideal, Monomial(a));
    if (!in) in = mass_at_least_one(gens, a);
    if (in) {
      member[flat(a, box)] = 1;
      if (!on_member(a)) return;
    }
  }
}

}  // namespace

bool in_newton_polyhedron(const MonomialIdeal& i, const Monomial& point) {
  if (i.is_zero()) throw std::invalid_argument("in_newton_polyhedron: zero ideal");
  if (point.vars() != i.vars()) throw std::invalid_argument("in_newton_polyhedron: ring mismatch");
  std::vector<std::vector<int>> gens;
  for (const Monomial& g : i.generators()) gens.push_back(g.exponents());
  return mass_at_least_one(gens, point.exponents());
}

MonomialIdeal ideal_integral_closure(const MonomialIdeal& i, const ClosureOptions& opt) {
  if (i.is_zero()) throw std::invalid_argument("ideal_integral_closure: zero ideal");
  std::vector<Monomial> accepted;
  scan_polyhedron(i, opt, [&](const std::vector<int>& a) {
    accepted.emplace_back(a);
    return true;
  });
  return ideal_minimalize(i.vars(), accepted);
}

bool is_integrally_closed_algebraic(const MonomialIdeal& i, const ClosureOptions& opt) {
  if (i.is_zero()) throw std::invalid_argument("is_integrally_closed_algebraic: zero ideal");
  bool closed = true;
  scan_polyhedron(i, opt, [&](const std::vector<int>& a) {
    if (!ideal_contains(i, Monomial(a))) {
      closed = false;
      return false;
    }
    return true;
  });
  return closed;
}

}  // namespace wreg
