#include "wreg/monomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "wreg/errors.hpp"

namespace wreg {

namespace {

constexpr int kMaxExponent = 1 << 20;

void check_same_ring(const Monomial& u, const Monomial& v) {
  if (u.vars() != v.vars())
    throw std::invalid_argument("monomials live in different rings (" +
                                std::to_string(u.vars()) + " vs " + std::to_string(v.vars()) +
                                " variables)");
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_)
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
}

Monomial Monomial::one(int vars) { return Monomial(std::vector<int>(vars, 0)); }

Monomial Monomial::variable(int vars, int index) {
  std::vector<int> e(vars, 0);
  e.at(index) = 1;
  return Monomial(std::move(e));
}

long long Monomial::degree() const {
  long long d = 0;
  for (int e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < vars(); ++i)
    if (exps_[i] > 0) s.push_back(i);
  return s;
}

bool Monomial::divides(const Monomial& other) const { return mono_divides(*this, other); }

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < vars(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) os << "*";
    os << "x" << (i + 1);
    if (exps_[i] > 1) os << "^" << exps_[i];
    first = false;
  }
  return os.str();
}

bool graded_lex_less(const Monomial& a, const Monomial& b) {
  long long da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents() < b.exponents();
}

bool mono_divides(const Monomial& u, const Monomial& v) {
  check_same_ring(u, v);
  for (int i = 0; i < u.vars(); ++i)
    if (u.exponent(i) > v.exponent(i)) return false;
  return true;
}

Monomial mono_lcm(const Monomial& u, const Monomial& v) {
  check_same_ring(u, v);
  std::vector<int> e(u.vars());
  for (int i = 0; i < u.vars(); ++i) e[i] = std::max(u.exponent(i), v.exponent(i));
  return Monomial(std::move(e));
}

Monomial mono_colon(const Monomial& u, const Monomial& v) {
  check_same_ring(u, v);
  std::vector<int> e(u.vars());
  for (int i = 0; i < u.vars(); ++i) e[i] = std::max(u.exponent(i) - v.exponent(i), 0);
  return Monomial(std::move(e));
}

Monomial mono_product(const Monomial& u, const Monomial& v) {
  check_same_ring(u, v);
  std::vector<int> e(u.vars());
  for (int i = 0; i < u.vars(); ++i) {
    e[i] = u.exponent(i) + v.exponent(i);
    if (e[i] > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
  }
  return Monomial(std::move(e));
}

Monomial mono_power(const Monomial& u, int t) {
  if (t < 0) throw std::invalid_argument("negative power");
  std::vector<int> e(u.vars());
  for (int i = 0; i < u.vars(); ++i) {
    long long v = static_cast<long long>(u.exponent(i)) * t;
    if (v > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
    e[i] = static_cast<int>(v);
  }
  return Monomial(std::move(e));
}

MonomialIdeal::MonomialIdeal(int vars, std::vector<Monomial> raw_generators) {
  *this = ideal_minimalize(vars, raw_generators);
}

MonomialIdeal MonomialIdeal::zero(int vars) {
  MonomialIdeal i;
  i.vars_ = vars;
  return i;
}

MonomialIdeal MonomialIdeal::unit(int vars) {
  return ideal_minimalize(vars, {Monomial::one(vars)});
}

MonomialIdeal MonomialIdeal::principal(Monomial m) {
  int n = m.vars();
  return ideal_minimalize(n, {std::move(m)});
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

std::string MonomialIdeal::str() const {
  if (is_zero()) return "(0)";
  std::string s = "(";
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k) s += ", ";
    s += gens_[k].str();
  }
  return s + ")";
}

MonomialIdeal ideal_minimalize(int vars, const std::vector<Monomial>& gens) {
  for (const Monomial& g : gens)
    if (g.vars() != vars) throw std::invalid_argument("generator has wrong variable count");
  std::vector<Monomial> sorted = gens;
  std::sort(sorted.begin(), sorted.end(), graded_lex_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Monomial> kept;
  for (const Monomial& g : sorted) {
    bool redundant = false;
    // kept is degree-sorted, so only earlier elements can divide g
    for (const Monomial& h : kept)
      if (mono_divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(g);
  }
  MonomialIdeal out;
  out.vars_ = vars;
  out.gens_ = std::move(kept);
  return out;
}

MonomialIdeal ideal_sum(const MonomialIdeal& i, const MonomialIdeal& j) {
  if (i.vars() != j.vars()) throw std::invalid_argument("ideal_sum: variable count mismatch");
  std::vector<Monomial> g = i.generators();
  g.insert(g.end(), j.generators().begin(), j.generators().end());
  return ideal_minimalize(i.vars(), g);
}

MonomialIdeal ideal_product(const MonomialIdeal& i, const MonomialIdeal& j) {
  if (i.vars() != j.vars()) throw std::invalid_argument("ideal_product: variable count mismatch");
  std::vector<Monomial> g;
  g.reserve(i.generator_count() * j.generator_count());
  for (const Monomial& u : i.generators())
    for (const Monomial& v : j.generators()) g.push_back(mono_product(u, v));
  return ideal_minimalize(i.vars(), g);
}

MonomialIdeal ideal_power(const MonomialIdeal& i, int t) {
  if (t < 1) throw std::invalid_argument("ideal_power: exponent must be >= 1");
  MonomialIdeal acc = i;
  for (int k = 1; k < t; ++k) acc = ideal_product(acc, i);
  return acc;
}

MonomialIdeal ideal_colon_mono(const MonomialIdeal& i, const Monomial& m) {
  std::vector<Monomial> g;
  g.reserve(i.generator_count());
  for (const Monomial& u : i.generators()) g.push_back(mono_colon(u, m));
  return ideal_minimalize(i.vars(), g);
}

MonomialIdeal ideal_intersect(const MonomialIdeal& i, const MonomialIdeal& j) {
  if (i.vars() != j.vars()) throw std::invalid_argument("ideal_intersect: variable count mismatch");
  std::vector<Monomial> g;
  g.reserve(i.generator_count() * j.generator_count());
  for (const Monomial& u : i.generators())
    for (const Monomial& v : j.generators()) g.push_back(mono_lcm(u, v));
  return ideal_minimalize(i.vars(), g);
}

MonomialIdeal ideal_colon_ideal(const MonomialIdeal& i, const MonomialIdeal& j) {
  if (i.vars() != j.vars()) throw std::invalid_argument("ideal_colon_ideal: variable count mismatch");
  if (j.is_zero()) throw std::invalid_argument("ideal_colon_ideal: colon by the zero ideal");
  bool first = true;
  MonomialIdeal acc;
  for (const Monomial& g : j.generators()) {
    MonomialIdeal part = ideal_colon_mono(i, g);
    acc = first ? part : ideal_intersect(acc, part);
    first = false;
  }
  return acc;
}

bool ideal_contains(const MonomialIdeal& i, const Monomial& u) {
  for (const Monomial& g : i.generators())
    if (mono_divides(g, u)) return true;
  return false;
}

bool ideal_equals(const MonomialIdeal& i, const MonomialIdeal& j) {
  return i.vars() == j.vars() && i.generators() == j.generators();
}

int Polarization::flat_index(int j, int k) const {
  for (std::size_t f = 0; f < variables.size(); ++f)
    if (variables[f].first == j && variables[f].second == k) return static_cast<int>(f);
  return -1;
}

Polarization polarize(const MonomialIdeal& i) {
  if (i.is_zero()) throw std::invalid_argument("polarize: zero ideal");
  int n = i.vars();
  std::vector<int> max_exp(n, 0);
  for (const Monomial& g : i.generators())
    for (int j = 0; j < n; ++j) max_exp[j] = std::max(max_exp[j], g.exponent(j));

  Polarization p;
  p.source_vars = n;
  std::vector<int> offset(n, 0);
  int total = 0;
  for (int j = 0; j < n; ++j) {
    offset[j] = total;
    total += max_exp[j];
    for (int k = 0; k < max_exp[j]; ++k) p.variables.emplace_back(j, k);
  }

  std::vector<Monomial> gens;
  gens.reserve(i.generator_count());
  for (const Monomial& g : i.generators()) {
    std::vector<int> e(total, 0);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < g.exponent(j); ++k) e[offset[j] + k] = 1;
    gens.emplace_back(std::move(e));
  }
  p.ideal = ideal_minimalize(total, gens);
  return p;
}

}  // namespace wreg
