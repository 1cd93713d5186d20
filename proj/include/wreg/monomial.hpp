#ifndef WREG_MONOMIAL_HPP
#define WREG_MONOMIAL_HPP

#include <string>
#include <vector>

namespace wreg {

// A monomial in a fixed polynomial ring k[x_1..x_n], stored as its exponent
// vector.  Immutable value type; all exponents >= 0.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  static Monomial one(int vars);
  static Monomial variable(int vars, int index);

  int vars() const { return static_cast<int>(exps_.size()); }
  int exponent(int i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }
  long long degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  std::vector<int> support() const;  // 0-based variable indices with positive exponent

  bool divides(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::string str() const;  // x1^2*x2 style, 1-based variables

 private:
  std::vector<int> exps_;
};

// Canonical order on monomials of one ring: by total degree, ties broken
// lexicographically on the exponent vector.
bool graded_lex_less(const Monomial& a, const Monomial& b);

bool mono_divides(const Monomial& u, const Monomial& v);
Monomial mono_lcm(const Monomial& u, const Monomial& v);
Monomial mono_colon(const Monomial& u, const Monomial& v);  // generator of (u):(v)
Monomial mono_product(const Monomial& u, const Monomial& v);
Monomial mono_power(const Monomial& u, int t);

// A monomial ideal held by its unique minimal generating set, sorted in the
// canonical order.  The zero ideal has no generators; the unit ideal has the
// single generator 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(int vars, std::vector<Monomial> raw_generators);
  static MonomialIdeal zero(int vars);
  static MonomialIdeal unit(int vars);
  static MonomialIdeal principal(Monomial m);

  int vars() const { return vars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t generator_count() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;

  std::string str() const;

 private:
  friend MonomialIdeal ideal_minimalize(int vars, const std::vector<Monomial>& gens);
  int vars_ = 0;
  std::vector<Monomial> gens_;  // minimal, canonically sorted
};

MonomialIdeal ideal_minimalize(int vars, const std::vector<Monomial>& gens);
MonomialIdeal ideal_sum(const MonomialIdeal& i, const MonomialIdeal& j);
MonomialIdeal ideal_product(const MonomialIdeal& i, const MonomialIdeal& j);
MonomialIdeal ideal_power(const MonomialIdeal& i, int t);  // t >= 1
MonomialIdeal ideal_colon_mono(const MonomialIdeal& i, const Monomial& m);
MonomialIdeal ideal_intersect(const MonomialIdeal& i, const MonomialIdeal& j);
MonomialIdeal ideal_colon_ideal(const MonomialIdeal& i, const MonomialIdeal& j);
bool ideal_contains(const MonomialIdeal& i, const Monomial& u);
bool ideal_equals(const MonomialIdeal& i, const MonomialIdeal& j);

// Polarization: the squarefree ideal in one variable x_{j,k} per occupied
// exponent slot, 1 <= k <= a_j with a_j the largest exponent of x_j across
// the generators.  `variables[f]` records which slot the flat variable f
// came from.
struct Polarization {
  MonomialIdeal ideal;
  std::vector<std::pair<int, int>> variables;  // flat index -> (source var, copy), 0-based
  int source_vars = 0;

  // Flat index of slot (j, k); -1 if the slot does not exist.
  int flat_index(int j, int k) const;
};

Polarization polarize(const MonomialIdeal& i);

}  // namespace wreg

#endif
