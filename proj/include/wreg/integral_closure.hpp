#ifndef WREG_INTEGRAL_CLOSURE_HPP
#define WREG_INTEGRAL_CLOSURE_HPP

#include <cstddef>

#include "wreg/monomial.hpp"

namespace wreg {

struct ClosureOptions {
  // Cap on the number of candidate exponent vectors in the Newton-polyhedron
  // box scan.  Exceeding it raises ResourceCapError.
  std::size_t max_box = std::size_t{1} << 22;
};

// Integral closure of a nonzero monomial ideal: the ideal generated by the
// integer points of conv(exponents of G(I)) + R_{>=0}^n.  Candidates are
// scanned over the componentwise-max box (every minimal generator of the
// closure lies inside it); membership is an exact rational feasibility test.
MonomialIdeal ideal_integral_closure(const MonomialIdeal& i, const ClosureOptions& opt = {});

// closure(I) == I, with an early exit on the first witness outside I.
bool is_integrally_closed_algebraic(const MonomialIdeal& i, const ClosureOptions& opt = {});

// Exact test: is `point` in conv(generator exponents) + R_{>=0}^n?
bool in_newton_polyhedron(const MonomialIdeal& i, const Monomial& point);

}  // namespace wreg

#endif
