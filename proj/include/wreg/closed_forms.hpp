#ifndef WREG_CLOSED_FORMS_HPP
#define WREG_CLOSED_FORMS_HPP

#include <vector>

namespace wreg {

struct CyclePowerQuery {
  int n = 0;                 // cycle length, >= 3
  std::vector<int> weights;  // n positive entries
  int power = 1;             // t >= 1
};

// reg(S/I(P_w^n)^t) for an integrally closed weighted path (weights has n-1
// entries).  Throws NotIntegrallyClosedError when the path is not closed, and
// TheoremViolationError if qualifying maximal-edge choices disagree.
int predict_reg_path_power(const std::vector<int>& weights, int t);

// reg(S/I(C_w^n)^t) for an integrally closed weighted cycle: the trivial case
// follows the floor formula, every non-trivial closed cycle the linear one.
int predict_reg_cycle_power(const CyclePowerQuery& q);

// reg(I^t) for an ideal generated by a degree-d regular sequence of length m.
long long predict_reg_regular_sequence(int d, int m, int t);

}  // namespace wreg

#endif
