#ifndef MCL_BINOMIAL_HPP
#define MCL_BINOMIAL_HPP

#include "mcl/exponent.hpp"
#include "mcl/order.hpp"

namespace mcl {

// Difference of two distinct monic monomials, x^first - x^second.
struct Binomial {
  ExponentVector first;
  ExponentVector second;

  Binomial(ExponentVector f, ExponentVector s);
};

// Both monomials have the same weighted degree.
bool is_weight_homogeneous(const Binomial& b, const WeightedGrevlexOrder& ord);

// The larger of the two monomials; never a tie since first != second and the
// order is total on monomials.
ExponentVector leading_term(const Binomial& b, const WeightedGrevlexOrder& ord);

}  // namespace mcl

#endif
