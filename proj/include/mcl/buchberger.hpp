#ifndef MCL_BUCHBERGER_HPP
#define MCL_BUCHBERGER_HPP

#include <vector>

#include "mcl/binomial.hpp"
#include "mcl/polynomial.hpp"

namespace mcl {

// S-polynomial of two binomials, both taken monic on their leading terms.
Polynomial s_polynomial(const Binomial& f, const Binomial& g,
                        const WeightedGrevlexOrder& ord);

// Full remainder of the division algorithm: repeatedly cancels the largest
// term divisible by some leading term; undivisible terms move to the
// remainder.  Terminates because each step replaces a term by strictly
// smaller ones and the order has finite descending chains.
Polynomial normal_form(Polynomial h, const std::vector<Binomial>& basis,
                       const WeightedGrevlexOrder& ord);

// Buchberger criterion: every S-polynomial of a pair reduces to zero.
// Verification only; no completion is performed.  All binomials must be
// weight-homogeneous for the order.
bool buchberger_verify(const std::vector<Binomial>& basis,
                       const WeightedGrevlexOrder& ord);

}  // namespace mcl

#endif
