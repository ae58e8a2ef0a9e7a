#ifndef MCL_RR_HPP
#define MCL_RR_HPP

#include <optional>
#include <vector>

#include "mcl/ideal.hpp"

namespace mcl {

struct RRWitness {
  ExponentVector monomial;  // in I^{k+1}:I^k but not in I
  int level = 0;            // smallest such k
};

// Bounded Ratliff-Rush verdict.  confirmed() means every chain term
// I^{k+1}:I^k for k <= horizon equals I; it is evidence, not a proof, that
// the ideal is Ratliff-Rush.
struct RRVerdict {
  int horizon = 0;
  std::optional<RRWitness> witness;
  bool confirmed() const { return !witness.has_value(); }
};

// [I^{k+1}:I^k for k = 1..N].  Each term contains the previous; violation of
// that ascent is an internal error.
std::vector<MonomialIdeal> colon_chain(const MonomialIdeal& I, int N);

RRVerdict is_ratliff_rush_up_to(const MonomialIdeal& I, int N);

// The family <x^a, x^c y^d, y^b>, subject to the exact hypothesis
// d*a >= b*(a-c); DomainError when the hypothesis fails.
MonomialIdeal coro12_ideal(int a, int c, int d, int b);
// Middle generator absent: <x^a, y^b>.
MonomialIdeal coro12_ideal(int a, int b);

}  // namespace mcl

#endif
