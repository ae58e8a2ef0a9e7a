#ifndef MCL_NEWTON_HPP
#define MCL_NEWTON_HPP

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mcl/ideal.hpp"

namespace mcl {

using BigRat = boost::multiprecision::cpp_rational;

// Exact rational point; cpp_rational keeps fractions reduced with positive
// denominators.
struct RationalPoint {
  std::vector<BigRat> coords;
};

struct ClosureVerdict {
  bool closed = true;
  std::vector<ExponentVector> missing;  // closure-minimal generators outside I
};

// NormalUpTo(L) when fails_at is empty, otherwise FailsAt(l, witnesses).
struct NormalVerdict {
  int checked_up_to = 0;
  std::optional<int> fails_at;
  std::vector<ExponentVector> witnesses;
  bool normal() const { return !fails_at.has_value(); }
};

// True iff some convex combination of the generators lies componentwise
// below v.  Decided by exact rational pivoting; both outcomes are
// re-verified against a certificate before returning.
bool np_member(const ExponentVector& v, const MonomialIdeal& I);

// The convex combination witnessing membership, or nullopt.
std::optional<RationalPoint> np_member_witness(const ExponentVector& v,
                                               const MonomialIdeal& I);

MonomialIdeal integral_closure(const MonomialIdeal& I);

ClosureVerdict is_integrally_closed(const MonomialIdeal& I);

NormalVerdict is_normal_up_to(const MonomialIdeal& I, int L);

// Integral closure of <x_1^{a_1}, ..., x_n^{a_n}>.
MonomialIdeal block_ideal(const std::vector<int>& alpha);

// The closed-form generating set of the closure of the l-th power of
// <x_1^s, ..., x_{n-1}^s, x_n^t>: all x_{i_1}...x_{i_{ls-a}} * x_n^ceil(a*t/s)
// with a = 0..ls and middle indices in [1, n-1].  Checked against the box
// construction before returning.
MonomialIdeal corollary_gens(int s, int t, int n, int l);

std::string closure_verdict_to_json(const ClosureVerdict& v);

}  // namespace mcl

#endif
