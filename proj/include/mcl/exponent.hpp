#ifndef MCL_EXPONENT_HPP
#define MCL_EXPONENT_HPP

#include <cstdint>
#include <vector>

namespace mcl {

// Exponent vector of a monomial: fixed length, nonnegative entries.
using ExponentVector = std::vector<int>;

// Componentwise a_i <= b_i, i.e. x^a divides x^b.  Lengths must agree.
bool divides(const ExponentVector& a, const ExponentVector& b);

// Componentwise sum (monomial product).
ExponentVector add(const ExponentVector& a, const ExponentVector& b);

// Componentwise max (monomial lcm).
ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);

// Componentwise max(a_i - b_i, 0) (exact division after lcm; colon step).
ExponentVector sub_clamped(const ExponentVector& a, const ExponentVector& b);

// Scalar multiple k*a, k >= 0.
ExponentVector scale(const ExponentVector& a, int k);

// Total degree.
std::int64_t degree(const ExponentVector& a);

// Canonical generator order: by total degree, ties by lexicographic entries.
// Strict weak ordering used everywhere a deterministic listing is required.
bool graded_lex_less(const ExponentVector& a, const ExponentVector& b);

void check_same_dimension(const ExponentVector& a, const ExponentVector& b);
void check_nonnegative(const ExponentVector& a);

}  // namespace mcl

#endif
