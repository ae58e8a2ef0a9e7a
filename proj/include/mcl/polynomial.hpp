#ifndef MCL_POLYNOMIAL_HPP
#define MCL_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "mcl/binomial.hpp"
#include "mcl/exponent.hpp"
#include "mcl/order.hpp"

namespace mcl {

// Sparse polynomial with exact integer coefficients.  Terms are kept
// combined, zero-free, and sorted in graded-lex order so equality is
// structural; leading terms are found per term order on demand.
class Polynomial {
 public:
  struct Term {
    ExponentVector monomial;
    BigInt coeff;
  };

  Polynomial() = default;
  explicit Polynomial(std::vector<Term> terms);

  // x^{lead} - x^{trail} with lead chosen by the order.
  static Polynomial from_binomial(const Binomial& b,
                                  const WeightedGrevlexOrder& ord);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Largest monomial under the order.  Polynomial must be nonzero.
  const Term& leading_term(const WeightedGrevlexOrder& ord) const;

  Polynomial shifted(const ExponentVector& m) const;  // multiply by x^m
  Polynomial scaled(const BigInt& c) const;

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial& other) const;

 private:
  std::vector<Term> terms_;
  void normalize();
};

}  // namespace mcl

#endif
