#ifndef MCL_ORDER_HPP
#define MCL_ORDER_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "mcl/exponent.hpp"

namespace mcl {

using BigInt = boost::multiprecision::cpp_int;

enum class Ordering { Less, Equal, Greater };

// Weighted graded reverse-lex order: compare weighted degrees first; on a
// tie, a > b exactly when the leftmost nonzero entry of a - b is negative.
class WeightedGrevlexOrder {
 public:
  // Weights must be positive; one weight per variable.
  explicit WeightedGrevlexOrder(std::vector<BigInt> weights);

  int num_vars() const { return static_cast<int>(weights_.size()); }
  const std::vector<BigInt>& weights() const { return weights_; }

  BigInt weighted_degree(const ExponentVector& a) const;
  Ordering compare(const ExponentVector& a, const ExponentVector& b) const;

  bool less(const ExponentVector& a, const ExponentVector& b) const {
    return compare(a, b) == Ordering::Less;
  }

 private:
  std::vector<BigInt> weights_;
};

}  // namespace mcl

#endif
