#include "mcl/order.hpp"

#include "mcl/errors.hpp"

namespace mcl {

WeightedGrevlexOrder::WeightedGrevlexOrder(std::vector<BigInt> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) throw DomainError("empty weight vector");
  for (const auto& w : weights_)
    if (w <= 0) throw DomainError("weights must be positive");
}

BigInt WeightedGrevlexOrder::weighted_degree(const ExponentVector& a) const {
  if (static_cast<int>(a.size()) != num_vars())
    throw DimensionMismatch("exponent vector length does not match weights");
  BigInt d = 0;
  for (size_t i = 0; i < a.size(); ++i) d += weights_[i] * a[i];
  return d;
}

Ordering WeightedGrevlexOrder::compare(const ExponentVector& a,
                                       const ExponentVector& b) const {
  BigInt da = weighted_degree(a), db = weighted_degree(b);
  if (da != db) return da < db ? Ordering::Less : Ordering::Greater;
  for (size_t i = 0; i < a.size(); ++i) {
    int diff = a[i] - b[i];
    if (diff != 0) return diff < 0 ? Ordering::Greater : Ordering::Less;
  }
  return Ordering::Equal;
}

}  // namespace mcl
