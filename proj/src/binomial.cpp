#include "mcl/binomial.hpp"

#include "mcl/errors.hpp"

namespace mcl {

Binomial::Binomial(ExponentVector f, ExponentVector s)
    : first(std::move(f)), second(std::move(s)) {
  check_same_dimension(first, second);
  check_nonnegative(first);
  check_nonnegative(second);
  if (first == second) throw DomainError("binomial with equal monomials");
}

bool is_weight_homogeneous(const Binomial& b,
                           const WeightedGrevlexOrder& ord) {
  return ord.weighted_degree(b.first) == ord.weighted_degree(b.second);
}

ExponentVector leading_term(const Binomial& b,
                            const WeightedGrevlexOrder& ord) {
  return ord.less(b.first, b.second) ? b.second : b.first;
}

}  // namespace mcl
