#include "mcl/buchberger.hpp"

#include "mcl/errors.hpp"

namespace mcl {

Polynomial s_polynomial(const Binomial& f, const Binomial& g,
                        const WeightedGrevlexOrder& ord) {
  ExponentVector lf = leading_term(f, ord);
  ExponentVector lg = leading_term(g, ord);
  ExponentVector l = lcm(lf, lg);
  Polynomial pf = Polynomial::from_binomial(f, ord);
  Polynomial pg = Polynomial::from_binomial(g, ord);
  return pf.shifted(sub_clamped(l, lf)) - pg.shifted(sub_clamped(l, lg));
}

Polynomial normal_form(Polynomial h, const std::vector<Binomial>& basis,
                       const WeightedGrevlexOrder& ord) {
  std::vector<Polynomial> divisors;
  std::vector<ExponentVector> lts;
  divisors.reserve(basis.size());
  for (const auto& b : basis) {
    divisors.push_back(Polynomial::from_binomial(b, ord));
    lts.push_back(leading_term(b, ord));
  }
  Polynomial remainder;
  while (!h.is_zero()) {
    const auto& lead = h.leading_term(ord);
    bool reduced = false;
    for (size_t i = 0; i < divisors.size(); ++i) {
      if (divides(lts[i], lead.monomial)) {
        h = h - divisors[i].shifted(sub_clamped(lead.monomial, lts[i]))
                    .scaled(lead.coeff);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder = remainder + Polynomial({{lead.monomial, lead.coeff}});
      h = h - Polynomial({{lead.monomial, lead.coeff}});
    }
  }
  return remainder;
}

bool buchberger_verify(const std::vector<Binomial>& basis,
                       const WeightedGrevlexOrder& ord) {
  if (basis.empty()) throw DomainError("empty basis");
  for (const auto& b : basis)
    if (!is_weight_homogeneous(b, ord))
      throw DomainError("binomial is not weight-homogeneous for the order");
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      Polynomial s = s_polynomial(basis[i], basis[j], ord);
      if (!normal_form(std::move(s), basis, ord).is_zero()) return false;
    }
  return true;
}

}  // namespace mcl
