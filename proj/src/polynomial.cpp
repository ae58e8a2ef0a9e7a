#include "mcl/polynomial.hpp"

#include <algorithm>

#include "mcl/errors.hpp"

namespace mcl {

Polynomial::Polynomial(std::vector<Term> terms) : terms_(std::move(terms)) {
  normalize();
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return graded_lex_less(a.monomial, b.monomial);
  });
  std::vector<Term> combined;
  for (auto& t : terms_) {
    if (!combined.empty() && combined.back().monomial == t.monomial)
      combined.back().coeff += t.coeff;
    else
      combined.push_back(std::move(t));
    if (!combined.empty() && combined.back().coeff == 0) combined.pop_back();
  }
  terms_ = std::move(combined);
}

Polynomial Polynomial::from_binomial(const Binomial& b,
                                     const WeightedGrevlexOrder& ord) {
  ExponentVector lead = mcl::leading_term(b, ord);
  ExponentVector trail = lead == b.first ? b.second : b.first;
  return Polynomial({{lead, BigInt(1)}, {trail, BigInt(-1)}});
}

const Polynomial::Term& Polynomial::leading_term(
    const WeightedGrevlexOrder& ord) const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  size_t best = 0;
  for (size_t i = 1; i < terms_.size(); ++i)
    if (ord.less(terms_[best].monomial, terms_[i].monomial)) best = i;
  return terms_[best];
}

Polynomial Polynomial::shifted(const ExponentVector& m) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({add(t.monomial, m), t.coeff});
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const BigInt& c) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.monomial, t.coeff * c});
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Polynomial::Term> out = a.terms_;
  for (const auto& t : b.terms_) out.push_back({t.monomial, -t.coeff});
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Polynomial::Term> out = a.terms_;
  for (const auto& t : b.terms_) out.push_back(t);
  return Polynomial(std::move(out));
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].monomial != other.terms_[i].monomial ||
        terms_[i].coeff != other.terms_[i].coeff)
      return false;
  return true;
}

}  // namespace mcl
