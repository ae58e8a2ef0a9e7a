#include "mcl/ideal.hpp"

#include <algorithm>
#include <string>

#include "mcl/errors.hpp"

namespace mcl {

std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens) {
  std::sort(gens.begin(), gens.end(), graded_lex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Scanning in graded order, a vector can only be divided by one kept
  // earlier, so one forward pass suffices.
  std::vector<ExponentVector> kept;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& k : kept)
      if (divides(k, g)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

MonomialIdeal::MonomialIdeal(int num_vars,
                             std::vector<ExponentVector> generators)
    : num_vars_(num_vars) {
  if (num_vars < 0) throw DomainError("negative variable count");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != num_vars)
      throw DimensionMismatch("generator of length " +
                              std::to_string(g.size()) + " in ideal with " +
                              std::to_string(num_vars) + " variables");
    check_nonnegative(g);
  }
  gens_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::zero(int num_vars) {
  return MonomialIdeal(num_vars, {});
}

MonomialIdeal MonomialIdeal::unit(int num_vars) {
  return MonomialIdeal(num_vars, {ExponentVector(num_vars, 0)});
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && degree(gens_[0]) == 0;
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
  return num_vars_ == other.num_vars_ && gens_ == other.gens_;
}

static void check_same_ring(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.num_vars() != J.num_vars())
    throw DimensionMismatch("ideals in " + std::to_string(I.num_vars()) +
                            " and " + std::to_string(J.num_vars()) +
                            " variables");
}

bool contains(const MonomialIdeal& I, const ExponentVector& m) {
  if (static_cast<int>(m.size()) != I.num_vars())
    throw DimensionMismatch("monomial length " + std::to_string(m.size()) +
                            " vs ideal in " + std::to_string(I.num_vars()) +
                            " variables");
  for (const auto& g : I.generators())
    if (divides(g, m)) return true;
  return false;
}

bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ring(I, J);
  for (const auto& g : I.generators())
    if (!contains(J, g)) return false;
  return true;
}

bool equals(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ring(I, J);
  return I == J;
}

MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ring(I, J);
  std::vector<ExponentVector> sums;
  sums.reserve(I.generators().size() * J.generators().size());
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) sums.push_back(add(a, b));
  return MonomialIdeal(I.num_vars(), std::move(sums));
}

MonomialIdeal power(const MonomialIdeal& I, int l) {
  if (l < 0) throw DomainError("negative power");
  if (l == 0) return MonomialIdeal::unit(I.num_vars());
  MonomialIdeal r = I;
  for (int i = 1; i < l; ++i) r = multiply(r, I);
  return r;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ring(I, J);
  std::vector<ExponentVector> lcms;
  lcms.reserve(I.generators().size() * J.generators().size());
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) lcms.push_back(lcm(a, b));
  return MonomialIdeal(I.num_vars(), std::move(lcms));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ring(I, J);
  if (J.is_zero()) throw DomainError("colon by the zero ideal");
  if (I.is_zero()) return I;
  // I : <x^a> is generated by lcm(g, x^a) - a over generators g.
  bool first = true;
  MonomialIdeal result = MonomialIdeal::zero(I.num_vars());
  for (const auto& a : J.generators()) {
    std::vector<ExponentVector> shifted;
    shifted.reserve(I.generators().size());
    for (const auto& g : I.generators())
      shifted.push_back(sub_clamped(g, a));
    MonomialIdeal part(I.num_vars(), std::move(shifted));
    result = first ? part : intersect(result, part);
    first = false;
  }
  return result;
}

ExponentVector generator_bound(const MonomialIdeal& I) {
  ExponentVector b(I.num_vars(), 0);
  for (const auto& g : I.generators())
    for (int i = 0; i < I.num_vars(); ++i)
      if (g[i] > b[i]) b[i] = g[i];
  return b;
}

}  // namespace mcl
