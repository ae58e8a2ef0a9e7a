#ifndef MCL_IDEAL_HPP
#define MCL_IDEAL_HPP

#include <vector>

#include "mcl/exponent.hpp"

namespace mcl {

// Monomial ideal given by its unique minimal generating set, stored as an
// antichain sorted in graded-lex order.  The zero ideal has no generators;
// the unit ideal is generated by the zero vector.
class MonomialIdeal {
 public:
  // Minimalizes and sorts; accepts any finite generator list.
  MonomialIdeal(int num_vars, std::vector<ExponentVector> generators);

  static MonomialIdeal zero(int num_vars);
  static MonomialIdeal unit(int num_vars);

  int num_vars() const { return num_vars_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;

  bool operator==(const MonomialIdeal& other) const;

 private:
  int num_vars_;
  std::vector<ExponentVector> gens_;
};

// Antichain of the divisibility order: drops every vector some other vector
// divides, dedups, sorts canonically.
std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens);

// x^m in I.
bool contains(const MonomialIdeal& I, const ExponentVector& m);

// I subset of J, decided on minimal generators.
bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J);

bool equals(const MonomialIdeal& I, const MonomialIdeal& J);

// Product ideal: pairwise generator sums, minimalized.
MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J);

// I^l; l = 0 gives the unit ideal, l < 0 is an error.
MonomialIdeal power(const MonomialIdeal& I, int l);

// Intersection: pairwise lcm, minimalized.
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

// Colon ideal I : J = {f : f J in I}.  J must be nonzero.
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);

// Componentwise max over generators; the all-zero vector for the zero ideal.
ExponentVector generator_bound(const MonomialIdeal& I);

}  // namespace mcl

#endif
