#include "mcl/exponent.hpp"

#include <string>

#include "mcl/errors.hpp"

namespace mcl {

void check_same_dimension(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("exponent vectors of length " +
                            std::to_string(a.size()) + " and " +
                            std::to_string(b.size()));
}

void check_nonnegative(const ExponentVector& a) {
  for (int e : a)
    if (e < 0) throw DomainError("negative exponent");
}

bool divides(const ExponentVector& a, const ExponentVector& b) {
  check_same_dimension(a, b);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

ExponentVector add(const ExponentVector& a, const ExponentVector& b) {
  check_same_dimension(a, b);
  ExponentVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  check_same_dimension(a, b);
  ExponentVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
  return r;
}

ExponentVector sub_clamped(const ExponentVector& a, const ExponentVector& b) {
  check_same_dimension(a, b);
  ExponentVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] > b[i] ? a[i] - b[i] : 0;
  return r;
}

ExponentVector scale(const ExponentVector& a, int k) {
  if (k < 0) throw DomainError("negative scalar");
  ExponentVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

std::int64_t degree(const ExponentVector& a) {
  std::int64_t d = 0;
  for (int e : a) d += e;
  return d;
}

bool graded_lex_less(const ExponentVector& a, const ExponentVector& b) {
  std::int64_t da = degree(a), db = degree(b);
  if (da != db) return da < db;
  return a < b;  // lexicographic on entries
}

}  // namespace mcl
