#ifndef MCL_SEMIGROUP_HPP
#define MCL_SEMIGROUP_HPP

#include <cstdint>
#include <vector>

namespace mcl {

// True iff x is a nonnegative integer combination of gens.
bool semigroup_member(std::int64_t x, const std::vector<std::int64_t>& gens);

// Membership table for the numerical semigroup generated by gens
// (gcd must be 1 so that membership is eventually always true).  The table
// covers [0, bound] with bound at least (min-1)*(max-1); membership beyond
// the table is certified by a full run of `min` consecutive members at the
// top and is always true.  Negative inputs are never members.
class SemigroupTable {
 public:
  explicit SemigroupTable(std::vector<std::int64_t> gens);

  bool member(std::int64_t x) const;
  const std::vector<std::int64_t>& generators() const { return gens_; }
  std::int64_t bound() const { return static_cast<std::int64_t>(table_.size()) - 1; }

 private:
  std::vector<std::int64_t> gens_;
  std::vector<bool> table_;
};

}  // namespace mcl

#endif
