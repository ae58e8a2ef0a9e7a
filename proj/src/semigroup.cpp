#include "mcl/semigroup.hpp"

#include <algorithm>
#include <numeric>

#include "mcl/errors.hpp"

namespace mcl {

namespace {

void check_gens(const std::vector<std::int64_t>& gens) {
  if (gens.empty()) throw DomainError("semigroup needs at least one generator");
  for (auto g : gens)
    if (g < 1) throw DomainError("semigroup generators must be positive");
}

std::vector<bool> reachability(std::int64_t bound,
                               const std::vector<std::int64_t>& gens) {
  std::vector<bool> table(bound + 1, false);
  table[0] = true;
  for (std::int64_t x = 1; x <= bound; ++x)
    for (auto g : gens)
      if (g <= x && table[x - g]) {
        table[x] = true;
        break;
      }
  return table;
}

}  // namespace

bool semigroup_member(std::int64_t x, const std::vector<std::int64_t>& gens) {
  check_gens(gens);
  if (x < 0) throw DomainError("semigroup membership of a negative integer");
  return reachability(x, gens)[x];
}

SemigroupTable::SemigroupTable(std::vector<std::int64_t> gens)
    : gens_(std::move(gens)) {
  check_gens(gens_);
  std::sort(gens_.begin(), gens_.end());
  std::int64_t g = 0;
  for (auto v : gens_) g = std::gcd(g, v);
  if (g != 1) throw DomainError("semigroup generators must have gcd 1");
  const std::int64_t lo = gens_.front(), hi = gens_.back();
  std::int64_t bound = std::max<std::int64_t>((lo - 1) * (hi - 1), lo);
  // A run of `lo` consecutive members at the top certifies everything
  // beyond; gcd 1 guarantees the run exists at some finite bound.
  for (;;) {
    if (bound > 100'000'000) throw DomainError("semigroup table too large");
    table_ = reachability(bound, gens_);
    bool run = true;
    for (std::int64_t x = bound - lo + 1; x <= bound; ++x)
      if (!table_[x]) {
        run = false;
        break;
      }
    if (run) break;
    bound *= 2;
  }
}

bool SemigroupTable::member(std::int64_t x) const {
  if (x < 0) return false;
  if (x >= static_cast<std::int64_t>(table_.size())) return true;
  return table_[x];
}

}  // namespace mcl
