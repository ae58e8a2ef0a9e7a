#ifndef MCL_GAMMA_HPP
#define MCL_GAMMA_HPP

#include <string>
#include <utility>
#include <vector>

#include "mcl/ideal.hpp"

namespace mcl {

// Two-variable ideal given by staircase pairs (a_i, b_i): a strictly
// decreasing, b strictly increasing.  Such pairs are automatically the
// minimal generators of the ideal they span.
class StaircaseIdeal2D {
 public:
  explicit StaircaseIdeal2D(std::vector<std::pair<int, int>> pairs);

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  MonomialIdeal ideal() const;

 private:
  std::vector<std::pair<int, int>> pairs_;
};

enum class Orientation { LowBlock, HighBlock };

// Spread of a staircase ideal into m x-variables plus y.  K fixes the
// per-pair block threshold k_i; orientation selects whether the first or
// the last s x-variables carry the threshold.
struct GammaSpec {
  GammaSpec(StaircaseIdeal2D base, std::vector<int> K, int m, int s,
            Orientation orientation);

  StaircaseIdeal2D base;
  std::vector<int> K;
  int m;
  int s;
  Orientation orientation;
};

// All (t_1,...,t_m, b) with sum t_j = a and the oriented block sum >= k,
// in ascending lexicographic order of (t_1,...,t_m).
std::vector<ExponentVector> gamma_block(int a, int b, int k, int m, int s,
                                        Orientation orientation);

// Minimalized union of the per-pair blocks.
MonomialIdeal gamma_ideal(const GammaSpec& spec);

// True iff some pair (a_j, b_j) lies under delta (total x-degree >= a_j and
// y-degree >= b_j) and every such pair has delta's block sum < k_j.  Such
// monomials are provably outside the Ratliff-Rush closure of the spread.
bool excluded_by_lemma(const ExponentVector& delta, const GammaSpec& spec);

GammaSpec gamma_spec_from_json(const std::string& json_text);
std::string gamma_spec_to_json(const GammaSpec& spec);

}  // namespace mcl

#endif
