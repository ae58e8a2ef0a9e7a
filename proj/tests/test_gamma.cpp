#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "mcl/errors.hpp"
#include "mcl/gamma.hpp"
#include "mcl/ideal.hpp"

using mcl::ExponentVector;
using mcl::GammaSpec;
using mcl::MonomialIdeal;
using mcl::Orientation;
using mcl::StaircaseIdeal2D;

static GammaSpec seven_step_spec() {
  return GammaSpec(
      StaircaseIdeal2D({{8, 0}, {7, 2}, {6, 4}, {5, 6}, {4, 7}, {1, 8}, {0, 9}}),
      {3, 4, 5, 2, 0, 1, 0}, 2, 1, Orientation::LowBlock);
}

TEST_CASE("staircase pairs must strictly step down and right") {
  CHECK_NOTHROW(StaircaseIdeal2D({{3, 0}, {1, 2}, {0, 5}}));
  CHECK_THROWS_AS(StaircaseIdeal2D({}), mcl::DomainError);
  const std::vector<std::pair<int, int>> flat_a{{3, 0}, {3, 2}};
  CHECK_THROWS_AS(StaircaseIdeal2D{flat_a}, mcl::DomainError);
  const std::vector<std::pair<int, int>> flat_b{{3, 0}, {2, 0}};
  CHECK_THROWS_AS(StaircaseIdeal2D{flat_b}, mcl::DomainError);
  const std::vector<std::pair<int, int>> neg{{3, -1}, {2, 0}};
  CHECK_THROWS_AS(StaircaseIdeal2D{neg}, mcl::DomainError);

  const StaircaseIdeal2D s({{3, 0}, {1, 2}});
  CHECK(s.pairs().size() == 2);
  CHECK(s.ideal() == MonomialIdeal(2, {{3, 0}, {1, 2}}));
}

TEST_CASE("spec validation ties K to the staircase") {
  const StaircaseIdeal2D base({{3, 0}, {1, 2}});
  CHECK_NOTHROW(GammaSpec(base, {2, 1}, 3, 2, Orientation::LowBlock));
  const std::vector<int> short_K{2};
  CHECK_THROWS_AS(GammaSpec(base, short_K, 3, 2, Orientation::LowBlock),
                  mcl::DomainError);
  const std::vector<int> beyond_a{4, 1};
  CHECK_THROWS_AS(GammaSpec(base, beyond_a, 3, 2, Orientation::LowBlock),
                  mcl::DomainError);
  const std::vector<int> neg_k{-1, 1};
  CHECK_THROWS_AS(GammaSpec(base, neg_k, 3, 2, Orientation::LowBlock),
                  mcl::DomainError);
  const std::vector<int> K{2, 1};
  CHECK_THROWS_AS(GammaSpec(base, K, 0, 0, Orientation::LowBlock),
                  mcl::DomainError);
  CHECK_THROWS_AS(GammaSpec(base, K, 2, 3, Orientation::LowBlock),
                  mcl::DomainError);
  CHECK_THROWS_AS(GammaSpec(base, K, 2, -1, Orientation::LowBlock),
                  mcl::DomainError);
}

TEST_CASE("a block lists the constrained compositions in ascending order") {
  CHECK(mcl::gamma_block(7, 2, 4, 2, 1, Orientation::LowBlock) ==
        std::vector<ExponentVector>{
            {4, 3, 2}, {5, 2, 2}, {6, 1, 2}, {7, 0, 2}});
  // Threshold zero keeps every composition.
  CHECK(mcl::gamma_block(2, 5, 0, 2, 1, Orientation::LowBlock) ==
        std::vector<ExponentVector>{{0, 2, 5}, {1, 1, 5}, {2, 0, 5}});
  // One variable holds the whole degree.
  CHECK(mcl::gamma_block(3, 1, 2, 1, 1, Orientation::LowBlock) ==
        std::vector<ExponentVector>{{3, 1}});
  // s = 0 makes any positive threshold unsatisfiable.
  CHECK(mcl::gamma_block(2, 0, 1, 2, 0, Orientation::LowBlock).empty());
  CHECK(mcl::gamma_block(2, 0, 0, 2, 0, Orientation::LowBlock).size() == 3);

  CHECK(mcl::gamma_block(7, 2, 4, 2, 1, Orientation::HighBlock) ==
        std::vector<ExponentVector>{
            {0, 7, 2}, {1, 6, 2}, {2, 5, 2}, {3, 4, 2}});

  CHECK_THROWS_AS(mcl::gamma_block(2, 0, 3, 2, 1, Orientation::LowBlock),
                  mcl::DomainError);
  CHECK_THROWS_AS(mcl::gamma_block(-1, 0, 0, 2, 1, Orientation::LowBlock),
                  mcl::DomainError);
  CHECK_THROWS_AS(mcl::gamma_block(2, 0, 1, 2, 3, Orientation::LowBlock),
                  mcl::DomainError);
}

TEST_CASE("orientations mirror each other by reversing the x block") {
  std::mt19937_64 rng(0x5eed02);
  for (int trial = 0; trial < 20; ++trial) {
    const int a = static_cast<int>(rng() % 7);
    const int b = static_cast<int>(rng() % 5);
    const int m = 1 + static_cast<int>(rng() % 4);
    const int s = static_cast<int>(rng() % (m + 1));
    const int k = static_cast<int>(rng() % (a + 1));
    auto low = mcl::gamma_block(a, b, k, m, s, Orientation::LowBlock);
    auto high = mcl::gamma_block(a, b, k, m, s, Orientation::HighBlock);
    REQUIRE(low.size() == high.size());
    for (auto& v : low) std::reverse(v.begin(), v.end() - 1);
    std::sort(low.begin(), low.end());
    std::sort(high.begin(), high.end());
    CHECK(low == high);
  }
}

TEST_CASE("the seven-step staircase spreads to its 23 listed generators") {
  const MonomialIdeal J = mcl::gamma_ideal(seven_step_spec());
  CHECK(J.num_vars() == 3);
  const MonomialIdeal expected(
      3, {{3, 5, 0}, {4, 4, 0}, {5, 3, 0}, {6, 2, 0}, {7, 1, 0}, {8, 0, 0},
          {4, 3, 2}, {5, 2, 2}, {6, 1, 2}, {7, 0, 2},
          {5, 1, 4}, {6, 0, 4},
          {2, 3, 6}, {3, 2, 6}, {4, 1, 6}, {5, 0, 6},
          {0, 4, 7}, {1, 3, 7}, {2, 2, 7}, {3, 1, 7}, {4, 0, 7},
          {1, 0, 8},
          {0, 0, 9}});
  CHECK(J.generators().size() == 23);
  CHECK(J == expected);
}

TEST_CASE("monomials under the staircase with a short block are excluded") {
  const GammaSpec spec = seven_step_spec();
  // Under the third step (6,4) with first coordinate short of k = 5.
  CHECK(mcl::excluded_by_lemma({2, 4, 4}, spec));
  // Same step but block satisfied: a generator of the spread.
  CHECK(!mcl::excluded_by_lemma({5, 1, 4}, spec));
  // Under the first step with block 2 < 3.
  CHECK(mcl::excluded_by_lemma({2, 6, 0}, spec));
  // A listed generator of the first block.
  CHECK(!mcl::excluded_by_lemma({3, 5, 0}, spec));
  // Below the staircase entirely: no step applies.
  CHECK(!mcl::excluded_by_lemma({1, 0, 0}, spec));
  CHECK(!mcl::excluded_by_lemma({0, 0, 0}, spec));
  // Deep inside: several steps apply and the block dominates every k_i.
  CHECK(!mcl::excluded_by_lemma({8, 0, 9}, spec));

  const ExponentVector wrong{1, 2};
  CHECK_THROWS_AS(mcl::excluded_by_lemma(wrong, spec),
                  mcl::DimensionMismatch);
  const ExponentVector neg{1, -2, 0};
  CHECK_THROWS_AS(mcl::excluded_by_lemma(neg, spec), mcl::DomainError);
}

TEST_CASE("excluded monomials never join the spread ideal itself") {
  const GammaSpec spec = seven_step_spec();
  const MonomialIdeal J = mcl::gamma_ideal(spec);
  ExponentVector v(3, 0);
  for (v[0] = 0; v[0] <= 10; ++v[0])
    for (v[1] = 0; v[1] <= 10; ++v[1])
      for (v[2] = 0; v[2] <= 11; ++v[2])
        if (mcl::excluded_by_lemma(v, spec)) CHECK(!mcl::contains(J, v));
}

TEST_CASE("spec JSON round-trips") {
  const GammaSpec spec = seven_step_spec();
  const std::string text = mcl::gamma_spec_to_json(spec);
  const GammaSpec back = mcl::gamma_spec_from_json(text);
  CHECK(back.base.pairs() == spec.base.pairs());
  CHECK(back.K == spec.K);
  CHECK(back.m == spec.m);
  CHECK(back.s == spec.s);
  CHECK(back.orientation == spec.orientation);
  CHECK(mcl::gamma_spec_to_json(back) == text);

  const GammaSpec high(StaircaseIdeal2D({{2, 0}, {0, 3}}), {1, 0}, 3, 2,
                       Orientation::HighBlock);
  const GammaSpec high_back = mcl::gamma_spec_from_json(mcl::gamma_spec_to_json(high));
  CHECK(high_back.orientation == Orientation::HighBlock);

  CHECK_THROWS_AS(mcl::gamma_spec_from_json("not json"), mcl::DomainError);
  CHECK_THROWS_AS(mcl::gamma_spec_from_json("{}"), mcl::DomainError);
  const std::string bad_orientation =
      R"({"pairs":[[2,0]],"K":[0],"m":1,"s":1,"orientation":"sideways"})";
  CHECK_THROWS_AS(mcl::gamma_spec_from_json(bad_orientation), mcl::DomainError);
}
