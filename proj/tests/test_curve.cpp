#include <doctest.h>

#include <vector>

#include <json.hpp>

#include "mcl/buchberger.hpp"
#include "mcl/curve.hpp"
#include "mcl/errors.hpp"
#include "mcl/newton.hpp"
#include "mcl/semigroup.hpp"

using mcl::CurveSpec;
using mcl::ExponentVector;
using mcl::MonomialIdeal;

TEST_CASE("curve specs validate their arithmetic sequence") {
  CHECK_NOTHROW(CurveSpec(2, 3, 1));
  CHECK_THROWS_AS(CurveSpec(1, 3, 1), mcl::DomainError);   // n too small
  CHECK_THROWS_AS(CurveSpec(2, 2, 1), mcl::DomainError);   // m0 <= n
  CHECK_THROWS_AS(CurveSpec(2, 5, 0), mcl::DomainError);   // d must be positive
  CHECK_THROWS_AS(CurveSpec(3, 8, 2), mcl::DomainError);   // gcd(8,2) = 2
  CHECK_THROWS_AS(CurveSpec(2, 5001, 1), mcl::DomainError);
  CHECK_THROWS_AS(CurveSpec(2, 5, 1001), mcl::DomainError);
  CHECK_THROWS_AS(CurveSpec(51, 100, 1), mcl::DomainError);

  CHECK(CurveSpec(2, 3, 1).weights() == std::vector<std::int64_t>{3, 4, 5});
  CHECK(CurveSpec(3, 8, 3).weights() ==
        std::vector<std::int64_t>{8, 11, 14, 17});
}

TEST_CASE("semigroup membership by direct reachability") {
  const std::vector<std::int64_t> gens{7, 9, 11, 13};
  CHECK(mcl::semigroup_member(0, gens));
  CHECK(!mcl::semigroup_member(8, gens));
  CHECK(mcl::semigroup_member(16, gens));
  CHECK(mcl::semigroup_member(7, gens));
  CHECK(!mcl::semigroup_member(1, gens));
  CHECK_THROWS_AS(mcl::semigroup_member(-3, gens), mcl::DomainError);
  CHECK_THROWS_AS(mcl::semigroup_member(5, {}), mcl::DomainError);
  const std::vector<std::int64_t> nonpositive{3, 0};
  CHECK_THROWS_AS(mcl::semigroup_member(5, nonpositive), mcl::DomainError);
}

TEST_CASE("semigroup tables certify the tail beyond their bound") {
  const mcl::SemigroupTable t({3, 5});
  CHECK(t.member(0));
  CHECK(!t.member(1));
  CHECK(!t.member(2));
  CHECK(t.member(3));
  CHECK(!t.member(4));
  CHECK(t.member(5));
  CHECK(!t.member(7));  // the largest gap
  for (std::int64_t x = 8; x <= 40; ++x) CHECK(t.member(x));
  CHECK(t.member(1000000000));
  CHECK(!t.member(-1));

  const std::vector<std::int64_t> even{4, 6};
  CHECK_THROWS_AS(mcl::SemigroupTable{even}, mcl::DomainError);
}

TEST_CASE("parameter fixtures across residue classes") {
  const auto p345 = mcl::curve_params(CurveSpec(2, 3, 1));
  CHECK(p345.p == 1);
  CHECK(p345.q == 1);
  CHECK(p345.r == 1);
  CHECK(p345.u == 2);
  CHECK(p345.upsilon == 2);
  CHECK(p345.mu == 2);
  CHECK(p345.z == 1);
  CHECK(p345.epsilon == 1);
  REQUIRE(p345.j_range.has_value());
  CHECK(p345.j_range->first == 0);
  CHECK(p345.j_range->second == 0);

  const auto p19 = mcl::curve_params(CurveSpec(3, 19, 1));
  CHECK(p19.q == 6);
  CHECK(p19.r == 1);
  CHECK(p19.upsilon == 7);
  CHECK(p19.mu == 7);
  CHECK(p19.z == 2);

  const auto p8 = mcl::curve_params(CurveSpec(3, 8, 3));
  CHECK(p8.q == 2);
  CHECK(p8.r == 2);
  CHECK(p8.upsilon == 3);
  CHECK(p8.mu == 5);
  CHECK(p8.z == 1);

  // m0 divisible by n: the residue is taken as n itself.
  const auto p4 = mcl::curve_params(CurveSpec(2, 4, 1));
  CHECK(p4.q == 1);
  CHECK(p4.r == 2);
  CHECK(p4.z == 0);
  CHECK(!p4.epsilon.has_value());
  CHECK(!p4.j_range.has_value());
}

TEST_CASE("the defining binomials pass verification") {
  const CurveSpec spec(2, 3, 1);
  const auto basis = mcl::groebner_basis(spec);
  REQUIRE(basis.size() == 3);
  CHECK(basis[0].first == ExponentVector{0, 2, 0});
  CHECK(basis[0].second == ExponentVector{1, 0, 1});
  CHECK(basis[1].first == ExponentVector{0, 1, 1});
  CHECK(basis[1].second == ExponentVector{3, 0, 0});
  CHECK(basis[2].first == ExponentVector{0, 0, 2});
  CHECK(basis[2].second == ExponentVector{2, 1, 0});

  std::vector<mcl::BigInt> w;
  for (auto m : spec.weights()) w.emplace_back(m);
  CHECK(mcl::buchberger_verify(basis, mcl::WeightedGrevlexOrder(w)));
}

TEST_CASE("leading terms take the stated closed form") {
  CHECK(mcl::initial_ideal(CurveSpec(2, 3, 1)) ==
        MonomialIdeal(3, {{0, 2, 0}, {0, 1, 1}, {0, 0, 2}}));
  // q = 6, r = 1: middle products plus x_{1+j} x_3^6 and the pure x_3^7.
  CHECK(mcl::initial_ideal(CurveSpec(3, 19, 1)) ==
        MonomialIdeal(4, {{0, 2, 0, 0}, {0, 1, 1, 0}, {0, 0, 2, 0},
                          {0, 1, 0, 6}, {0, 0, 1, 6}, {0, 0, 0, 7}}));
  // q = 2, r = 2 drops x_1 x_3^q from the tail family.
  CHECK(mcl::initial_ideal(CurveSpec(3, 8, 3)) ==
        MonomialIdeal(4, {{0, 2, 0, 0}, {0, 1, 1, 0}, {0, 0, 2, 0},
                          {0, 0, 1, 2}, {0, 0, 0, 3}}));
  // r = n leaves only the pure power in the tail.
  CHECK(mcl::initial_ideal(CurveSpec(2, 4, 1)) ==
        MonomialIdeal(3, {{0, 2, 0}, {0, 0, 2}}));
}

TEST_CASE("first power of the stratified generators is the initial ideal") {
  for (const CurveSpec spec :
       {CurveSpec(2, 3, 1), CurveSpec(3, 19, 1), CurveSpec(3, 8, 3),
        CurveSpec(2, 4, 1), CurveSpec(4, 7, 2)}) {
    CHECK(mcl::omega_generators(spec, 1) == mcl::initial_ideal(spec));
  }
  CHECK_THROWS_AS(mcl::omega_generators(CurveSpec(2, 3, 1), 0),
                  mcl::DomainError);
  CHECK_THROWS_AS(mcl::omega_generators(CurveSpec(2, 3, 1), 17),
                  mcl::DomainError);
}

TEST_CASE("stratified power counts for the four-variable example") {
  const CurveSpec spec(3, 19, 1);
  const MonomialIdeal omega = mcl::omega_generators(spec, 3);
  CHECK(omega.generators().size() == 28);
  // Top stratum and the two highest x_3 layers.
  CHECK(mcl::contains(omega, {0, 0, 0, 21}));
  CHECK(mcl::contains(omega, {0, 6, 0, 0}));
  CHECK(!mcl::contains(omega, {0, 0, 0, 20}));
  CHECK(!mcl::contains(omega, {0, 5, 0, 0}));
}

TEST_CASE("closure strata and the missing generators") {
  const CurveSpec spec(3, 8, 3);
  const MonomialIdeal H = mcl::closure_H(spec, 3);
  const MonomialIdeal omega = mcl::omega_generators(spec, 3);
  std::vector<ExponentVector> missing;
  for (const auto& g : H.generators())
    if (!mcl::contains(omega, g)) missing.push_back(g);
  CHECK(missing == std::vector<ExponentVector>{
                       {0, 5, 0, 2}, {0, 3, 0, 5}, {0, 1, 0, 8}});

  // A normal curve has nothing missing at any checked power.
  const CurveSpec normal(3, 7, 2);
  for (int l = 1; l <= 3; ++l)
    CHECK(mcl::closure_H(normal, l) == mcl::omega_generators(normal, l));
}

TEST_CASE("normality matches the residue test and the closure scan") {
  const auto n345 = mcl::normality_verdict(CurveSpec(2, 3, 1), 2);
  CHECK(n345.normal);
  CHECK(n345.alt_form);
  CHECK(!n345.witnesses_at.has_value());

  const auto n7 = mcl::normality_verdict(CurveSpec(3, 7, 2), 2);
  CHECK(n7.normal);  // q = 2, r = 1
  CHECK(n7.alt_form);  // 7 = 2*3+1

  const auto n19 = mcl::normality_verdict(CurveSpec(3, 19, 1), 1);
  CHECK(!n19.normal);  // q = 6
  CHECK(n19.witnesses_at == 1);

  const auto n8 = mcl::normality_verdict(CurveSpec(3, 8, 3), 2);
  CHECK(!n8.normal);  // r = 2
  CHECK(n8.witnesses_at == 1);

  const auto n4 = mcl::normality_verdict(CurveSpec(2, 4, 1), 2);
  CHECK(!n4.normal);  // r = n
  CHECK(n4.witnesses_at == 1);
}

TEST_CASE("staircase decomposition carries the power structure") {
  const CurveSpec spec(3, 19, 1);
  const mcl::GammaSpec gs = mcl::rr_decomposition(spec, 1);
  CHECK(gs.base.pairs() ==
        std::vector<std::pair<int, int>>{{2, 0}, {1, 6}, {0, 7}});
  CHECK(gs.K == std::vector<int>{0, 1, 0});
  CHECK(gs.m == 2);
  CHECK(gs.s == 2);
  CHECK(gs.orientation == mcl::Orientation::HighBlock);

  const mcl::GammaSpec g2 = mcl::rr_decomposition(CurveSpec(3, 8, 3), 2);
  CHECK(g2.base.pairs() ==
        std::vector<std::pair<int, int>>{
            {4, 0}, {3, 2}, {2, 3}, {1, 5}, {0, 6}});
  CHECK(g2.K == std::vector<int>{0, 1, 0, 1, 0});
  CHECK(g2.s == 1);

  // r = n: the threshold never binds because s = 0.
  const mcl::GammaSpec g4 = mcl::rr_decomposition(CurveSpec(2, 4, 1), 1);
  CHECK(g4.s == 0);
  CHECK(g4.base.pairs() ==
        std::vector<std::pair<int, int>>{{2, 0}, {1, 1}, {0, 2}});
}

TEST_CASE("full analysis of the smallest curve") {
  const mcl::CurveReport report = mcl::analyze(CurveSpec(2, 3, 1), 1, 2);
  CHECK(report.buchberger_ok);
  CHECK(report.inP == MonomialIdeal(3, {{0, 2, 0}, {0, 1, 1}, {0, 0, 2}}));
  CHECK(report.omega == report.inP);
  CHECK(report.H == report.omega);
  CHECK(report.missing.empty());
  CHECK(report.normality.normal);
  CHECK(report.rr.confirmed());
  CHECK(report.rr.horizon == 2);
  CHECK(report.l == 1);
  CHECK(report.N == 2);

  CHECK_THROWS_AS(mcl::analyze(CurveSpec(2, 3, 1), 1, 0), mcl::DomainError);
  CHECK_THROWS_AS(mcl::analyze(CurveSpec(2, 3, 1), 1, 9), mcl::DomainError);
}

TEST_CASE("analysis reports serialize with stable keys") {
  const mcl::CurveReport report = mcl::analyze(CurveSpec(2, 3, 1), 1, 2);
  const auto j = nlohmann::json::parse(mcl::report_to_json(report));
  CHECK(j["spec"]["n"] == 2);
  CHECK(j["spec"]["m0"] == 3);
  CHECK(j["spec"]["d"] == 1);
  CHECK(j["params"]["q"] == 1);
  CHECK(j["params"]["r"] == 1);
  CHECK(j["params"]["upsilon"] == 2);
  CHECK(j["groebner"]["buchberger_ok"] == true);
  CHECK(j["groebner"]["basis"].size() == 3);
  CHECK(j["groebner"]["basis"][0] == "x1^2 - x0*x2");
  CHECK(j["inP"].size() == 3);
  CHECK(j["inP"][0] == "x2^2");
  CHECK(j["missing"].empty());
  CHECK(j["normal"]["normal"] == true);
  CHECK(j["normal"]["witnesses_at"].is_null());
  CHECK(j["rr_status"]["status"] == "confirmed");
  CHECK(j["rr_status"]["horizon"] == 2);
}
