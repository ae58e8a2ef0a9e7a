#ifndef MCL_TESTS_ORACLES_HPP
#define MCL_TESTS_ORACLES_HPP

// Brute-force reference implementations used to cross-check the library.
// Everything here enumerates boxes or generator multisets directly and never
// reuses the code path it is checking.  Small inputs only.

#include <vector>

#include "mcl/exponent.hpp"
#include "mcl/ideal.hpp"
#include "mcl/rr.hpp"

namespace oracle {

// All lattice points of [0, bound], last coordinate fastest.
inline std::vector<mcl::ExponentVector> box_points(
    const mcl::ExponentVector& bound) {
  std::vector<mcl::ExponentVector> out;
  mcl::ExponentVector v(bound.size(), 0);
  for (;;) {
    out.push_back(v);
    int i = static_cast<int>(bound.size()) - 1;
    for (; i >= 0; --i) {
      if (++v[i] <= bound[i]) break;
      v[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

// I : J by scanning the box [0, generator_bound(I)].  Every minimal
// generator of the colon is a componentwise max of clamped generator
// differences, so the box suffices.
inline mcl::MonomialIdeal brute_colon(const mcl::MonomialIdeal& I,
                                      const mcl::MonomialIdeal& J) {
  std::vector<mcl::ExponentVector> members;
  for (const auto& v : box_points(mcl::generator_bound(I))) {
    bool in = true;
    for (const auto& g : J.generators()) {
      if (!mcl::contains(I, mcl::add(v, g))) {
        in = false;
        break;
      }
    }
    if (in) members.push_back(v);
  }
  return mcl::MonomialIdeal(I.num_vars(), std::move(members));
}

// I^k as the ideal of all k-fold sums of generators with repetition: the
// definitional generating set, with no intermediate reduction.
inline mcl::MonomialIdeal brute_power(const mcl::MonomialIdeal& I, int k) {
  const int n = I.num_vars();
  if (k == 0) return mcl::MonomialIdeal::unit(n);
  const auto& G = I.generators();
  std::vector<mcl::ExponentVector> sums;
  mcl::ExponentVector cur(n, 0);
  auto rec = [&](auto&& self, int remaining, std::size_t lowest) -> void {
    if (remaining == 0) {
      sums.push_back(cur);
      return;
    }
    for (std::size_t i = lowest; i < G.size(); ++i) {
      for (int c = 0; c < n; ++c) cur[c] += G[i][c];
      self(self, remaining - 1, i);
      for (int c = 0; c < n; ++c) cur[c] -= G[i][c];
    }
  };
  rec(rec, k, 0);
  return mcl::MonomialIdeal(n, std::move(sums));
}

inline std::vector<mcl::MonomialIdeal> brute_powers_up_to(
    const mcl::MonomialIdeal& I, int kmax) {
  std::vector<mcl::MonomialIdeal> P;
  P.push_back(mcl::MonomialIdeal::unit(I.num_vars()));
  for (int k = 1; k <= kmax; ++k) P.push_back(brute_power(I, k));
  return P;
}

// k*v in I^k for some k certifies v in the integral closure of I; a false
// return decides nothing, since the needed k can exceed the table.
inline bool power_membership_witness(
    const mcl::ExponentVector& v,
    const std::vector<mcl::MonomialIdeal>& brute_powers) {
  for (std::size_t k = 1; k < brute_powers.size(); ++k)
    if (mcl::contains(brute_powers[k], mcl::scale(v, static_cast<int>(k))))
      return true;
  return false;
}

// Bounded Ratliff-Rush verdict computed straight from the definition via the
// explicit colon chain; the library's box engine never runs here.
inline mcl::RRVerdict chain_verdict(const mcl::MonomialIdeal& I, int N) {
  mcl::RRVerdict verdict;
  verdict.horizon = N;
  const auto chain = mcl::colon_chain(I, N);
  const auto& top = chain.back();
  std::vector<mcl::ExponentVector> outside;
  for (const auto& g : top.generators())
    if (!mcl::contains(I, g)) outside.push_back(g);
  if (outside.empty()) return verdict;

  mcl::RRWitness w;
  w.monomial = outside.front();
  for (const auto& g : outside)
    if (mcl::graded_lex_less(g, w.monomial)) w.monomial = g;
  for (int k = 1; k <= N; ++k) {
    if (mcl::contains(chain[k - 1], w.monomial)) {
      w.level = k;
      break;
    }
  }
  verdict.witness = std::move(w);
  return verdict;
}

}  // namespace oracle

#endif
