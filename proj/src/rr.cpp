#include "mcl/rr.hpp"

#include <algorithm>
#include <cstdint>

#include "mcl/boxset.hpp"
#include "mcl/errors.hpp"

namespace mcl {

namespace {

ExponentVector componentwise_max(const std::vector<ExponentVector>& vs, int n) {
  ExponentVector b(n, 0);
  for (const auto& v : vs)
    for (int i = 0; i < n; ++i) b[i] = std::max(b[i], v[i]);
  return b;
}

bool divisible_by_any(const std::vector<ExponentVector>& gens,
                      const ExponentVector& v) {
  for (const auto& g : gens)
    if (divides(g, v)) return true;
  return false;
}

// Minimal generators of I^k for k = 1..kmax.  Each power's generators are a
// subset of {g + h : g in G(I^{k-1}), h in G(I)}, so seeding those sums into
// a box covering [0, kmax * bound(I)] and taking the frontier of the upward
// closure is exact.
std::vector<std::vector<ExponentVector>> power_generators(
    const MonomialIdeal& I, int kmax) {
  const int n = I.num_vars();
  const ExponentVector B = generator_bound(I);
  ExponentVector box(n);
  for (int i = 0; i < n; ++i) box[i] = kmax * B[i];

  std::vector<std::vector<ExponentVector>> G(kmax + 1);
  G[1] = I.generators();
  ExponentVector sum(n);
  for (int k = 1; k < kmax; ++k) {
    BoxSet s(box);
    for (const auto& g : G[k]) {
      for (const auto& h : G[1]) {
        for (int i = 0; i < n; ++i) sum[i] = g[i] + h[i];
        s.set(sum);
      }
    }
    s.close_upward();
    G[k + 1] = s.minimal_elements();
  }
  return G;
}

}  // namespace

std::vector<MonomialIdeal> colon_chain(const MonomialIdeal& I, int N) {
  if (N < 1) throw DomainError("colon_chain horizon must be positive");
  if (I.is_zero()) throw DomainError("colon_chain of the zero ideal");
  std::vector<MonomialIdeal> chain;
  MonomialIdeal pk = I;  // I^k
  for (int k = 1; k <= N; ++k) {
    MonomialIdeal pk1 = multiply(pk, I);  // I^{k+1}
    chain.push_back(colon(pk1, pk));
    if (k == 1 && !is_subset(I, chain.front()))
      throw InternalCheckError("colon chain does not contain the ideal");
    if (k > 1 && !is_subset(chain[k - 2], chain[k - 1]))
      throw InternalCheckError("colon chain failed to ascend");
    pk = std::move(pk1);
  }
  return chain;
}

RRVerdict is_ratliff_rush_up_to(const MonomialIdeal& I, int N) {
  if (N < 1) throw DomainError("Ratliff-Rush horizon must be positive");
  if (I.is_zero()) throw DomainError("Ratliff-Rush check of the zero ideal");
  RRVerdict verdict;
  verdict.horizon = N;
  if (I.is_unit()) return verdict;  // nothing lies outside the unit ideal

  const int n = I.num_vars();
  const auto G = power_generators(I, N + 1);

  // Every minimal generator of I^{N+1}:I^N is a componentwise max of
  // clamped differences of generators of I^{N+1}, hence fits in [0, vb].
  // The chain ascends, so equality of the N-th term with I settles all
  // earlier terms.
  const ExponentVector vb = componentwise_max(G[N + 1], n);
  std::vector<ExponentVector> gn = G[N];
  std::sort(gn.begin(), gn.end(), graded_lex_less);

  ExponentVector big = vb;
  {
    const ExponentVector bn = componentwise_max(gn, n);
    for (int i = 0; i < n; ++i) big[i] += bn[i];
  }
  BoxSet pn1(big);  // I^{N+1} on a box wide enough for every v + g query
  for (const auto& g : G[N + 1]) pn1.set(g);
  pn1.close_upward();

  const BoxSet pi = ideal_box_bitmap(I, vb);

  std::vector<ExponentVector> witnesses;
  ExponentVector v(n, 0), q(n);
  for (;;) {
    if (!pi.get(v)) {
      bool in_colon = true;
      for (const auto& g : gn) {
        for (int i = 0; i < n; ++i) q[i] = v[i] + g[i];
        if (!pn1.get(q)) {
          in_colon = false;
          break;
        }
      }
      if (in_colon) witnesses.push_back(v);
    }
    int i = n - 1;
    for (; i >= 0; --i) {
      if (++v[i] <= vb[i]) break;
      v[i] = 0;
    }
    if (i < 0) break;
  }
  if (witnesses.empty()) return verdict;

  RRWitness w;
  w.monomial = *std::min_element(witnesses.begin(), witnesses.end(),
                                 [](const auto& a, const auto& b) {
                                   return graded_lex_less(a, b);
                                 });
  for (int k = 1; k <= N; ++k) {
    bool in_level = true;
    for (const auto& g : G[k]) {
      if (!divisible_by_any(G[k + 1], add(w.monomial, g))) {
        in_level = false;
        break;
      }
    }
    if (in_level) {
      w.level = k;
      break;
    }
  }
  if (w.level == 0)
    throw InternalCheckError("witness has no entry level within horizon");
  verdict.witness = std::move(w);
  return verdict;
}

MonomialIdeal coro12_ideal(int a, int c, int d, int b) {
  if (!(a > c && c >= 0))
    throw DomainError("coro12 requires a > c >= 0");
  if (!(b > d && d >= 0))
    throw DomainError("coro12 requires b > d >= 0");
  if (static_cast<std::int64_t>(d) * a < static_cast<std::int64_t>(b) * (a - c))
    throw DomainError("coro12 requires d*a >= b*(a-c)");
  return MonomialIdeal(2, {{a, 0}, {c, d}, {0, b}});
}

MonomialIdeal coro12_ideal(int a, int b) {
  if (a < 1 || b < 1) throw DomainError("coro12 requires positive exponents");
  return MonomialIdeal(2, {{a, 0}, {0, b}});
}

}  // namespace mcl
