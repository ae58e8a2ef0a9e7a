#ifndef MCL_CURVE_HPP
#define MCL_CURVE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcl/binomial.hpp"
#include "mcl/gamma.hpp"
#include "mcl/ideal.hpp"
#include "mcl/rr.hpp"

namespace mcl {

// The monomial curve of the arithmetic sequence m_i = m0 + i*d, i = 0..n,
// in variables x_0..x_n with weights m_i.
struct CurveSpec {
  CurveSpec(int n, std::int64_t m0, std::int64_t d);

  int n;
  std::int64_t m0;
  std::int64_t d;

  std::vector<std::int64_t> weights() const;
};

struct CurveParameters {
  int p = 0;
  std::int64_t q = 0;
  int r = 0;
  int u = 0;
  std::int64_t upsilon = 0;
  int w = 1;
  int lambda = 1;
  std::int64_t mu = 0;
  int z = 0;
  std::optional<int> epsilon;                   // 1 when r < n
  std::optional<std::pair<int, int>> j_range;   // [0, n-r-1] when r < n
};

struct NormalityRecord {
  bool normal = false;
  std::int64_t q = 0;
  int r = 0;
  bool alt_form = false;
  std::optional<int> witnesses_at;  // first power whose closure grows
};

struct CurveReport {
  CurveSpec spec;
  CurveParameters params;
  std::vector<Binomial> groebner;
  bool buchberger_ok;
  MonomialIdeal inP;
  MonomialIdeal omega;
  MonomialIdeal H;
  std::vector<ExponentVector> missing;  // generators of H outside (inP)^l
  NormalityRecord normality;
  RRVerdict rr;
  int l;
  int N;
};

// Closed-form parameters, each cross-checked against the semigroup oracle.
CurveParameters curve_params(const CurveSpec& spec);

// {x_i x_j - x_{i-1} x_{j+1} | 1 <= i <= j <= n-1} together with
// {x_{r+j} x_n^q - x_0^{q+d} x_j | 0 <= j <= n-r}; weight homogeneity of
// every element is asserted.
std::vector<Binomial> groebner_basis(const CurveSpec& spec);

// Leading terms of the basis under the weighted grevlex order; asserted to
// match the closed form {x_i x_j} + {x_{r+j} x_n^q}.
MonomialIdeal initial_ideal(const CurveSpec& spec);

// Minimal generators of (inP)^l in stratified closed form; asserted equal to
// the directly computed power and asserted to be an antichain.
MonomialIdeal omega_generators(const CurveSpec& spec, int l);

// Minimal generators of the integral closure of (inP)^l; asserted equal to
// the box-enumeration closure and to the block-ideal closed form.
MonomialIdeal closure_H(const CurveSpec& spec, int l);

// normal <=> (q <= 2 and r = 1); the m0 = n+1 / 2n+1 reformulation and a
// brute-force closure check for every power up to l_check are asserted to
// agree.
NormalityRecord normality_verdict(const CurveSpec& spec, int l_check);

// The staircase spread presentation of (inP)^l; gamma_ideal of the result
// is asserted equal to the directly computed power.
GammaSpec rr_decomposition(const CurveSpec& spec, int l);

CurveReport analyze(const CurveSpec& spec, int l, int N);

std::string report_to_json(const CurveReport& report);

}  // namespace mcl

#endif
