#include "mcl/curve.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "mcl/buchberger.hpp"
#include "mcl/errors.hpp"
#include "mcl/io.hpp"
#include "mcl/newton.hpp"
#include "mcl/order.hpp"
#include "mcl/semigroup.hpp"

namespace mcl {

namespace {

// Keeps every derived exponent, weight product, and oracle table small
// enough for exact verification to stay interactive.
constexpr std::int64_t kMaxM0 = 5000;
constexpr std::int64_t kMaxD = 1000;
constexpr int kMaxN = 50;
constexpr int kMaxPower = 16;
constexpr int kMaxHorizon = 8;

int checked_exp(std::int64_t e) {
  if (e < 0 || e > 1000000000LL) throw DomainError("exponent out of range");
  return static_cast<int>(e);
}

void check_power(int l) {
  if (l < 1) throw DomainError("power must be positive");
  if (l > kMaxPower) throw DomainError("power too large for curve analysis");
}

WeightedGrevlexOrder curve_order(const CurveSpec& spec) {
  std::vector<BigInt> w;
  for (auto m : spec.weights()) w.emplace_back(m);
  return WeightedGrevlexOrder(std::move(w));
}

// ceil(c*(q+1)/2), the x_n exponent of the c-th stratum.
int lambda_exponent(std::int64_t c, std::int64_t q) {
  return checked_exp((c * (q + 1) + 1) / 2);
}

// Appends base * (every degree-k multiset of middle variables x_1..x_{n-1});
// with require_high set, at least one chosen index must be >= r.
void append_middles(int k, int n, int r, bool require_high,
                    const ExponentVector& base,
                    std::vector<ExponentVector>& out) {
  ExponentVector cur = base;
  auto rec = [&](auto&& self, int remaining, int lowest, bool has_high) -> void {
    if (remaining == 0) {
      if (!require_high || has_high) out.push_back(cur);
      return;
    }
    for (int i = lowest; i <= n - 1; ++i) {
      ++cur[i];
      self(self, remaining - 1, i, has_high || i >= r);
      --cur[i];
    }
  };
  rec(rec, k, 1, false);
}

MonomialIdeal embed_after_x0(const MonomialIdeal& I) {
  std::vector<ExponentVector> gens;
  for (const auto& g : I.generators()) {
    ExponentVector v(g.size() + 1, 0);
    std::copy(g.begin(), g.end(), v.begin() + 1);
    gens.push_back(std::move(v));
  }
  return MonomialIdeal(I.num_vars() + 1, std::move(gens));
}

}  // namespace

CurveSpec::CurveSpec(int n_, std::int64_t m0_, std::int64_t d_)
    : n(n_), m0(m0_), d(d_) {
  if (n < 2) throw DomainError("curve needs n >= 2");
  if (n > kMaxN) throw DomainError("curve n too large");
  if (d < 1) throw DomainError("curve step d must be positive");
  if (m0 <= n) throw DomainError("curve requires m0 > n");
  if (m0 > kMaxM0 || d > kMaxD)
    throw DomainError("curve parameters too large for exact verification");
  if (std::gcd(m0, d) != 1) throw DomainError("curve requires gcd(m0, d) = 1");
}

std::vector<std::int64_t> CurveSpec::weights() const {
  std::vector<std::int64_t> w(n + 1);
  for (int i = 0; i <= n; ++i) w[i] = m0 + static_cast<std::int64_t>(i) * d;
  return w;
}

CurveParameters curve_params(const CurveSpec& spec) {
  const auto m = spec.weights();
  CurveParameters P;
  P.p = spec.n - 1;
  P.r = static_cast<int>(spec.m0 % spec.n);
  if (P.r == 0) P.r = spec.n;
  P.q = (spec.m0 - P.r) / spec.n;
  if (P.q < 1) throw InternalCheckError("q must be at least 1 when m0 > n");
  P.u = spec.n;
  P.upsilon = P.q + 1;
  P.mu = P.q + spec.d;
  P.z = spec.n - P.r;
  if (P.r < spec.n) {
    P.epsilon = 1;
    P.j_range = std::make_pair(0, spec.n - P.r - 1);
  }

  // Oracle verification of u: the first t >= 0 with g_t - m0 in the
  // semigroup of all weights must be exactly n, where g_t = q_t*m_p + m_{r_t}
  // splits t = q_t*p + r_t with 1 <= r_t <= p (and g_0 = 0).
  const SemigroupTable gamma(m);
  for (int t = 0; t <= spec.n; ++t) {
    std::int64_t gt = 0;
    if (t > 0) {
      const int rt = (t - 1) % P.p + 1;
      const int qt = (t - rt) / P.p;
      gt = static_cast<std::int64_t>(qt) * m[P.p] + m[rt];
    }
    const bool in = gamma.member(gt - spec.m0);
    if (in != (t == spec.n))
      throw InternalCheckError("semigroup oracle disagrees with u = n");
  }

  // Oracle verification of upsilon: the first b >= 1 with b*m_n in the
  // semigroup of m_0..m_{n-1} must be exactly q+1.
  const SemigroupTable gamma_prime(
      std::vector<std::int64_t>(m.begin(), m.end() - 1));
  for (std::int64_t b = 1; b <= P.q + 1; ++b) {
    const bool in = gamma_prime.member(b * m[spec.n]);
    if (in != (b == P.q + 1))
      throw InternalCheckError("semigroup oracle disagrees with upsilon = q+1");
  }
  if (P.upsilon != (spec.m0 + spec.n - 1) / spec.n)
    throw InternalCheckError("upsilon must equal ceil(m0/n)");
  return P;
}

std::vector<Binomial> groebner_basis(const CurveSpec& spec) {
  const CurveParameters P = curve_params(spec);
  const int n = spec.n;
  const WeightedGrevlexOrder order = curve_order(spec);
  std::vector<Binomial> basis;
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i; j <= n - 1; ++j) {
      ExponentVector lead(n + 1, 0), trail(n + 1, 0);
      ++lead[i];
      ++lead[j];
      ++trail[i - 1];
      ++trail[j + 1];
      basis.emplace_back(lead, trail);
    }
  }
  const int qe = checked_exp(P.q), mue = checked_exp(P.mu);
  for (int j = 0; j <= n - P.r; ++j) {
    ExponentVector lead(n + 1, 0), trail(n + 1, 0);
    ++lead[P.r + j];
    lead[n] += qe;
    trail[0] += mue;
    ++trail[j];
    basis.emplace_back(lead, trail);
  }
  for (const auto& b : basis)
    if (!is_weight_homogeneous(b, order))
      throw InternalCheckError("curve binomial is not weight homogeneous");
  return basis;
}

MonomialIdeal initial_ideal(const CurveSpec& spec) {
  const CurveParameters P = curve_params(spec);
  const WeightedGrevlexOrder order = curve_order(spec);
  const int n = spec.n;
  std::vector<ExponentVector> leads;
  for (const auto& b : groebner_basis(spec)) leads.push_back(leading_term(b, order));
  MonomialIdeal from_leads(n + 1, std::move(leads));

  std::vector<ExponentVector> closed;
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i; j <= n - 1; ++j) {
      ExponentVector v(n + 1, 0);
      ++v[i];
      ++v[j];
      closed.push_back(std::move(v));
    }
  }
  for (int j = 0; j <= n - P.r; ++j) {
    ExponentVector v(n + 1, 0);
    ++v[P.r + j];
    v[n] += checked_exp(P.q);
    closed.push_back(std::move(v));
  }
  if (!(from_leads == MonomialIdeal(n + 1, std::move(closed))))
    throw InternalCheckError("leading terms disagree with the closed form of inP");
  return from_leads;
}

MonomialIdeal omega_generators(const CurveSpec& spec, int l) {
  check_power(l);
  const CurveParameters P = curve_params(spec);
  const int n = spec.n;
  std::vector<ExponentVector> raw;
  for (int c = 0; c <= 2 * l; c += 2) {
    ExponentVector base(n + 1, 0);
    base[n] = lambda_exponent(c, P.q);
    append_middles(2 * l - c, n, P.r, false, base, raw);
    if (c >= 2 && P.r <= n - 1) {
      ExponentVector odd_base(n + 1, 0);
      odd_base[n] = lambda_exponent(c, P.q) - 1;
      append_middles(2 * l - c + 1, n, P.r, true, odd_base, raw);
    }
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  MonomialIdeal omega(n + 1, raw);
  if (omega.generators().size() != raw.size())
    throw InternalCheckError("stratified generator set is not an antichain");
  if (!(omega == power(initial_ideal(spec), l)))
    throw InternalCheckError("stratified generators disagree with the power");
  return omega;
}

MonomialIdeal closure_H(const CurveSpec& spec, int l) {
  check_power(l);
  const CurveParameters P = curve_params(spec);
  const int n = spec.n;
  std::vector<ExponentVector> raw;
  for (int e = 0; e <= 2 * l; ++e) {
    ExponentVector base(n + 1, 0);
    base[n] = lambda_exponent(e, P.q);
    append_middles(2 * l - e, n, P.r, false, base, raw);
  }
  MonomialIdeal H(n + 1, std::move(raw));
  if (!(H == integral_closure(power(initial_ideal(spec), l))))
    throw InternalCheckError("stratified closure disagrees with box enumeration");
  if (!(H == embed_after_x0(
                corollary_gens(2, checked_exp(P.q + 1), n, l))))
    throw InternalCheckError("stratified closure disagrees with block closed form");
  return H;
}

NormalityRecord normality_verdict(const CurveSpec& spec, int l_check) {
  check_power(l_check);
  const CurveParameters P = curve_params(spec);
  NormalityRecord rec;
  rec.q = P.q;
  rec.r = P.r;
  rec.normal = P.q <= 2 && P.r == 1;
  rec.alt_form = spec.m0 == spec.n + 1 || spec.m0 == 2 * spec.n + 1;
  if (rec.alt_form != rec.normal)
    throw InternalCheckError("m0 = n+1 / 2n+1 reformulation disagrees");
  const MonomialIdeal inP = initial_ideal(spec);
  for (int l = 1; l <= l_check; ++l) {
    const bool closed = is_integrally_closed(power(inP, l)).closed;
    if (closed != rec.normal)
      throw InternalCheckError("brute-force closure disagrees with the verdict");
    if (!closed && !rec.witnesses_at) rec.witnesses_at = l;
  }
  return rec;
}

GammaSpec rr_decomposition(const CurveSpec& spec, int l) {
  check_power(l);
  const CurveParameters P = curve_params(spec);
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> K;
  for (int i = 0; i <= 2 * l; ++i) {
    const std::int64_t b = i % 2 == 0
                               ? i * (P.q + 1) / 2
                               : P.q * ((i + 1) / 2) + (i - 1) / 2;
    pairs.emplace_back(2 * l - i, checked_exp(b));
    K.push_back(i % 2);
  }
  StaircaseIdeal2D base(std::move(pairs));
  if (base.pairs().size() != static_cast<std::size_t>(2 * l + 1))
    throw InternalCheckError("staircase must have 2l+1 pairs");
  if (!(base.ideal() ==
        power(coro12_ideal(2, 1, checked_exp(P.q), checked_exp(P.q + 1)), l)))
    throw InternalCheckError("staircase disagrees with the power of <x^2,xy^q,y^{q+1}>");
  GammaSpec gs(std::move(base), std::move(K), spec.n - 1, spec.n - P.r,
               Orientation::HighBlock);
  if (!(embed_after_x0(gamma_ideal(gs)) == power(initial_ideal(spec), l)))
    throw InternalCheckError("spread of the staircase disagrees with (inP)^l");
  return gs;
}

CurveReport analyze(const CurveSpec& spec, int l, int N) {
  check_power(l);
  if (N < 1) throw DomainError("horizon must be positive");
  if (N > kMaxHorizon) throw DomainError("horizon too large for curve analysis");
  const CurveParameters params = curve_params(spec);
  std::vector<Binomial> gb = groebner_basis(spec);
  const bool gb_ok = buchberger_verify(gb, curve_order(spec));
  MonomialIdeal inP = initial_ideal(spec);
  MonomialIdeal omega = omega_generators(spec, l);
  MonomialIdeal H = closure_H(spec, l);
  std::vector<ExponentVector> missing;
  for (const auto& g : H.generators())
    if (!contains(omega, g)) missing.push_back(g);
  NormalityRecord normality = normality_verdict(spec, l);
  RRVerdict rr = is_ratliff_rush_up_to(omega, N);
  return CurveReport{spec,    params,    std::move(gb), gb_ok,
                     std::move(inP),     std::move(omega),
                     std::move(H),       std::move(missing),
                     normality,          std::move(rr),
                     l,       N};
}

std::string report_to_json(const CurveReport& report) {
  using json = nlohmann::ordered_json;
  json j;
  j["spec"] = {{"n", report.spec.n}, {"m0", report.spec.m0}, {"d", report.spec.d}};
  json params;
  params["p"] = report.params.p;
  params["q"] = report.params.q;
  params["r"] = report.params.r;
  params["u"] = report.params.u;
  params["upsilon"] = report.params.upsilon;
  params["w"] = report.params.w;
  params["lambda"] = report.params.lambda;
  params["mu"] = report.params.mu;
  params["z"] = report.params.z;
  if (report.params.epsilon)
    params["epsilon"] = *report.params.epsilon;
  else
    params["epsilon"] = nullptr;
  if (report.params.j_range)
    params["j_range"] = {report.params.j_range->first, report.params.j_range->second};
  else
    params["j_range"] = nullptr;
  j["params"] = std::move(params);
  json gb = json::array();
  for (const auto& b : report.groebner)
    gb.push_back(format_monomial(b.first, 0) + " - " + format_monomial(b.second, 0));
  j["groebner"] = {{"basis", std::move(gb)}, {"buchberger_ok", report.buchberger_ok}};
  auto ideal_strings = [](const MonomialIdeal& I) {
    json a = json::array();
    for (const auto& g : I.generators()) a.push_back(format_monomial(g, 0));
    return a;
  };
  j["inP"] = ideal_strings(report.inP);
  j["omega"] = ideal_strings(report.omega);
  j["H"] = ideal_strings(report.H);
  json miss = json::array();
  for (const auto& g : report.missing) miss.push_back(format_monomial(g, 0));
  j["missing"] = std::move(miss);
  json norm;
  norm["normal"] = report.normality.normal;
  norm["q"] = report.normality.q;
  norm["r"] = report.normality.r;
  norm["alt_form"] = report.normality.alt_form;
  if (report.normality.witnesses_at)
    norm["witnesses_at"] = *report.normality.witnesses_at;
  else
    norm["witnesses_at"] = nullptr;
  j["normal"] = std::move(norm);
  json rr;
  rr["horizon"] = report.rr.horizon;
  if (report.rr.confirmed()) {
    rr["status"] = "confirmed";
  } else {
    rr["status"] = "falsified";
    rr["witness"] = format_monomial(report.rr.witness->monomial, 0);
    rr["level"] = report.rr.witness->level;
  }
  j["rr_status"] = std::move(rr);
  return j.dump();
}

}  // namespace mcl
