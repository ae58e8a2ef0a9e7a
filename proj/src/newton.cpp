#include "mcl/newton.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include <json.hpp>

#include "mcl/errors.hpp"

namespace mcl {

namespace {

using boost::multiprecision::cpp_int;

// ---- exact simplex for max sum(lambda) s.t. G*lambda <= v, lambda >= 0 ----

struct LPOutcome {
  bool feasible = false;
  std::vector<BigRat> lambda;  // normalized to sum exactly 1 when feasible
  std::vector<BigRat> farkas;  // w >= 0, <w,g> >= 1 for all g, <w,v> < 1
};

LPOutcome solve_np(const ExponentVector& v,
                   const std::vector<ExponentVector>& gens) {
  const int n = static_cast<int>(v.size());
  const int m = static_cast<int>(gens.size());
  const int rhs = m + n;
  // Rows 0..n-1: [G | I | v]; row n: reduced costs with objective at [rhs].
  std::vector<std::vector<BigRat>> T(n + 1, std::vector<BigRat>(m + n + 1, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) T[i][j] = gens[j][i];
    T[i][m + i] = 1;
    T[i][rhs] = v[i];
  }
  for (int j = 0; j < m; ++j) T[n][j] = -1;
  std::vector<int> basis(n);
  for (int i = 0; i < n; ++i) basis[i] = m + i;

  for (;;) {
    if (T[n][rhs] >= 1) break;  // objective already certifies membership
    int enter = -1;
    for (int j = 0; j < m + n; ++j) {
      if (T[n][j] < 0) {
        enter = j;
        break;  // Bland: smallest index
      }
    }
    if (enter < 0) break;  // optimal
    int leave = -1;
    BigRat best;
    for (int i = 0; i < n; ++i) {
      if (T[i][enter] <= 0) continue;
      BigRat ratio = T[i][rhs] / T[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0)
      throw InternalCheckError(
          "membership program unbounded for a nonzero-generator ideal");
    const BigRat piv = T[leave][enter];
    for (auto& x : T[leave]) x /= piv;
    for (int i = 0; i <= n; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      const BigRat f = T[i][enter];
      for (int j = 0; j <= rhs; ++j) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }

  LPOutcome out;
  if (T[n][rhs] >= 1) {
    out.feasible = true;
    std::vector<BigRat> lam(m, 0);
    for (int i = 0; i < n; ++i)
      if (basis[i] < m) lam[basis[i]] = T[i][rhs];
    const BigRat total = T[n][rhs];
    out.lambda.resize(m);
    for (int j = 0; j < m; ++j) out.lambda[j] = lam[j] / total;
  } else {
    out.farkas.resize(n);
    for (int i = 0; i < n; ++i) out.farkas[i] = T[n][m + i];
  }
  return out;
}

// Both outcomes carry a certificate; replay it exactly and refuse to return
// an unverified answer.
void verify_outcome(const LPOutcome& out, const ExponentVector& v,
                    const std::vector<ExponentVector>& gens) {
  const int n = static_cast<int>(v.size());
  if (out.feasible) {
    BigRat total = 0;
    std::vector<BigRat> combo(n, 0);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (out.lambda[j] < 0)
        throw InternalCheckError("negative multiplier in membership witness");
      total += out.lambda[j];
      for (int i = 0; i < n; ++i) combo[i] += out.lambda[j] * gens[j][i];
    }
    if (total != 1)
      throw InternalCheckError("membership witness multipliers do not sum to 1");
    for (int i = 0; i < n; ++i)
      if (combo[i] > v[i])
        throw InternalCheckError("membership witness exceeds the target point");
  } else {
    BigRat at_v = 0;
    for (int i = 0; i < n; ++i) {
      if (out.farkas[i] < 0)
        throw InternalCheckError("negative weight in separation certificate");
      at_v += out.farkas[i] * v[i];
    }
    if (at_v >= 1)
      throw InternalCheckError("separation certificate fails at the point");
    for (const auto& g : gens) {
      BigRat at_g = 0;
      for (int i = 0; i < n; ++i) at_g += out.farkas[i] * g[i];
      if (at_g < 1)
        throw InternalCheckError("separation certificate fails at a generator");
    }
  }
}

// Verified Farkas certificate scaled to integers: u is outside the
// polyhedron whenever <w, u> < threshold.
struct Separator {
  std::vector<cpp_int> w;
  cpp_int threshold;
};

Separator scale_farkas(const std::vector<BigRat>& w) {
  cpp_int lcm_den = 1;
  for (const auto& x : w)
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  Separator s;
  s.threshold = lcm_den;
  s.w.reserve(w.size());
  for (const auto& x : w)
    s.w.push_back(numerator(x) * (lcm_den / denominator(x)));
  return s;
}

void check_nonzero(const MonomialIdeal& I, const char* what) {
  if (I.is_zero()) throw DomainError(std::string(what) + " of the zero ideal");
}

int checked_exponent(long long e) {
  if (e < 0 || e > 1000000000LL) throw DomainError("exponent out of range");
  return static_cast<int>(e);
}

// Appends every monomial x_{i_1}...x_{i_k} * base with nondecreasing middle
// indices drawn from [1, n-1] (0-based coords 0..n-2).
void append_middle_multisets(int k, int n, const ExponentVector& base,
                             std::vector<ExponentVector>& out) {
  ExponentVector cur = base;
  auto rec = [&](auto&& self, int remaining, int lowest) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int i = lowest; i < n - 1; ++i) {
      ++cur[i];
      self(self, remaining - 1, i);
      --cur[i];
    }
  };
  rec(rec, k, 0);
}

}  // namespace

std::optional<RationalPoint> np_member_witness(const ExponentVector& v,
                                               const MonomialIdeal& I) {
  check_nonzero(I, "Newton polyhedron membership");
  if (static_cast<int>(v.size()) != I.num_vars())
    throw DimensionMismatch("point dimension does not match ideal");
  check_nonnegative(v);
  if (I.is_unit()) {
    RationalPoint p;
    p.coords.assign(v.size(), 0);
    return p;
  }
  LPOutcome out = solve_np(v, I.generators());
  verify_outcome(out, v, I.generators());
  if (!out.feasible) return std::nullopt;
  RationalPoint p;
  p.coords.assign(v.size(), 0);
  for (std::size_t j = 0; j < I.generators().size(); ++j)
    for (std::size_t i = 0; i < v.size(); ++i)
      p.coords[i] += out.lambda[j] * I.generators()[j][i];
  return p;
}

bool np_member(const ExponentVector& v, const MonomialIdeal& I) {
  return np_member_witness(v, I).has_value();
}

MonomialIdeal integral_closure(const MonomialIdeal& I) {
  check_nonzero(I, "integral closure");
  const int n = I.num_vars();
  if (I.is_unit()) return MonomialIdeal::unit(n);

  const ExponentVector B = generator_bound(I);
  std::vector<std::int64_t> stride(n);
  std::int64_t cells = 1;
  for (int i = n - 1; i >= 0; --i) {
    stride[i] = cells;
    cells *= B[i] + 1;
    if (cells > 50'000'000) throw DomainError("closure box too large");
  }
  std::vector<std::uint8_t> in_ideal(cells, 0), in_np(cells, 0);
  for (const auto& g : I.generators()) {
    std::int64_t idx = 0;
    for (int i = 0; i < n; ++i) idx += g[i] * stride[i];
    in_ideal[idx] = 1;
  }

  std::vector<Separator> certs;
  std::vector<ExponentVector> minimal;
  ExponentVector v(n, 0);
  std::int64_t idx = 0;
  for (;;) {
    if (!in_ideal[idx]) {
      for (int i = 0; i < n; ++i) {
        if (v[i] > 0 && in_ideal[idx - stride[i]]) {
          in_ideal[idx] = 1;
          break;
        }
      }
    }
    bool member = in_ideal[idx] != 0;
    bool from_pred = false;
    if (!member) {
      for (int i = 0; i < n; ++i) {
        if (v[i] > 0 && in_np[idx - stride[i]]) {
          member = true;
          from_pred = true;
          break;
        }
      }
    }
    if (!member) {
      bool separated = false;
      for (auto it = certs.rbegin(); it != certs.rend(); ++it) {
        cpp_int dot = 0;
        for (int i = 0; i < n; ++i) dot += it->w[i] * v[i];
        if (dot < it->threshold) {
          separated = true;
          break;
        }
      }
      if (!separated) {
        LPOutcome out = solve_np(v, I.generators());
        verify_outcome(out, v, I.generators());
        if (out.feasible) {
          member = true;
        } else {
          certs.push_back(scale_farkas(out.farkas));
        }
      }
    }
    if (member) {
      in_np[idx] = 1;
      if (!from_pred) {
        bool minimal_cell = true;
        for (int i = 0; i < n; ++i) {
          if (v[i] > 0 && in_np[idx - stride[i]]) {
            minimal_cell = false;
            break;
          }
        }
        if (minimal_cell) minimal.push_back(v);
      }
    }
    int i = n - 1;
    for (; i >= 0; --i) {
      if (++v[i] <= B[i]) break;
      v[i] = 0;
    }
    if (i < 0) break;
    idx = 0;
    for (int k = 0; k < n; ++k) idx += v[k] * stride[k];
  }
  return MonomialIdeal(n, std::move(minimal));
}

ClosureVerdict is_integrally_closed(const MonomialIdeal& I) {
  check_nonzero(I, "closedness check");
  const MonomialIdeal closure = integral_closure(I);
  ClosureVerdict verdict;
  for (const auto& g : closure.generators())
    if (!contains(I, g)) verdict.missing.push_back(g);
  verdict.closed = verdict.missing.empty();
  return verdict;
}

NormalVerdict is_normal_up_to(const MonomialIdeal& I, int L) {
  check_nonzero(I, "normality check");
  if (L < 1) throw DomainError("normality horizon must be positive");
  NormalVerdict verdict;
  verdict.checked_up_to = L;
  for (int l = 1; l <= L; ++l) {
    ClosureVerdict cv = is_integrally_closed(power(I, l));
    if (!cv.closed) {
      verdict.fails_at = l;
      verdict.witnesses = std::move(cv.missing);
      break;
    }
  }
  return verdict;
}

MonomialIdeal block_ideal(const std::vector<int>& alpha) {
  if (alpha.empty()) throw DomainError("block ideal needs at least one exponent");
  const int n = static_cast<int>(alpha.size());
  std::vector<ExponentVector> gens;
  for (int i = 0; i < n; ++i) {
    if (alpha[i] < 1) throw DomainError("block ideal exponents must be >= 1");
    ExponentVector g(n, 0);
    g[i] = alpha[i];
    gens.push_back(std::move(g));
  }
  return integral_closure(MonomialIdeal(n, std::move(gens)));
}

MonomialIdeal corollary_gens(int s, int t, int n, int l) {
  if (s < 1 || t < 1 || n < 1 || l < 1)
    throw DomainError("corollary generators need positive parameters");
  const long long ls = static_cast<long long>(l) * s;
  std::vector<ExponentVector> gens;
  for (long long a = 0; a <= ls; ++a) {
    const long long middle_degree = ls - a;
    if (n == 1 && middle_degree > 0) continue;
    const int lam = checked_exponent((a * t + s - 1) / s);  // ceil(a*t/s)
    ExponentVector base(n, 0);
    base[n - 1] = lam;
    append_middle_multisets(checked_exponent(middle_degree), n, base, gens);
  }
  MonomialIdeal direct(n, std::move(gens));
  std::vector<int> alpha(n, checked_exponent(ls));
  alpha[n - 1] = checked_exponent(static_cast<long long>(l) * t);
  if (!(direct == block_ideal(alpha)))
    throw InternalCheckError(
        "closed-form closure generators disagree with the box construction");
  return direct;
}

std::string closure_verdict_to_json(const ClosureVerdict& v) {
  nlohmann::ordered_json j;
  j["closed"] = v.closed;
  j["missing"] = nlohmann::ordered_json::array();
  for (const auto& m : v.missing) j["missing"].push_back(m);
  return j.dump();
}

}  // namespace mcl
