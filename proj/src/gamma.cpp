#include "mcl/gamma.hpp"

#include <numeric>

#include <json.hpp>

#include "mcl/errors.hpp"

namespace mcl {

namespace {
using json = nlohmann::ordered_json;
}

StaircaseIdeal2D::StaircaseIdeal2D(std::vector<std::pair<int, int>> pairs)
    : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw DomainError("staircase needs at least one pair");
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i].first < 0 || pairs_[i].second < 0)
      throw DomainError("staircase exponents must be nonnegative");
    if (i > 0) {
      if (pairs_[i].first >= pairs_[i - 1].first)
        throw DomainError("staircase a_i must strictly decrease");
      if (pairs_[i].second <= pairs_[i - 1].second)
        throw DomainError("staircase b_i must strictly increase");
    }
  }
}

MonomialIdeal StaircaseIdeal2D::ideal() const {
  std::vector<ExponentVector> gens;
  for (const auto& [a, b] : pairs_) gens.push_back({a, b});
  return MonomialIdeal(2, std::move(gens));
}

GammaSpec::GammaSpec(StaircaseIdeal2D base_, std::vector<int> K_, int m_,
                     int s_, Orientation orientation_)
    : base(std::move(base_)),
      K(std::move(K_)),
      m(m_),
      s(s_),
      orientation(orientation_) {
  if (m < 1) throw DomainError("gamma spec needs at least one x-variable");
  if (s < 0 || s > m) throw DomainError("gamma spec requires 0 <= s <= m");
  if (K.size() != base.pairs().size())
    throw DomainError("gamma spec needs one k_i per staircase pair");
  for (std::size_t i = 0; i < K.size(); ++i) {
    if (K[i] < 0) throw DomainError("k_i must be nonnegative");
    if (K[i] > base.pairs()[i].first)
      throw DomainError("gamma spec requires k_i <= a_i");
  }
}

std::vector<ExponentVector> gamma_block(int a, int b, int k, int m, int s,
                                        Orientation orientation) {
  if (a < 0 || b < 0 || k < 0) throw DomainError("gamma block needs a,b,k >= 0");
  if (k > a) throw DomainError("gamma block requires k <= a");
  if (m < 1 || s < 0 || s > m) throw DomainError("gamma block requires 0 <= s <= m");

  std::vector<ExponentVector> out;
  ExponentVector t(m, 0);
  // Ascending lexicographic walk over compositions of a into m parts.
  auto emit = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == m - 1) {
      t[pos] = remaining;
      int block = 0;
      if (orientation == Orientation::LowBlock) {
        for (int j = 0; j < s; ++j) block += t[j];
      } else {
        for (int j = m - s; j < m; ++j) block += t[j];
      }
      if (block >= k) {
        ExponentVector v(t);
        v.push_back(b);
        out.push_back(std::move(v));
      }
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      t[pos] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  emit(emit, 0, a);
  return out;
}

MonomialIdeal gamma_ideal(const GammaSpec& spec) {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < spec.base.pairs().size(); ++i) {
    const auto& [a, b] = spec.base.pairs()[i];
    auto block = gamma_block(a, b, spec.K[i], spec.m, spec.s, spec.orientation);
    gens.insert(gens.end(), block.begin(), block.end());
  }
  return MonomialIdeal(spec.m + 1, std::move(gens));
}

bool excluded_by_lemma(const ExponentVector& delta, const GammaSpec& spec) {
  if (static_cast<int>(delta.size()) != spec.m + 1)
    throw DimensionMismatch("delta must have m+1 coordinates");
  check_nonnegative(delta);
  const int total_x = std::accumulate(delta.begin(), delta.end() - 1, 0);
  const int y = delta.back();
  int block = 0;
  if (spec.orientation == Orientation::LowBlock) {
    for (int j = 0; j < spec.s; ++j) block += delta[j];
  } else {
    for (int j = spec.m - spec.s; j < spec.m; ++j) block += delta[j];
  }
  bool any = false;
  for (std::size_t i = 0; i < spec.base.pairs().size(); ++i) {
    const auto& [a, b] = spec.base.pairs()[i];
    if (total_x >= a && y >= b) {
      if (block >= spec.K[i]) return false;
      any = true;
    }
  }
  return any;
}

GammaSpec gamma_spec_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("bad gamma spec JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("pairs") || !j.contains("K") ||
      !j.contains("m") || !j.contains("s") || !j.contains("orientation"))
    throw DomainError("gamma spec JSON needs pairs, K, m, s, orientation");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& row : j["pairs"]) {
    if (!row.is_array() || row.size() != 2)
      throw DomainError("gamma spec pairs must be [a,b] arrays");
    pairs.emplace_back(row[0].get<int>(), row[1].get<int>());
  }
  std::vector<int> K;
  for (const auto& e : j["K"]) K.push_back(e.get<int>());
  const std::string ori = j["orientation"].get<std::string>();
  Orientation orientation;
  if (ori == "low") {
    orientation = Orientation::LowBlock;
  } else if (ori == "high") {
    orientation = Orientation::HighBlock;
  } else {
    throw DomainError("orientation must be \"low\" or \"high\"");
  }
  return GammaSpec(StaircaseIdeal2D(std::move(pairs)), std::move(K),
                   j["m"].get<int>(), j["s"].get<int>(), orientation);
}

std::string gamma_spec_to_json(const GammaSpec& spec) {
  json j;
  j["pairs"] = json::array();
  for (const auto& [a, b] : spec.base.pairs()) j["pairs"].push_back({a, b});
  j["K"] = spec.K;
  j["m"] = spec.m;
  j["s"] = spec.s;
  j["orientation"] = spec.orientation == Orientation::LowBlock ? "low" : "high";
  return j.dump();
}

}  // namespace mcl
