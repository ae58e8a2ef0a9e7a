#include "mcl/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "mcl/errors.hpp"

namespace mcl {

namespace {

using json = nlohmann::ordered_json;

bool is_blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Parses one `x<i>^<e>` factor; bumps max_index as a side effect.
// Returns {index (base-adjusted to 0), exponent}.
std::pair<int, long long> parse_factor(const std::string& tok, int index_base) {
  if (tok.empty() || (tok[0] != 'x' && tok[0] != 'X'))
    throw DomainError("bad monomial factor '" + tok + "'");
  std::size_t pos = 1;
  std::size_t caret = tok.find('^');
  std::string idx_part = tok.substr(pos, caret == std::string::npos
                                             ? std::string::npos
                                             : caret - pos);
  idx_part = strip(idx_part);
  if (idx_part.empty() ||
      !std::all_of(idx_part.begin(), idx_part.end(),
                   [](unsigned char c) { return std::isdigit(c); }))
    throw DomainError("bad variable index in '" + tok + "'");
  long long raw = std::stoll(idx_part);
  long long idx = raw - index_base;
  if (idx < 0)
    throw DomainError("variable index " + idx_part + " below base " +
                      std::to_string(index_base));
  long long exp = 1;
  if (caret != std::string::npos) {
    std::string exp_part = strip(tok.substr(caret + 1));
    if (exp_part.empty() ||
        !std::all_of(exp_part.begin(), exp_part.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
      throw DomainError("bad exponent in '" + tok + "'");
    exp = std::stoll(exp_part);
  }
  return {static_cast<int>(idx), exp};
}

// A monomial is `1` or `*`-joined factors.  Returns sparse (index, exp) pairs.
std::vector<std::pair<int, long long>> parse_monomial_tokens(
    const std::string& text, int index_base) {
  std::string s = strip(text);
  if (s.empty()) throw DomainError("empty monomial");
  if (s == "1") return {};
  std::vector<std::pair<int, long long>> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t star = s.find('*', start);
    std::string tok =
        strip(s.substr(start, star == std::string::npos ? std::string::npos
                                                        : star - start));
    if (tok.empty()) throw DomainError("empty factor in '" + s + "'");
    out.push_back(parse_factor(tok, index_base));
    if (star == std::string::npos) break;
    start = star + 1;
  }
  return out;
}

}  // namespace

std::string format_monomial(const ExponentVector& m, int index_base) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    os << 'x' << (static_cast<long long>(i) + index_base);
    if (m[i] != 1) os << '^' << m[i];
    first = false;
  }
  if (first) return "1";
  return os.str();
}

std::string format_ideal_text(const MonomialIdeal& I, int index_base) {
  std::ostringstream os;
  for (const auto& g : I.generators()) os << format_monomial(g, index_base) << '\n';
  return os.str();
}

MonomialIdeal parse_ideal_text(const std::string& text, int index_base,
                               std::optional<int> num_vars) {
  // Split on newlines and commas alike.
  std::vector<std::string> pieces;
  std::string cur;
  for (char c : text) {
    if (c == '\n' || c == ',') {
      pieces.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  pieces.push_back(cur);

  std::vector<std::vector<std::pair<int, long long>>> sparse;
  int max_index = -1;
  for (const auto& p : pieces) {
    if (is_blank(p)) continue;
    sparse.push_back(parse_monomial_tokens(p, index_base));
    for (const auto& [idx, e] : sparse.back()) max_index = std::max(max_index, idx);
  }
  if (sparse.empty()) throw DomainError("no generators in ideal text");

  int n = num_vars ? *num_vars : max_index + 1;
  if (n < max_index + 1)
    throw DomainError("variable index exceeds num_vars");
  if (n < 1) n = 1;  // the unit ideal written as `1` still needs a ring

  std::vector<ExponentVector> gens;
  for (const auto& mono : sparse) {
    ExponentVector v(n, 0);
    for (const auto& [idx, e] : mono) {
      if (e > 1000000000LL || v[idx] + e > 1000000000LL)
        throw DomainError("exponent too large");
      v[idx] += static_cast<int>(e);
    }
    gens.push_back(std::move(v));
  }
  return MonomialIdeal(n, std::move(gens));
}

std::string ideal_to_json(const MonomialIdeal& I) {
  json j;
  j["num_vars"] = I.num_vars();
  j["generators"] = json::array();
  for (const auto& g : I.generators()) j["generators"].push_back(g);
  return j.dump();
}

MonomialIdeal ideal_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("bad ideal JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("num_vars") || !j.contains("generators"))
    throw DomainError("ideal JSON must have num_vars and generators");
  if (!j["num_vars"].is_number_integer())
    throw DomainError("num_vars must be an integer");
  int n = j["num_vars"].get<int>();
  if (n < 1) throw DomainError("num_vars must be positive");
  if (!j["generators"].is_array())
    throw DomainError("generators must be an array");
  std::vector<ExponentVector> gens;
  for (const auto& row : j["generators"]) {
    if (!row.is_array()) throw DomainError("generator must be an array");
    ExponentVector v;
    for (const auto& e : row) {
      if (!e.is_number_integer()) throw DomainError("exponent must be an integer");
      v.push_back(e.get<int>());
    }
    gens.push_back(std::move(v));
  }
  return MonomialIdeal(n, std::move(gens));
}

}  // namespace mcl
