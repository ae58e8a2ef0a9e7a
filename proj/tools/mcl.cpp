// mcl: exact monomial/binomial ideal toolkit command line.
//
// Subcommands: curve analyze | curve grid | ideal closure | ideal
// normal-check | ideal rr-check | ideal colon | ideal power | gamma build |
// gamma check.  Exit codes: 0 ok, 2 usage or validation error, 3 internal
// cross-validation failure.  All output is deterministic.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcl/curve.hpp"
#include "mcl/errors.hpp"
#include "mcl/gamma.hpp"
#include "mcl/io.hpp"
#include "mcl/newton.hpp"
#include "mcl/rr.hpp"

namespace {

using nlohmann::ordered_json;

int default_horizon() {
  if (const char* env = std::getenv("MCL_RR_HORIZON")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (...) {
    }
  }
  return 4;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mcl::DomainError("cannot read file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline comma text, or @path to a text or JSON file.
mcl::MonomialIdeal parse_ideal_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') text = read_file(arg.substr(1));
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw mcl::DomainError("empty ideal input");
  if (text[first] == '{') return mcl::ideal_from_json(text);
  return mcl::parse_ideal_text(text, 1);
}

mcl::MonomialIdeal pad_vars(const mcl::MonomialIdeal& I, int n) {
  if (I.num_vars() == n) return I;
  std::vector<mcl::ExponentVector> gens;
  for (auto g : I.generators()) {
    g.resize(n, 0);
    gens.push_back(std::move(g));
  }
  return mcl::MonomialIdeal(n, std::move(gens));
}

void print_ideal(const mcl::MonomialIdeal& I, const std::string& format) {
  if (format == "json") {
    std::cout << mcl::ideal_to_json(I) << '\n';
  } else {
    std::cout << mcl::format_ideal_text(I, 1);
  }
}

ordered_json rr_json(const mcl::RRVerdict& v) {
  ordered_json j;
  j["horizon"] = v.horizon;
  if (v.confirmed()) {
    j["status"] = "confirmed";
  } else {
    j["status"] = "falsified";
    j["witness"] = v.witness->monomial;
    j["level"] = v.witness->level;
  }
  return j;
}

void print_rr_text(const mcl::RRVerdict& v) {
  if (v.confirmed()) {
    std::cout << "ConfirmedUpTo(" << v.horizon << ")\n";
  } else {
    std::cout << "Falsified\n"
              << "witness: " << mcl::format_monomial(v.witness->monomial, 1)
              << '\n'
              << "level: " << v.witness->level << '\n';
  }
}

struct GridRange {
  int n_min = 2, n_max = 5;
  std::int64_t m0_max = 25, d_max = 5;
  int l = 1;
};

GridRange parse_grid(const std::string& text) {
  GridRange g;
  if (text.empty()) return g;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw mcl::DomainError("grid entries look like key=value");
    const std::string key = item.substr(0, eq);
    long long value = 0;
    try {
      value = std::stoll(item.substr(eq + 1));
    } catch (...) {
      throw mcl::DomainError("bad grid value in '" + item + "'");
    }
    if (key == "nmin") {
      g.n_min = static_cast<int>(value);
    } else if (key == "nmax") {
      g.n_max = static_cast<int>(value);
    } else if (key == "m0max") {
      g.m0_max = value;
    } else if (key == "dmax") {
      g.d_max = value;
    } else if (key == "l") {
      g.l = static_cast<int>(value);
    } else {
      throw mcl::DomainError("unknown grid key '" + key + "'");
    }
  }
  if (g.n_min < 2 || g.n_max < g.n_min || g.m0_max <= g.n_min || g.d_max < 1 ||
      g.l < 1)
    throw mcl::DomainError("grid range is empty or invalid");
  return g;
}

int run(int argc, char** argv) {
  CLI::App app{"exact monomial ideal toolkit"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  // curve
  auto* curve = app.add_subcommand("curve", "arithmetic-sequence monomial curves");
  curve->require_subcommand(1);
  curve->fallthrough();
  int n = 0, l = 1, N = default_horizon();
  std::int64_t m0 = 0, d = 1;
  auto* analyze = curve->add_subcommand("analyze", "full report for one curve");
  analyze->fallthrough();
  analyze->add_option("-n,--n", n, "number of steps (variables are x0..xn)")
      ->required();
  analyze->add_option("--m0", m0, "first term of the sequence")->required();
  analyze->add_option("-d,--d", d, "common difference")->capture_default_str();
  analyze->add_option("--power", l, "power of inP to analyze")
      ->capture_default_str();
  analyze->add_option("--rr-horizon", N, "Ratliff-Rush chain horizon")
      ->capture_default_str();

  std::string grid_text;
  auto* grid = curve->add_subcommand("grid", "verdict sweep over a curve grid");
  grid->fallthrough();
  grid->add_option("--grid", grid_text,
                   "ranges, e.g. nmin=2,nmax=5,m0max=25,dmax=5,l=1");
  grid->add_option("--rr-horizon", N, "Ratliff-Rush chain horizon")
      ->capture_default_str();

  // ideal
  auto* ideal = app.add_subcommand("ideal", "operations on monomial ideals");
  ideal->require_subcommand(1);
  ideal->fallthrough();
  std::string ideal_arg, second_arg;
  int max_power = 2, power_arg = 1;
  auto* closure = ideal->add_subcommand("closure", "integral closure");
  closure->fallthrough();
  closure->add_option("ideal", ideal_arg, "inline text or @file")->required();
  auto* normal = ideal->add_subcommand("normal-check", "closedness of powers");
  normal->fallthrough();
  normal->add_option("ideal", ideal_arg, "inline text or @file")->required();
  normal->add_option("--max-power", max_power, "largest power checked")
      ->capture_default_str();
  auto* rrchk = ideal->add_subcommand("rr-check", "bounded Ratliff-Rush check");
  rrchk->fallthrough();
  rrchk->add_option("ideal", ideal_arg, "inline text or @file")->required();
  rrchk->add_option("--rr-horizon", N, "chain horizon")->capture_default_str();
  auto* colon_cmd = ideal->add_subcommand("colon", "colon ideal I : J");
  colon_cmd->fallthrough();
  colon_cmd->add_option("ideal", ideal_arg, "I, inline text or @file")->required();
  colon_cmd->add_option("by", second_arg, "J, inline text or @file")->required();
  auto* power_cmd = ideal->add_subcommand("power", "power of an ideal");
  power_cmd->fallthrough();
  power_cmd->add_option("ideal", ideal_arg, "inline text or @file")->required();
  power_cmd->add_option("--power", power_arg, "exponent")->capture_default_str();

  // gamma
  auto* gamma = app.add_subcommand("gamma", "staircase spread constructions");
  gamma->require_subcommand(1);
  gamma->fallthrough();
  std::string spec_arg;
  auto* gbuild = gamma->add_subcommand("build", "generators of the spread ideal");
  gbuild->fallthrough();
  gbuild->add_option("spec", spec_arg, "GammaSpec JSON file or inline JSON")
      ->required();
  auto* gcheck = gamma->add_subcommand("check", "transfer of the bounded RR verdict");
  gcheck->fallthrough();
  gcheck->add_option("spec", spec_arg, "GammaSpec JSON file or inline JSON")
      ->required();
  gcheck->add_option("--rr-horizon", N, "chain horizon")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  if (*analyze) {
    const mcl::CurveSpec spec(n, m0, d);
    const mcl::CurveReport report = mcl::analyze(spec, l, N);
    if (format == "json") {
      std::cout << mcl::report_to_json(report) << '\n';
    } else {
      std::cout << "curve n=" << spec.n << " m0=" << spec.m0 << " d=" << spec.d
                << " (weights";
      for (auto w : spec.weights()) std::cout << ' ' << w;
      std::cout << ")\n";
      std::cout << "params: q=" << report.params.q << " r=" << report.params.r
                << " p=" << report.params.p << " u=" << report.params.u
                << " upsilon=" << report.params.upsilon
                << " mu=" << report.params.mu << " z=" << report.params.z
                << '\n';
      std::cout << "groebner: " << report.groebner.size() << " binomials, "
                << (report.buchberger_ok ? "buchberger ok" : "buchberger FAILED")
                << '\n';
      std::cout << "inP:";
      for (const auto& g : report.inP.generators())
        std::cout << ' ' << mcl::format_monomial(g, 0);
      std::cout << '\n';
      std::cout << "omega (power " << report.l << "):";
      for (const auto& g : report.omega.generators())
        std::cout << ' ' << mcl::format_monomial(g, 0);
      std::cout << '\n';
      std::cout << "closure H:";
      for (const auto& g : report.H.generators())
        std::cout << ' ' << mcl::format_monomial(g, 0);
      std::cout << '\n';
      std::cout << "missing:";
      if (report.missing.empty()) std::cout << " none";
      for (const auto& g : report.missing)
        std::cout << ' ' << mcl::format_monomial(g, 0);
      std::cout << '\n';
      std::cout << "normal=" << (report.normality.normal ? "true" : "false")
                << " (q=" << report.normality.q << ", r=" << report.normality.r
                << "), alt_form=" << (report.normality.alt_form ? "true" : "false")
                << '\n';
      if (report.rr.confirmed()) {
        std::cout << "rr: ConfirmedUpTo(" << report.rr.horizon << ")\n";
      } else {
        std::cout << "rr: Falsified witness="
                  << mcl::format_monomial(report.rr.witness->monomial, 0)
                  << " level=" << report.rr.witness->level << '\n';
      }
    }
    return 0;
  }

  if (*grid) {
    const GridRange g = parse_grid(grid_text);
    ordered_json rows = ordered_json::array();
    long long checked = 0, normal_count = 0;
    for (int cn = g.n_min; cn <= g.n_max; ++cn) {
      for (std::int64_t cm0 = cn + 1; cm0 <= g.m0_max; ++cm0) {
        for (std::int64_t cd = 1; cd <= g.d_max; ++cd) {
          if (std::gcd(cm0, cd) != 1) continue;
          const mcl::CurveSpec spec(cn, cm0, cd);
          const mcl::CurveParameters P = mcl::curve_params(spec);
          const mcl::NormalityRecord nv = mcl::normality_verdict(spec, g.l);
          const mcl::RRVerdict rr =
              mcl::is_ratliff_rush_up_to(mcl::omega_generators(spec, g.l), N);
          ++checked;
          if (nv.normal) ++normal_count;
          if (format == "json") {
            ordered_json row;
            row["n"] = cn;
            row["m0"] = cm0;
            row["d"] = cd;
            row["q"] = P.q;
            row["r"] = P.r;
            row["normal"] = nv.normal;
            row["rr"] = rr_json(rr);
            rows.push_back(std::move(row));
          } else {
            std::cout << "n=" << cn << " m0=" << cm0 << " d=" << cd
                      << " q=" << P.q << " r=" << P.r
                      << " normal=" << (nv.normal ? "true" : "false") << " rr=";
            if (rr.confirmed()) {
              std::cout << "confirmed(" << rr.horizon << ")";
            } else {
              std::cout << "falsified("
                        << mcl::format_monomial(rr.witness->monomial, 0) << ")";
            }
            std::cout << '\n';
          }
        }
      }
    }
    if (format == "json") {
      ordered_json out;
      out["grid"] = std::move(rows);
      out["checked"] = checked;
      out["normal"] = normal_count;
      std::cout << out.dump() << '\n';
    } else {
      std::cout << "checked " << checked << " curves, " << normal_count
                << " normal\n";
    }
    return 0;
  }

  if (*closure) {
    print_ideal(mcl::integral_closure(parse_ideal_arg(ideal_arg)), format);
    return 0;
  }
  if (*normal) {
    const mcl::NormalVerdict v =
        mcl::is_normal_up_to(parse_ideal_arg(ideal_arg), max_power);
    if (format == "json") {
      ordered_json j;
      j["checked_up_to"] = v.checked_up_to;
      if (v.fails_at) {
        j["fails_at"] = *v.fails_at;
      } else {
        j["fails_at"] = nullptr;
      }
      j["witnesses"] = v.witnesses;
      std::cout << j.dump() << '\n';
    } else if (v.normal()) {
      std::cout << "NormalUpTo(" << v.checked_up_to << ")\n";
    } else {
      std::cout << "FailsAt(" << *v.fails_at << ")\n";
      for (const auto& w : v.witnesses)
        std::cout << "witness: " << mcl::format_monomial(w, 1) << '\n';
    }
    return 0;
  }
  if (*rrchk) {
    const mcl::RRVerdict v =
        mcl::is_ratliff_rush_up_to(parse_ideal_arg(ideal_arg), N);
    if (format == "json") {
      std::cout << rr_json(v).dump() << '\n';
    } else {
      print_rr_text(v);
    }
    return 0;
  }
  if (*colon_cmd) {
    mcl::MonomialIdeal I = parse_ideal_arg(ideal_arg);
    mcl::MonomialIdeal J = parse_ideal_arg(second_arg);
    const int vars = std::max(I.num_vars(), J.num_vars());
    print_ideal(mcl::colon(pad_vars(I, vars), pad_vars(J, vars)), format);
    return 0;
  }
  if (*power_cmd) {
    print_ideal(mcl::power(parse_ideal_arg(ideal_arg), power_arg), format);
    return 0;
  }

  if (*gbuild || *gcheck) {
    std::string text = spec_arg;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '{')
      text = read_file(spec_arg[0] == '@' ? spec_arg.substr(1) : spec_arg);
    const mcl::GammaSpec spec = mcl::gamma_spec_from_json(text);
    const mcl::MonomialIdeal J = mcl::gamma_ideal(spec);
    if (*gbuild) {
      print_ideal(J, format);
      return 0;
    }
    const mcl::RRVerdict base = mcl::is_ratliff_rush_up_to(spec.base.ideal(), N);
    const mcl::RRVerdict gam = mcl::is_ratliff_rush_up_to(J, N);
    if (base.confirmed() && !gam.confirmed())
      throw mcl::InternalCheckError(
          "spread lost the bounded Ratliff-Rush property of its base");
    const char* note = base.confirmed()
                           ? "transfer holds at this horizon"
                           : "base not Ratliff-Rush at this horizon; "
                             "transfer theorem is one-directional";
    if (format == "json") {
      ordered_json j;
      j["base"] = rr_json(base);
      j["gamma"] = rr_json(gam);
      j["note"] = note;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "base: ";
      if (base.confirmed()) {
        std::cout << "ConfirmedUpTo(" << base.horizon << ")\n";
      } else {
        std::cout << "Falsified witness="
                  << mcl::format_monomial(base.witness->monomial, 1)
                  << " level=" << base.witness->level << '\n';
      }
      std::cout << "gamma: ";
      if (gam.confirmed()) {
        std::cout << "ConfirmedUpTo(" << gam.horizon << ")\n";
      } else {
        std::cout << "Falsified witness="
                  << mcl::format_monomial(gam.witness->monomial, 1)
                  << " level=" << gam.witness->level << '\n';
      }
      std::cout << "note: " << note << '\n';
    }
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  // CLI11 long options need a double dash; accept the bare -m0 spelling too.
  std::vector<std::string> args;
  std::vector<char*> argv2;
  args.reserve(argc);
  for (int i = 0; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "-m0") a = "--m0";
    args.push_back(std::move(a));
  }
  for (auto& a : args) argv2.push_back(a.data());
  try {
    return run(argc, argv2.data());
  } catch (const mcl::InternalCheckError& e) {
    std::cerr << "internal-check: " << e.what() << '\n';
    return 3;
  } catch (const mcl::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const mcl::DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
