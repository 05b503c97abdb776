// steinberg-lab: command-line driver for the verification batteries.
//
// Exit codes: 0 all checks passed, 1 at least one verification failed,
// 2 usage or validation error.

#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "stlab/borelring.hpp"
#include "stlab/charring.hpp"
#include "stlab/cohomology.hpp"
#include "stlab/errors.hpp"
#include "stlab/frobp1.hpp"
#include "stlab/rootsys.hpp"
#include "stlab/suite.hpp"
#include "stlab/weyl.hpp"

namespace {

using nlohmann::json;
using namespace stlab;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct SystemArgs {
  std::string family = "A";
  std::size_t rank = 1;

  RootSystemSpec spec() const {
    if (family.size() != 1) throw ValidationError("--type must be a single letter (A, B, C, D, F or G)");
    RootSystemSpec s{static_cast<char>(std::toupper(static_cast<unsigned char>(family[0]))), rank};
    s.validate();
    return s;
  }
};

void add_system_options(CLI::App* cmd, SystemArgs& args) {
  cmd->add_option("--type", args.family, "Root system family (A, B, C, D, F, G)")->required();
  cmd->add_option("--rank", args.rank, "Rank of the root system")->required();
}

Weight parse_weight(const RootSystem& rs, const std::string& text) {
  Weight w = Weight::parse(text);
  if (w.rank() != rs.rank())
    throw ValidationError("weight \"" + text + "\" has " + std::to_string(w.rank()) + " entries; " +
                          rs.spec().name() + " needs " + std::to_string(rs.rank()));
  return w;
}

json weight_json(const Weight& w) {
  json out = json::array();
  for (auto c : w.coords()) out.push_back(c);
  return out;
}

json word_json(const Word& word) {
  json out = json::array();
  for (auto i : word) out.push_back(i + 1);
  return out;
}

std::string word_string(const Word& word) {
  std::string s = "[";
  for (std::size_t k = 0; k < word.size(); ++k) s += (k ? "," : "") + std::to_string(word[k] + 1);
  return s + "]";
}

int emit_report(const RunReport& report, const SuiteConfig& config, bool structured) {
  if (structured) std::cout << report.to_json(config).dump(2) << '\n';
  else std::cout << report.to_table();
  std::cerr << "duration_seconds: " << report.duration_seconds << '\n';
  return report.all_passed() ? kExitPass : kExitFail;
}

RunReport collect(std::vector<CaseRecord> cases) {
  RunReport r;
  r.cases = std::move(cases);
  return r;
}

int cmd_roots(const SystemArgs& args, bool structured) {
  const RootSystem rs(args.spec());
  const WeylElement w0 = longest_element(rs);
  if (structured) {
    json roots = json::array();
    for (const auto& a : rs.positive_roots())
      roots.push_back({{"simple_coords", a.simple_coords}, {"weight", weight_json(a.weight)},
                       {"coroot", a.coroot.expansion}});
    json simple = json::array();
    for (const auto& a : rs.simple_roots()) simple.push_back(weight_json(a));
    std::cout << json{{"family", std::string(1, rs.spec().family)},
                      {"rank", rs.rank()},
                      {"cartan", rs.cartan()},
                      {"simple_roots", simple},
                      {"positive_roots", roots},
                      {"rho", weight_json(rs.rho())},
                      {"num_positive", rs.num_positive()},
                      {"weyl_group_order", rs.weyl_group_order()},
                      {"longest_word", word_json(w0.word)}}
                     .dump(2)
              << '\n';
    return kExitPass;
  }
  std::cout << "root system " << rs.spec().name() << "\n";
  std::cout << "cartan (C[i][j] = <alpha_j, alpha_i^vee>):\n";
  for (const auto& row : rs.cartan()) {
    for (auto v : row) std::cout << std::setw(4) << v;
    std::cout << "\n";
  }
  std::cout << "positive roots (N = " << rs.num_positive() << "):\n";
  for (const auto& a : rs.positive_roots()) {
    std::string simple = "(";
    for (std::size_t k = 0; k < a.simple_coords.size(); ++k)
      simple += (k ? "," : "") + std::to_string(a.simple_coords[k]);
    std::string coroot = "(";
    for (std::size_t k = 0; k < a.coroot.expansion.size(); ++k)
      coroot += (k ? "," : "") + std::to_string(a.coroot.expansion[k]);
    std::cout << "  simple " << simple << ")  weight " << a.weight.to_string() << "  coroot " << coroot << ")\n";
  }
  std::cout << "rho " << rs.rho().to_string() << "\n";
  std::cout << "|W| = " << rs.weyl_group_order() << ", w0 = " << word_string(w0.word) << "\n";
  return kExitPass;
}

int cmd_bott(const SystemArgs& args, const std::string& weight_text, bool structured) {
  const RootSystem rs(args.spec());
  const Weight chi = parse_weight(rs, weight_text);
  const auto report = bott_cohomology(rs, chi);
  const bool acyclic = is_acyclic_over_Z(rs, chi);
  if (structured) {
    json out{{"family", std::string(1, rs.spec().family)},
             {"rank", rs.rank()},
             {"weight", weight_json(chi)},
             {"status", report.is_zero() ? "singular_zero" : "concentrated"},
             {"acyclic_over_Z", acyclic}};
    if (!report.is_zero()) {
      out["degree"] = *report.degree;
      out["weyl_word"] = word_json(report.weyl_element->word);
      out["highest_weight"] = weight_json(*report.highest_weight);
      out["dimension"] = report.dimension->get_str();
    }
    std::cout << out.dump(2) << '\n';
    return kExitPass;
  }
  std::cout << "H^*(G/B, L_" << chi.to_string() << ") on " << rs.spec().name() << ": ";
  if (report.is_zero()) {
    std::cout << "zero in every degree (chi + rho singular)\n";
  } else {
    std::cout << "concentrated in degree " << *report.degree << ", highest weight "
              << report.highest_weight->to_string() << ", dimension " << report.dimension->get_str()
              << ", w = " << word_string(report.weyl_element->word) << "\n";
  }
  std::cout << "acyclic over Z (simple wall): " << (acyclic ? "yes" : "no") << "\n";
  return kExitPass;
}

int cmd_kempf(const SystemArgs& args, const std::string& weight_text, std::uint64_t p, std::uint64_t n,
              bool structured) {
  const RootSystem rs(args.spec());
  const Weight chi = parse_weight(rs, weight_text);
  const PrimePower pp(p, n);
  const auto report = kempf_vanishing_demo(rs, chi, pp);
  if (structured) {
    std::cout << json{{"family", std::string(1, rs.spec().family)},
                      {"rank", rs.rank()},
                      {"p", p},
                      {"n", n},
                      {"weight", weight_json(chi)},
                      {"twisted_weight", weight_json(report.twisted)},
                      {"twisted_dominant", report.twisted_dominant},
                      {"identity_holds", report.identity_holds},
                      {"degree_zero", !report.cohomology.is_zero() && report.cohomology.degree == 0u},
                      {"passed", report.passed}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "q chi + (q-1) rho = " << report.twisted.to_string()
              << (report.twisted_dominant ? " (dominant)" : " (NOT dominant)") << "\n";
    std::cout << "ch(q chi + (q-1) rho) = twist_q(ch chi) * ch St_q: " << (report.identity_holds ? "yes" : "NO")
              << "\n";
    std::cout << "H^*(L_chi) in degree 0 only: "
              << (!report.cohomology.is_zero() && report.cohomology.degree == 0u ? "yes" : "NO") << "\n";
    std::cout << (report.passed ? "PASS" : "FAIL") << "\n";
  }
  return report.passed ? kExitPass : kExitFail;
}

int cmd_p1_single(std::uint64_t p, std::uint64_t n, std::int64_t d, bool structured) {
  const PrimePower pp(p, n);
  const auto split = split_frobenius_pushforward(d, pp);
  const bool agrees = split == closed_formula(d, pp.q_small());
  if (structured) {
    json mult = json::object();
    for (auto [deg, count] : split.multiplicities()) mult[std::to_string(deg)] = count;
    std::cout << json{{"p", p}, {"n", n}, {"q", pp.q().get_str()}, {"d", d},
                      {"degrees", split.degrees}, {"multiplicities", mult},
                      {"matches_closed_formula", agrees}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "F^" << n << "_* O(" << d << ") on P^1, q = " << pp.q().get_str() << ": degrees "
              << split.to_string() << "\n";
    std::cout << "matches closed formula: " << (agrees ? "yes" : "NO") << "\n";
  }
  return agrees ? kExitPass : kExitFail;
}

SuiteConfig command_config(const std::string& suite, std::vector<RootSystemSpec> systems) {
  SuiteConfig c;
  c.suites = {suite};
  if (!systems.empty()) c.systems = std::move(systems);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"steinberg-lab: exact verification of Steinberg-module identities on flag varieties"};
  app.require_subcommand(1);
  app.fallthrough();

  bool structured = false;
  unsigned jobs = 1;
  app.add_flag("--structured,--json-like", structured, "Emit a machine-readable JSON document");

  SystemArgs sys;
  std::string weight;
  std::uint64_t p = 2, n = 1;
  std::optional<std::size_t> wall;
  std::int64_t radius = 5;
  std::string check;
  std::optional<std::int64_t> d;
  std::optional<std::string> config_path;

  auto* roots = app.add_subcommand("roots", "Cartan data and positive roots");
  add_system_options(roots, sys);

  auto* bott = app.add_subcommand("bott", "Cohomology of a line bundle on G/B (characteristic 0)");
  add_system_options(bott, sys);
  bott->add_option("--weight", weight, "Comma-separated fundamental-weight coordinates")->required();

  auto* ortho = app.add_subcommand("orthogonality", "Vanishing of H^*(L_{-q chi - rho}) on simple walls");
  add_system_options(ortho, sys);
  ortho->add_option("--p", p, "Prime");
  ortho->add_option("--n", n, "Frobenius exponent");
  ortho->add_option("--wall", wall, "Simple wall index, 1-based (default: all walls)");
  ortho->add_option("--radius", radius, "Coordinate box radius");

  auto* demazure = app.add_subcommand("demazure", "Demazure operator identities");
  add_system_options(demazure, sys);
  demazure->add_option("--check", check, "idempotent, braid, word-independence or w0 (default: all)");
  std::int64_t demazure_radius = 3;
  demazure->add_option("--radius", demazure_radius, "Coordinate box radius");

  auto* kempf = app.add_subcommand("kempf", "Character-level Kempf vanishing walkthrough");
  add_system_options(kempf, sys);
  kempf->add_option("--weight", weight, "Dominant weight")->required();
  kempf->add_option("--p", p, "Prime");
  kempf->add_option("--n", n, "Frobenius exponent");

  auto* grr = app.add_subcommand("grr", "Chern-character check of the Steinberg pushforward");
  add_system_options(grr, sys);
  grr->add_option("--p", p, "Prime");
  grr->add_option("--n", n, "Frobenius exponent");

  auto* p1 = app.add_subcommand("p1", "Split F^n_* O(d) on the projective line");
  p1->add_option("--p", p, "Prime");
  p1->add_option("--n", n, "Frobenius exponent");
  p1->add_option("--d", d, "Degree (default: run the rank-one battery)");
  std::int64_t p1_range = 20;
  p1->add_option("--range", p1_range, "Battery range for d");

  auto* all = app.add_subcommand("verify-all", "Run every configured verification suite");
  all->add_option("--config", config_path, "Config file (default: $STEINBERG_LAB_CONFIG, else built-in)");
  all->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*roots) return cmd_roots(sys, structured);
    if (*bott) return cmd_bott(sys, weight, structured);
    if (*kempf) return cmd_kempf(sys, weight, p, n, structured);
    if (*ortho) {
      const auto spec = sys.spec();
      std::optional<std::size_t> wall0;
      if (wall) {
        if (*wall < 1) throw ValidationError("--wall is 1-based");
        wall0 = *wall - 1;
      }
      auto config = command_config("orthogonality", {spec});
      config.primes = {p};
      config.exponents = {n};
      config.radius = radius;
      return emit_report(collect(run_orthogonality(spec, p, n, wall0, radius)), config, structured);
    }
    if (*demazure) {
      const auto spec = sys.spec();
      auto config = command_config("demazure", {});
      config.demazure_systems = {spec};
      config.demazure_radius = demazure_radius;
      return emit_report(collect(run_demazure(spec, check, demazure_radius)), config, structured);
    }
    if (*grr) {
      const auto spec = sys.spec();
      auto config = command_config("grr", {spec});
      config.primes = {p};
      config.exponents = {n};
      return emit_report(collect(run_grr(spec, p, n)), config, structured);
    }
    if (*p1) {
      if (d) return cmd_p1_single(p, n, *d, structured);
      auto config = command_config("p1", {});
      config.p1_primes = {p};
      config.p1_exponents = {n};
      config.p1_range = p1_range;
      return emit_report(collect(run_p1(p, n, p1_range)), config, structured);
    }
    if (*all) {
      const SuiteConfig config = resolve_config(config_path);
      auto progress = [](std::size_t done, std::size_t total) {
        std::cerr << "\r[" << done << "/" << total << "]" << (done == total ? "\n" : "") << std::flush;
      };
      return emit_report(verify_all(config, jobs, progress), config, structured);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n(run with --help for usage)\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n(reduce the rank, radius or q)\n";
    return kExitUsage;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
