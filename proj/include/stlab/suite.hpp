#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "stlab/rootsys.hpp"
#include "stlab/weight.hpp"

namespace stlab {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kConfigEnvVar = "STEINBERG_LAB_CONFIG";

/// The suite names, in report order.
const std::vector<std::string>& all_suites();

/// Flat key = value configuration; list values are comma-separated.
/// Every field has a built-in default, so an absent file is valid.
struct SuiteConfig {
  std::vector<RootSystemSpec> systems;
  std::vector<std::uint64_t> primes{2, 3, 5};
  std::vector<std::uint64_t> exponents{1, 2};
  std::int64_t radius = 5;
  std::vector<std::string> suites = all_suites();

  std::vector<std::int64_t> steinberg_q{2, 3, 4, 5, 8, 9};
  std::vector<RootSystemSpec> demazure_systems;
  std::int64_t demazure_radius = 3;
  std::vector<RootSystemSpec> kempf_systems;
  std::vector<std::int64_t> kempf_q{2, 3, 4};
  std::int64_t kempf_radius = 2;
  std::int64_t bott_euler_radius = 2;
  std::vector<std::uint64_t> p1_primes{2, 3, 5, 7};
  std::vector<std::uint64_t> p1_exponents{1, 2, 3};
  std::int64_t p1_range = 20;
  /// Name of a suite whose expected values are deliberately falsified.
  /// Used by golden-run fixtures to exercise the failure path.
  std::string tamper;

  SuiteConfig();
  void validate() const;
  nlohmann::json to_json() const;
};

/// Throws ValidationError on unknown keys or malformed values.
SuiteConfig parse_config(std::istream& in);
SuiteConfig load_config(const std::string& path);
/// Explicit path, else $STEINBERG_LAB_CONFIG, else the defaults.
SuiteConfig resolve_config(const std::optional<std::string>& path);

struct CaseRecord {
  std::string suite;
  RootSystemSpec system;     // rank 0 for rank-free cases (p1)
  std::optional<std::uint64_t> p;
  std::optional<std::uint64_t> n;
  std::optional<Weight> weight;
  std::string label;
  bool passed = false;
  nlohmann::json witness;    // null unless the case failed

  nlohmann::json to_json() const;
};

struct RunReport {
  std::vector<CaseRecord> cases;
  double duration_seconds = 0.0;

  std::size_t passed() const;
  std::size_t failed() const;
  bool all_passed() const { return failed() == 0; }
  /// The structured document; excludes the duration so runs diff cleanly.
  nlohmann::json to_json(const SuiteConfig& config) const;
  std::string to_table() const;
};

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

// Case builders, one per suite. Each returns fully evaluated records.
std::vector<CaseRecord> run_steinberg(const RootSystemSpec& spec, const std::vector<std::int64_t>& qs,
                                      bool tamper = false);
std::vector<CaseRecord> run_bott(const RootSystemSpec& spec, std::int64_t radius, std::int64_t euler_radius,
                                 bool tamper = false);
/// wall is 0-based; nullopt runs every simple wall.
std::vector<CaseRecord> run_orthogonality(const RootSystemSpec& spec, std::uint64_t p, std::uint64_t n,
                                          std::optional<std::size_t> wall, std::int64_t radius,
                                          bool tamper = false);
/// check in {idempotent, braid, word-independence, w0}; empty runs all four.
std::vector<CaseRecord> run_demazure(const RootSystemSpec& spec, const std::string& check, std::int64_t radius,
                                     bool tamper = false);
std::vector<CaseRecord> run_kempf(const RootSystemSpec& spec, std::int64_t q, std::int64_t radius,
                                  bool tamper = false);
std::vector<CaseRecord> run_grr(const RootSystemSpec& spec, std::uint64_t p, std::uint64_t n, bool tamper = false);
std::vector<CaseRecord> run_hrr(const RootSystemSpec& spec, std::int64_t radius, bool tamper = false);
std::vector<CaseRecord> run_p1(std::uint64_t p, std::uint64_t n, std::int64_t range, bool tamper = false);

const std::vector<std::string>& demazure_checks();

/// Runs every configured suite. jobs > 1 evaluates cases on worker threads;
/// records are always reported in the same order.
RunReport verify_all(const SuiteConfig& config, unsigned jobs = 1, const ProgressFn& progress = {});

/// Writes q as p^n; throws ValidationError if q is not a prime power.
std::pair<std::uint64_t, std::uint64_t> factor_prime_power(std::int64_t q);

}  // namespace stlab
