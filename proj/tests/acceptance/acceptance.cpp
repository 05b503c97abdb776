// Acceptance battery: one PASS/FAIL line per criterion, exact arithmetic,
// each criterion with its runtime budget. Exit code 0 iff every criterion
// passes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "oracles.hpp"
#include "stlab/borelring.hpp"
#include "stlab/charring.hpp"
#include "stlab/cohomology.hpp"
#include "stlab/frobp1.hpp"
#include "stlab/suite.hpp"

#ifndef STLAB_CLI_PATH
#error "STLAB_CLI_PATH must point at the steinberg-lab executable"
#endif
#ifndef STLAB_FIXTURE_DIR
#error "STLAB_FIXTURE_DIR must point at tests/fixtures"
#endif

using namespace stlab;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

RootSystem rs_of(const char* name) { return RootSystem(RootSystemSpec::parse(name)); }

std::vector<Weight> box(std::size_t rank, std::int64_t lo, std::int64_t hi) {
  std::vector<Weight> out;
  Weight w = Weight::constant(rank, lo);
  while (true) {
    out.push_back(w);
    std::size_t k = rank;
    while (k-- > 0) {
      if (w[k] < hi) {
        ++w[k];
        break;
      }
      w[k] = lo;
    }
    if (k == static_cast<std::size_t>(-1)) return out;
  }
}

// 1. dim St_q = q^N
Outcome steinberg_dimension() {
  Outcome out;
  for (auto name : {"A1", "A2", "A3", "B2", "G2"}) {
    const auto rs = rs_of(name);
    for (long q : {2, 3, 4, 5, 8, 9}) {
      mpz_class expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), q, rs.num_positive());
      if (weyl_dimension(rs, rs.rho().scaled(q - 1)) != expected)
        out.fail(std::string(name) + " q=" + std::to_string(q));
    }
  }
  return out;
}

// Weyl numerator sum_w sign(w) e^{w(mu + rho)}, summed over the whole group;
// it vanishes exactly when the Euler characteristic of L_mu does.
Character alternating_numerator(const WeylGroup& group, const Weight& shifted) {
  Character out(shifted.rank());
  for (const auto& w : group.elements()) out.add_term(w.apply(shifted), w.sign());
  return out;
}

// 2. H^*(L_{-p^n chi - rho}) = 0 for chi on a simple wall
Outcome orthogonality_battery() {
  Outcome out;
  std::size_t cases = 0;
  for (auto name : {"A1", "A2", "B2", "G2", "A3"}) {
    const auto rs = rs_of(name);
    const auto group = enumerate(rs);
    for (std::size_t i = 0; i < rs.rank(); ++i)
      for (const auto& chi : generating_wall_weights(rs, i, 5, WallFamily::unshifted))
        for (std::uint64_t p : {2, 3, 5})
          for (std::uint64_t n : {1, 2}) {
            ++cases;
            const auto report = orthogonality_check(rs, chi, PrimePower(p, n), i);
            const bool numerator_vanishes = alternating_numerator(group, report.mu + rs.rho()).is_zero();
            if (!report.acyclic_predicate || !report.euler_is_zero || !numerator_vanishes)
              out.fail(std::string(name) + " chi=" + chi.to_string() + " p=" + std::to_string(p) +
                       " n=" + std::to_string(n));
          }
  }
  if (out.passed) out.detail = std::to_string(cases) + " cases";
  return out;
}

// 3. Demazure identities
Outcome demazure_identities() {
  Outcome out;
  for (auto name : {"A1", "A2", "B2", "G2"}) {
    const auto rs = rs_of(name);
    const auto group = enumerate(rs);
    const Word w0 = longest_element(rs).word;
    const auto words = reduced_words(rs, w0);
    for (const auto& lambda : box(rs.rank(), -3, 3)) {
      const Character e = Character::monomial(lambda);
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        const Character once = demazure_operator(rs, i, e);
        if (demazure_operator(rs, i, once) != once) out.fail(std::string(name) + " idempotence " + lambda.to_string());
        for (std::size_t j = i + 1; j < rs.rank(); ++j) {
          Word left, right;
          for (std::size_t t = 0; t < braid_order(rs, i, j); ++t) {
            left.push_back(t % 2 ? j : i);
            right.push_back(t % 2 ? i : j);
          }
          if (demazure_word(rs, left, e) != demazure_word(rs, right, e))
            out.fail(std::string(name) + " braid " + lambda.to_string());
        }
      }
      const Character canonical = demazure_word(rs, w0, e);
      for (const auto& word : words)
        if (demazure_word(rs, word, e) != canonical) out.fail(std::string(name) + " word independence");
    }
    for (const auto& lambda : box(rs.rank(), 0, 3))
      if (weyl_character(rs, lambda) != alternating_sum_character(rs, group, lambda))
        out.fail(std::string(name) + " D_w0 vs alternating sum at " + lambda.to_string());
  }
  return out;
}

// 4. Kempf character identity
Outcome kempf_identity() {
  Outcome out;
  for (auto name : {"A1", "A2", "B2"}) {
    const auto rs = rs_of(name);
    for (std::int64_t q : {2, 3, 4})
      for (const auto& lambda : box(rs.rank(), 0, 2))
        if (!kempf_identity_check(rs, lambda, q))
          out.fail(std::string(name) + " q=" + std::to_string(q) + " lambda=" + lambda.to_string());
  }
  return out;
}

// 5. GRR shadow of the Steinberg pushforward
Outcome grr_verification() {
  Outcome out;
  struct Case {
    const char* name;
    std::uint64_t p, n;
  };
  std::vector<Case> grid;
  for (auto name : {"A1", "A2", "B2"})
    for (std::uint64_t p : {2, 3}) grid.push_back({name, p, 1});
  grid.push_back({"A1", 2, 2});
  grid.push_back({"A1", 3, 2});
  for (const auto& c : grid) {
    const SchubertCalculus calc{rs_of(c.name)};
    const auto report = steinberg_grr_report(calc, PrimePower(c.p, c.n));
    if (!report.trivial_bundle_identity)
      out.fail(std::string(c.name) + " trivial-bundle identity p=" + std::to_string(c.p));
    if (!report.eigenvector_identity) out.fail(std::string(c.name) + " eigenvector identity p=" + std::to_string(c.p));
  }
  return out;
}

// 6. exact rank-one verification on P^1
Outcome p1_verification() {
  Outcome out;
  for (std::uint64_t p : {2, 3, 5})
    for (std::uint64_t n : {1, 2, 3}) {
      const PrimePower pp(p, n);
      for (std::int64_t d = -20; d <= 20; ++d)
        if (split_frobenius_pushforward(d, pp) != closed_formula(d, pp.q_small()))
          out.fail("p=" + std::to_string(p) + " n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
  for (std::uint64_t p : {2, 3, 5, 7})
    for (std::uint64_t n : {1, 2})
      if (!verify_steinberg_p1(PrimePower(p, n))) out.fail("Steinberg p=" + std::to_string(p));
  return out;
}

// 7. HRR ties the Schubert calculus to the Weyl dimension formula
Outcome hrr_check() {
  Outcome out;
  for (auto name : {"A1", "A2", "B2", "G2"}) {
    const auto rs = rs_of(name);
    const SchubertCalculus calc(rs);
    for (const auto& lambda : box(rs.rank(), 0, 3))
      if (calc.hirzebruch_riemann_roch(lambda) != mpq_class(weyl_dimension(rs, lambda)))
        out.fail(std::string(name) + " " + lambda.to_string());
  }
  return out;
}

// 8. Bott on P^1 against Cech cohomology
Outcome bott_sanity() {
  Outcome out;
  const auto a1 = rs_of("A1");
  for (std::int64_t d = -10; d <= 10; ++d) {
    const auto cech = oracle::cech_p1(d);
    const auto bott = bott_cohomology(a1, Weight{d});
    std::int64_t h0 = 0, h1 = 0;
    if (!bott.is_zero()) (*bott.degree == 0 ? h0 : h1) = bott.dimension->get_si();
    const std::int64_t expect_h0 = d >= 0 ? d + 1 : 0;
    const std::int64_t expect_h1 = d <= -2 ? -d - 1 : 0;
    if (h0 != cech.h0 || h1 != cech.h1 || h0 != expect_h0 || h1 != expect_h1) out.fail("d=" + std::to_string(d));
  }
  return out;
}

// 9. CLI golden run
std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& command) {
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome cli_golden_run() {
  Outcome out;
  const std::string cli = STLAB_CLI_PATH;
  const std::string tmp = std::filesystem::temp_directory_path().string() + "/stlab_acceptance_" + std::to_string(::getpid());
  const std::string env = "env -u STEINBERG_LAB_CONFIG ";
  const int first = run(env + cli + " verify-all --structured > " + tmp + ".1.json 2> /dev/null");
  const int second = run(env + cli + " verify-all --structured > " + tmp + ".2.json 2> /dev/null");
  if (first != 0 || second != 0) out.fail("default verify-all exit codes " + std::to_string(first) + ", " + std::to_string(second));
  const std::string a = slurp(tmp + ".1.json"), b = slurp(tmp + ".2.json");
  if (a.empty() || a != b) out.fail("structured output differs between runs");
  const int tampered =
      run(env + cli + " verify-all --structured --config " + STLAB_FIXTURE_DIR + "/tampered.cfg > /dev/null 2>&1");
  if (tampered != 1) out.fail("tampered fixture exit code " + std::to_string(tampered));
  std::remove((tmp + ".1.json").c_str());
  std::remove((tmp + ".2.json").c_str());
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria{
      {1, "Steinberg dimension q^N", 1.0, steinberg_dimension},
      {2, "orthogonality battery", 60.0, orthogonality_battery},
      {3, "Demazure operator identities", 30.0, demazure_identities},
      {4, "Kempf character identity", 30.0, kempf_identity},
      {5, "GRR verification of the Steinberg pushforward", 20.0, grr_verification},
      {6, "rank-one exact verification on P^1", 5.0, p1_verification},
      {7, "cross-module HRR check", 20.0, hrr_check},
      {8, "Bott sanity against Cech cohomology", 1.0, bott_sanity},
      {9, "CLI golden run", 600.0, cli_golden_run},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = c.check();
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > c.budget_seconds) outcome.fail("over the " + std::to_string(c.budget_seconds) + " s budget");
    if (!outcome.passed) ++failures;
    std::printf("[%s] %d. %s (%.3f s)%s%s\n", outcome.passed ? "PASS" : "FAIL", c.id, c.name, elapsed,
                outcome.detail.empty() ? "" : ": ", outcome.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
