#include <functional>
#include <random>

#include "doctest.h"
#include "stlab/borelring.hpp"
#include "stlab/errors.hpp"

using namespace stlab;

namespace {

PolyClass random_poly(std::mt19937& rng, std::size_t nvars, unsigned max_degree) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<unsigned> exp(0, max_degree);
  PolyClass f(nvars);
  for (int t = 0; t < 6; ++t) {
    PolyClass::Exponents e(nvars, 0);
    unsigned budget = exp(rng);
    for (unsigned k = 0; k < budget; ++k) ++e[std::uniform_int_distribution<std::size_t>(0, nvars - 1)(rng)];
    f.add_term(e, mpq_class(coeff(rng), 1 + std::abs(coeff(rng))));
  }
  return f;
}

std::vector<PolyClass> monomials_up_to(std::size_t nvars, unsigned degree) {
  std::vector<PolyClass> out;
  std::function<void(std::size_t, PolyClass::Exponents&, unsigned)> rec = [&](std::size_t var,
                                                                              PolyClass::Exponents& e, unsigned left) {
    if (var == nvars) {
      PolyClass m(nvars);
      m.add_term(e, 1);
      out.push_back(m);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[var] = k;
      rec(var + 1, e, left - k);
    }
    e[var] = 0;
  };
  PolyClass::Exponents e(nvars, 0);
  rec(0, e, degree);
  return out;
}

}  // namespace

TEST_CASE("divided difference examples") {
  for (auto spec : {RootSystemSpec{'A', 2}, RootSystemSpec{'B', 2}, RootSystemSpec{'G', 2}}) {
    const auto rs = build_root_system(spec);
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      CHECK(divided_difference(rs, i, PolyClass::constant(rs.rank(), 1)).is_zero());
      CHECK(divided_difference(rs, i, weight_class(rs.simple_root(i))) == PolyClass::constant(rs.rank(), 2));
    }
  }
}

TEST_CASE("Leibniz rule on random quadratics") {
  std::mt19937 rng(7);
  for (auto spec : {RootSystemSpec{'A', 2}, RootSystemSpec{'B', 2}, RootSystemSpec{'G', 2}, RootSystemSpec{'A', 3}}) {
    const auto rs = build_root_system(spec);
    for (int trial = 0; trial < 20; ++trial) {
      const PolyClass f = random_poly(rng, rs.rank(), 2), g = random_poly(rng, rs.rank(), 2);
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        const PolyClass lhs = divided_difference(rs, i, f * g);
        const PolyClass rhs = divided_difference(rs, i, f) * g + reflect(rs, i, f) * divided_difference(rs, i, g);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("del_i del_i = 0") {
  std::mt19937 rng(11);
  for (auto spec : {RootSystemSpec{'A', 1}, RootSystemSpec{'A', 2}, RootSystemSpec{'B', 2}, RootSystemSpec{'G', 2},
                    RootSystemSpec{'A', 3}}) {
    const auto rs = build_root_system(spec);
    for (int trial = 0; trial < 10; ++trial) {
      const PolyClass f = random_poly(rng, rs.rank(), static_cast<unsigned>(rs.num_positive()));
      for (std::size_t i = 0; i < rs.rank(); ++i)
        CHECK(divided_difference(rs, i, divided_difference(rs, i, f)).is_zero());
    }
  }
}

TEST_CASE("braid relations for divided differences") {
  for (auto spec : {RootSystemSpec{'A', 2}, RootSystemSpec{'B', 2}}) {
    const auto rs = build_root_system(spec);
    const auto words = reduced_words(rs, longest_element(rs).word);
    REQUIRE(words.size() == 2);
    for (const auto& m : monomials_up_to(rs.rank(), static_cast<unsigned>(rs.num_positive())))
      CHECK(divided_difference_word(rs, words[0], m) == divided_difference_word(rs, words[1], m));
  }
}

TEST_CASE("Schubert basis") {
  const SchubertCalculus a1{build_root_system({'A', 1})};
  CHECK(a1.schubert(0) == PolyClass::constant(1, 1));
  CHECK(a1.schubert(a1.group().longest_index()) == PolyClass::variable(1, 0));

  const SchubertCalculus a2{build_root_system({'A', 2})};
  REQUIRE(a2.basis().size() == 6);
  std::vector<int> degrees;
  for (const auto& s : a2.basis()) degrees.push_back(s.degree());
  std::sort(degrees.begin(), degrees.end());
  CHECK(degrees == std::vector<int>{0, 1, 1, 2, 2, 3});
  CHECK(a2.schubert(0) == PolyClass::constant(2, 1));
}

TEST_CASE("expansions of Schubert classes are orthonormal") {
  for (auto spec : {RootSystemSpec{'A', 2}, RootSystemSpec{'B', 2}, RootSystemSpec{'G', 2}, RootSystemSpec{'A', 3}}) {
    const SchubertCalculus calc{build_root_system(spec)};
    for (std::size_t w = 0; w < calc.basis().size(); ++w) {
      CHECK(calc.expand(calc.schubert(w)) == SchubertExpansion{{w, 1}});
      CHECK(calc.schubert(w).degree() == static_cast<int>(calc.group()[w].length()));
    }
  }
}

TEST_CASE("descent of the top class along any reduced word of w0") {
  for (auto spec : {RootSystemSpec{'A', 2}, RootSystemSpec{'B', 2}, RootSystemSpec{'G', 2}, RootSystemSpec{'A', 3}}) {
    const auto rs = build_root_system(spec);
    const SchubertCalculus calc(rs);
    const auto& top = calc.schubert(calc.group().longest_index());
    for (const auto& word : reduced_words(rs, longest_element(rs).word))
      CHECK(divided_difference_word(rs, word, top) == PolyClass::constant(rs.rank(), 1));
  }
}

TEST_CASE("expansion edge cases and integration") {
  const SchubertCalculus a1{build_root_system({'A', 1})};
  CHECK(a1.expand(PolyClass(1)).empty());
  PolyClass x_squared(1);
  x_squared.add_term({2}, 1);
  CHECK(a1.expand(x_squared).empty());
  CHECK(a1.integrate(PolyClass::variable(1, 0)) == 1);
  CHECK(a1.integrate(PolyClass::constant(1, 1)) == 0);
  const SchubertCalculus b2{build_root_system({'B', 2})};
  CHECK(b2.integrate(b2.schubert(b2.group().longest_index())) == 1);
  CHECK(b2.integrate(PolyClass::constant(2, 1)) == 0);
}

TEST_CASE("Chern characters and Todd classes") {
  const auto a1 = build_root_system({'A', 1});
  CHECK(chern_character(a1, Weight{0}) == PolyClass::constant(1, 1));
  CHECK(todd_class(a1) == PolyClass::constant(1, 1) + PolyClass::variable(1, 0));
  const auto g2 = build_root_system({'G', 2});
  for (const auto& lambda : {Weight{3, -2}, Weight{0, 0}, Weight{-1, -1}})
    CHECK(chern_character(g2, lambda).homogeneous_part(0) == PolyClass::constant(2, 1));
  // the linear part of td is half the sum of the positive roots, i.e. rho
  for (auto spec : {RootSystemSpec{'B', 2}, RootSystemSpec{'G', 2}, RootSystemSpec{'A', 3}}) {
    const auto rs = build_root_system(spec);
    const PolyClass td = todd_class(rs);
    CHECK(td.constant_term() == 1);
    CHECK(td.homogeneous_part(1) == weight_class(rs.rho()));
    CHECK(td.degree() <= static_cast<int>(rs.num_positive()));
  }
}

TEST_CASE("Frobenius pushforward on rational cohomology") {
  const auto a1 = build_root_system({'A', 1});
  const PolyClass minus_rho = chern_character(a1, Weight{-1});
  CHECK(minus_rho == PolyClass::constant(1, 1) - PolyClass::variable(1, 0));
  CHECK(frobenius_pushforward_ch(a1, minus_rho, 1) == minus_rho);
  CHECK(frobenius_pushforward_ch(a1, minus_rho, 2) ==
        PolyClass::constant(1, 2) - PolyClass::variable(1, 0).scaled(2));
  for (auto spec : {RootSystemSpec{'A', 2}, RootSystemSpec{'B', 2}, RootSystemSpec{'G', 2}}) {
    const auto rs = build_root_system(spec);
    for (long q : {2, 3, 7}) {
      mpz_class expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), q, rs.num_positive());
      CHECK(frobenius_pushforward_ch(rs, PolyClass::constant(rs.rank(), 1), q).constant_term() == expected);
    }
  }
}

TEST_CASE("Hirzebruch-Riemann-Roch matches the Weyl dimension") {
  for (auto spec : {RootSystemSpec{'A', 1}, RootSystemSpec{'A', 2}, RootSystemSpec{'B', 2}, RootSystemSpec{'G', 2}}) {
    CAPTURE(spec.name());
    const auto rs = build_root_system(spec);
    const SchubertCalculus calc(rs);
    for (std::int64_t a = 0; a <= 3; ++a)
      for (std::int64_t b = 0; b <= (rs.rank() > 1 ? 3 : 0); ++b) {
        Weight lambda = rs.rank() > 1 ? Weight{a, b} : Weight{a};
        CHECK(calc.hirzebruch_riemann_roch(lambda) == mpq_class(weyl_dimension(rs, lambda)));
      }
    // Euler characteristic of L_{-rho} vanishes
    CHECK(calc.hirzebruch_riemann_roch(-rs.rho()) == 0);
  }
}

TEST_CASE("Steinberg GRR verification") {
  CHECK(verify_steinberg_grr(build_root_system({'A', 1}), PrimePower(2, 1)));
  CHECK(verify_steinberg_grr(build_root_system({'A', 2}), PrimePower(2, 1)));
  CHECK(verify_steinberg_grr(build_root_system({'B', 2}), PrimePower(3, 1)));
  // a wrong q^N factor is detected
  const SchubertCalculus a2{build_root_system({'A', 2})};
  const auto pushed = a2.frobenius_pushforward_ch(a2.chern_character(Weight{1, 1}), 2);
  CHECK(a2.equal_in_cohomology(pushed, PolyClass::constant(2, 8)));
  CHECK_FALSE(a2.equal_in_cohomology(pushed, PolyClass::constant(2, 9)));
}
