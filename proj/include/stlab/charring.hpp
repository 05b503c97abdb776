#pragma once

#include <cstddef>
#include <cstdint>

#include <gmpxx.h>

#include "stlab/character.hpp"
#include "stlab/rootsys.hpp"
#include "stlab/weyl.hpp"

namespace stlab {

/// q = p^n with p prime (checked by trial division).
class PrimePower {
 public:
  PrimePower(std::uint64_t p, std::uint64_t n);

  std::uint64_t p() const { return p_; }
  std::uint64_t n() const { return n_; }
  const mpz_class& q() const { return q_; }
  /// q as a weight-coordinate factor; throws ResourceError if it does not fit.
  std::int64_t q_small() const;

 private:
  std::uint64_t p_;
  std::uint64_t n_;
  mpz_class q_;
};

bool is_prime(std::uint64_t p);

/// s_i acting on every exponent.
Character reflect(const RootSystem& rs, std::size_t i, const Character& f);

/// (f - e^{-alpha_i} s_i f) / (1 - e^{-alpha_i}), term by term via the
/// closed alpha_i-string formula.
Character demazure_operator(const RootSystem& rs, std::size_t i, const Character& f);

/// Same operator computed by literal Laurent long division.
Character demazure_operator_by_division(const RootSystem& rs, std::size_t i, const Character& f);

/// Applies word[0] first.
Character demazure_word(const RootSystem& rs, const Word& word, const Character& f);

/// D_{w0}(e^lambda) along the greedy reduced word of w0. lambda dominant.
Character weyl_character(const RootSystem& rs, const Weight& lambda);

/// sum_w sgn(w) e^{w(lambda+rho)} / sum_w sgn(w) e^{w rho}, by exact division.
Character alternating_sum_character(const RootSystem& rs, const WeylGroup& group, const Weight& lambda);

/// sum_i (-1)^i ch H^i(G/B, L_lambda) in characteristic zero.
Character euler_character(const RootSystem& rs, const Weight& lambda);

/// prod_{alpha>0} <lambda+rho, alpha^vee> / <rho, alpha^vee>. lambda dominant.
mpz_class weyl_dimension(const RootSystem& rs, const Weight& lambda);

/// Scales every exponent by q.
Character frobenius_twist(const Character& f, std::int64_t q);

/// Character of the irreducible module of highest weight (q-1) rho.
Character steinberg_character(const RootSystem& rs, const PrimePower& pp);

/// ch(q lambda + (q-1) rho) == twist_q(ch lambda) * ch((q-1) rho).
bool kempf_identity_check(const RootSystem& rs, const Weight& lambda, const PrimePower& pp);
/// Variant taking an arbitrary q >= 1 (q need not be a prime power).
bool kempf_identity_check(const RootSystem& rs, const Weight& lambda, std::int64_t q);

}  // namespace stlab
