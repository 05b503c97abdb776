#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>

#include <gmpxx.h>

#include "stlab/weight.hpp"

namespace stlab {

constexpr std::size_t kCharacterTermGuard = 10'000'000;

/// Sparse integer combination of formal exponentials e^lambda.
///
/// Zero coefficients are never stored, so two characters are equal iff their
/// term maps are equal. Terms are kept in lexicographic order of weights.
class Character {
 public:
  using TermMap = std::map<Weight, mpz_class>;

  Character() = default;
  explicit Character(std::size_t rank) : rank_(rank) {}

  static Character monomial(const Weight& lambda, const mpz_class& coeff = 1);
  /// The constant character c * e^0.
  static Character constant(std::size_t rank, const mpz_class& coeff = 1);

  std::size_t rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coefficient(const Weight& lambda) const;

  void add_term(const Weight& lambda, const mpz_class& coeff);

  Character& operator+=(const Character& other);
  Character& operator-=(const Character& other);
  Character operator-() const;
  Character scaled(const mpz_class& factor) const;
  /// Multiplication by e^shift.
  Character shifted(const Weight& shift) const;
  /// Apply fn to every exponent (fn must be injective).
  Character map_weights(const std::function<Weight(const Weight&)>& fn) const;

  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  /// Sparse convolution; throws ResourceError once the product exceeds
  /// term_guard terms.
  static Character multiply(const Character& a, const Character& b, std::size_t term_guard = kCharacterTermGuard);
  friend Character operator*(const Character& a, const Character& b) { return multiply(a, b); }

  bool operator==(const Character& other) const { return terms_ == other.terms_; }

  /// Sum of all coefficients (the dimension of a genuine character).
  mpz_class coefficient_sum() const;

  std::string to_string() const;

 private:
  std::size_t rank_ = 0;
  TermMap terms_;
};

/// Exact Laurent division num / den by leading terms in lexicographic order.
/// Throws InternalError when den does not divide num.
Character exact_divide(const Character& num, const Character& den);

}  // namespace stlab
