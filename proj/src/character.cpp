#include "stlab/character.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "stlab/errors.hpp"

namespace stlab {

Character Character::monomial(const Weight& lambda, const mpz_class& coeff) {
  Character c(lambda.rank());
  c.add_term(lambda, coeff);
  return c;
}

Character Character::constant(std::size_t rank, const mpz_class& coeff) {
  return monomial(Weight(rank), coeff);
}

mpz_class Character::coefficient(const Weight& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void Character::add_term(const Weight& lambda, const mpz_class& coeff) {
  if (coeff == 0) return;
  if (terms_.empty() && rank_ == 0) rank_ = lambda.rank();
  if (lambda.rank() != rank_) throw ValidationError("character term has wrong rank: " + lambda.to_string());
  auto [it, inserted] = terms_.try_emplace(lambda, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Character& Character::operator+=(const Character& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

Character& Character::operator-=(const Character& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

Character Character::operator-() const { return scaled(-1); }

Character Character::scaled(const mpz_class& factor) const {
  Character out(rank_);
  if (factor == 0) return out;
  for (const auto& [w, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), w, c * factor);
  return out;
}

Character Character::shifted(const Weight& shift) const {
  Character out(rank_);
  for (const auto& [w, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), w + shift, c);
  return out;
}

Character Character::map_weights(const std::function<Weight(const Weight&)>& fn) const {
  Character out(rank_);
  for (const auto& [w, c] : terms_) out.add_term(fn(w), c);
  return out;
}

Character Character::multiply(const Character& a, const Character& b, std::size_t term_guard) {
  Character out(std::max(a.rank_, b.rank_));
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      out.add_term(wa + wb, ca * cb);
      if (out.terms_.size() > term_guard)
        throw ResourceError("character product exceeded " + std::to_string(term_guard) + " terms");
    }
  return out;
}

mpz_class Character::coefficient_sum() const {
  mpz_class total = 0;
  for (const auto& [w, c] : terms_) total += c;
  return total;
}

std::string Character::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    if (it->second != 1) s += it->second.get_str() + "*";
    s += "e" + it->first.to_string();
  }
  return s;
}

Character exact_divide(const Character& num, const Character& den) {
  if (den.is_zero()) throw InternalError("Laurent division by zero");
  if (num.is_zero()) return Character(den.rank());
  const std::size_t r = num.rank();

  // Newton polytopes add under multiplication, so every quotient exponent lies
  // in the box [min(num) - min(den), max(num) - max(den)] coordinate-wise.
  std::vector<std::int64_t> lo(r, std::numeric_limits<std::int64_t>::max());
  std::vector<std::int64_t> hi(r, std::numeric_limits<std::int64_t>::min());
  auto bounds = [r](const Character& c, std::vector<std::int64_t>& mn, std::vector<std::int64_t>& mx) {
    mn.assign(r, std::numeric_limits<std::int64_t>::max());
    mx.assign(r, std::numeric_limits<std::int64_t>::min());
    for (const auto& [w, coeff] : c.terms())
      for (std::size_t i = 0; i < r; ++i) {
        mn[i] = std::min(mn[i], w[i]);
        mx[i] = std::max(mx[i], w[i]);
      }
  };
  std::vector<std::int64_t> nlo, nhi, dlo, dhi;
  bounds(num, nlo, nhi);
  bounds(den, dlo, dhi);
  for (std::size_t i = 0; i < r; ++i) {
    lo[i] = nlo[i] - dlo[i];
    hi[i] = nhi[i] - dhi[i];
  }

  const auto& [den_lead, den_coeff] = *den.terms().rbegin();
  Character remainder = num;
  Character quotient(r);
  while (!remainder.is_zero()) {
    const auto& [lead, coeff] = *remainder.terms().rbegin();
    Weight exponent = lead - den_lead;
    for (std::size_t i = 0; i < r; ++i)
      if (exponent[i] < lo[i] || exponent[i] > hi[i])
        throw InternalError("Laurent division left a remainder");
    if (!mpz_divisible_p(coeff.get_mpz_t(), den_coeff.get_mpz_t()))
      throw InternalError("Laurent division left a remainder (coefficient)");
    mpz_class q = coeff / den_coeff;
    quotient.add_term(exponent, q);
    remainder -= den.shifted(exponent).scaled(q);
  }
  return quotient;
}

}  // namespace stlab
