#include "stlab/charring.hpp"

#include "stlab/errors.hpp"

namespace stlab {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

PrimePower::PrimePower(std::uint64_t p, std::uint64_t n) : p_(p), n_(n) {
  if (!is_prime(p)) throw ValidationError("p = " + std::to_string(p) + " is not prime");
  if (n < 1) throw ValidationError("n must be a positive integer");
  mpz_ui_pow_ui(q_.get_mpz_t(), p, n);
}

std::int64_t PrimePower::q_small() const {
  if (!q_.fits_slong_p()) throw ResourceError("q = " + q_.get_str() + " is too large to scale weights");
  return q_.get_si();
}

Character reflect(const RootSystem& rs, std::size_t i, const Character& f) {
  rs.check_index(i);
  return f.map_weights([&](const Weight& w) { return simple_reflection_apply(rs, i, w); });
}

Character demazure_operator(const RootSystem& rs, std::size_t i, const Character& f) {
  rs.check_index(i);
  const Weight& alpha = rs.simple_roots()[i];
  Character out(rs.rank());
  for (const auto& [lambda, coeff] : f.terms()) {
    const std::int64_t m = lambda[i];
    if (m >= 0) {
      Weight w = lambda;
      for (std::int64_t k = 0; k <= m; ++k, w -= alpha) out.add_term(w, coeff);
    } else if (m <= -2) {
      Weight w = lambda;
      for (std::int64_t k = 1; k <= -m - 1; ++k) {
        w += alpha;
        out.add_term(w, -coeff);
      }
    }
  }
  return out;
}

Character demazure_operator_by_division(const RootSystem& rs, std::size_t i, const Character& f) {
  rs.check_index(i);
  const Weight neg_alpha = -rs.simple_roots()[i];
  Character num = f - reflect(rs, i, f).shifted(neg_alpha);
  Character den = Character::constant(rs.rank()) - Character::monomial(neg_alpha);
  return exact_divide(num, den);
}

Character demazure_word(const RootSystem& rs, const Word& word, const Character& f) {
  Character out = f;
  for (auto i : word) out = demazure_operator(rs, i, out);
  return out;
}

Character weyl_character(const RootSystem& rs, const Weight& lambda) {
  rs.check_weight(lambda);
  if (!lambda.is_dominant())
    throw PreconditionError("weyl_character: " + lambda.to_string() + " is not dominant");
  return demazure_word(rs, longest_element(rs).word, Character::monomial(lambda));
}

Character alternating_sum_character(const RootSystem& rs, const WeylGroup& group, const Weight& lambda) {
  rs.check_weight(lambda);
  const Weight rho = rs.rho();
  const Weight shifted = lambda + rho;
  Character num(rs.rank()), den(rs.rank());
  for (const auto& w : group.elements()) {
    num.add_term(w.apply(shifted), w.sign());
    den.add_term(w.apply(rho), w.sign());
  }
  return exact_divide(num, den);
}

Character euler_character(const RootSystem& rs, const Weight& lambda) {
  if (!is_regular_after_rho_shift(rs, lambda)) return Character(rs.rank());
  auto reduction = to_dominant(rs, lambda);
  Character ch = weyl_character(rs, reduction.dominant);
  return reduction.element.sign() > 0 ? ch : -ch;
}

mpz_class weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  rs.check_weight(lambda);
  if (!lambda.is_dominant())
    throw PreconditionError("weyl_dimension: " + lambda.to_string() + " is not dominant");
  const Weight shifted = lambda + rs.rho();
  mpq_class product = 1;
  for (const auto& alpha : rs.positive_roots())
    product *= mpq_class(mpz_class(pairing(shifted, alpha.coroot)), mpz_class(pairing(rs.rho(), alpha.coroot)));
  product.canonicalize();
  if (product.get_den() != 1) throw InternalError("Weyl dimension product is not an integer");
  return product.get_num();
}

Character frobenius_twist(const Character& f, std::int64_t q) {
  if (q < 1) throw ValidationError("frobenius_twist requires q >= 1");
  return f.map_weights([q](const Weight& w) { return w.scaled(q); });
}

Character steinberg_character(const RootSystem& rs, const PrimePower& pp) {
  return weyl_character(rs, rs.rho().scaled(pp.q_small() - 1));
}

bool kempf_identity_check(const RootSystem& rs, const Weight& lambda, std::int64_t q) {
  rs.check_weight(lambda);
  if (!lambda.is_dominant())
    throw PreconditionError("kempf_identity_check: " + lambda.to_string() + " is not dominant");
  if (q < 1) throw ValidationError("kempf_identity_check requires q >= 1");
  const Weight steinberg = rs.rho().scaled(q - 1);
  Character lhs = weyl_character(rs, lambda.scaled(q) + steinberg);
  Character rhs = frobenius_twist(weyl_character(rs, lambda), q) * weyl_character(rs, steinberg);
  return lhs == rhs;
}

bool kempf_identity_check(const RootSystem& rs, const Weight& lambda, const PrimePower& pp) {
  return kempf_identity_check(rs, lambda, pp.q_small());
}

}  // namespace stlab
