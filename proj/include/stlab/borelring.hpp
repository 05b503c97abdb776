#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "stlab/charring.hpp"
#include "stlab/rootsys.hpp"
#include "stlab/weyl.hpp"

namespace stlab {

/// Polynomial over Q in x_1..x_r, x_i the first Chern class of L_{omega_i}.
///
/// Only a representative: two PolyClass values denote the same class in
/// H^*(G/B, Q) iff their Schubert expansions agree.
class PolyClass {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using TermMap = std::map<Exponents, mpq_class>;

  PolyClass() = default;
  explicit PolyClass(std::size_t nvars) : nvars_(nvars) {}

  static PolyClass constant(std::size_t nvars, const mpq_class& c);
  static PolyClass variable(std::size_t nvars, std::size_t i);
  /// sum_i coeffs[i] x_i
  static PolyClass linear(const Weight& coeffs);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree, -1 for the zero polynomial.
  int degree() const;
  mpq_class constant_term() const;
  PolyClass homogeneous_part(unsigned d) const;
  PolyClass truncated(unsigned max_degree) const;

  void add_term(const Exponents& e, const mpq_class& c);

  PolyClass& operator+=(const PolyClass& other);
  PolyClass& operator-=(const PolyClass& other);
  PolyClass scaled(const mpq_class& c) const;
  friend PolyClass operator+(PolyClass a, const PolyClass& b) { return a += b; }
  friend PolyClass operator-(PolyClass a, const PolyClass& b) { return a -= b; }
  friend PolyClass operator*(const PolyClass& a, const PolyClass& b);
  /// Product with every term above max_degree dropped.
  static PolyClass multiply_truncated(const PolyClass& a, const PolyClass& b, unsigned max_degree);

  /// Substitutes x_var -> replacement.
  PolyClass substitute(std::size_t var, const PolyClass& replacement) const;

  bool operator==(const PolyClass& other) const { return terms_ == other.terms_; }
  std::string to_string() const;

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Degree-1 class of the weight lambda: sum_i lambda_i x_i.
PolyClass weight_class(const Weight& lambda);

/// s_i acting on the polynomial ring (x_i -> x_i - x_{alpha_i}).
PolyClass reflect(const RootSystem& rs, std::size_t i, const PolyClass& f);

/// (f - s_i f) / x_{alpha_i}; throws InternalError on a non-exact division.
PolyClass divided_difference(const RootSystem& rs, std::size_t i, const PolyClass& f);

/// del_{word[0]} o ... o del_{word.back()}: the last letter acts first.
PolyClass divided_difference_word(const RootSystem& rs, const Word& word, const PolyClass& f);

/// Coefficients indexed by the element index in the enumerated Weyl group.
using SchubertExpansion = std::map<std::size_t, mpq_class>;

/// Schubert basis and Schubert-coordinate arithmetic for one root system.
/// Built once; immutable afterwards.
class SchubertCalculus {
 public:
  explicit SchubertCalculus(const RootSystem& rs, std::uint64_t size_guard = kDefaultWeylSizeGuard);

  const RootSystem& root_system() const { return rs_; }
  const WeylGroup& group() const { return group_; }
  /// S_w for every element w, in group order.
  const std::vector<PolyClass>& basis() const { return basis_; }
  const PolyClass& schubert(std::size_t w) const { return basis_.at(w); }
  /// Cohomological degree bound N = dim G/B.
  unsigned top_degree() const { return static_cast<unsigned>(rs_.num_positive()); }

  /// Coefficient of S_w is the constant term of del_w f.
  SchubertExpansion expand(const PolyClass& f) const;
  /// Coefficient of S_{w0}.
  mpq_class integrate(const PolyClass& f) const;
  bool equal_in_cohomology(const PolyClass& a, const PolyClass& b) const;

  PolyClass chern_character(const Weight& lambda) const;
  PolyClass todd_class() const { return todd_; }
  PolyClass todd_inverse() const { return todd_inverse_; }

  /// ch(F_* E) = td^{-1} * scale_q(ch(E) * td), scale_q multiplying degree d
  /// by q^{N-d}.
  PolyClass frobenius_pushforward_ch(const PolyClass& c, const mpz_class& q) const;

  /// integrate(ch(L_lambda) * td).
  mpq_class hirzebruch_riemann_roch(const Weight& lambda) const;

 private:
  RootSystem rs_;
  WeylGroup group_;
  std::vector<PolyClass> basis_;
  PolyClass todd_;
  PolyClass todd_inverse_;
};

PolyClass chern_character(const RootSystem& rs, const Weight& lambda);
PolyClass todd_class(const RootSystem& rs);
PolyClass frobenius_pushforward_ch(const RootSystem& rs, const PolyClass& c, const mpz_class& q);

/// Chern-character check of F^n_* L_{(q-1)rho} = St_q (x) O and
/// F^n_* L_{-rho} = St_q (x) L_{-rho}, compared in the Schubert basis.
struct GrrReport {
  bool trivial_bundle_identity = false;
  bool eigenvector_identity = false;
  bool passed() const { return trivial_bundle_identity && eigenvector_identity; }
};

GrrReport steinberg_grr_report(const SchubertCalculus& calc, const PrimePower& pp);
bool verify_steinberg_grr(const RootSystem& rs, const PrimePower& pp);

}  // namespace stlab
