#include "stlab/borelring.hpp"

#include <algorithm>
#include <numeric>

#include "stlab/errors.hpp"

namespace stlab {

namespace {

unsigned total_degree(const PolyClass::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

}  // namespace

PolyClass PolyClass::constant(std::size_t nvars, const mpq_class& c) {
  PolyClass p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

PolyClass PolyClass::variable(std::size_t nvars, std::size_t i) {
  PolyClass p(nvars);
  Exponents e(nvars, 0);
  e.at(i) = 1;
  p.add_term(e, 1);
  return p;
}

PolyClass PolyClass::linear(const Weight& coeffs) {
  PolyClass p(coeffs.rank());
  for (std::size_t i = 0; i < coeffs.rank(); ++i) {
    Exponents e(coeffs.rank(), 0);
    e[i] = 1;
    p.add_term(e, mpq_class(mpz_class(static_cast<long>(coeffs[i]))));
  }
  return p;
}

int PolyClass::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total_degree(e)));
  return d;
}

mpq_class PolyClass::constant_term() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? mpq_class(0) : it->second;
}

PolyClass PolyClass::homogeneous_part(unsigned d) const {
  PolyClass out(nvars_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == d) out.terms_.emplace(e, c);
  return out;
}

PolyClass PolyClass::truncated(unsigned max_degree) const {
  PolyClass out(nvars_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) <= max_degree) out.terms_.emplace(e, c);
  return out;
}

void PolyClass::add_term(const Exponents& e, const mpq_class& c) {
  if (c == 0) return;
  if (e.size() != nvars_) throw ValidationError("polynomial term has the wrong number of variables");
  mpq_class value = c;
  value.canonicalize();  // callers may hand in e.g. 2/4; equality needs lowest terms
  auto [it, inserted] = terms_.try_emplace(e, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

PolyClass& PolyClass::operator+=(const PolyClass& other) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = other.nvars_;
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

PolyClass& PolyClass::operator-=(const PolyClass& other) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = other.nvars_;
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

PolyClass PolyClass::scaled(const mpq_class& c) const {
  PolyClass out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, v * c);
  return out;
}

PolyClass PolyClass::multiply_truncated(const PolyClass& a, const PolyClass& b, unsigned max_degree) {
  PolyClass out(std::max(a.nvars_, b.nvars_));
  Exponents e(out.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    const unsigned da = total_degree(ea);
    if (da > max_degree) continue;
    for (const auto& [eb, cb] : b.terms_) {
      if (da + total_degree(eb) > max_degree) continue;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

PolyClass operator*(const PolyClass& a, const PolyClass& b) {
  return PolyClass::multiply_truncated(a, b, ~0u);
}

PolyClass PolyClass::substitute(std::size_t var, const PolyClass& replacement) const {
  if (var >= nvars_) throw ValidationError("substitute: variable out of range");
  std::uint32_t max_power = 0;
  for (const auto& [e, c] : terms_) max_power = std::max(max_power, e[var]);
  std::vector<PolyClass> powers{constant(nvars_, 1)};
  for (std::uint32_t k = 1; k <= max_power; ++k) powers.push_back(powers.back() * replacement);

  PolyClass out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[var] = 0;
    for (const auto& [pe, pc] : powers[e[var]].terms_) {
      Exponents combined = rest;
      for (std::size_t k = 0; k < nvars_; ++k) combined[k] += pe[k];
      out.add_term(combined, c * pc);
    }
  }
  return out;
}

std::string PolyClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += it->second.get_str();
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (it->first[k] == 0) continue;
      s += "*x" + std::to_string(k + 1);
      if (it->first[k] > 1) s += "^" + std::to_string(it->first[k]);
    }
  }
  return s;
}

PolyClass weight_class(const Weight& lambda) { return PolyClass::linear(lambda); }

PolyClass reflect(const RootSystem& rs, std::size_t i, const PolyClass& f) {
  rs.check_index(i);
  // s_i omega_i = omega_i - alpha_i, other fundamental weights fixed
  Weight image = rs.fundamental_weight(i) - rs.simple_roots()[i];
  return f.substitute(i, PolyClass::linear(image));
}

PolyClass divided_difference(const RootSystem& rs, std::size_t i, const PolyClass& f) {
  rs.check_index(i);
  const std::size_t r = rs.rank();
  PolyClass remainder = f - reflect(rs, i, f);
  const PolyClass divisor = weight_class(rs.simple_roots()[i]);
  const mpq_class lead = rs.cartan()[i][i];  // coefficient of x_i in x_{alpha_i}

  PolyClass quotient(r);
  while (!remainder.is_zero()) {
    std::uint32_t top = 0;
    for (const auto& [e, c] : remainder.terms()) top = std::max(top, e[i]);
    if (top == 0) throw InternalError("divided difference left a remainder");
    PolyClass step(r);
    for (const auto& [e, c] : remainder.terms()) {
      if (e[i] != top) continue;
      auto lowered = e;
      --lowered[i];
      step.add_term(lowered, c / lead);
    }
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient;
}

PolyClass divided_difference_word(const RootSystem& rs, const Word& word, const PolyClass& f) {
  PolyClass out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = divided_difference(rs, *it, out);
  return out;
}

namespace {

// Coefficients of x / (1 - e^{-x}) up to x^n.
std::vector<mpq_class> todd_series(unsigned n) {
  std::vector<mpq_class> a(n + 1);  // (1 - e^{-x}) / x
  mpz_class factorial = 1;
  for (unsigned k = 0; k <= n; ++k) {
    factorial *= k + 1;
    a[k] = mpq_class(k % 2 == 0 ? 1 : -1, 1) / mpq_class(factorial);
  }
  std::vector<mpq_class> b(n + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    mpq_class acc = 0;
    for (unsigned k = 1; k <= m; ++k) acc += a[k] * b[m - k];
    b[m] = -acc;
  }
  return b;
}

PolyClass power_series(const PolyClass& x, const std::vector<mpq_class>& coeffs, unsigned max_degree) {
  PolyClass out(x.nvars());
  PolyClass power = PolyClass::constant(x.nvars(), 1);
  for (unsigned k = 0; k < coeffs.size() && k <= max_degree; ++k) {
    out += power.scaled(coeffs[k]);
    power = PolyClass::multiply_truncated(power, x, max_degree);
  }
  return out;
}

}  // namespace

PolyClass chern_character(const RootSystem& rs, const Weight& lambda) {
  rs.check_weight(lambda);
  const unsigned n = static_cast<unsigned>(rs.num_positive());
  std::vector<mpq_class> coeffs(n + 1);
  mpz_class factorial = 1;
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) factorial *= k;
    coeffs[k] = mpq_class(1) / mpq_class(factorial);
  }
  return power_series(weight_class(lambda), coeffs, n);
}

PolyClass todd_class(const RootSystem& rs) {
  const unsigned n = static_cast<unsigned>(rs.num_positive());
  const auto series = todd_series(n);
  PolyClass td = PolyClass::constant(rs.rank(), 1);
  for (const auto& alpha : rs.positive_roots())
    td = PolyClass::multiply_truncated(td, power_series(weight_class(alpha.weight), series, n), n);
  return td;
}

namespace {

PolyClass truncated_inverse(const PolyClass& unit, unsigned n) {
  if (unit.constant_term() != 1) throw InternalError("series inverse needs constant term 1");
  const PolyClass u = unit - PolyClass::constant(unit.nvars(), 1);
  PolyClass out = PolyClass::constant(unit.nvars(), 1);
  PolyClass power = out;
  for (unsigned k = 1; k <= n; ++k) {
    power = PolyClass::multiply_truncated(power, u, n).scaled(-1);
    out += power;
  }
  return out;
}

PolyClass pushforward(const PolyClass& c, const mpz_class& q, const PolyClass& td, const PolyClass& td_inv,
                      unsigned n) {
  if (q < 1) throw ValidationError("Frobenius pushforward requires q >= 1");
  PolyClass product = PolyClass::multiply_truncated(c, td, n);
  PolyClass scaled(c.nvars());
  for (unsigned d = 0; d <= n; ++d) {
    mpz_class factor;
    mpz_pow_ui(factor.get_mpz_t(), q.get_mpz_t(), n - d);
    scaled += product.homogeneous_part(d).scaled(mpq_class(factor));
  }
  return PolyClass::multiply_truncated(td_inv, scaled, n);
}

}  // namespace

PolyClass frobenius_pushforward_ch(const RootSystem& rs, const PolyClass& c, const mpz_class& q) {
  const unsigned n = static_cast<unsigned>(rs.num_positive());
  const PolyClass td = todd_class(rs);
  return pushforward(c, q, td, truncated_inverse(td, n), n);
}

SchubertCalculus::SchubertCalculus(const RootSystem& rs, std::uint64_t size_guard)
    : rs_(rs), group_(rs, size_guard) {
  const std::size_t r = rs_.rank();
  PolyClass top = PolyClass::constant(r, mpq_class(1, static_cast<unsigned long>(group_.size())));
  for (const auto& alpha : rs_.positive_roots()) top = top * weight_class(alpha.weight);

  const std::size_t w0 = group_.longest_index();
  basis_.reserve(group_.size());
  for (std::size_t w = 0; w < group_.size(); ++w) {
    const std::size_t u = group_.multiply(group_.inverse(w), w0);  // S_w = del_{w^-1 w0} S_{w0}
    basis_.push_back(divided_difference_word(rs_, group_[u].word, top));
  }
  todd_ = stlab::todd_class(rs_);
  todd_inverse_ = truncated_inverse(todd_, top_degree());
}

SchubertExpansion SchubertCalculus::expand(const PolyClass& f) const {
  SchubertExpansion out;
  for (std::size_t w = 0; w < group_.size(); ++w) {
    const auto& word = group_[w].word;
    PolyClass part = f.homogeneous_part(static_cast<unsigned>(word.size()));
    if (part.is_zero()) continue;
    mpq_class c = divided_difference_word(rs_, word, part).constant_term();
    if (c != 0) out.emplace(w, c);
  }
  return out;
}

mpq_class SchubertCalculus::integrate(const PolyClass& f) const {
  const std::size_t w0 = group_.longest_index();
  return divided_difference_word(rs_, group_[w0].word, f.homogeneous_part(top_degree())).constant_term();
}

bool SchubertCalculus::equal_in_cohomology(const PolyClass& a, const PolyClass& b) const {
  return expand(a) == expand(b);
}

PolyClass SchubertCalculus::chern_character(const Weight& lambda) const {
  return stlab::chern_character(rs_, lambda);
}

PolyClass SchubertCalculus::frobenius_pushforward_ch(const PolyClass& c, const mpz_class& q) const {
  return pushforward(c, q, todd_, todd_inverse_, top_degree());
}

mpq_class SchubertCalculus::hirzebruch_riemann_roch(const Weight& lambda) const {
  return integrate(PolyClass::multiply_truncated(chern_character(lambda), todd_, top_degree()));
}

GrrReport steinberg_grr_report(const SchubertCalculus& calc, const PrimePower& pp) {
  const RootSystem& rs = calc.root_system();
  mpz_class q_to_n;
  mpz_pow_ui(q_to_n.get_mpz_t(), pp.q().get_mpz_t(), rs.num_positive());
  const std::size_t r = rs.rank();

  GrrReport report;
  const PolyClass steinberg_line = calc.chern_character(rs.rho().scaled(pp.q_small() - 1));
  report.trivial_bundle_identity = calc.equal_in_cohomology(calc.frobenius_pushforward_ch(steinberg_line, pp.q()),
                                                            PolyClass::constant(r, mpq_class(q_to_n)));
  const PolyClass minus_rho = calc.chern_character(-rs.rho());
  report.eigenvector_identity = calc.equal_in_cohomology(calc.frobenius_pushforward_ch(minus_rho, pp.q()),
                                                         minus_rho.scaled(mpq_class(q_to_n)));
  return report;
}

bool verify_steinberg_grr(const RootSystem& rs, const PrimePower& pp) {
  return steinberg_grr_report(SchubertCalculus(rs), pp).passed();
}

}  // namespace stlab
