#include "stlab/cohomology.hpp"

#include "stlab/errors.hpp"

namespace stlab {

CohomologyReport bott_cohomology(const RootSystem& rs, const Weight& chi) {
  CohomologyReport report;
  if (!is_regular_after_rho_shift(rs, chi)) return report;
  auto reduction = to_dominant(rs, chi);
  report.status = CohomologyStatus::concentrated;
  report.degree = reduction.element.length();
  report.dimension = weyl_dimension(rs, reduction.dominant);
  report.highest_weight = std::move(reduction.dominant);
  report.weyl_element = std::move(reduction.element);
  return report;
}

bool is_acyclic_over_Z(const RootSystem& rs, const Weight& chi) {
  rs.check_weight(chi);
  for (std::size_t i = 0; i < chi.rank(); ++i)
    if (detail::checked_add(chi[i], 1) == 0) return true;
  return false;
}

std::map<std::size_t, mpz_class> hom_complex_dims(const RootSystem& rs, const Weight& chi, const Weight& mu) {
  rs.check_weight(chi);
  rs.check_weight(mu);
  auto report = bott_cohomology(rs, mu - chi);
  if (report.is_zero()) return {};
  return {{*report.degree, *report.dimension}};
}

std::vector<Weight> generating_wall_weights(const RootSystem& rs, std::size_t i, std::int64_t radius,
                                            WallFamily family) {
  rs.check_index(i);
  if (radius < 0) throw ValidationError("radius must be non-negative");
  const std::int64_t wall_value = family == WallFamily::rho_shifted ? -1 : 0;
  std::vector<Weight> out;
  if (wall_value < -radius) return out;
  Weight w = Weight::constant(rs.rank(), -radius);
  w[i] = wall_value;
  while (true) {
    out.push_back(w);
    // odometer over the free coordinates, last coordinate fastest
    std::size_t k = rs.rank();
    while (k-- > 0) {
      if (k == i) continue;
      if (w[k] < radius) {
        ++w[k];
        break;
      }
      w[k] = -radius;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

OrthogonalityReport orthogonality_check(const RootSystem& rs, const Weight& chi, const PrimePower& pp,
                                        std::size_t wall) {
  rs.check_weight(chi);
  rs.check_index(wall);
  if (chi[wall] != 0)
    throw PreconditionError("orthogonality_check: " + chi.to_string() + " is not on simple wall " +
                            std::to_string(wall + 1));
  OrthogonalityReport report;
  report.wall_index = wall;
  report.chi = chi;
  report.mu = -chi.scaled(pp.q_small()) - rs.rho();
  report.acyclic_predicate = is_acyclic_over_Z(rs, report.mu);
  report.euler_is_zero = euler_character(rs, report.mu).is_zero();
  report.passed = report.acyclic_predicate && report.euler_is_zero;
  return report;
}

OrthogonalityReport orthogonality_check(const RootSystem& rs, const Weight& chi, const PrimePower& pp) {
  rs.check_weight(chi);
  for (std::size_t i = 0; i < chi.rank(); ++i)
    if (chi[i] == 0) return orthogonality_check(rs, chi, pp, i);
  throw PreconditionError("orthogonality_check: " + chi.to_string() + " lies on no simple wall");
}

KempfReport kempf_vanishing_demo(const RootSystem& rs, const Weight& chi, const PrimePower& pp) {
  rs.check_weight(chi);
  if (!chi.is_dominant())
    throw PreconditionError("kempf_vanishing_demo: " + chi.to_string() + " is not dominant");
  const std::int64_t q = pp.q_small();
  KempfReport report;
  report.chi = chi;
  report.twisted = chi.scaled(q) + rs.rho().scaled(q - 1);
  report.twisted_dominant = report.twisted.is_dominant();
  report.identity_holds = kempf_identity_check(rs, chi, q);
  report.cohomology = bott_cohomology(rs, chi);
  report.passed = report.twisted_dominant && report.identity_holds && !report.cohomology.is_zero() &&
                  report.cohomology.degree == 0u;
  return report;
}

}  // namespace stlab
