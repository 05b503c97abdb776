#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "stlab/charring.hpp"
#include "stlab/rootsys.hpp"
#include "stlab/weyl.hpp"

namespace stlab {

// Everything here is characteristic-zero Bott cohomology, except
// is_acyclic_over_Z, which is the simple-wall vanishing that survives in every
// characteristic. No char-p cohomology is computed off those walls.

enum class CohomologyStatus { singular_zero, concentrated };

/// H^*(G/B, L_chi): either zero, or a single irreducible in degree l(w).
struct CohomologyReport {
  CohomologyStatus status = CohomologyStatus::singular_zero;
  std::optional<std::size_t> degree;
  std::optional<WeylElement> weyl_element;
  std::optional<Weight> highest_weight;
  std::optional<mpz_class> dimension;

  bool is_zero() const { return status == CohomologyStatus::singular_zero; }
};

CohomologyReport bott_cohomology(const RootSystem& rs, const Weight& chi);

/// <chi + rho, alpha_i^vee> = 0 for some *simple* coroot. Strictly weaker than
/// singularity of chi + rho, which ranges over all positive coroots.
bool is_acyclic_over_Z(const RootSystem& rs, const Weight& chi);

/// Graded dimensions of Hom^*(L_chi, L_mu) = H^*(G/B, L_{mu - chi}).
/// Empty when the complex is acyclic.
std::map<std::size_t, mpz_class> hom_complex_dims(const RootSystem& rs, const Weight& chi, const Weight& mu);

enum class WallFamily {
  rho_shifted,  // coordinate i of chi + rho is zero
  unshifted,    // coordinate i of chi is zero
};

/// All weights in the box [-radius, radius]^rank on wall i of the given family,
/// in lexicographic order.
std::vector<Weight> generating_wall_weights(const RootSystem& rs, std::size_t i, std::int64_t radius,
                                            WallFamily family);

struct OrthogonalityReport {
  std::size_t wall_index = 0;
  Weight chi;
  Weight mu;  // -q chi - rho
  bool acyclic_predicate = false;
  bool euler_is_zero = false;
  bool passed = false;
};

/// Checks H^*(G/B, L_{-q chi - rho}) = 0 for chi on a simple wall, both via the
/// acyclicity-over-Z predicate and via the Euler character. Uses the lowest
/// wall index containing chi; throws PreconditionError if there is none.
OrthogonalityReport orthogonality_check(const RootSystem& rs, const Weight& chi, const PrimePower& pp);
/// Same, with the wall fixed by the caller.
OrthogonalityReport orthogonality_check(const RootSystem& rs, const Weight& chi, const PrimePower& pp,
                                        std::size_t wall);

struct KempfReport {
  Weight chi;
  Weight twisted;  // q chi + (q-1) rho
  bool twisted_dominant = false;
  bool identity_holds = false;
  CohomologyReport cohomology;  // of chi
  bool passed = false;
};

/// Character-level walk through Kempf vanishing for dominant chi.
KempfReport kempf_vanishing_demo(const RootSystem& rs, const Weight& chi, const PrimePower& pp);

}  // namespace stlab
