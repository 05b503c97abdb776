#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stlab/weight.hpp"

namespace stlab {

/// Family letter and rank of a simple root system.
///
/// Admissible ranks: A 1-8, B/C 2-6, D 4-6, F 4, G 2. Simple roots are
/// numbered as in Bourbaki (B_r: alpha_r short, C_r: alpha_r long,
/// G_2: alpha_1 short, F_4: alpha_1, alpha_2 long).
struct RootSystemSpec {
  char family = 'A';
  std::size_t rank = 1;

  /// Throws ValidationError naming the violated constraint.
  void validate() const;
  /// "A2", "G2", ...
  std::string name() const;
  /// Accepts "A2", "b3", ...
  static RootSystemSpec parse(const std::string& text);

  bool operator==(const RootSystemSpec&) const = default;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// A coroot expanded in the basis of simple coroots.
struct Coroot {
  std::vector<std::int64_t> expansion;
};

struct Root {
  std::vector<std::int64_t> simple_coords;  // in the basis of simple roots
  Weight weight;                            // in the basis of fundamental weights
  Coroot coroot;
  std::int64_t height() const;
};

/// Immutable Cartan data.
///
/// Convention: cartan[i][j] = <alpha_j, alpha_i^vee>. Column j of the
/// Cartan matrix is therefore alpha_j written in fundamental weights.
class RootSystem {
 public:
  explicit RootSystem(RootSystemSpec spec);

  const RootSystemSpec& spec() const { return spec_; }
  std::size_t rank() const { return spec_.rank; }
  const IntMatrix& cartan() const { return cartan_; }
  const Weight& simple_root(std::size_t i) const;
  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  /// Sorted by height, ties broken lexicographically on simple-root coords.
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  std::size_t num_positive() const { return positive_roots_.size(); }
  Weight rho() const { return Weight::constant(rank(), 1); }
  Weight zero() const { return Weight(rank()); }
  Weight fundamental_weight(std::size_t i) const;

  /// Classical Weyl group order for this type.
  std::uint64_t weyl_group_order() const;

  void check_index(std::size_t i) const;
  void check_weight(const Weight& w) const;

 private:
  RootSystemSpec spec_;
  IntMatrix cartan_;
  std::vector<Weight> simple_roots_;
  std::vector<Root> positive_roots_;
};

RootSystem build_root_system(const RootSystemSpec& spec);

/// Cartan matrix of a validated spec.
IntMatrix cartan_matrix(const RootSystemSpec& spec);

/// Sum over the coroot expansion of expansion[i] * coords[i].
std::int64_t pairing(const Weight& lambda, const Coroot& coroot);

bool is_dominant(const Weight& lambda);

/// True iff <lambda + rho, alpha^vee> != 0 for every positive coroot.
bool is_regular_after_rho_shift(const RootSystem& rs, const Weight& lambda);

}  // namespace stlab
