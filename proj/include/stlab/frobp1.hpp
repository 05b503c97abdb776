#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stlab/charring.hpp"

namespace stlab {

/// F^n_* O(d) on P^1 as a direct sum of line bundles O(deg).
struct P1Splitting {
  std::vector<std::int64_t> degrees;  // sorted descending

  std::size_t rank() const { return degrees.size(); }
  /// Sum over summands of deg + 1 (= chi of the pushforward).
  std::int64_t euler_characteristic() const;
  /// deg -> multiplicity
  std::map<std::int64_t, std::size_t> multiplicities() const;
  std::string to_string() const;

  bool operator==(const P1Splitting&) const = default;
};

constexpr std::int64_t kP1DegreeGuard = 1'000'000;

/// Decomposes the section module of O(d) over the subring of q-th powers:
/// one summand of degree (d - i - j)/q for every basis monomial x^i y^j with
/// 0 <= i, j < q and i + j = d mod q.
P1Splitting split_frobenius_pushforward(std::int64_t d, const PrimePower& pp);
P1Splitting split_frobenius_pushforward(std::int64_t d, std::int64_t q);

/// {floor((d - i) / q) : 0 <= i < q}
P1Splitting closed_formula(std::int64_t d, std::int64_t q);

/// F^n_* O(q-1) is trivial of rank q and F^n_* O(-1) = O(-1)^q.
bool verify_steinberg_p1(const PrimePower& pp);

}  // namespace stlab
