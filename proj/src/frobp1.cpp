#include "stlab/frobp1.hpp"

#include <algorithm>
#include <functional>

#include "stlab/errors.hpp"

namespace stlab {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void check_arguments(std::int64_t d, std::int64_t q) {
  if (d > kP1DegreeGuard || d < -kP1DegreeGuard)
    throw ResourceError("|d| = " + std::to_string(d) + " exceeds the guard " + std::to_string(kP1DegreeGuard));
  if (q < 1) throw ValidationError("q must be a positive integer");
  if (q > 1'000'000) throw ResourceError("q = " + std::to_string(q) + " is too large for the P^1 splitting");
}

}  // namespace

std::int64_t P1Splitting::euler_characteristic() const {
  std::int64_t total = 0;
  for (auto d : degrees) total += d + 1;
  return total;
}

std::map<std::int64_t, std::size_t> P1Splitting::multiplicities() const {
  std::map<std::int64_t, std::size_t> out;
  for (auto d : degrees) ++out[d];
  return out;
}

std::string P1Splitting::to_string() const {
  std::string s = "{";
  bool first = true;
  for (auto it = degrees.begin(); it != degrees.end();) {
    auto next = std::find_if(it, degrees.end(), [&](auto v) { return v != *it; });
    if (!first) s += ", ";
    first = false;
    s += std::to_string(*it) + " x" + std::to_string(next - it);
    it = next;
  }
  return s + "}";
}

P1Splitting split_frobenius_pushforward(std::int64_t d, std::int64_t q) {
  check_arguments(d, q);
  P1Splitting out;
  const std::int64_t residue = ((d % q) + q) % q;
  for (std::int64_t i = 0; i < q; ++i) {
    // i + j = d (mod q) has the single solution j in [0, q)
    const std::int64_t j = ((residue - i) % q + q) % q;
    const std::int64_t numerator = d - i - j;
    if (numerator % q != 0) throw InternalError("residue class does not divide evenly");
    out.degrees.push_back(numerator / q);
  }
  std::sort(out.degrees.begin(), out.degrees.end(), std::greater<>());
  return out;
}

P1Splitting split_frobenius_pushforward(std::int64_t d, const PrimePower& pp) {
  return split_frobenius_pushforward(d, pp.q_small());
}

P1Splitting closed_formula(std::int64_t d, std::int64_t q) {
  check_arguments(d, q);
  P1Splitting out;
  for (std::int64_t i = 0; i < q; ++i) out.degrees.push_back(floor_div(d - i, q));
  std::sort(out.degrees.begin(), out.degrees.end(), std::greater<>());
  return out;
}

bool verify_steinberg_p1(const PrimePower& pp) {
  const std::int64_t q = pp.q_small();
  const P1Splitting trivial{std::vector<std::int64_t>(static_cast<std::size_t>(q), 0)};
  const P1Splitting eigen{std::vector<std::int64_t>(static_cast<std::size_t>(q), -1)};
  return split_frobenius_pushforward(q - 1, pp) == trivial && split_frobenius_pushforward(-1, pp) == eigen;
}

}  // namespace stlab
