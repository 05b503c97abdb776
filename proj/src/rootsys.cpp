#include "stlab/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "stlab/errors.hpp"

namespace stlab {

void RootSystemSpec::validate() const {
  auto bad = [&](const std::string& why) {
    throw ValidationError("inadmissible root system " + std::string(1, family) +
                          std::to_string(rank) + ": " + why);
  };
  switch (family) {
    case 'A':
      if (rank < 1 || rank > 8) bad("type A requires rank 1-8");
      break;
    case 'B':
    case 'C':
      if (rank < 2 || rank > 6) bad("types B and C require rank 2-6");
      break;
    case 'D':
      if (rank < 4 || rank > 6) bad("type D requires rank 4-6");
      break;
    case 'F':
      if (rank != 4) bad("type F requires rank 4");
      break;
    case 'G':
      if (rank != 2) bad("type G requires rank 2");
      break;
    case 'E':
      bad("type E is not supported");
      break;
    default:
      bad("family must be one of A, B, C, D, F, G");
  }
}

std::string RootSystemSpec::name() const { return std::string(1, family) + std::to_string(rank); }

RootSystemSpec RootSystemSpec::parse(const std::string& text) {
  if (text.size() < 2 || !std::isalpha(static_cast<unsigned char>(text[0])))
    throw ValidationError("malformed root system '" + text + "': expected e.g. A2 or G2");
  RootSystemSpec spec;
  spec.family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  const std::string digits = text.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ValidationError("malformed root system '" + text + "': expected e.g. A2 or G2");
  spec.rank = std::stoul(digits);
  spec.validate();
  return spec;
}

IntMatrix cartan_matrix(const RootSystemSpec& spec) {
  spec.validate();
  const std::size_t r = spec.rank;
  IntMatrix c(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i) c[i][i] = 2;
  auto link = [&](std::size_t i, std::size_t j) { c[i][j] = c[j][i] = -1; };
  switch (spec.family) {
    case 'A':
      for (std::size_t i = 0; i + 1 < r; ++i) link(i, i + 1);
      break;
    case 'B':
      for (std::size_t i = 0; i + 1 < r; ++i) link(i, i + 1);
      // alpha_r short: <alpha_{r-1}, alpha_r^vee> = -2
      c[r - 1][r - 2] = -2;
      break;
    case 'C':
      for (std::size_t i = 0; i + 1 < r; ++i) link(i, i + 1);
      // alpha_r long: <alpha_r, alpha_{r-1}^vee> = -2
      c[r - 2][r - 1] = -2;
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < r; ++i) link(i, i + 1);
      link(r - 3, r - 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c[2][1] = -2;  // <alpha_2, alpha_3^vee>, alpha_2 long and alpha_3 short
      break;
    case 'G':
      c[0][1] = -3;  // <alpha_2, alpha_1^vee>, alpha_1 short
      c[1][0] = -1;
      break;
  }
  return c;
}

std::int64_t Root::height() const {
  std::int64_t h = 0;
  for (auto c : simple_coords) h += c;
  return h;
}

RootSystem::RootSystem(RootSystemSpec spec) : spec_(spec), cartan_(cartan_matrix(spec)) {
  const std::size_t r = spec_.rank;
  for (std::size_t j = 0; j < r; ++j) {
    Weight alpha(r);
    for (std::size_t i = 0; i < r; ++i) alpha[i] = cartan_[i][j];
    simple_roots_.push_back(std::move(alpha));
  }

  // Closure of the simple roots under simple reflections, carrying the coroot
  // along: if beta = w alpha_i then beta^vee = w alpha_i^vee.
  using Vec = std::vector<std::int64_t>;
  std::set<Vec> seen;
  std::deque<std::pair<Vec, Vec>> queue;
  std::vector<std::pair<Vec, Vec>> found;
  for (std::size_t i = 0; i < r; ++i) {
    Vec e(r, 0);
    e[i] = 1;
    seen.insert(e);
    queue.emplace_back(e, e);
  }
  while (!queue.empty()) {
    auto [root, coroot] = queue.front();
    queue.pop_front();
    found.emplace_back(root, coroot);
    for (std::size_t i = 0; i < r; ++i) {
      std::int64_t root_pair = 0;    // <beta, alpha_i^vee>
      std::int64_t coroot_pair = 0;  // <alpha_i, beta^vee>
      for (std::size_t j = 0; j < r; ++j) {
        root_pair += root[j] * cartan_[i][j];
        coroot_pair += coroot[j] * cartan_[j][i];
      }
      Vec next_root = root, next_coroot = coroot;
      next_root[i] -= root_pair;
      next_coroot[i] -= coroot_pair;
      const bool nonneg = std::all_of(next_root.begin(), next_root.end(), [](auto v) { return v >= 0; });
      const bool nonpos = std::all_of(next_root.begin(), next_root.end(), [](auto v) { return v <= 0; });
      if (!nonneg && !nonpos)
        throw InternalError("root closure produced a mixed-sign root in " + spec_.name());
      if (!nonneg) continue;
      if (seen.insert(next_root).second) queue.emplace_back(next_root, next_coroot);
    }
  }

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    std::int64_t ha = 0, hb = 0;
    for (auto v : a.first) ha += v;
    for (auto v : b.first) hb += v;
    if (ha != hb) return ha < hb;
    return a.first < b.first;
  });
  for (auto& [root, coroot] : found) {
    Weight w(r);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < r; ++i) w[i] += root[j] * cartan_[i][j];
    positive_roots_.push_back(Root{root, std::move(w), Coroot{coroot}});
  }
}

const Weight& RootSystem::simple_root(std::size_t i) const {
  check_index(i);
  return simple_roots_[i];
}

Weight RootSystem::fundamental_weight(std::size_t i) const {
  check_index(i);
  Weight w(rank());
  w[i] = 1;
  return w;
}

std::uint64_t RootSystem::weyl_group_order() const {
  auto factorial = [](std::uint64_t n) {
    std::uint64_t f = 1;
    for (std::uint64_t k = 2; k <= n; ++k) f *= k;
    return f;
  };
  const std::uint64_t r = rank();
  switch (spec_.family) {
    case 'A': return factorial(r + 1);
    case 'B':
    case 'C': return (std::uint64_t{1} << r) * factorial(r);
    case 'D': return (std::uint64_t{1} << (r - 1)) * factorial(r);
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

void RootSystem::check_index(std::size_t i) const {
  if (i >= rank())
    throw ValidationError("simple index " + std::to_string(i) + " out of range for " + spec_.name());
}

void RootSystem::check_weight(const Weight& w) const {
  if (w.rank() != rank())
    throw ValidationError("weight " + w.to_string() + " has length " + std::to_string(w.rank()) +
                          ", expected rank " + std::to_string(rank()) + " for " + spec_.name());
}

RootSystem build_root_system(const RootSystemSpec& spec) { return RootSystem(spec); }

std::int64_t pairing(const Weight& lambda, const Coroot& coroot) {
  if (lambda.rank() != coroot.expansion.size())
    throw ValidationError("pairing: weight and coroot dimensions differ");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < lambda.rank(); ++i)
    total = detail::checked_add(total, detail::checked_mul(coroot.expansion[i], lambda[i]));
  return total;
}

bool is_dominant(const Weight& lambda) { return lambda.is_dominant(); }

bool is_regular_after_rho_shift(const RootSystem& rs, const Weight& lambda) {
  rs.check_weight(lambda);
  const Weight shifted = lambda + rs.rho();
  return std::none_of(rs.positive_roots().begin(), rs.positive_roots().end(),
                      [&](const Root& a) { return pairing(shifted, a.coroot) == 0; });
}

}  // namespace stlab
