#pragma once

// Brute-force oracles used only by tests. None of these call into the code
// path they are used to check.

#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "stlab/rootsys.hpp"

namespace oracle {

using Vec = std::vector<std::int64_t>;

// s_i on fundamental-weight coordinates, read straight off the Cartan matrix.
inline Vec reflect(const stlab::IntMatrix& cartan, std::size_t i, Vec v) {
  const auto m = v[i];
  for (std::size_t k = 0; k < v.size(); ++k) v[k] -= m * cartan[k][i];
  return v;
}

// W-orbit of v with the BFS distance (word length) of each point.
inline std::map<Vec, std::size_t> orbit(const stlab::IntMatrix& cartan, const Vec& v) {
  std::map<Vec, std::size_t> dist{{v, 0}};
  std::deque<Vec> queue{v};
  while (!queue.empty()) {
    Vec cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < cur.size(); ++i) {
      Vec next = reflect(cartan, i, cur);
      if (dist.emplace(next, dist[cur] + 1).second) queue.push_back(next);
    }
  }
  return dist;
}

// |W| as the orbit size of the regular weight rho; longest length as the
// largest orbit distance.
inline std::pair<std::size_t, std::size_t> group_order_and_longest(const stlab::IntMatrix& cartan) {
  auto o = orbit(cartan, Vec(cartan.size(), 1));
  std::size_t longest = 0;
  for (auto& [v, d] : o) longest = std::max(longest, d);
  return {o.size(), longest};
}

// Number of positive roots as half of the union of orbits of simple roots.
inline std::size_t positive_root_count(const stlab::IntMatrix& cartan) {
  std::set<Vec> roots;
  for (std::size_t j = 0; j < cartan.size(); ++j) {
    Vec alpha(cartan.size());
    for (std::size_t i = 0; i < cartan.size(); ++i) alpha[i] = cartan[i][j];
    for (auto& [v, d] : orbit(cartan, alpha)) roots.insert(v);
  }
  return roots.size() / 2;
}

// Cech cohomology of O(d) on P^1 from the cover {x != 0}, {y != 0}:
// H^0 = monomials x^a y^b with a, b >= 0, H^1 = monomials with a, b <= -1,
// both of total degree d.
struct CechP1 {
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
};

inline CechP1 cech_p1(std::int64_t d) {
  CechP1 out;
  const std::int64_t bound = (d < 0 ? -d : d) + 2;
  for (std::int64_t a = -bound; a <= bound; ++a) {
    const std::int64_t b = d - a;
    if (a >= 0 && b >= 0) ++out.h0;
    if (a <= -1 && b <= -1) ++out.h1;
  }
  return out;
}

// floor((d - i) / q) for i in [0, q), computed by repeated subtraction.
inline std::vector<std::int64_t> p1_floor_oracle(std::int64_t d, std::int64_t q) {
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i < q; ++i) {
    std::int64_t x = d - i, k = 0;
    while (x < 0) {
      x += q;
      --k;
    }
    while (x >= q) {
      x -= q;
      ++k;
    }
    out.push_back(k);
  }
  return out;
}

}  // namespace oracle
