#include "stlab/weyl.hpp"

#include <deque>
#include <set>

#include "stlab/errors.hpp"

namespace stlab {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix out(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        out[i][j] = detail::checked_add(out[i][j], detail::checked_mul(a[i][k], b[k][j]));
    }
  return out;
}

IntMatrix simple_reflection_matrix(const RootSystem& rs, std::size_t i) {
  rs.check_index(i);
  IntMatrix m = identity_matrix(rs.rank());
  // s_i = I - alpha_i e_i^T
  for (std::size_t row = 0; row < rs.rank(); ++row) m[row][i] -= rs.cartan()[row][i];
  return m;
}

IntMatrix word_matrix(const RootSystem& rs, const Word& word) {
  IntMatrix m = identity_matrix(rs.rank());
  for (auto i : word) m = multiply(m, simple_reflection_matrix(rs, i));
  return m;
}

Weight WeylElement::apply(const Weight& lambda) const {
  const std::size_t n = matrix.size();
  Weight out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out[i] = detail::checked_add(out[i], detail::checked_mul(matrix[i][j], lambda[j]));
  return out;
}

Weight simple_reflection_apply(const RootSystem& rs, std::size_t i, const Weight& lambda) {
  rs.check_index(i);
  rs.check_weight(lambda);
  return lambda - rs.simple_roots()[i].scaled(lambda[i]);
}

WeylGroup::WeylGroup(const RootSystem& rs, std::uint64_t size_guard) {
  const std::uint64_t expected = rs.weyl_group_order();
  if (expected > size_guard)
    throw ResourceError("Weyl group of " + rs.spec().name() + " has order " + std::to_string(expected) +
                        ", above the size guard " + std::to_string(size_guard));
  for (std::size_t i = 0; i < rs.rank(); ++i) reflections_.push_back(simple_reflection_matrix(rs, i));

  elements_.push_back(WeylElement{identity_matrix(rs.rank()), {}});
  lookup_.emplace(elements_.back().matrix, 0);
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      IntMatrix next = stlab::multiply(elements_[head].matrix, reflections_[i]);
      if (lookup_.count(next)) continue;
      Word word = elements_[head].word;
      word.push_back(i);
      lookup_.emplace(next, elements_.size());
      elements_.push_back(WeylElement{std::move(next), std::move(word)});
      if (elements_.size() > size_guard)
        throw ResourceError("Weyl enumeration exceeded the size guard " + std::to_string(size_guard));
    }
  }
  if (elements_.size() != expected)
    throw InternalError("Weyl enumeration of " + rs.spec().name() + " found " +
                        std::to_string(elements_.size()) + " elements, expected " + std::to_string(expected));
  for (std::size_t k = 0; k < elements_.size(); ++k)
    if (elements_[k].length() > elements_[longest_].length()) longest_ = k;
}

std::size_t WeylGroup::index_of(const IntMatrix& matrix) const {
  auto it = lookup_.find(matrix);
  if (it == lookup_.end()) throw InternalError("matrix is not an element of the enumerated Weyl group");
  return it->second;
}

std::size_t WeylGroup::multiply(std::size_t u, std::size_t v) const {
  return index_of(stlab::multiply(elements_.at(u).matrix, elements_.at(v).matrix));
}

std::size_t WeylGroup::inverse(std::size_t u) const {
  const auto& word = elements_.at(u).word;
  IntMatrix m = identity_matrix(elements_[u].matrix.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) m = stlab::multiply(m, reflections_[*it]);
  return index_of(m);
}

WeylGroup enumerate(const RootSystem& rs, std::uint64_t size_guard) { return WeylGroup(rs, size_guard); }

WeylElement longest_element(const RootSystem& rs) {
  Weight v = rs.rho();
  Word word;
  while (true) {
    std::size_t i = 0;
    while (i < v.rank() && v[i] <= 0) ++i;
    if (i == v.rank()) break;
    v = simple_reflection_apply(rs, i, v);
    word.push_back(i);
  }
  // The applied sequence i_1..i_k gives w0 = s_{i_k}...s_{i_1}; since w0 is an
  // involution the sequence read forwards is a reduced word for it too.
  return WeylElement{word_matrix(rs, word), word};
}

Weight dot_action(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
  rs.check_weight(lambda);
  return w.apply(lambda + rs.rho()) - rs.rho();
}

DominantReduction to_dominant(const RootSystem& rs, const Weight& lambda) {
  if (!is_regular_after_rho_shift(rs, lambda))
    throw PreconditionError("to_dominant: " + lambda.to_string() +
                            " + rho is singular; its cohomology vanishes, use the acyclicity path");
  Weight v = lambda + rs.rho();
  Word applied;
  while (true) {
    std::size_t i = 0;
    while (i < v.rank() && v[i] >= 0) ++i;
    if (i == v.rank()) break;
    v = simple_reflection_apply(rs, i, v);
    applied.push_back(i);
  }
  Word word(applied.rbegin(), applied.rend());
  WeylElement w{word_matrix(rs, word), std::move(word)};
  return DominantReduction{std::move(w), v - rs.rho(), applied.size()};
}

std::size_t braid_order(const RootSystem& rs, std::size_t i, std::size_t j) {
  rs.check_index(i);
  rs.check_index(j);
  if (i == j) return 1;
  switch (rs.cartan()[i][j] * rs.cartan()[j][i]) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  throw InternalError("unexpected Cartan product");
}

std::vector<Word> reduced_words(const RootSystem& rs, const Word& word, std::size_t limit) {
  std::set<Word> seen{word};
  std::deque<Word> queue{word};
  while (!queue.empty()) {
    Word current = std::move(queue.front());
    queue.pop_front();
    for (std::size_t start = 0; start + 1 < current.size(); ++start) {
      const std::size_t i = current[start], j = current[start + 1];
      if (i == j) continue;
      const std::size_t m = braid_order(rs, i, j);
      if (start + m > current.size()) continue;
      bool alternates = true;
      for (std::size_t t = 0; t < m; ++t)
        if (current[start + t] != (t % 2 == 0 ? i : j)) alternates = false;
      if (!alternates) continue;
      Word next = current;
      for (std::size_t t = 0; t < m; ++t) next[start + t] = (t % 2 == 0 ? j : i);
      if (seen.insert(next).second) {
        if (seen.size() > limit) throw ResourceError("reduced word enumeration exceeded its limit");
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace stlab
