#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "stlab/rootsys.hpp"
#include "stlab/weight.hpp"

namespace stlab {

using Word = std::vector<std::size_t>;  // 0-based simple-reflection indices

/// Element of W acting on fundamental-weight coordinates, with a reduced word.
///
/// matrix = S_{word[0]} * S_{word[1]} * ... so the last letter acts first.
struct WeylElement {
  IntMatrix matrix;
  Word word;

  std::size_t length() const { return word.size(); }
  int sign() const { return word.size() % 2 == 0 ? 1 : -1; }
  Weight apply(const Weight& lambda) const;
};

/// Result of moving lambda + rho into the dominant chamber.
struct DominantReduction {
  WeylElement element;
  Weight dominant;  // element . lambda
  std::size_t steps;
};

constexpr std::uint64_t kDefaultWeylSizeGuard = 50'000;

class WeylGroup {
 public:
  WeylGroup(const RootSystem& rs, std::uint64_t size_guard = kDefaultWeylSizeGuard);

  const std::vector<WeylElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t identity_index() const { return 0; }
  std::size_t longest_index() const { return longest_; }
  const WeylElement& operator[](std::size_t i) const { return elements_[i]; }

  /// Index of the element with this matrix; throws InternalError if absent.
  std::size_t index_of(const IntMatrix& matrix) const;
  /// Index of u*v.
  std::size_t multiply(std::size_t u, std::size_t v) const;
  std::size_t inverse(std::size_t u) const;

 private:
  std::vector<IntMatrix> reflections_;
  std::vector<WeylElement> elements_;
  std::map<IntMatrix, std::size_t> lookup_;
  std::size_t longest_ = 0;
};

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix simple_reflection_matrix(const RootSystem& rs, std::size_t i);
/// Product of simple reflection matrices along word.
IntMatrix word_matrix(const RootSystem& rs, const Word& word);

/// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i.
Weight simple_reflection_apply(const RootSystem& rs, std::size_t i, const Weight& lambda);

/// Breadth-first closure from the identity, lowest index first.
WeylGroup enumerate(const RootSystem& rs, std::uint64_t size_guard = kDefaultWeylSizeGuard);

/// w0 via greedy descent of rho to -rho, without enumerating W.
WeylElement longest_element(const RootSystem& rs);

/// w(lambda + rho) - rho.
Weight dot_action(const RootSystem& rs, const WeylElement& w, const Weight& lambda);

/// Requires lambda + rho regular; throws PreconditionError otherwise.
DominantReduction to_dominant(const RootSystem& rs, const Weight& lambda);

/// Order of s_i s_j (2, 3, 4 or 6).
std::size_t braid_order(const RootSystem& rs, std::size_t i, std::size_t j);

/// Every reduced word of the same element as `word` (which must be reduced),
/// obtained by closing under braid moves. Sorted lexicographically.
std::vector<Word> reduced_words(const RootSystem& rs, const Word& word, std::size_t limit = 100'000);

}  // namespace stlab
