#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stlab {

/// Integral weight in the basis of fundamental weights.
///
/// Coordinate i is the pairing with the i-th simple coroot. Arithmetic is
/// overflow-checked: any coordinate that leaves int64 raises ResourceError
/// instead of wrapping.
class Weight {
 public:
  using value_type = std::int64_t;

  Weight() = default;
  explicit Weight(std::size_t rank) : coords_(rank, 0) {}
  Weight(std::initializer_list<value_type> coords) : coords_(coords) {}
  explicit Weight(std::vector<value_type> coords) : coords_(std::move(coords)) {}

  static Weight constant(std::size_t rank, value_type value) {
    Weight w(rank);
    for (auto& c : w.coords_) c = value;
    return w;
  }

  std::size_t rank() const { return coords_.size(); }
  value_type operator[](std::size_t i) const { return coords_[i]; }
  value_type& operator[](std::size_t i) { return coords_[i]; }
  std::span<const value_type> coords() const { return coords_; }

  bool is_zero() const;
  bool is_dominant() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight operator-() const;
  Weight scaled(value_type factor) const;

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;

  /// "(1,-2,0)"
  std::string to_string() const;
  /// Comma-separated integers, optionally wrapped in parentheses.
  static Weight parse(std::string_view text);

 private:
  std::vector<value_type> coords_;
};

namespace detail {
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
}  // namespace detail

}  // namespace stlab
