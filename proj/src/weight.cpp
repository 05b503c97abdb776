#include "stlab/weight.hpp"

#include <algorithm>
#include <charconv>

#include "stlab/errors.hpp"

namespace stlab {

namespace detail {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw ResourceError("weight coordinate overflow in addition");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw ResourceError("weight coordinate overflow in multiplication");
  return out;
}

}  // namespace detail

namespace {

void require_same_rank(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank())
    throw ValidationError("weight rank mismatch: " + std::to_string(a.rank()) +
                          " vs " + std::to_string(b.rank()));
}

}  // namespace

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

bool Weight::is_dominant() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c >= 0; });
}

Weight& Weight::operator+=(const Weight& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    coords_[i] = detail::checked_add(coords_[i], other.coords_[i]);
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    coords_[i] = detail::checked_add(coords_[i], detail::checked_mul(-1, other.coords_[i]));
  return *this;
}

Weight Weight::operator-() const { return scaled(-1); }

Weight Weight::scaled(value_type factor) const {
  Weight out(*this);
  for (auto& c : out.coords_) c = detail::checked_mul(c, factor);
  return out;
}

std::string Weight::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

Weight Weight::parse(std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '(' && text.back() == ')') {
    text.remove_prefix(1);
    text.remove_suffix(1);
  }
  std::vector<value_type> coords;
  while (true) {
    auto comma = text.find(',');
    auto field = trim(text.substr(0, comma));
    value_type value{};
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
      throw ValidationError("malformed weight component '" + std::string(field) +
                            "': expected comma-separated integers such as \"1,-2\"");
    coords.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Weight(std::move(coords));
}

}  // namespace stlab
