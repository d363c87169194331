#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "fcig/errors.hpp"

namespace fcig {

/// Cardinality of a possibly infinite group: a non-negative integer or infinity.
class Cardinal {
 public:
  constexpr Cardinal() = default;
  constexpr Cardinal(std::uint64_t n) : value_(n) {}  // NOLINT: implicit by design of the arithmetic

  static constexpr Cardinal infinite() {
    Cardinal c;
    c.value_.reset();
    return c;
  }

  constexpr bool is_finite() const { return value_.has_value(); }
  constexpr bool is_infinite() const { return !value_.has_value(); }

  std::uint64_t value() const {
    if (!value_) throw InvalidArgument("Cardinal::value on an infinite cardinal");
    return *value_;
  }

  friend Cardinal operator*(Cardinal a, Cardinal b) {
    if (a.is_finite() && b.is_finite()) {
      // 0 * inf is not needed anywhere: group orders are at least 1.
      if (*b.value_ != 0 && *a.value_ > std::numeric_limits<std::uint64_t>::max() / *b.value_)
        throw InvalidArgument("Cardinal: product overflows 64 bits");
      return Cardinal(*a.value_ * *b.value_);
    }
    return infinite();
  }
  Cardinal& operator*=(Cardinal b) { return *this = *this * b; }

  friend constexpr bool operator==(const Cardinal&, const Cardinal&) = default;

  friend constexpr std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b) {
    if (a.is_infinite()) return b.is_infinite() ? std::strong_ordering::equal : std::strong_ordering::greater;
    if (b.is_infinite()) return std::strong_ordering::less;
    return *a.value_ <=> *b.value_;
  }

  std::string to_string() const { return value_ ? std::to_string(*value_) : std::string("infinite"); }

 private:
  std::optional<std::uint64_t> value_ = std::uint64_t{0};
};

}  // namespace fcig
