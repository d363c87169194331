#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "fcig/errors.hpp"

namespace fcig {

/// Element of the quaternion group Q8 = {±1, ±i, ±j, ±k}.
/// Index layout: 2*u + s with u in {1,i,j,k} and s the sign bit, so
/// 0 = 1, 1 = -1, 2 = i, 3 = -i, 4 = j, 5 = -j, 6 = k, 7 = -k.
class Q8Element {
 public:
  constexpr Q8Element() = default;
  constexpr explicit Q8Element(std::uint8_t index) : index_(index) {
    if (index >= 8) throw InvalidArgument("Q8Element: index out of range");
  }

  static constexpr Q8Element one() { return Q8Element(0); }
  static constexpr Q8Element minus_one() { return Q8Element(1); }

  static Q8Element parse(std::string_view name) {
    for (std::uint8_t i = 0; i < 8; ++i)
      if (kNames[i] == name) return Q8Element(i);
    throw InvalidArgument("Q8Element: unknown name");
  }

  constexpr std::uint8_t index() const { return index_; }
  constexpr std::string_view name() const { return kNames[index_]; }
  constexpr bool is_central() const { return index_ < 2; }

  constexpr Q8Element operator*(Q8Element o) const {
    const int u = index_ >> 1, v = o.index_ >> 1;
    const auto [sign, w] = kUnitTable[u][v];
    const int s = (index_ & 1) ^ (o.index_ & 1) ^ sign;
    return Q8Element(static_cast<std::uint8_t>(2 * w + s));
  }

  constexpr Q8Element inverse() const {
    // units other than 1 square to -1, so their inverse is the negation
    return (index_ >> 1) == 0 ? *this : Q8Element(static_cast<std::uint8_t>(index_ ^ 1));
  }

  friend constexpr bool operator==(Q8Element, Q8Element) = default;

 private:
  struct Entry {
    int sign;
    int unit;
  };
  // unit products: 1,i,j,k ; ij = k, jk = i, ki = j, i^2 = j^2 = k^2 = -1
  static constexpr Entry kUnitTable[4][4] = {
      {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
      {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
      {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
      {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
  };
  static constexpr std::array<std::string_view, 8> kNames = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};

  std::uint8_t index_ = 0;
};

}  // namespace fcig
