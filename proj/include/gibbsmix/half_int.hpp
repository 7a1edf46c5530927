// Copyright 2026 The gibbsmix Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file half_int.hpp
 * @brief Half-integer quantum numbers stored as twice their value.
 */

#ifndef GIBBSMIX_HALF_INT_HPP
#define GIBBSMIX_HALF_INT_HPP

#include <compare>
#include <string>

namespace gibbsmix {

/// Angular momentum label J or M. Stored as 2J so that all arithmetic stays
/// in integers; J = 3/2 is HalfInt::from_twice(3).
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int whole) : twice_(2 * whole) {}  // NOLINT(runtime/explicit)

  static constexpr HalfInt from_twice(int t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return 0.5 * twice_; }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ + b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ - b.twice_);
  }
  constexpr HalfInt operator-() const { return from_twice(-twice_); }

  /// "2" for integers, "3/2" for proper half-integers.
  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

 private:
  int twice_ = 0;
};

constexpr HalfInt abs(HalfInt h) {
  return HalfInt::from_twice(h.twice() < 0 ? -h.twice() : h.twice());
}

}  // namespace gibbsmix

#endif  // GIBBSMIX_HALF_INT_HPP
