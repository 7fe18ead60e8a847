#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include <gmpxx.h>

namespace vosa {

// Half-integer stored as its double, so 3/2 is kept as 3.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int whole) : twice_(2 * whole) {}  // NOLINT(implicit)

  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  // Accepts "3", "-1/2", "1.5".
  static HalfInt parse(const std::string& text);

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  // Exact integer value; only meaningful when is_integer().
  constexpr int whole() const { return twice_ / 2; }
  // Largest integer <= value, smallest integer >= value.
  constexpr int floor() const { return twice_ >= 0 ? twice_ / 2 : -((-twice_ + 1) / 2); }
  constexpr int ceil() const { return -from_twice(-twice_).floor(); }

  mpq_class to_rational() const {
    mpq_class q(twice_, 2);
    q.canonicalize();
    return q;
  }
  std::string to_string() const;

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) { return a.twice_ <=> b.twice_; }

 private:
  int twice_ = 0;
};

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

}  // namespace vosa

template <>
struct std::hash<vosa::HalfInt> {
  std::size_t operator()(vosa::HalfInt h) const noexcept { return std::hash<int>{}(h.twice()); }
};
