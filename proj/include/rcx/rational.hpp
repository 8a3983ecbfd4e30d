#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace rcx {

/// Exact fraction num/den with den > 0 and gcd(num, den) == 1.
///
/// Intermediate products are formed in 128-bit arithmetic; a result that does
/// not fit back into 64 bits throws Error(Overflow) instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  std::string to_string() const;

  /// -1, 0 or +1.
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) noexcept;

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace rcx
