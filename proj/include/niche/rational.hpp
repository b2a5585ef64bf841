#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace niche {

/// Exact fraction with 64-bit numerator and positive denominator, always
/// kept in lowest terms. Intermediate products use 128-bit integers; a
/// result that does not fit back into 64 bits throws std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  [[nodiscard]] constexpr std::int64_t num() const { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const { return den_; }
  [[nodiscard]] constexpr bool is_integer() const { return den_ == 1; }

  /// Largest integer not greater than the value.
  [[nodiscard]] std::int64_t floor() const;

  /// Parses "a" or "a/b". Only canonical text is accepted: no sign on zero,
  /// no leading zeros, b > 1 and gcd(|a|, b) = 1. Throws ParseError.
  static Rational parse(std::string_view text);
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend constexpr bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const auto lhs = static_cast<__int128>(a.num_) * b.den_;
    const auto rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

 private:
  static Rational from_wide(__int128 numerator, __int128 denominator);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace niche

template <>
struct std::hash<niche::Rational> {
  std::size_t operator()(const niche::Rational& r) const noexcept {
    return std::hash<std::int64_t>{}(r.num()) * 1000003u ^ std::hash<std::int64_t>{}(r.den());
  }
};
