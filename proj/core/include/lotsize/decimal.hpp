#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace lotsize {

/// Integral quantity of product units.
using Units = std::int64_t;

/// Signed fixed-point number with four fractional decimal digits.
///
/// Every operation the solvers need (sums, differences, scaling by an
/// integral quantity) is exact. Arithmetic that would leave the int64 range
/// throws std::overflow_error instead of wrapping.
class Decimal {
 public:
  static constexpr int kFractionDigits = 4;
  static constexpr std::int64_t kScale = 10000;

  constexpr Decimal() = default;

  static constexpr Decimal from_raw(std::int64_t raw) {
    Decimal d;
    d.raw_ = raw;
    return d;
  }
  static Decimal from_units(std::int64_t whole);

  /// Rounds to the nearest representable value, ties away from zero.
  static Decimal from_double(long double value);

  /// Accepts an optional sign, digits, and at most four fractional digits
  /// ("12", "-0.5", "0.0001"). Anything else yields nullopt.
  static std::optional<Decimal> parse(std::string_view text);

  constexpr std::int64_t raw() const { return raw_; }
  long double to_long_double() const;
  double to_double() const { return static_cast<double>(to_long_double()); }

  /// Always prints exactly four fractional digits, e.g. "358700.0000".
  std::string to_string() const;

  constexpr bool is_zero() const { return raw_ == 0; }
  constexpr bool is_negative() const { return raw_ < 0; }

  Decimal operator-() const;
  Decimal& operator+=(Decimal rhs);
  Decimal& operator-=(Decimal rhs);

  friend Decimal operator+(Decimal a, Decimal b) { return a += b; }
  friend Decimal operator-(Decimal a, Decimal b) { return a -= b; }
  friend Decimal operator*(Decimal a, std::int64_t k);
  friend Decimal operator*(std::int64_t k, Decimal a) { return a * k; }

  friend constexpr bool operator==(Decimal, Decimal) = default;
  friend constexpr auto operator<=>(Decimal, Decimal) = default;

 private:
  std::int64_t raw_ = 0;
};

/// Monetary amounts share the fixed-point representation.
using Money = Decimal;

}  // namespace lotsize
