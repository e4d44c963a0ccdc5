#include "lotsize/decimal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lotsize {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("decimal addition overflow");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("decimal subtraction overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("decimal multiplication overflow");
  return out;
}

}  // namespace

Decimal Decimal::from_units(std::int64_t whole) { return from_raw(checked_mul(whole, kScale)); }

Decimal Decimal::from_double(long double value) {
  if (!std::isfinite(value)) throw std::domain_error("cannot represent non-finite value as decimal");
  const long double scaled = std::round(value * static_cast<long double>(kScale));
  if (scaled >= static_cast<long double>(std::numeric_limits<std::int64_t>::max()) ||
      scaled <= static_cast<long double>(std::numeric_limits<std::int64_t>::min())) {
    throw std::overflow_error("decimal conversion overflow");
  }
  return from_raw(static_cast<std::int64_t>(scaled));
}

std::optional<Decimal> Decimal::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) return std::nullopt;
  if (dot != std::string_view::npos && frac.empty()) return std::nullopt;
  if (frac.size() > static_cast<std::size_t>(kFractionDigits)) return std::nullopt;

  std::int64_t raw = 0;
  try {
    for (char c : whole) {
      if (c < '0' || c > '9') return std::nullopt;
      raw = checked_add(checked_mul(raw, 10), c - '0');
    }
    raw = checked_mul(raw, kScale);
    std::int64_t place = kScale;
    for (char c : frac) {
      if (c < '0' || c > '9') return std::nullopt;
      place /= 10;
      raw = checked_add(raw, (c - '0') * place);
    }
  } catch (const std::overflow_error&) {
    return std::nullopt;
  }
  return from_raw(negative ? -raw : raw);
}

long double Decimal::to_long_double() const {
  return static_cast<long double>(raw_) / static_cast<long double>(kScale);
}

std::string Decimal::to_string() const {
  // Work in unsigned space so INT64_MIN prints correctly.
  const bool negative = raw_ < 0;
  const std::uint64_t magnitude =
      negative ? std::uint64_t{0} - static_cast<std::uint64_t>(raw_) : static_cast<std::uint64_t>(raw_);
  const std::uint64_t whole = magnitude / kScale;
  std::uint64_t frac = magnitude % kScale;

  std::string digits(kFractionDigits, '0');
  for (int i = kFractionDigits - 1; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = static_cast<char>('0' + frac % 10);
    frac /= 10;
  }
  return (negative ? "-" : "") + std::to_string(whole) + "." + digits;
}

Decimal Decimal::operator-() const { return from_raw(checked_sub(0, raw_)); }

Decimal& Decimal::operator+=(Decimal rhs) {
  raw_ = checked_add(raw_, rhs.raw_);
  return *this;
}

Decimal& Decimal::operator-=(Decimal rhs) {
  raw_ = checked_sub(raw_, rhs.raw_);
  return *this;
}

Decimal operator*(Decimal a, std::int64_t k) { return Decimal::from_raw(checked_mul(a.raw_, k)); }

}  // namespace lotsize
