#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <string_view>

#include "ks2/exact_oracle.hpp"

namespace ks2 {

// Parses [+-]digits[.digits][(e|E)[+-]digits] as an exact base-10 rational.
inline std::optional<big_rational> parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  big_int digits = 0;
  long long scale = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits = digits * 10 + (ch - '0');
      if (seen_point) ++scale;
      any_digit = true;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) return std::nullopt;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool exp_negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      exp_negative = text[pos] == '-';
      ++pos;
    }
    long long exponent = 0;
    bool exp_digit = false;
    for (; pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])); ++pos) {
      exponent = exponent * 10 + (text[pos] - '0');
      if (exponent > 100000) return std::nullopt;
      exp_digit = true;
    }
    if (!exp_digit) return std::nullopt;
    scale += exp_negative ? exponent : -exponent;
  }
  if (pos != text.size()) return std::nullopt;

  big_rational value(digits);
  const big_int ten_power = boost::multiprecision::pow(big_int(10), static_cast<unsigned>(scale < 0 ? -scale : scale));
  if (scale > 0) {
    value /= big_rational(ten_power);
  } else if (scale < 0) {
    value *= big_rational(ten_power);
  }
  return negative ? big_rational(-value) : value;
}

// Smallest integer c with c / (m*n) >= d, clamped to [0, m*n + 1].
inline std::int64_t threshold_from_decimal(const big_rational& d, std::int64_t m,
                                           std::int64_t n) {
  const std::int64_t mn = m * n;
  if (d <= 0) return 0;
  if (d > 1) return mn + 1;
  const big_rational scaled = d * big_rational(mn);
  big_int q, r;
  divide_qr(boost::multiprecision::numerator(scaled),
            boost::multiprecision::denominator(scaled), q, r);
  if (r != 0) ++q;
  return q.convert_to<std::int64_t>();
}

}  // namespace ks2
