#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace terrace {

/**
 * Exact rational number. Every probability in the library is carried as one of
 * these; decimal text only appears at the input and output boundaries.
 *
 * Values are always held in lowest terms with a positive denominator (the GMP
 * backend canonicalizes after each operation).
 */
class Rational {
 public:
  using Backend = boost::multiprecision::mpq_rational;

  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);
  explicit Rational(Backend value) : value_(std::move(value)) {}

  /// Accepts "num/den", or a plain decimal such as "0.45", "-3", ".5", "2.".
  static Rational parse(std::string_view text);

  static Rational half() { return Rational(1, 2); }

  const Backend& backend() const noexcept { return value_; }

  std::string numerator_string() const;
  std::string denominator_string() const;

  /// "9/20"; integers render without a denominator ("1", "0", "-2").
  std::string to_fraction() const;

  /// Rounded half away from zero to at most `digits` fractional digits, with
  /// trailing zeros removed: 27/100 -> "0.27", 1/3 -> "0.333333".
  std::string to_decimal(int digits = 6) const;

  /// True when the value has a finite decimal expansion (denominator 2^a 5^b).
  bool is_terminating_decimal() const;

  double to_double() const;

  bool is_zero() const { return value_ == 0; }
  int sign() const { return value_.sign(); }

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& v) { return Rational(Backend(-v.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Backend value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace terrace
