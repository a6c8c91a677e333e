#include "terrace/rational.hpp"

#include "terrace/errors.hpp"

#include <cctype>
#include <ostream>

namespace terrace {

using boost::multiprecision::mpz_int;

namespace {

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::Parse, "not a number: '" + std::string(text) + "'");
}

// mpz_int's string constructor reads a leading '0' as an octal prefix.
mpz_int decimal_integer(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return mpz_int(0);
  return mpz_int(std::string(digits.substr(first)));
}

mpz_int pow10(int k) {
  mpz_int p = 1;
  for (int i = 0; i < k; ++i) p *= 10;
  return p;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw Error(ErrorCode::Parse, "zero denominator");
  value_ = Backend(mpz_int(numerator), mpz_int(denominator));
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::Parse, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_number(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  mpz_int num;
  mpz_int den;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto n = s.substr(0, slash);
    const auto d = s.substr(slash + 1);
    if (n.empty() || d.empty() || !all_digits(n) || !all_digits(d)) bad_number(text);
    num = decimal_integer(n);
    den = decimal_integer(d);
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  } else {
    const auto dot = s.find('.');
    const auto int_part = s.substr(0, dot);
    const auto frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) bad_number(text);
    if (!all_digits(int_part) || !all_digits(frac_part)) bad_number(text);
    const std::string digits = std::string(int_part) + std::string(frac_part);
    num = decimal_integer(digits);
    den = pow10(static_cast<int>(frac_part.size()));
  }
  if (negative) num = -num;
  return Rational(Backend(num, den));
}

std::string Rational::numerator_string() const {
  return boost::multiprecision::numerator(value_).str();
}

std::string Rational::denominator_string() const {
  return boost::multiprecision::denominator(value_).str();
}

std::string Rational::to_fraction() const {
  const mpz_int den = boost::multiprecision::denominator(value_);
  if (den == 1) return numerator_string();
  return numerator_string() + "/" + den.str();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) digits = 0;
  const mpz_int num = boost::multiprecision::numerator(value_);
  const mpz_int den = boost::multiprecision::denominator(value_);
  const mpz_int scaled = abs(num) * pow10(digits);
  mpz_int q = scaled / den;
  const mpz_int rem = scaled % den;
  if (2 * rem >= den) q += 1;

  std::string body = q.str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), 1, '.');
    while (body.back() == '0') body.pop_back();
    if (body.back() == '.') body.pop_back();
  }
  if (num < 0 && body != "0") body.insert(0, 1, '-');
  return body;
}

bool Rational::is_terminating_decimal() const {
  mpz_int den = boost::multiprecision::denominator(value_);
  while (den % 2 == 0) den /= 2;
  while (den % 5 == 0) den /= 5;
  return den == 1;
}

double Rational::to_double() const { return value_.convert_to<double>(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_fraction(); }

}  // namespace terrace
