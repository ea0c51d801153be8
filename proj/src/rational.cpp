#include "bridgekit/rational.hpp"

#include <sstream>

#include "bridgekit/error.hpp"

namespace bridgekit {

namespace mp = boost::multiprecision;

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ZeroDivision("rational with zero denominator");
  // boost 1.74 rejects a negative denominator here.
  value_ = den < 0 ? mp::cpp_rational(-num, -den) : mp::cpp_rational(num, den);
}

BigInt Rational::numerator() const { return mp::numerator(value_); }
BigInt Rational::denominator() const { return mp::denominator(value_); }

Rational Rational::abs() const { return Rational(mp::abs(value_)); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw ZeroDivision("reciprocal of zero");
  return Rational(denominator(), numerator());
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ZeroDivision("division by zero");
  value_ /= o.value_;
  return *this;
}
Rational Rational::operator-() const { return Rational(-value_); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  std::string s = numerator().str();
  if (denominator() != 1) s += "/" + denominator().str();
  return s;
}

std::string Rational::to_decimal(int digits) const {
  // Scale so the integer quotient carries `digits` significant digits.
  BigInt num = mp::abs(numerator());
  BigInt den = denominator();
  if (num == 0) return "0";
  int exp10 = 0;  // value = num/den * 10^exp10
  BigInt lo = 1;
  for (int i = 1; i < digits; ++i) lo *= 10;
  BigInt hi = lo * 10;
  while (num / den < lo) {
    num *= 10;
    --exp10;
  }
  while (num / den >= hi) {
    den *= 10;
    ++exp10;
  }
  BigInt q = num / den;
  BigInt rem = num % den;
  if (rem * 2 >= den) ++q;
  if (q >= hi) {
    q /= 10;
    ++exp10;
  }
  std::string d = q.str();
  // d has exactly `digits` characters; place the decimal point.
  int point = static_cast<int>(d.size()) + exp10;
  std::string out;
  if (point <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-point), '0') + d;
  } else if (point >= static_cast<int>(d.size())) {
    out = d + std::string(static_cast<std::size_t>(point) - d.size(), '0');
  } else {
    out = d.substr(0, static_cast<std::size_t>(point)) + "." + d.substr(static_cast<std::size_t>(point));
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return sign() < 0 ? "-" + out : out;
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw ParseError("malformed rational '" + text + "'", text, 0);
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BigInt pow2(unsigned e) {
  BigInt one = 1;
  return one << e;
}

}  // namespace bridgekit
