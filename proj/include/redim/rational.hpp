#ifndef REDIM_RATIONAL_HPP
#define REDIM_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

namespace redim {

/// Exact rational number backed by GMP.
///
/// Always stored in lowest terms with a positive denominator; zero is 0/1.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>)
      value_ = mpz_class(static_cast<long>(value));
    else
      value_ = mpz_class(static_cast<unsigned long>(value));
  }

  explicit Rational(const mpz_class& integer) : value_(integer) {}

  /// Reduce num/den to canonical form. Throws std::domain_error on a zero
  /// denominator.
  static Rational normalize(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r;
    r.value_ = mpq_class(num, den);
    r.value_.canonicalize();
    return r;
  }

  /// Accepts "p/q", "p", and decimals such as "-1.25", "0.4(9)", "2.(3)".
  static Rational parse(std::string_view text);

  const mpz_class& num() const { return value_.get_num(); }
  const mpz_class& den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_integer() const { return den() == 1; }

  /// "p/q", or "p" for integers.
  std::string str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
  }

  double to_double() const { return value_.get_d(); }

  Rational operator-() const { return from_mpq(-value_); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.sign() == 0) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  static Rational from_mpq(mpq_class q) {
    Rational r;
    r.value_ = std::move(q);
    return r;
  }

  mpq_class value_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// 10^exponent as an arbitrary-precision integer.
inline mpz_class pow10(std::size_t exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

/// 2^exponent as an arbitrary-precision integer.
inline mpz_class pow2(std::size_t exponent) {
  mpz_class out = 1;
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), exponent);
  return out;
}

namespace detail {

inline bool all_digits(std::string_view s) {
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

inline mpz_class parse_integer(std::string_view s) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
  const std::string_view digits = s.substr(i);
  if (digits.empty() || !all_digits(digits))
    throw std::invalid_argument("cannot parse integer: '" + std::string(s) + "'");
  mpz_class out(std::string(digits), 10);
  return negative ? mpz_class(-out) : out;
}

inline mpz_class digits_value(std::string_view digits) {
  return digits.empty() ? mpz_class(0) : mpz_class(std::string(digits), 10);
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  const auto fail = [&]() -> Rational {
    throw std::invalid_argument("cannot parse rational: '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class num = detail::parse_integer(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (den_text.empty() || !detail::all_digits(den_text)) return fail();
    const mpz_class den = detail::digits_value(den_text);
    return normalize(num, den);
  }

  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
  const std::size_t dot = text.find('.', i);
  if (dot == std::string_view::npos) {
    const std::string_view whole = text.substr(i);
    if (whole.empty() || !detail::all_digits(whole)) return fail();
    Rational r(detail::digits_value(whole));
    return negative ? -r : r;
  }

  const std::string_view whole = text.substr(i, dot - i);
  std::string_view frac = text.substr(dot + 1);
  std::string_view pre = frac;
  std::string_view period;
  if (const auto open = frac.find('('); open != std::string_view::npos) {
    if (frac.back() != ')') return fail();
    pre = frac.substr(0, open);
    period = frac.substr(open + 1, frac.size() - open - 2);
    if (period.empty()) return fail();
  }
  if ((whole.empty() && pre.empty() && period.empty()) ||
      !detail::all_digits(whole) || !detail::all_digits(pre) ||
      !detail::all_digits(period))
    return fail();

  Rational value(detail::digits_value(whole));
  const mpz_class scale = pow10(pre.size());
  value += normalize(detail::digits_value(pre), scale);
  if (!period.empty()) {
    const mpz_class repunit = pow10(period.size()) - 1;
    value += normalize(detail::digits_value(period), scale * repunit);
  }
  return negative ? -value : value;
}

}  // namespace redim

#endif  // REDIM_RATIONAL_HPP
