#ifndef REDIM_ATLAS_HPP
#define REDIM_ATLAS_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "redim/bijection.hpp"
#include "redim/rational.hpp"

// Elementary bijections between the real line and the unit intervals.

namespace redim {

using ScalarBijection = Bijection<Rational, Rational>;

namespace detail {

[[noreturn]] inline void domain_violation() { throw std::domain_error("domain violation"); }

inline bool in_closed_unit(const Rational& x) { return x.sign() >= 0 && x <= Rational(1); }
inline bool in_half_open_unit(const Rational& x) { return x.sign() > 0 && x <= Rational(1); }
inline bool in_open_unit(const Rational& x) { return x.sign() > 0 && x < Rational(1); }

// floor(log2(x)) for x > 0.
inline long floor_log2(const Rational& x) {
  const long e = static_cast<long>(mpz_sizeinbase(x.num().get_mpz_t(), 2)) -
                 static_cast<long>(mpz_sizeinbase(x.den().get_mpz_t(), 2));
  // 2^(e-1) < x < 2^(e+1); decide whether x >= 2^e.
  mpz_class lhs = x.num();
  mpz_class rhs = x.den();
  if (e >= 0)
    mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<unsigned long>(e));
  else
    mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<unsigned long>(-e));
  return lhs >= rhs ? e : e - 1;
}

// 2^-e as a rational.
inline Rational inv_pow2(std::size_t e) { return Rational::normalize(1, pow2(e)); }

// Dyadic piecewise-affine map [0, inf) -> [1/2, 1): block j covers
// [2^j - 1, 2^(j+1) - 1) and lands on [1 - 2^-(j+1), 1 - 2^-(j+2)).
inline Rational dyadic_up(const Rational& x) {
  const auto j = static_cast<std::size_t>(floor_log2(x + 1));
  return Rational(1) - inv_pow2(j + 1) + (x + 1 - Rational(pow2(j))) * inv_pow2(2 * j + 2);
}

inline Rational dyadic_down(const Rational& y) {
  const Rational gap = Rational(1) - y;  // in (0, 1/2]
  const auto j = static_cast<std::size_t>(floor_log2(Rational(1) / gap) - 1);
  return Rational(pow2(j)) - 1 + (inv_pow2(j + 1) - gap) * Rational(pow2(2 * j + 2));
}

}  // namespace detail

/// [0,1] -> (0,1]: 0 -> 1/2, 1/2 -> 2/3, ..., (n-1)/n -> n/(n+1); identity
/// elsewhere.
inline ScalarBijection closed_to_halfopen() {
  return ScalarBijection(
      {Domain::closed_unit}, {Domain::half_open_unit},
      [](const Rational& x) {
        if (!detail::in_closed_unit(x)) detail::domain_violation();
        // (n-1)/n in lowest terms has numerator = denominator - 1.
        if (x.num() + 1 == x.den()) return Rational::normalize(x.den(), x.den() + 1);
        return x;
      },
      [](const Rational& y) {
        if (!detail::in_half_open_unit(y)) detail::domain_violation();
        if (y.num() + 1 == y.den() && y.den() >= 2)
          return Rational::normalize(y.den() - 2, y.den() - 1);
        return y;
      });
}

/// (0,1] -> (0,1): 1/m -> 1/(m+1) for integers m >= 1; identity elsewhere.
inline ScalarBijection halfopen_to_open() {
  return ScalarBijection(
      {Domain::half_open_unit}, {Domain::open_unit},
      [](const Rational& x) {
        if (!detail::in_half_open_unit(x)) detail::domain_violation();
        if (x.num() == 1) return Rational::normalize(1, x.den() + 1);
        return x;
      },
      [](const Rational& y) {
        if (!detail::in_open_unit(y)) detail::domain_violation();
        if (y.num() == 1) return Rational::normalize(1, y.den() - 1);
        return y;
      });
}

/// R -> (0,1), x -> 1/2 + x / (2(1 + |x|)). Rational in both directions.
inline ScalarBijection real_to_open_rational() {
  return ScalarBijection(
      {Domain::real_line}, {Domain::open_unit},
      [](const Rational& x) {
        return Rational::normalize(1, 2) + x / (Rational(2) * (Rational(1) + abs(x)));
      },
      [](const Rational& y) {
        if (!detail::in_open_unit(y)) detail::domain_violation();
        const Rational twice = Rational(2) * y;
        if (y >= Rational::normalize(1, 2))
          return (twice - 1) / (Rational(2) * (Rational(1) - y));
        return (twice - 1) / twice;
      });
}

/// R -> (0,1), piecewise affine with power-of-two breakpoints and slopes,
/// odd about (0, 1/2): 0 -> 1/2, 1 -> 3/4, 3 -> 7/8, -1 -> 1/4.
///
/// Unlike real_to_open_rational it maps decimal fractions to decimal
/// fractions and leaves the odd part of every denominator unchanged, so the
/// decimal period of the image equals that of the input.
inline ScalarBijection real_to_open_dyadic() {
  return ScalarBijection(
      {Domain::real_line}, {Domain::open_unit},
      [](const Rational& x) {
        if (x.sign() >= 0) return detail::dyadic_up(x);
        return Rational(1) - detail::dyadic_up(-x);
      },
      [](const Rational& y) {
        if (!detail::in_open_unit(y)) detail::domain_violation();
        if (y >= Rational::normalize(1, 2)) return detail::dyadic_down(y);
        return -detail::dyadic_down(Rational(1) - y);
      });
}

/// Glue map R -> (0,1] used by the real pairing: real_to_open_dyadic followed
/// by the inverse unit-fraction shift.
inline ScalarBijection real_to_unit() {
  return compose(real_to_open_dyadic(), halfopen_to_open().inverse());
}

/// The same glue built on real_to_open_rational.
inline ScalarBijection real_to_unit_rational() {
  return compose(real_to_open_rational(), halfopen_to_open().inverse());
}

/// Projection of the tangent-semicircle construction: a circle of radius 1/2
/// touches the real axis at 1/2; x is joined to the centre, and the point
/// where that segment meets the lower semicircle is dropped back onto the
/// axis.
inline double semicircle_map(double x) {
  const double u = x - 0.5;
  return 0.5 + u / (2.0 * std::sqrt(u * u + 0.25));
}

struct FigurePoint {
  double x = 0;
  double fx = 0;
};

/// `samples` evenly spaced points of semicircle_map over [0.5 - half_width,
/// 0.5 + half_width]. An odd sample count includes the tangency point.
inline std::vector<FigurePoint> semicircle_points(std::size_t samples, double half_width = 10.0) {
  if (samples == 0) throw std::invalid_argument("samples must be at least 1");
  std::vector<FigurePoint> out;
  out.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double x =
        samples == 1
            ? 0.5
            : 0.5 + half_width * (2.0 * static_cast<double>(i) / static_cast<double>(samples - 1) - 1.0);
    out.push_back({x, semicircle_map(x)});
  }
  return out;
}

}  // namespace redim

#endif  // REDIM_ATLAS_HPP
