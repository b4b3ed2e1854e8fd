#ifndef REDIM_TESTS_SUPPORT_HPP
#define REDIM_TESTS_SUPPORT_HPP

#include <gmpxx.h>

#include <string_view>

#include "redim/redim.hpp"

namespace testing_support {

inline redim::Rational q(std::string_view text) { return redim::Rational::parse(text); }

inline redim::Rational from_mpq(const mpq_class& v) { return redim::Rational::normalize(v.get_num(), v.get_den()); }

/// Samplers used across the suites. `wide` draws from |p|, q <= 10^6 with
/// decimal period dividing 6; `small_uniform` draws q uniformly from [1, 60].
inline const redim::RationalSampler& wide() {
  static const redim::RationalSampler s(1000000, 1000000, redim::RationalSampler::DenominatorLaw::short_period, 6);
  return s;
}

inline const redim::RationalSampler& small_uniform() {
  static const redim::RationalSampler s(1000, 60, redim::RationalSampler::DenominatorLaw::uniform);
  return s;
}

}  // namespace testing_support

#endif  // REDIM_TESTS_SUPPORT_HPP
