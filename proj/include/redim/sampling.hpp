#ifndef REDIM_SAMPLING_HPP
#define REDIM_SAMPLING_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "redim/rational.hpp"
#include "redim/tuple.hpp"

namespace redim {

/// Independent generator for one trial: mt19937_64 seeded through
/// std::seed_seq with the 32-bit halves of (seed, trial, stream). The
/// mapping is fixed, so trials can be evaluated in any order.
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial, std::uint32_t stream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
                    stream};
  return std::mt19937_64(seq);
}

/// Uniform integer in [0, bound) by rejection; independent of the standard
/// library's distribution implementations.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = 0;
  do draw = rng();
  while (draw >= limit);
  return draw % bound;
}

inline std::int64_t uniform_between(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

/// Random rationals p/q with |p| <= max_numerator and 1 <= q <= max_denominator.
///
/// With DenominatorLaw::short_period, q is uniform over the admissible
/// denominators whose part coprime to 10 divides 10^P - 1, i.e. whose decimal
/// period divides P (P = `period`, at most 18). Interleaving multiplies
/// group-cycle lengths, so unrestricted denominators make the pairing maps
/// grow without useful bound once sums of transported vectors are folded.
class RationalSampler {
 public:
  enum class DenominatorLaw { uniform, short_period };

  RationalSampler(std::int64_t max_numerator, std::int64_t max_denominator,
                  DenominatorLaw law = DenominatorLaw::short_period, unsigned period = 2)
      : max_numerator_(max_numerator), max_denominator_(max_denominator), law_(law), period_(period) {
    if (max_numerator < 1 || max_denominator < 1)
      throw std::invalid_argument("sampler bounds must be positive");
    if (period < 1 || period > 18) throw std::invalid_argument("period must be in [1, 18]");
    if (law_ == DenominatorLaw::short_period) {
      std::int64_t repunit = 1;
      for (unsigned i = 0; i < period; ++i) repunit *= 10;
      repunit -= 1;
      for (std::int64_t q = 1; q <= max_denominator_; ++q) {
        std::int64_t odd = q;
        while (odd % 2 == 0) odd /= 2;
        while (odd % 5 == 0) odd /= 5;
        if (repunit % odd == 0) denominators_.push_back(q);
      }
    }
  }

  std::int64_t max_numerator() const { return max_numerator_; }
  std::int64_t max_denominator() const { return max_denominator_; }

  /// p/q with p uniform in [-max_numerator, max_numerator].
  Rational draw(std::mt19937_64& rng) const {
    const std::int64_t q = draw_denominator(rng);
    const std::int64_t p = uniform_between(rng, -max_numerator_, max_numerator_);
    return Rational::normalize(p, q);
  }

  /// p/q in (0,1], p uniform in [1, min(q, max_numerator)].
  Rational draw_unit(std::mt19937_64& rng) const {
    const std::int64_t q = draw_denominator(rng);
    const std::int64_t p = uniform_between(rng, 1, std::min(q, max_numerator_));
    return Rational::normalize(p, q);
  }

  template <class Tuple>
  Tuple draw_tuple(std::mt19937_64& rng, std::size_t arity) const {
    std::vector<Rational> coords;
    coords.reserve(arity);
    for (std::size_t i = 0; i < arity; ++i) coords.push_back(draw(rng));
    return Tuple(std::move(coords));
  }

  std::string describe() const {
    std::string out = "mt19937_64(seed_seq{seed, trial}); p uniform in [-" +
                      std::to_string(max_numerator_) + ", " + std::to_string(max_numerator_) + "]; ";
    if (law_ == DenominatorLaw::uniform)
      return out + "q uniform in [1, " + std::to_string(max_denominator_) + "]";
    return out + "q uniform over {q <= " + std::to_string(max_denominator_) +
           " : q / (2^a 5^b) divides 10^" + std::to_string(period_) + " - 1}";
  }

 private:
  std::int64_t draw_denominator(std::mt19937_64& rng) const {
    if (law_ == DenominatorLaw::uniform) return uniform_between(rng, 1, max_denominator_);
    return denominators_[uniform_below(rng, denominators_.size())];
  }

  std::int64_t max_numerator_;
  std::int64_t max_denominator_;
  DenominatorLaw law_;
  unsigned period_;
  std::vector<std::int64_t> denominators_;
};

}  // namespace redim

#endif  // REDIM_SAMPLING_HPP
