#ifndef REDIM_EXPANSION_HPP
#define REDIM_EXPANSION_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "redim/detail/periodic.hpp"
#include "redim/rational.hpp"

namespace redim {

/// Decimal expansion 0.pre(period) of a number in (0,1], held as finite data.
///
/// Instances are always canonical: the period is primitive and never all
/// zeros, the preperiod cannot be shortened by rotating the period, and
/// terminating values use the trailing-nines form (1/2 is 0.4(9)).
class PeriodicExpansion {
 public:
  /// Canonicalizes the given digits. Throws std::domain_error("non-canonical
  /// expansion") when the period is empty or all zeros, and
  /// std::invalid_argument on non-digit characters.
  static PeriodicExpansion make(std::string pre, std::string period) {
    if (!detail::all_digits(pre) || !detail::all_digits(period))
      throw std::invalid_argument("expansion digits must be 0-9");
    if (period.find_first_not_of('0') == std::string::npos)
      throw std::domain_error("non-canonical expansion");
    detail::canonicalize_periodic(pre, period);
    return PeriodicExpansion(std::move(pre), std::move(period));
  }

  /// Parses "0.<pre>(<period>)".
  static PeriodicExpansion parse(std::string_view text) {
    const auto open = text.find('(');
    if (text.substr(0, 2) != "0." || open == std::string_view::npos ||
        text.back() != ')' || open + 1 >= text.size() - 1)
      throw std::invalid_argument("cannot parse expansion: '" + std::string(text) + "'");
    return make(std::string(text.substr(2, open - 2)),
                std::string(text.substr(open + 1, text.size() - open - 2)));
  }

  const std::string& preperiod() const { return pre_; }
  const std::string& period() const { return period_; }

  /// Digit at 0-based position i after the decimal point.
  char digit(std::size_t i) const {
    return i < pre_.size() ? pre_[i] : period_[(i - pre_.size()) % period_.size()];
  }

  /// The first `count` digits of the infinite stream.
  std::string prefix(std::size_t count) const {
    std::string out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(digit(i));
    return out;
  }

  std::string str() const { return "0." + pre_ + "(" + period_ + ")"; }

  friend bool operator==(const PeriodicExpansion&, const PeriodicExpansion&) = default;

  friend std::ostream& operator<<(std::ostream& os, const PeriodicExpansion& e) {
    return os << e.str();
  }

 private:
  PeriodicExpansion(std::string pre, std::string period)
      : pre_(std::move(pre)), period_(std::move(period)) {}

  std::string pre_;
  std::string period_;
};

namespace detail {

inline std::string padded_digits(const mpz_class& value, std::size_t width) {
  std::string s = value == 0 ? std::string() : value.get_str();
  if (s.size() < width) s.insert(0, width - s.size(), '0');
  return s;
}

// Multiplicative order of 10 modulo m, for m > 1 coprime to 10.
inline std::size_t order_of_ten(const mpz_class& m) {
  if (mpz_sizeinbase(m.get_mpz_t(), 2) <= 63) {
    const auto mod = static_cast<std::uint64_t>(m.get_ui());
    std::uint64_t u = 10 % mod;
    std::size_t t = 1;
    while (u != 1) {
      u = static_cast<std::uint64_t>((static_cast<unsigned __int128>(u) * 10) % mod);
      ++t;
    }
    return t;
  }
  mpz_class u = 10 % m;
  std::size_t t = 1;
  while (u != 1) {
    u *= 10;
    mpz_tdiv_r(u.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t());
    ++t;
  }
  return t;
}


// Remembers the expansions handed to from_expansion when their period is
// long. Recovering such a period from the reduced fraction costs one big
// modular step per digit, while the pairing maps routinely turn a fraction
// back into the very expansion it was built from. Bounded by total digits,
// oldest entries evicted first.
class ExpansionMemo {
 public:
  static constexpr std::size_t min_period = 64;
  static constexpr std::size_t max_digits = std::size_t{1} << 26;

  static ExpansionMemo& instance() {
    static ExpansionMemo memo;
    return memo;
  }

  void remember(const Rational& x, const PeriodicExpansion& e) {
    const std::size_t digits = e.preperiod().size() + e.period().size();
    if (e.period().size() < min_period || digits > max_digits) return;
    const std::lock_guard lock(mutex_);
    const std::size_t h = hash(x);
    auto& bucket = entries_[h];
    for (const auto& [value, expansion] : bucket)
      if (value == x) return;
    bucket.emplace_back(x, e);
    order_.emplace_back(h, x);
    stored_digits_ += digits;
    while (stored_digits_ > max_digits) evict_oldest();
  }

  std::optional<PeriodicExpansion> recall(const Rational& x) const {
    const std::lock_guard lock(mutex_);
    const auto it = entries_.find(hash(x));
    if (it == entries_.end()) return std::nullopt;
    for (const auto& [value, expansion] : it->second)
      if (value == x) return expansion;
    return std::nullopt;
  }

 private:
  static std::size_t hash(const Rational& x) {
    std::size_t h = mpz_size(x.den().get_mpz_t());
    for (const mpz_class* part : {&x.num(), &x.den()}) {
      const std::size_t limbs = mpz_size(part->get_mpz_t());
      for (std::size_t i = 0; i < limbs && i < 8; ++i)
        h = h * 1099511628211ULL ^ static_cast<std::size_t>(mpz_getlimbn(part->get_mpz_t(), i));
    }
    return h;
  }

  void evict_oldest() {
    const auto [h, value] = order_.front();
    order_.pop_front();
    auto& bucket = entries_[h];
    for (auto it = bucket.begin(); it != bucket.end(); ++it) {
      if (it->first == value) {
        stored_digits_ -= it->second.preperiod().size() + it->second.period().size();
        bucket.erase(it);
        break;
      }
    }
    if (bucket.empty()) entries_.erase(h);
  }

  mutable std::mutex mutex_;
  std::unordered_map<std::size_t, std::vector<std::pair<Rational, PeriodicExpansion>>> entries_;
  std::deque<std::pair<std::size_t, Rational>> order_;
  std::size_t stored_digits_ = 0;
};

}  // namespace detail

/// Canonical expansion of x in (0,1]. Throws std::domain_error("out of unit
/// range") otherwise.
inline PeriodicExpansion to_expansion(const Rational& x) {
  if (x.sign() <= 0 || x > Rational(1)) throw std::domain_error("out of unit range");
  if (x == Rational(1)) return PeriodicExpansion::make("", "9");
  if (mpz_sizeinbase(x.den().get_mpz_t(), 2) > 64)
    if (auto known = detail::ExpansionMemo::instance().recall(x)) return *std::move(known);

  // den = 2^twos * 5^fives * coprime; the preperiod has max(twos, fives) digits.
  mpz_class coprime = x.den();
  const std::size_t twos = mpz_scan1(coprime.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(coprime.get_mpz_t(), coprime.get_mpz_t(), twos);
  const mpz_class five = 5;
  const std::size_t fives =
      mpz_remove(coprime.get_mpz_t(), coprime.get_mpz_t(), five.get_mpz_t());
  const std::size_t pre_len = std::max(twos, fives);

  const mpz_class scaled = x.num() * pow10(pre_len);
  mpz_class whole;
  mpz_class rem;
  mpz_tdiv_qr(whole.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), x.den().get_mpz_t());

  if (coprime == 1) {
    // Terminates at the last preperiod digit, which is nonzero; lower it by
    // one and continue with nines.
    return PeriodicExpansion::make(detail::padded_digits(whole - 1, pre_len), "9");
  }

  // rem/den == residue/coprime, purely periodic with period ord(10 mod coprime).
  const mpz_class residue = rem / (x.den() / coprime);
  const std::size_t period_len = detail::order_of_ten(coprime);
  const mpz_class block = residue * (pow10(period_len) - 1) / coprime;
  return PeriodicExpansion::make(detail::padded_digits(whole, pre_len),
                                 detail::padded_digits(block, period_len));
}

/// Exact value of an expansion: pre/10^m + period/(10^m (10^L - 1)).
inline Rational from_expansion(const PeriodicExpansion& e) {
  const std::string& pre = e.preperiod();
  const std::string& period = e.period();
  const mpz_class repunit = pow10(period.size()) - 1;
  const mpz_class num = detail::digits_value(pre) * repunit + detail::digits_value(period);
  Rational value = Rational::normalize(num, pow10(pre.size()) * repunit);
  detail::ExpansionMemo::instance().remember(value, e);
  return value;
}

}  // namespace redim

#endif  // REDIM_EXPANSION_HPP
