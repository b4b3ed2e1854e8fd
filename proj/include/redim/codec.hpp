#ifndef REDIM_CODEC_HPP
#define REDIM_CODEC_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "redim/detail/periodic.hpp"
#include "redim/expansion.hpp"

namespace redim {

/// A run of zeros closed by one nonzero digit, e.g. "002" or "9".
struct DigitGroup {
  std::size_t zeros = 0;
  char terminal = '9';

  std::size_t length() const { return zeros + 1; }
  std::string str() const { return std::string(zeros, '0') + terminal; }

  friend bool operator==(const DigitGroup&, const DigitGroup&) = default;
  friend auto operator<=>(const DigitGroup&, const DigitGroup&) = default;
};

/// Eventually periodic sequence of digit groups, in minimal form.
class GroupSequence {
 public:
  static GroupSequence make(std::vector<DigitGroup> pre, std::vector<DigitGroup> period) {
    if (period.empty()) throw std::invalid_argument("group sequence needs a period");
    for (const auto* part : {&pre, &period})
      for (const DigitGroup& g : *part)
        if (g.terminal < '1' || g.terminal > '9')
          throw std::invalid_argument("digit group must end in a nonzero digit");
    detail::canonicalize_periodic(pre, period);
    return GroupSequence(std::move(pre), std::move(period));
  }

  const std::vector<DigitGroup>& preperiod() const { return pre_; }
  const std::vector<DigitGroup>& period() const { return period_; }

  /// Group at 0-based index i of the infinite sequence.
  const DigitGroup& at(std::size_t i) const {
    return i < pre_.size() ? pre_[i] : period_[(i - pre_.size()) % period_.size()];
  }

  /// Concatenated digits as a canonical expansion.
  PeriodicExpansion join() const {
    return PeriodicExpansion::make(render(pre_), render(period_));
  }

  /// Debug form: "002 4 | (9)".
  std::string str() const {
    std::string out;
    for (const DigitGroup& g : pre_) out += g.str() + ' ';
    out += "| (";
    for (std::size_t i = 0; i < period_.size(); ++i) {
      if (i > 0) out += ' ';
      out += period_[i].str();
    }
    return out + ")";
  }

  friend bool operator==(const GroupSequence&, const GroupSequence&) = default;

  friend std::ostream& operator<<(std::ostream& os, const GroupSequence& s) {
    return os << s.str();
  }

 private:
  GroupSequence(std::vector<DigitGroup> pre, std::vector<DigitGroup> period)
      : pre_(std::move(pre)), period_(std::move(period)) {}

  static std::string render(const std::vector<DigitGroup>& groups) {
    std::string out;
    for (const DigitGroup& g : groups) {
      out.append(g.zeros, '0');
      out.push_back(g.terminal);
    }
    return out;
  }

  std::vector<DigitGroup> pre_;
  std::vector<DigitGroup> period_;
};

/// Split the digit stream of `e` into zero-run groups.
///
/// Every group start at or beyond the preperiod is keyed by its offset into
/// the digit period; the first offset seen twice closes the group cycle.
inline GroupSequence segment(const PeriodicExpansion& e) {
  const std::size_t pre_len = e.preperiod().size();
  const std::size_t period_len = e.period().size();
  std::vector<std::size_t> first_start(period_len, static_cast<std::size_t>(-1));

  std::vector<DigitGroup> groups;
  std::size_t cycle_begin = 0;
  std::size_t pos = 0;
  for (;;) {
    if (pos >= pre_len) {
      const std::size_t offset = (pos - pre_len) % period_len;
      if (first_start[offset] != static_cast<std::size_t>(-1)) {
        cycle_begin = first_start[offset];
        break;
      }
      first_start[offset] = groups.size();
    }
    DigitGroup g;
    while (e.digit(pos) == '0') {
      ++g.zeros;
      ++pos;
    }
    g.terminal = e.digit(pos++);
    groups.push_back(g);
  }

  std::vector<DigitGroup> period(groups.begin() + static_cast<std::ptrdiff_t>(cycle_begin),
                                 groups.end());
  groups.resize(cycle_begin);
  return GroupSequence::make(std::move(groups), std::move(period));
}

/// Alternate groups a1 b1 a2 b2 ... into one expansion.
inline PeriodicExpansion interleave(const GroupSequence& a, const GroupSequence& b) {
  // The joint state (offset into a's cycle, offset into b's cycle) is fixed
  // once both preperiods are consumed and first repeats after lcm steps.
  const std::size_t settled = std::max(a.preperiod().size(), b.preperiod().size());
  const std::size_t cycle = std::lcm(a.period().size(), b.period().size());

  const auto emit = [&](std::string& out, std::size_t from, std::size_t to) {
    for (std::size_t t = from; t < to; ++t) {
      for (const DigitGroup* g : {&a.at(t), &b.at(t)}) {
        out.append(g->zeros, '0');
        out.push_back(g->terminal);
      }
    }
  };
  std::string pre;
  std::string period;
  emit(pre, 0, settled);
  emit(period, settled, settled + cycle);
  return PeriodicExpansion::make(std::move(pre), std::move(period));
}

/// Inverse of interleave: odd-numbered groups of `y` (1st, 3rd, ...) form the
/// first sequence, even-numbered groups the second.
inline std::pair<GroupSequence, GroupSequence> deinterleave(const PeriodicExpansion& y) {
  const GroupSequence s = segment(y);
  const std::size_t pre_len = s.preperiod().size();
  const std::size_t cycle = s.period().size();
  // Stepping by two through a cycle of length c returns after c / gcd(c, 2).
  const std::size_t half_cycle = cycle / std::gcd(cycle, std::size_t{2});

  const auto take = [&](std::size_t parity) {
    // First index t with 2t + parity >= pre_len.
    const std::size_t settled = pre_len > parity ? (pre_len - parity + 1) / 2 : 0;
    std::vector<DigitGroup> pre;
    std::vector<DigitGroup> period;
    for (std::size_t t = 0; t < settled; ++t) pre.push_back(s.at(2 * t + parity));
    for (std::size_t t = settled; t < settled + half_cycle; ++t)
      period.push_back(s.at(2 * t + parity));
    return GroupSequence::make(std::move(pre), std::move(period));
  };
  return {take(0), take(1)};
}

}  // namespace redim

#endif  // REDIM_CODEC_HPP
