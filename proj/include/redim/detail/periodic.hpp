#ifndef REDIM_DETAIL_PERIODIC_HPP
#define REDIM_DETAIL_PERIODIC_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

namespace redim::detail {

// Length of the shortest block whose repetition yields `seq` (prefix function).
template <class Seq>
std::size_t primitive_period(const Seq& seq) {
  const std::size_t n = seq.size();
  if (n <= 1) return n;
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && !(seq[i] == seq[k])) k = border[k - 1];
    if (seq[i] == seq[k]) ++k;
    border[i] = k;
  }
  const std::size_t p = n - border[n - 1];
  return n % p == 0 ? p : n;
}

/// Bring an eventually periodic sequence `pre (period)^inf` to its unique
/// minimal form: primitive period, and no preperiod tail that could be
/// absorbed by rotating the period.
template <class Seq>
void canonicalize_periodic(Seq& pre, Seq& period) {
  period.resize(primitive_period(period));
  const std::size_t len = period.size();
  if (len == 0) return;

  std::size_t folds = 0;
  while (folds < pre.size() &&
         pre[pre.size() - 1 - folds] == period[len - 1 - folds % len])
    ++folds;
  if (folds == 0) return;

  pre.resize(pre.size() - folds);
  std::rotate(period.begin(), period.end() - static_cast<std::ptrdiff_t>(folds % len),
              period.end());
}

}  // namespace redim::detail

#endif  // REDIM_DETAIL_PERIODIC_HPP
