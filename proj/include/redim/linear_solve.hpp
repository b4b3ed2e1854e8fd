#ifndef REDIM_LINEAR_SOLVE_HPP
#define REDIM_LINEAR_SOLVE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "redim/rational.hpp"
#include "redim/tuple.hpp"

namespace redim {

/// Solve sum_i c_i * columns[i] = rhs exactly by Gaussian elimination with
/// first-nonzero pivoting. Returns nullopt when the columns are singular.
inline std::optional<std::vector<Rational>> solve_columns(const std::vector<KVector>& columns,
                                                          const KVector& rhs) {
  const std::size_t k = columns.size();
  if (rhs.arity() != k) throw std::invalid_argument("arity mismatch");
  for (const KVector& c : columns)
    if (c.arity() != k) throw std::invalid_argument("arity mismatch");

  // Row r of the augmented matrix: (columns[0][r], ..., columns[k-1][r] | rhs[r]).
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k + 1));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) m[r][c] = columns[c][r];
    m[r][k] = rhs[r];
  }

  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && m[pivot][col].sign() == 0) ++pivot;
    if (pivot == k) return std::nullopt;
    std::swap(m[pivot], m[col]);
    for (std::size_t r = col + 1; r < k; ++r) {
      if (m[r][col].sign() == 0) continue;
      const Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c <= k; ++c) m[r][c] -= factor * m[col][c];
    }
  }

  std::vector<Rational> x(k);
  for (std::size_t r = k; r-- > 0;) {
    Rational acc = m[r][k];
    for (std::size_t c = r + 1; c < k; ++c) acc -= m[r][c] * x[c];
    x[r] = acc / m[r][r];
  }
  return x;
}

/// True when the k vectors of arity k are linearly independent.
inline bool is_basis(const std::vector<KVector>& vectors, std::size_t k) {
  if (vectors.size() != k) return false;
  for (const KVector& v : vectors)
    if (v.arity() != k) return false;
  return k > 0 && solve_columns(vectors, KVector::zeros(k)).has_value();
}

}  // namespace redim

#endif  // REDIM_LINEAR_SOLVE_HPP
