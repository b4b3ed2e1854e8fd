#ifndef REDIM_PAIRING_HPP
#define REDIM_PAIRING_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "redim/atlas.hpp"
#include "redim/bijection.hpp"
#include "redim/codec.hpp"
#include "redim/expansion.hpp"
#include "redim/rational.hpp"
#include "redim/tuple.hpp"

namespace redim {

/// (0,1]^2 -> (0,1] by interleaving the digit groups of a and b.
inline Rational pair_unit(const Rational& a, const Rational& b) {
  return from_expansion(interleave(segment(to_expansion(a)), segment(to_expansion(b))));
}

inline std::pair<Rational, Rational> unpair_unit(const Rational& y) {
  const auto [first, second] = deinterleave(to_expansion(y));
  return {from_expansion(first.join()), from_expansion(second.join())};
}

/// The glue map shared by the real pairing functions below.
inline const ScalarBijection& default_glue() {
  static const ScalarBijection glue = real_to_unit();
  return glue;
}

/// R^2 -> R: carry both reals into (0,1], pair there, and carry back.
inline Rational pair_reals(const Rational& a, const Rational& b,
                           const ScalarBijection& glue = default_glue()) {
  return glue.backward(pair_unit(glue.forward(a), glue.forward(b)));
}

inline std::pair<Rational, Rational> unpair_reals(const Rational& y,
                                                  const ScalarBijection& glue = default_glue()) {
  const auto [a, b] = unpair_unit(glue.forward(y));
  return {glue.backward(a), glue.backward(b)};
}

/// R^n -> R as a right fold: (x1, ..., xn) -> pair(x1, fold(x2, ..., xn)).
inline Rational fold_tuple(const RealTuple& x, const ScalarBijection& glue = default_glue()) {
  if (x.arity() == 0) throw std::invalid_argument("zero arity");
  Rational acc = x[x.arity() - 1];
  for (std::size_t i = x.arity() - 1; i-- > 0;) acc = pair_reals(x[i], acc, glue);
  return acc;
}

/// Inverse of fold_tuple at arity k.
inline RealTuple unfold_tuple(const Rational& y, std::size_t k,
                              const ScalarBijection& glue = default_glue()) {
  if (k == 0) throw std::invalid_argument("zero arity");
  std::vector<Rational> coords;
  coords.reserve(k);
  Rational rest = y;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    auto [head, tail] = unpair_reals(rest, glue);
    coords.push_back(std::move(head));
    rest = std::move(tail);
  }
  coords.push_back(std::move(rest));
  return RealTuple(std::move(coords));
}

using Phi = Bijection<RealTuple, KVector>;

/// R^n <-> R^k through R: forward = unfold_k . fold, backward = unfold_n . fold.
inline Phi build_phi(std::size_t n, std::size_t k, const ScalarBijection& glue = default_glue()) {
  if (n == 0 || k == 0) throw std::invalid_argument("zero arity");
  return Phi(
      {Domain::real_tuples, n}, {Domain::standard_space, k},
      [n, k, glue](const RealTuple& x) {
        if (x.arity() != n) throw std::invalid_argument("arity mismatch");
        return KVector(unfold_tuple(fold_tuple(x, glue), k, glue).coords());
      },
      [n, k, glue](const KVector& v) {
        if (v.arity() != k) throw std::invalid_argument("arity mismatch");
        return unfold_tuple(fold_tuple(RealTuple(v.coords()), glue), n, glue);
      });
}

/// R^k -> R^k copying coordinates.
inline Phi identity_phi(std::size_t k) {
  if (k == 0) throw std::invalid_argument("zero arity");
  return Phi(
      {Domain::real_tuples, k}, {Domain::standard_space, k},
      [k](const RealTuple& x) {
        if (x.arity() != k) throw std::invalid_argument("arity mismatch");
        return KVector(x.coords());
      },
      [k](const KVector& v) {
        if (v.arity() != k) throw std::invalid_argument("arity mismatch");
        return RealTuple(v.coords());
      });
}

}  // namespace redim

#endif  // REDIM_PAIRING_HPP
