#ifndef REDIM_TRANSPORT_HPP
#define REDIM_TRANSPORT_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "redim/bijection.hpp"
#include "redim/linear_solve.hpp"
#include "redim/pairing.hpp"
#include "redim/rational.hpp"
#include "redim/tuple.hpp"

namespace redim {

/// The set R^n equipped with the vector-space structure pulled back from
/// R^k along a bijection phi:
///
///   x (+) y = phi^-1(phi(x) + phi(y)),   c (.) x = phi^-1(c * phi(x)).
///
/// Any Phi works, not only build_phi; phi then becomes a linear isomorphism
/// onto R^k by construction.
class TransportedSpace {
 public:
  explicit TransportedSpace(Phi phi) : phi_(std::move(phi)) {
    if (phi_.source().domain != Domain::real_tuples ||
        phi_.target().domain != Domain::standard_space)
      throw std::invalid_argument("phi must map real tuples to a standard space");
    if (phi_.source().arity == 0 || phi_.target().arity == 0)
      throw std::invalid_argument("zero arity");
  }

  TransportedSpace(std::size_t n, std::size_t k) : TransportedSpace(build_phi(n, k)) {}

  std::size_t n() const { return phi_.source().arity; }
  std::size_t k() const { return phi_.target().arity; }
  const Phi& phi() const { return phi_; }

  void check_element(const RealTuple& x) const {
    if (x.arity() != n()) throw std::invalid_argument("arity mismatch");
  }

 private:
  Phi phi_;
};

inline RealTuple vadd(const TransportedSpace& s, const RealTuple& x, const RealTuple& y) {
  s.check_element(x);
  s.check_element(y);
  return s.phi().backward(s.phi().forward(x) + s.phi().forward(y));
}

inline RealTuple smul(const TransportedSpace& s, const Rational& c, const RealTuple& x) {
  s.check_element(x);
  return s.phi().backward(c * s.phi().forward(x));
}

/// Additive identity phi^-1(0_k).
inline RealTuple zero(const TransportedSpace& s) {
  return s.phi().backward(KVector::zeros(s.k()));
}

/// Additive inverse phi^-1(-phi(x)).
inline RealTuple neg(const TransportedSpace& s, const RealTuple& x) {
  s.check_element(x);
  return s.phi().backward(-s.phi().forward(x));
}

/// phi^-1 of a basis of R^k. Throws std::invalid_argument("not a basis")
/// unless `b` holds k independent vectors of arity k.
inline std::vector<RealTuple> basis(const TransportedSpace& s, const std::vector<KVector>& b) {
  if (!is_basis(b, s.k())) throw std::invalid_argument("not a basis");
  std::vector<RealTuple> out;
  out.reserve(b.size());
  for (const KVector& alpha : b) out.push_back(s.phi().backward(alpha));
  return out;
}

/// The unique scalars c with phi(x) = sum c_i * b_i, so that
/// x = (c_1 (.) phi^-1(b_1)) (+) ... (+) (c_k (.) phi^-1(b_k)).
inline std::vector<Rational> coordinates(const TransportedSpace& s, const std::vector<KVector>& b,
                                         const RealTuple& x) {
  s.check_element(x);
  if (!is_basis(b, s.k())) throw std::invalid_argument("not a basis");
  return *solve_columns(b, s.phi().forward(x));
}

/// Recombine coordinates over a transported basis using (+) and (.).
inline RealTuple combine(const TransportedSpace& s, const std::vector<RealTuple>& transported_basis,
                         const std::vector<Rational>& coords) {
  if (coords.size() != transported_basis.size()) throw std::invalid_argument("arity mismatch");
  RealTuple acc = zero(s);
  for (std::size_t i = 0; i < coords.size(); ++i)
    acc = vadd(s, acc, smul(s, coords[i], transported_basis[i]));
  return acc;
}

inline std::vector<KVector> standard_basis(std::size_t k) {
  std::vector<KVector> out;
  for (std::size_t i = 0; i < k; ++i) {
    KVector e = KVector::zeros(k);
    e[i] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace redim

#endif  // REDIM_TRANSPORT_HPP
