#ifndef REDIM_BIJECTION_HPP
#define REDIM_BIJECTION_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

namespace redim {

enum class Domain {
  real_line,       // R
  closed_unit,     // [0,1]
  half_open_unit,  // (0,1]
  open_unit,       // (0,1)
  real_tuples,     // R^n as a bare set
  standard_space,  // the vector space R^k
};

/// Descriptor of the set a bijection reads from or writes to.
struct Space {
  Domain domain = Domain::real_line;
  std::size_t arity = 1;

  std::string str() const {
    switch (domain) {
      case Domain::real_line: return "R";
      case Domain::closed_unit: return "[0,1]";
      case Domain::half_open_unit: return "(0,1]";
      case Domain::open_unit: return "(0,1)";
      case Domain::real_tuples: return "R^" + std::to_string(arity) + " (tuples)";
      case Domain::standard_space: return "R^" + std::to_string(arity);
    }
    return "?";
  }

  friend bool operator==(const Space&, const Space&) = default;
};

/// An invertible map Src -> Dst carried as a forward/backward pair.
///
/// Handles are immutable and cheap to copy; the maps are shared.
template <class Src, class Dst>
class Bijection {
 public:
  using Forward = std::function<Dst(const Src&)>;
  using Backward = std::function<Src(const Dst&)>;

  Bijection(Space source, Space target, Forward forward, Backward backward)
      : source_(source),
        target_(target),
        forward_(std::make_shared<const Forward>(std::move(forward))),
        backward_(std::make_shared<const Backward>(std::move(backward))) {}

  Dst forward(const Src& x) const { return (*forward_)(x); }
  Src backward(const Dst& y) const { return (*backward_)(y); }

  const Space& source() const { return source_; }
  const Space& target() const { return target_; }

  Bijection<Dst, Src> inverse() const {
    return Bijection<Dst, Src>(target_, source_, *backward_, *forward_);
  }

 private:
  Space source_;
  Space target_;
  std::shared_ptr<const Forward> forward_;
  std::shared_ptr<const Backward> backward_;
};

/// First f, then g. Throws std::invalid_argument("composition mismatch")
/// unless f's target is g's source.
template <class A, class B, class C>
Bijection<A, C> compose(const Bijection<A, B>& f, const Bijection<B, C>& g) {
  if (!(f.target() == g.source()))
    throw std::invalid_argument("composition mismatch: " + f.target().str() + " vs " +
                                g.source().str());
  return Bijection<A, C>(
      f.source(), g.target(), [f, g](const A& x) { return g.forward(f.forward(x)); },
      [f, g](const C& y) { return f.backward(g.backward(y)); });
}

}  // namespace redim

#endif  // REDIM_BIJECTION_HPP
