#ifndef REDIM_TUPLE_HPP
#define REDIM_TUPLE_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "redim/rational.hpp"

namespace redim {

struct RealTupleTag {};
struct KVectorTag {};

/// Fixed-arity list of rationals. The tag separates points of the bare set
/// R^n (RealTuple) from vectors of the standard space R^k (KVector); only
/// the latter carries the coordinatewise vector operations.
template <class Tag>
class BasicTuple {
 public:
  BasicTuple() = default;
  explicit BasicTuple(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  BasicTuple(std::initializer_list<Rational> coords) : coords_(coords) {}

  /// Zero tuple of the given arity.
  static BasicTuple zeros(std::size_t arity) {
    return BasicTuple(std::vector<Rational>(arity));
  }

  /// "(a, b, c)", "a,b,c" or "a b c". Only an enclosing pair of parentheses
  /// is stripped, so coordinates such as 0.(3) survive.
  static BasicTuple parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
      text = text.substr(1, text.size() - 2);
    std::string cleaned(text);
    for (char& c : cleaned)
      if (c == ',' || c == '\t') c = ' ';
    std::vector<Rational> coords;
    std::size_t i = 0;
    while (i < cleaned.size()) {
      while (i < cleaned.size() && cleaned[i] == ' ') ++i;
      std::size_t j = i;
      while (j < cleaned.size() && cleaned[j] != ' ') ++j;
      if (j > i) coords.push_back(Rational::parse(std::string_view(cleaned).substr(i, j - i)));
      i = j;
    }
    return BasicTuple(std::move(coords));
  }

  std::size_t arity() const { return coords_.size(); }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_.at(i); }
  Rational& operator[](std::size_t i) { return coords_.at(i); }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i > 0) out += ", ";
      out += coords_[i].str();
    }
    return out + ")";
  }

  friend bool operator==(const BasicTuple&, const BasicTuple&) = default;

  friend std::ostream& operator<<(std::ostream& os, const BasicTuple& t) {
    return os << t.str();
  }

  BasicTuple& operator+=(const BasicTuple& o)
    requires std::is_same_v<Tag, KVectorTag>
  {
    check_arity(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }

  BasicTuple& operator*=(const Rational& c)
    requires std::is_same_v<Tag, KVectorTag>
  {
    for (Rational& x : coords_) x *= c;
    return *this;
  }

  friend BasicTuple operator+(BasicTuple a, const BasicTuple& b)
    requires std::is_same_v<Tag, KVectorTag>
  {
    return a += b;
  }

  friend BasicTuple operator-(BasicTuple a)
    requires std::is_same_v<Tag, KVectorTag>
  {
    for (Rational& x : a.coords_) x = -x;
    return a;
  }

  friend BasicTuple operator*(const Rational& c, BasicTuple a)
    requires std::is_same_v<Tag, KVectorTag>
  {
    return a *= c;
  }

 private:
  void check_arity(const BasicTuple& o) const {
    if (o.arity() != arity()) throw std::invalid_argument("arity mismatch");
  }

  std::vector<Rational> coords_;
};

/// A point of R^n as a set of n-tuples.
using RealTuple = BasicTuple<RealTupleTag>;
/// A vector of the standard space R^k.
using KVector = BasicTuple<KVectorTag>;

}  // namespace redim

#endif  // REDIM_TUPLE_HPP
