#ifndef REDIM_TOOLS_COMMANDS_HPP
#define REDIM_TOOLS_COMMANDS_HPP

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "redim/redim.hpp"

namespace redim::cli {

enum ExitCode : int { ok = 0, input_error = 1, law_failure = 2 };

namespace detail {

inline std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string joined(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

template <class Tuple>
Tuple tuple_of(const std::string& text, std::size_t arity) {
  Tuple t = Tuple::parse(text);
  if (t.arity() != arity)
    throw std::invalid_argument("arity mismatch: expected " + std::to_string(arity) + " coordinates, got " +
                                std::to_string(t.arity()));
  return t;
}

}  // namespace detail

inline int cmd_pair(const std::string& a, const std::string& b, bool unit, std::ostream& out) {
  const Rational x = Rational::parse(a);
  const Rational y = Rational::parse(b);
  if (unit) {
    const Rational z = pair_unit(x, y);
    out << z << " = " << to_expansion(z) << "\n";
  } else {
    out << pair_reals(x, y) << "\n";
  }
  return ok;
}

inline int cmd_unpair(const std::string& text, bool unit, std::ostream& out) {
  const Rational y = Rational::parse(text);
  const auto [a, b] = unit ? unpair_unit(y) : unpair_reals(y);
  out << RealTuple{a, b} << "\n";
  return ok;
}

// The first count is always the arity of the input. With --inverse the map
// applied is the backward direction of build_phi(k, n), so
// `phi 2 3 x` followed by `phi 3 2 --inverse <result>` returns x.
inline int cmd_phi(std::size_t n, std::size_t k, const std::string& tuple, bool inverse,
                   std::ostream& out) {
  if (inverse)
    out << build_phi(k, n).backward(detail::tuple_of<KVector>(tuple, n)) << "\n";
  else
    out << build_phi(n, k).forward(detail::tuple_of<RealTuple>(tuple, n)) << "\n";
  return ok;
}

inline int cmd_add(std::size_t n, std::size_t k, const std::string& x, const std::string& y,
                   std::ostream& out) {
  const TransportedSpace s(n, k);
  out << vadd(s, detail::tuple_of<RealTuple>(x, n), detail::tuple_of<RealTuple>(y, n)) << "\n";
  return ok;
}

inline int cmd_smul(std::size_t n, std::size_t k, const std::string& c, const std::string& x,
                    std::ostream& out) {
  const TransportedSpace s(n, k);
  out << smul(s, Rational::parse(c), detail::tuple_of<RealTuple>(x, n)) << "\n";
  return ok;
}

/// Axiom and isomorphism reports for any space; 2 when some law fails.
inline int report_laws(const TransportedSpace& s, std::size_t trials, std::uint64_t seed, bool json,
                       std::ostream& out) {
  const AxiomReport axioms = check_axioms(s, trials, seed);
  const IsoReport iso = check_isomorphism(s, trials, seed);
  if (json)
    out << nlohmann::json{{"axioms", axioms.to_json()}, {"isomorphism", iso.to_json()}}.dump(2) << "\n";
  else
    out << axioms.table() << iso.table() << "generator: " << axioms.generator << "\n";
  return axioms.all_passed() && iso.all_passed() ? ok : law_failure;
}

inline int cmd_axioms(std::size_t n, std::size_t k, std::size_t trials, std::uint64_t seed, bool json,
                      std::ostream& out) {
  return report_laws(TransportedSpace(n, k), trials, seed, json, out);
}

inline void write_figure(const std::vector<FigurePoint>& points, std::ostream& out) {
  out << "x,fx\n";
  for (const FigurePoint& p : points) out << detail::shortest(p.x) << "," << detail::shortest(p.fx) << "\n";
}

inline int cmd_figure(std::size_t samples, const std::string& path, std::ostream& out) {
  if (samples < 2) throw std::invalid_argument("samples must be at least 2");
  const auto points = semicircle_points(samples);
  if (path.empty() || path == "-") {
    write_figure(points, out);
    return ok;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  write_figure(points, file);
  file.close();
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  out << "wrote " << samples << " points to " << path << "\n";
  return ok;
}

/// Parses argv-style arguments (without the program name) and runs the
/// selected subcommand. Returns the process exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact bijections between R^n and R^k by decimal digit-group interleaving,\n"
               "and the vector-space structure they transport.",
               "redim"};
  app.require_subcommand(1);

  bool unit = false;
  bool inverse = false;
  bool json = false;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t samples = 201;
  std::string path;
  std::string a, b, c;
  std::vector<std::string> coords;

  auto* pair = app.add_subcommand("pair", "Pair two numbers into one");
  pair->add_flag("--unit", unit, "Use the (0,1] pairing and print the decimal expansion");
  pair->add_option("a", a, "First number (p/q or decimal)")->required();
  pair->add_option("b", b, "Second number")->required();

  auto* unpair = app.add_subcommand("unpair", "Split one number into the pair it encodes");
  unpair->add_flag("--unit", unit, "Invert the (0,1] pairing");
  unpair->add_option("y", a, "Encoded number")->required();

  auto* phi = app.add_subcommand("phi", "Apply the bijection R^n -> R^k to a tuple");
  phi->add_flag("--inverse", inverse, "Apply the inverse of the R^k -> R^n bijection");
  phi->add_option("n", n, "Input arity")->required()->check(CLI::PositiveNumber);
  phi->add_option("k", k, "Output arity")->required()->check(CLI::PositiveNumber);
  phi->add_option("coords", coords, "Tuple as separate coordinates or one \"(a, b)\" argument")->required();

  auto* add = app.add_subcommand("add", "Transported addition x (+) y in R^n_k");
  add->add_option("n", n)->required()->check(CLI::PositiveNumber);
  add->add_option("k", k)->required()->check(CLI::PositiveNumber);
  add->add_option("x", a, "Tuple such as \"(1/2, 1/3)\" or 1/2,1/3")->required();
  add->add_option("y", b, "Tuple")->required();

  auto* smul = app.add_subcommand("smul", "Transported scalar multiple c (.) x in R^n_k");
  smul->add_option("n", n)->required()->check(CLI::PositiveNumber);
  smul->add_option("k", k)->required()->check(CLI::PositiveNumber);
  smul->add_option("c", c, "Scalar")->required();
  smul->add_option("x", a, "Tuple")->required();

  auto* axioms = app.add_subcommand("axioms", "Check the vector-space axioms and linearity of phi");
  axioms->add_option("n", n)->required()->check(CLI::PositiveNumber);
  axioms->add_option("k", k)->required()->check(CLI::PositiveNumber);
  axioms->add_option("--trials", trials, "Random trials per law")->check(CLI::PositiveNumber);
  axioms->add_option("--seed", seed, "Generator seed");
  axioms->add_flag("--json", json, "Print the reports as JSON");

  auto* figure = app.add_subcommand("figure", "Emit CSV samples of the tangent-semicircle map");
  figure->add_option("--samples", samples, "Number of points")->check(CLI::Range(std::size_t{2}, std::size_t{10000000}));
  figure->add_option("--out", path, "Output file (default stdout)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }

  try {
    if (pair->parsed()) return cmd_pair(a, b, unit, out);
    if (unpair->parsed()) return cmd_unpair(a, unit, out);
    if (phi->parsed()) return cmd_phi(n, k, detail::joined(coords), inverse, out);
    if (add->parsed()) return cmd_add(n, k, a, b, out);
    if (smul->parsed()) return cmd_smul(n, k, c, a, out);
    if (axioms->parsed()) return cmd_axioms(n, k, trials, seed, json, out);
    if (figure->parsed()) return cmd_figure(samples, path, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
  return input_error;
}

}  // namespace redim::cli

#endif  // REDIM_TOOLS_COMMANDS_HPP
