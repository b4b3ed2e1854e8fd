#ifndef REDIM_VERIFY_HPP
#define REDIM_VERIFY_HPP

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "redim/sampling.hpp"
#include "redim/transport.hpp"

// Randomized, exact witnesses for the vector-space laws of a transported
// space and for phi being a linear bijection onto R^k.

namespace redim {

struct LawCheck {
  std::string name;
  std::size_t trials = 0;
  std::size_t passes = 0;
  /// Inputs of the first failing trial, rationals as "p/q" strings.
  std::optional<nlohmann::json> counterexample;

  bool passed() const { return passes == trials; }
};

struct VerificationReport {
  std::string kind;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::string generator;
  std::vector<LawCheck> laws;

  bool all_passed() const {
    for (const LawCheck& law : laws)
      if (!law.passed()) return false;
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json doc{{"kind", kind},   {"n", n},
                       {"k", k},         {"seed", seed},
                       {"trials", trials}, {"generator", generator},
                       {"all_passed", all_passed()}};
    doc["laws"] = nlohmann::json::array();
    for (const LawCheck& law : laws) {
      nlohmann::json entry{{"name", law.name}, {"trials", law.trials}, {"passes", law.passes}};
      entry["counterexample"] = law.counterexample ? *law.counterexample : nlohmann::json(nullptr);
      doc["laws"].push_back(std::move(entry));
    }
    return doc;
  }

  /// Fixed-width text table, one law per line.
  std::string table() const {
    std::ostringstream os;
    os << kind << " for R^" << n << "_" << k << " (seed " << seed << ", " << trials
       << " trials)\n";
    for (const LawCheck& law : laws) {
      std::string name = law.name;
      name.resize(std::max<std::size_t>(name.size(), 44), ' ');
      os << "  " << name << law.passes << "/" << law.trials << (law.passed() ? "  pass" : "  FAIL")
         << "\n";
    }
    return os.str();
  }
};

using AxiomReport = VerificationReport;
using IsoReport = VerificationReport;

namespace detail {

inline nlohmann::json to_json_value(const Rational& r) { return r.str(); }

template <class Tag>
nlohmann::json to_json_value(const BasicTuple<Tag>& t) {
  nlohmann::json out = nlohmann::json::array();
  for (const Rational& r : t) out.push_back(r.str());
  return out;
}

// Runs `trials` instances of one law; `instance` draws its inputs from the
// per-trial generator, records them in `inputs`, and returns whether both
// sides agree. Exceptions count as failures.
inline LawCheck run_law(std::string name, std::size_t trials, std::uint64_t seed,
                        std::uint32_t stream,
                        const std::function<bool(std::mt19937_64&, nlohmann::json&)>& instance) {
  LawCheck law{std::move(name), trials, 0, std::nullopt};
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng = trial_rng(seed, t, stream);
    nlohmann::json inputs = nlohmann::json::object();
    bool ok = false;
    try {
      ok = instance(rng, inputs);
    } catch (const std::exception& e) {
      inputs["error"] = e.what();
    }
    if (ok)
      ++law.passes;
    else if (!law.counterexample)
      law.counterexample = std::move(inputs);
  }
  return law;
}

}  // namespace detail

inline const RationalSampler& default_sampler() {
  static const RationalSampler sampler(1000, 1000);
  return sampler;
}

/// Evaluates both sides of each of the eight vector-space axioms on seeded
/// random inputs with exact equality.
inline AxiomReport check_axioms(const TransportedSpace& s, std::size_t trials, std::uint64_t seed,
                                const RationalSampler& sampler = default_sampler()) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  AxiomReport report{"axioms", s.n(), s.k(), seed, trials, sampler.describe(), {}};

  const auto element = [&](std::mt19937_64& rng, nlohmann::json& inputs, const char* key) {
    RealTuple x = sampler.draw_tuple<RealTuple>(rng, s.n());
    inputs[key] = detail::to_json_value(x);
    return x;
  };
  const auto scalar = [&](std::mt19937_64& rng, nlohmann::json& inputs, const char* key) {
    Rational c = sampler.draw(rng);
    inputs[key] = detail::to_json_value(c);
    return c;
  };

  using Instance = std::function<bool(std::mt19937_64&, nlohmann::json&)>;
  const std::vector<std::pair<std::string, Instance>> axioms = {
      {"commutativity of addition",
       [&](auto& rng, auto& in) {
         const auto x = element(rng, in, "x");
         const auto y = element(rng, in, "y");
         return vadd(s, x, y) == vadd(s, y, x);
       }},
      {"associativity of addition",
       [&](auto& rng, auto& in) {
         const auto x = element(rng, in, "x");
         const auto y = element(rng, in, "y");
         const auto z = element(rng, in, "z");
         return vadd(s, x, vadd(s, y, z)) == vadd(s, vadd(s, x, y), z);
       }},
      {"additive identity",
       [&](auto& rng, auto& in) {
         const auto x = element(rng, in, "x");
         return vadd(s, x, zero(s)) == x;
       }},
      {"additive inverse",
       [&](auto& rng, auto& in) {
         const auto x = element(rng, in, "x");
         return vadd(s, x, neg(s, x)) == zero(s);
       }},
      {"scalar identity",
       [&](auto& rng, auto& in) {
         const auto x = element(rng, in, "x");
         return smul(s, Rational(1), x) == x;
       }},
      {"compatibility of scalar multiplication",
       [&](auto& rng, auto& in) {
         const auto x = element(rng, in, "x");
         const auto c1 = scalar(rng, in, "c1");
         const auto c2 = scalar(rng, in, "c2");
         return smul(s, c1, smul(s, c2, x)) == smul(s, c1 * c2, x);
       }},
      {"distributivity over vector addition",
       [&](auto& rng, auto& in) {
         const auto x = element(rng, in, "x");
         const auto y = element(rng, in, "y");
         const auto c = scalar(rng, in, "c");
         return smul(s, c, vadd(s, x, y)) == vadd(s, smul(s, c, x), smul(s, c, y));
       }},
      {"distributivity over field addition",
       [&](auto& rng, auto& in) {
         const auto x = element(rng, in, "x");
         const auto c1 = scalar(rng, in, "c1");
         const auto c2 = scalar(rng, in, "c2");
         return smul(s, c1 + c2, x) == vadd(s, smul(s, c1, x), smul(s, c2, x));
       }},
  };

  std::uint32_t stream = 0;
  for (const auto& [name, instance] : axioms)
    report.laws.push_back(detail::run_law(name, trials, seed, stream++, instance));
  return report;
}

/// Checks phi(x (+) y) = phi(x) + phi(y), phi(c (.) x) = c phi(x), and both
/// round trips, on seeded random inputs.
inline IsoReport check_isomorphism(const TransportedSpace& s, std::size_t trials,
                                   std::uint64_t seed,
                                   const RationalSampler& sampler = default_sampler()) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  IsoReport report{"isomorphism", s.n(), s.k(), seed, trials, sampler.describe(), {}};
  const Phi& phi = s.phi();

  using Instance = std::function<bool(std::mt19937_64&, nlohmann::json&)>;
  const std::vector<std::pair<std::string, Instance>> laws = {
      {"additivity phi(x+y) = phi(x)+phi(y)",
       [&](auto& rng, auto& in) {
         const auto x = sampler.draw_tuple<RealTuple>(rng, s.n());
         const auto y = sampler.draw_tuple<RealTuple>(rng, s.n());
         in["x"] = detail::to_json_value(x);
         in["y"] = detail::to_json_value(y);
         return phi.forward(vadd(s, x, y)) == phi.forward(x) + phi.forward(y);
       }},
      {"homogeneity phi(c.x) = c phi(x)",
       [&](auto& rng, auto& in) {
         const auto x = sampler.draw_tuple<RealTuple>(rng, s.n());
         const auto c = sampler.draw(rng);
         in["x"] = detail::to_json_value(x);
         in["c"] = detail::to_json_value(c);
         return phi.forward(smul(s, c, x)) == c * phi.forward(x);
       }},
      {"round trip backward(forward(x)) = x",
       [&](auto& rng, auto& in) {
         const auto x = sampler.draw_tuple<RealTuple>(rng, s.n());
         in["x"] = detail::to_json_value(x);
         return phi.backward(phi.forward(x)) == x;
       }},
      {"round trip forward(backward(v)) = v",
       [&](auto& rng, auto& in) {
         const auto v = sampler.draw_tuple<KVector>(rng, s.k());
         in["v"] = detail::to_json_value(v);
         return phi.forward(phi.backward(v)) == v;
       }},
  };

  std::uint32_t stream = 100;
  for (const auto& [name, instance] : laws)
    report.laws.push_back(detail::run_law(name, trials, seed, stream++, instance));
  return report;
}

}  // namespace redim

#endif  // REDIM_VERIFY_HPP
