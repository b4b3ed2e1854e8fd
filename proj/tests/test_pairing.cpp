#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "support.hpp"

using redim::build_phi;
using redim::fold_tuple;
using redim::KVector;
using redim::pair_reals;
using redim::pair_unit;
using redim::Phi;
using redim::Rational;
using redim::RealTuple;
using redim::unfold_tuple;
using redim::unpair_reals;
using redim::unpair_unit;
using testing_support::q;

namespace {

void expect_zero_arity(const std::function<void()>& f) {
  try {
    f();
    FAIL() << "expected zero arity";
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "zero arity");
  }
}

}  // namespace

TEST(PairUnit, Examples) {
  EXPECT_EQ(pair_unit(q("1/2"), q("1/2")), q("9/20"));
  EXPECT_EQ(pair_unit(Rational(1), Rational(1)), Rational(1));
  EXPECT_EQ(pair_unit(q("1/7"), q("1/7")), testing_support::from_mpq(mpq_class(mpz_class("114422885577"), mpz_class("999999999999"))));
}

TEST(PairUnit, MatchesDigitPrefixOracle) {
  for (std::uint64_t t = 0; t < 200; ++t) {
    auto rng = redim::trial_rng(41, t);
    const auto& s = t % 2 ? testing_support::small_uniform() : testing_support::wide();
    const Rational a = s.draw_unit(rng);
    const Rational b = s.draw_unit(rng);
    const Rational y = pair_unit(a, b);
    const std::size_t n = 60;
    ASSERT_EQ(oracle::nines_digits(y.num(), y.den(), n),
              oracle::interleave_prefix(oracle::nines_digits(a.num(), a.den(), 3 * n),
                                        oracle::nines_digits(b.num(), b.den(), 3 * n), n))
        << a << " " << b;
  }
}

TEST(PairUnit, DomainErrors) {
  EXPECT_THROW(pair_unit(Rational(2), q("1/2")), std::domain_error);
  EXPECT_THROW(pair_unit(q("1/2"), Rational(0)), std::domain_error);
  EXPECT_THROW(unpair_unit(q("-1/2")), std::domain_error);
}

TEST(UnpairUnit, Examples) {
  EXPECT_EQ(unpair_unit(q("9/20")), std::make_pair(q("1/2"), q("1/2")));
  EXPECT_EQ(unpair_unit(Rational(1)), std::make_pair(Rational(1), Rational(1)));
  EXPECT_EQ(unpair_unit(q("1/2")), std::make_pair(q("1/2"), Rational(1)));
  const std::string half = oracle::nines_digits(1, 2, 40);
  EXPECT_EQ(oracle::take_groups(half, 0).substr(0, 10), "4999999999");
  EXPECT_EQ(oracle::take_groups(half, 1).substr(0, 10), "9999999999");
}

TEST(PairUnit, InjectiveOnManyDistinctPairs) {
  std::vector<std::pair<Rational, Rational>> inputs;
  std::vector<Rational> images;
  for (std::uint64_t t = 0; t < 10000; ++t) {
    auto rng = redim::trial_rng(42, t);
    inputs.emplace_back(testing_support::wide().draw_unit(rng), testing_support::wide().draw_unit(rng));
  }
  std::sort(inputs.begin(), inputs.end());
  inputs.erase(std::unique(inputs.begin(), inputs.end()), inputs.end());
  for (const auto& [a, b] : inputs) images.push_back(pair_unit(a, b));
  std::sort(images.begin(), images.end());
  EXPECT_EQ(std::adjacent_find(images.begin(), images.end()), images.end());
  EXPECT_GT(images.size(), 9900u);
}

TEST(PairUnit, SurjectivityWitness) {
  for (std::uint64_t t = 0; t < 200; ++t) {
    auto rng = redim::trial_rng(43, t);
    const auto& s = t % 2 ? testing_support::small_uniform() : testing_support::wide();
    const Rational y = s.draw_unit(rng);
    const auto [a, b] = unpair_unit(y);
    ASSERT_EQ(pair_unit(a, b), y) << y;
  }
}

TEST(PairReals, Origin) {
  EXPECT_EQ(pair_reals(Rational(0), Rational(0)), Rational(0));
  EXPECT_EQ(unpair_reals(Rational(0)), std::make_pair(Rational(0), Rational(0)));
  // The same holds with the closed-form glue map.
  const auto g = redim::real_to_unit_rational();
  EXPECT_EQ(pair_reals(Rational(0), Rational(0), g), Rational(0));
}

TEST(PairReals, RoundTripsWithEitherGlue) {
  const auto g = redim::real_to_unit_rational();
  const redim::RationalSampler tiny(20, 12, redim::RationalSampler::DenominatorLaw::uniform);
  for (std::uint64_t t = 0; t < 200; ++t) {
    auto rng = redim::trial_rng(44, t);
    const Rational a = testing_support::wide().draw(rng);
    const Rational b = testing_support::wide().draw(rng);
    ASSERT_EQ(unpair_reals(pair_reals(a, b)), std::make_pair(a, b)) << a << " " << b;
    const Rational y = testing_support::wide().draw(rng);
    const auto [c, d] = unpair_reals(y);
    ASSERT_EQ(pair_reals(c, d), y) << y;
    // The closed-form glue scrambles denominators, so keep its inputs small.
    const Rational e = tiny.draw(rng);
    const Rational f = tiny.draw(rng);
    ASSERT_EQ(unpair_reals(pair_reals(e, f, g), g), std::make_pair(e, f)) << e << " " << f;
  }
}

TEST(Fold, Examples) {
  EXPECT_EQ(fold_tuple(RealTuple{q("5/3")}), q("5/3"));
  EXPECT_EQ(fold_tuple(RealTuple{0, 0}), Rational(0));
  EXPECT_EQ(fold_tuple(RealTuple{0, 0, 0}), Rational(0));
  EXPECT_EQ(unfold_tuple(q("5/3"), 1), (RealTuple{q("5/3")}));
  EXPECT_EQ(unfold_tuple(Rational(0), 2), (RealTuple{0, 0}));
  expect_zero_arity([] { fold_tuple(RealTuple{}); });
  expect_zero_arity([] { unfold_tuple(Rational(1), 0); });
}

TEST(Fold, AssociatesToTheRight) {
  const RealTuple x{q("1/3"), q("-2"), q("7/10")};
  EXPECT_EQ(fold_tuple(x), pair_reals(x[0], pair_reals(x[1], x[2])));
}

TEST(Fold, UnfoldInvertsFold) {
  for (std::size_t n : {2, 3, 4}) {
    for (std::uint64_t t = 0; t < 200; ++t) {
      auto rng = redim::trial_rng(45, t, static_cast<std::uint32_t>(n));
      const RealTuple x = testing_support::wide().draw_tuple<RealTuple>(rng, n);
      ASSERT_EQ(unfold_tuple(fold_tuple(x), n), x) << x;
    }
  }
}

TEST(BuildPhi, Examples) {
  EXPECT_EQ(build_phi(3, 1).forward(RealTuple{0, 0, 0}), (KVector{0}));
  const Phi p14 = build_phi(1, 4);
  EXPECT_EQ(p14.backward(p14.forward(RealTuple{q("7/5")})), (RealTuple{q("7/5")}));
  EXPECT_EQ(build_phi(1, 1).forward(RealTuple{q("7/5")}), (KVector{q("7/5")}));
  EXPECT_EQ(p14.source(), (redim::Space{redim::Domain::real_tuples, 1}));
  EXPECT_EQ(p14.target(), (redim::Space{redim::Domain::standard_space, 4}));
  expect_zero_arity([] { build_phi(0, 2); });
  expect_zero_arity([] { build_phi(2, 0); });
  EXPECT_THROW(build_phi(2, 3).forward(RealTuple{1}), std::invalid_argument);
  EXPECT_THROW(build_phi(2, 3).backward(KVector{1, 2}), std::invalid_argument);
}

TEST(BuildPhi, BijectiveForAllTestedShapes) {
  const std::pair<std::size_t, std::size_t> shapes[] = {{1, 2}, {2, 1}, {2, 3}, {3, 1}, {1, 4}, {3, 2}};
  for (const auto& [n, k] : shapes) {
    const Phi phi = build_phi(n, k);
    for (std::uint64_t t = 0; t < 200; ++t) {
      auto rng = redim::trial_rng(46, t, static_cast<std::uint32_t>(10 * n + k));
      const RealTuple x = testing_support::wide().draw_tuple<RealTuple>(rng, n);
      ASSERT_EQ(phi.backward(phi.forward(x)), x) << n << "," << k << " " << x;
      const KVector v = testing_support::wide().draw_tuple<KVector>(rng, k);
      ASSERT_EQ(phi.forward(phi.backward(v)), v) << n << "," << k << " " << v;
    }
  }
}

TEST(BuildPhi, SmallUniformDenominators) {
  // Unrestricted denominators, kept small so the joint cycles stay short.
  const redim::RationalSampler s(50, 12, redim::RationalSampler::DenominatorLaw::uniform);
  for (const auto& [n, k] : {std::pair<std::size_t, std::size_t>{2, 1}, {1, 3}, {2, 2}}) {
    const Phi phi = build_phi(n, k);
    for (std::uint64_t t = 0; t < 100; ++t) {
      auto rng = redim::trial_rng(47, t);
      const RealTuple x = s.draw_tuple<RealTuple>(rng, n);
      ASSERT_EQ(phi.backward(phi.forward(x)), x) << x;
    }
  }
}

TEST(BuildPhi, SquareShapeIsPointwiseIdentity) {
  // unfold at arity n is the exact inverse of fold at arity n.
  for (std::size_t n : {1, 2, 3}) {
    const Phi phi = build_phi(n, n);
    for (std::uint64_t t = 0; t < 50; ++t) {
      auto rng = redim::trial_rng(48, t);
      const RealTuple x = testing_support::wide().draw_tuple<RealTuple>(rng, n);
      ASSERT_EQ(phi.forward(x).coords(), x.coords());
    }
  }
}

TEST(BuildPhi, InverseSwapsDirections) {
  const Phi phi = build_phi(2, 3);
  const auto inv = phi.inverse();
  EXPECT_EQ(inv.source(), phi.target());
  const KVector v{q("1/2"), q("-3"), q("2/7")};
  EXPECT_EQ(inv.forward(v), phi.backward(v));
}

TEST(IdentityPhi, CopiesCoordinates) {
  const Phi id = redim::identity_phi(3);
  EXPECT_EQ(id.forward(RealTuple{1, 2, 3}), (KVector{1, 2, 3}));
  EXPECT_EQ(id.backward(KVector{1, 2, 3}), (RealTuple{1, 2, 3}));
}
