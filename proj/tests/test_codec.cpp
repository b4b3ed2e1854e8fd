#include <gtest/gtest.h>

#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "support.hpp"

using redim::deinterleave;
using redim::DigitGroup;
using redim::GroupSequence;
using redim::interleave;
using redim::PeriodicExpansion;
using redim::Rational;
using redim::segment;
using redim::to_expansion;
using testing_support::q;

namespace {

PeriodicExpansion ex(const char* text) { return PeriodicExpansion::parse(text); }

std::vector<std::string> rendered(const std::vector<DigitGroup>& groups) {
  std::vector<std::string> out;
  for (const DigitGroup& g : groups) out.push_back(g.str());
  return out;
}

// First `count` groups of a sequence, rendered.
std::vector<std::string> leading(const GroupSequence& s, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(s.at(i).str());
  return out;
}

std::string digits_of(const GroupSequence& s, std::size_t groups) {
  std::string out;
  for (std::size_t i = 0; i < groups; ++i) out += s.at(i).str();
  return out;
}

using Groups = std::vector<std::string>;

}  // namespace

TEST(Segment, QuarterPercentSplitsAsZeroRunGroups) {
  const GroupSequence s = segment(to_expansion(q("1/400")));
  EXPECT_EQ(rendered(s.preperiod()), (Groups{"002", "4"}));
  EXPECT_EQ(rendered(s.period()), (Groups{"9"}));
  EXPECT_EQ(s.str(), "002 4 | (9)");
}

TEST(Segment, LongerZeroRunExample) {
  // The digit string 0.003801007373... groups as 003 8 01 007 3 7 3.
  EXPECT_EQ(leading(segment(ex("0.0038010073(73)")), 7), (Groups{"003", "8", "01", "007", "3", "7", "3"}));
  // The grouping 003 8 001 007 3 7 3 belongs to 0.0038001007373...
  EXPECT_EQ(leading(segment(ex("0.00380010073(73)")), 7), (Groups{"003", "8", "001", "007", "3", "7", "3"}));
  EXPECT_EQ(oracle::split_groups("0038001007373"), (Groups{"003", "8", "001", "007", "3", "7", "3"}));
}

TEST(Segment, AllNonzeroPeriodGivesSingletons) {
  const GroupSequence s = segment(to_expansion(q("1/7")));
  EXPECT_TRUE(s.preperiod().empty());
  EXPECT_EQ(rendered(s.period()), (Groups{"1", "4", "2", "8", "5", "7"}));
  EXPECT_EQ(digits_of(s, 18), oracle::nines_digits(1, 7, 18));
}

TEST(Segment, GroupCycleCanSpanSeveralDigitPeriods) {
  EXPECT_EQ(segment(to_expansion(q("1/99"))).str(), "| (01)");
  EXPECT_EQ(segment(ex("0.(2001)")).str(), "| (2 001)");
  EXPECT_EQ(segment(ex("0.0(2001)")).str(), "02 | (001 2)");
  // After the first "1" the stream of 0.(1000000000) is nine zeros then a 1,
  // so the group cycle starts one group late.
  EXPECT_EQ(segment(ex("0.(1000000000)")).str(), "1 | (0000000001)");
}

TEST(Segment, SoundAndWellShapedOnRandomValues) {
  const std::regex shape("0*[1-9]");
  for (std::uint64_t t = 0; t < 400; ++t) {
    auto rng = redim::trial_rng(21, t);
    const Rational x = (t % 2 ? testing_support::small_uniform() : testing_support::wide()).draw_unit(rng);
    const PeriodicExpansion e = to_expansion(x);
    const GroupSequence s = segment(e);
    const std::size_t digits = e.preperiod().size() + 3 * e.period().size();
    std::string joined;
    std::size_t i = 0;
    while (joined.size() < digits) {
      ASSERT_TRUE(std::regex_match(s.at(i).str(), shape)) << s.at(i).str();
      joined += s.at(i++).str();
    }
    ASSERT_EQ(joined.substr(0, digits), oracle::nines_digits(x.num(), x.den(), digits)) << x;
    ASSERT_EQ(s.join(), e) << x;
  }
}

TEST(GroupSequence, RejectsMalformedGroups) {
  EXPECT_THROW(GroupSequence::make({}, {}), std::invalid_argument);
  EXPECT_THROW(GroupSequence::make({}, {DigitGroup{2, '0'}}), std::invalid_argument);
  const GroupSequence s = GroupSequence::make({DigitGroup{0, '9'}}, {DigitGroup{0, '9'}, DigitGroup{0, '9'}});
  EXPECT_EQ(s.str(), "| (9)");
}

TEST(Interleave, HalfWithHalf) {
  const GroupSequence half = segment(to_expansion(q("1/2")));
  const PeriodicExpansion y = interleave(half, half);
  EXPECT_EQ(y.str(), "0.44(9)");
  EXPECT_EQ(redim::from_expansion(y), q("9/20"));
  EXPECT_EQ(y.prefix(20), oracle::interleave_prefix(oracle::nines_digits(1, 2, 20), oracle::nines_digits(1, 2, 20), 20));
}

TEST(Interleave, AllNinesIsFixed) {
  const GroupSequence nines = segment(ex("0.(9)"));
  EXPECT_EQ(interleave(nines, nines).str(), "0.(9)");
}

TEST(Interleave, SeventhWithSeventh) {
  const GroupSequence s = segment(to_expansion(q("1/7")));
  const PeriodicExpansion y = interleave(s, s);
  EXPECT_EQ(y.str(), "0.(114422885577)");
  EXPECT_EQ(redim::from_expansion(y), testing_support::from_mpq(mpq_class(mpz_class("114422885577"), mpz_class("999999999999"))));
  const std::string seventh = oracle::nines_digits(1, 7, 40);
  EXPECT_EQ(y.prefix(36), oracle::interleave_prefix(seventh, seventh, 36));
}

TEST(Interleave, AgreesWithPrefixOracleOnRandomPairs) {
  for (std::uint64_t t = 0; t < 300; ++t) {
    auto rng = redim::trial_rng(22, t);
    const auto& sampler = t % 2 ? testing_support::small_uniform() : testing_support::wide();
    const Rational a = sampler.draw_unit(rng);
    const Rational b = sampler.draw_unit(rng);
    const PeriodicExpansion y = interleave(segment(to_expansion(a)), segment(to_expansion(b)));
    const std::size_t n = 120;
    // Each group holds at least one digit, so 2n digits of each side cover n output digits.
    const std::string expected =
        oracle::interleave_prefix(oracle::nines_digits(a.num(), a.den(), 2 * n), oracle::nines_digits(b.num(), b.den(), 2 * n), n);
    ASSERT_EQ(y.prefix(n), expected) << a << " " << b;
    ASSERT_TRUE(oracle::is_minimal(y.preperiod(), y.period())) << y;
  }
}

TEST(Deinterleave, InvertsExamples) {
  const auto [a, b] = deinterleave(ex("0.44(9)"));
  EXPECT_EQ(a, segment(to_expansion(q("1/2"))));
  EXPECT_EQ(b, segment(to_expansion(q("1/2"))));
  const auto [c, d] = deinterleave(ex("0.(9)"));
  EXPECT_EQ(c.str(), "| (9)");
  EXPECT_EQ(d.str(), "| (9)");
  const auto [e, f] = deinterleave(ex("0.(114422885577)"));
  EXPECT_EQ(e, segment(to_expansion(q("1/7"))));
  EXPECT_EQ(f, segment(to_expansion(q("1/7"))));
}

TEST(Deinterleave, OddGroupsGoFirst) {
  // 0.4(9): groups 4 9 9 9 ... -> first gets 4 9 9 ..., second 9 9 ...
  const auto [a, b] = deinterleave(ex("0.4(9)"));
  EXPECT_EQ(redim::from_expansion(a.join()), q("1/2"));
  EXPECT_EQ(redim::from_expansion(b.join()), Rational(1));
  const std::string digits = ex("0.0304(5)").prefix(60);
  EXPECT_EQ(deinterleave(ex("0.0304(5)")).first.join().prefix(20), oracle::take_groups(digits, 0).substr(0, 20));
  EXPECT_EQ(deinterleave(ex("0.0304(5)")).second.join().prefix(20), oracle::take_groups(digits, 1).substr(0, 20));
}

TEST(Deinterleave, RoundTripsBothWays) {
  for (std::uint64_t t = 0; t < 500; ++t) {
    auto rng = redim::trial_rng(23, t);
    const auto& sampler = t % 2 ? testing_support::small_uniform() : testing_support::wide();
    const Rational a = sampler.draw_unit(rng);
    const Rational b = sampler.draw_unit(rng);
    const GroupSequence ga = segment(to_expansion(a));
    const GroupSequence gb = segment(to_expansion(b));
    const auto [ra, rb] = deinterleave(interleave(ga, gb));
    ASSERT_EQ(ra, ga) << a << " " << b;
    ASSERT_EQ(rb, gb) << a << " " << b;

    const PeriodicExpansion y = to_expansion(sampler.draw_unit(rng));
    const auto [ya, yb] = deinterleave(y);
    ASSERT_EQ(interleave(ya, yb), y) << y;
  }
}
