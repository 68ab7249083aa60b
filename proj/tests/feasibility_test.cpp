#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "moonforge/errors.hpp"
#include "moonforge/feasibility.hpp"
#include "moonforge/random.hpp"
#include "oracles.hpp"

namespace moonforge {
namespace {

using testing::ints;
using testing::parse;

Witness subset(std::vector<std::size_t> idx, Rational deficit) {
  return {std::move(idx), std::move(deficit), WitnessKind::kSubsetDeficit};
}

TEST(CheckFast, Examples) {
  EXPECT_TRUE(check_fast(ints({1, 1, 1})).feasible);
  EXPECT_TRUE(check_fast(parse("1/2,1/2,2")).feasible);
  EXPECT_TRUE(check_fast(ScoreSequence()).feasible);
  EXPECT_TRUE(check_fast(ints({0})).feasible);

  auto v = check_fast(ints({0, 0, 2}));
  ASSERT_FALSE(v.feasible);
  EXPECT_EQ(*v.witness, subset({0, 1}, Rational(1)));

  v = check_fast(ints({1, 1, 2}));
  ASSERT_FALSE(v.feasible);
  EXPECT_EQ(v.witness->kind, WitnessKind::kFullSumMismatch);
  EXPECT_EQ(v.witness->deficit, Rational(-1));
  EXPECT_EQ(v.witness->indices, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(CheckFast, ShortfallOnTheWholeSetIsAFullSumMismatch) {
  auto v = check_fast(ints({0, 0}));
  ASSERT_FALSE(v.feasible);
  EXPECT_EQ(v.witness->kind, WitnessKind::kFullSumMismatch);
  EXPECT_EQ(v.witness->deficit, Rational(1));
}

TEST(CheckFast, WitnessMapsBackToOriginalIndices) {
  auto v = check_fast(ints({3, 0, 2, 0, 5}));
  ASSERT_FALSE(v.feasible);
  EXPECT_EQ(*v.witness, subset({1, 3}, Rational(1)));
}

TEST(CheckFast, RejectsNegativeEntries) {
  EXPECT_THROW(check_fast(parse("2,-1,2")), ValidationError);
  EXPECT_THROW(check_exhaustive(parse("2,-1,2")), ValidationError);
}

TEST(CheckExhaustive, Examples) {
  EXPECT_TRUE(check_exhaustive(ints({0, 1, 2})).feasible);
  EXPECT_TRUE(check_exhaustive(parse("1/3,2/3,2")).feasible);
  auto v = check_exhaustive(ints({0, 0, 2}));
  ASSERT_FALSE(v.feasible);
  EXPECT_EQ(*v.witness, subset({0, 1}, Rational(1)));
  EXPECT_TRUE(check_exhaustive(ScoreSequence()).feasible);
}

TEST(CheckExhaustive, LexicographicallySmallestWitness) {
  // Every pair among the first three is short; {1,2} comes first.
  auto v = check_exhaustive(parse("1/4,1/4,1/4,21/4"));
  ASSERT_FALSE(v.feasible);
  EXPECT_EQ(*v.witness, subset({0, 1}, Rational(1, 2)));
  // Only {2,3} is short.
  v = check_exhaustive(parse("3,0,1/2,5/2"));
  ASSERT_FALSE(v.feasible);
  EXPECT_EQ(*v.witness, subset({1, 2}, Rational(1, 2)));
}

TEST(CheckExhaustive, EnforcesCap) {
  std::vector<std::int64_t> big(21, 10);
  EXPECT_THROW(check_exhaustive(ScoreSequence::from_integers(big)), ValidationError);
  EXPECT_NO_THROW(check_exhaustive(ScoreSequence::from_integers(big), 21));
}

void expect_witness_sound(const ScoreSequence& seq, const Witness& w) {
  Rational sum;
  for (auto i : w.indices) sum += seq[i];
  EXPECT_TRUE(std::is_sorted(w.indices.begin(), w.indices.end()));
  EXPECT_EQ(Rational(BigInt(binom2(w.indices.size()))) - sum, w.deficit);
  if (w.kind == WitnessKind::kSubsetDeficit) {
    EXPECT_GT(w.deficit, Rational(0));
    EXPECT_LT(w.indices.size(), seq.size());
  } else {
    EXPECT_EQ(w.indices.size(), seq.size());
    EXPECT_FALSE(w.deficit.is_zero());
  }
}

TEST(Feasibility, FastMatchesExhaustiveOnAllSmallIntegerSequences) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& v : testing::all_integer_sequences(n, 5)) {
      auto seq = ScoreSequence::from_integers(v);
      auto fast = check_fast(seq);
      auto slow = check_exhaustive(seq);
      ASSERT_EQ(fast.feasible, slow.feasible) << seq.str();
      ASSERT_EQ(fast.feasible, testing::brute_force_feasible(seq)) << seq.str();
      if (!fast.feasible) {
        expect_witness_sound(seq, *fast.witness);
        expect_witness_sound(seq, *slow.witness);
      }
    }
  }
}

TEST(Feasibility, FastMatchesExhaustiveOnRandomRationals) {
  std::mt19937_64 rng(2024);
  int feasible = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    auto seq = testing::random_rational_sequence(rng, rng() % 13, 8);
    auto fast = check_fast(seq);
    auto slow = check_exhaustive(seq);
    ASSERT_EQ(fast.feasible, slow.feasible) << seq.str();
    feasible += fast.feasible;
    if (!fast.feasible) {
      expect_witness_sound(seq, *fast.witness);
      expect_witness_sound(seq, *slow.witness);
    }
  }
  EXPECT_GT(feasible, 50);
}

// Move mass from one entry to another; whatever the result, both checks
// must still agree.
TEST(Feasibility, TransferFuzzAgreement) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng() % 8;
    std::vector<Rational> v;
    // A random tournament's scores are feasible.
    std::vector<std::int64_t> s(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) ++s[rng() % 2 ? i : j];
    }
    for (auto x : s) v.emplace_back(x);
    const std::size_t i = rng() % n, j = (i + 1 + rng() % (n - 1)) % n;
    Rational delta(BigInt(rng() % 7), BigInt(1 + rng() % 4));
    if (delta > v[j]) delta = v[j];
    v[i] += delta;
    v[j] -= delta;
    ScoreSequence seq(v);
    EXPECT_EQ(check_fast(seq).feasible, check_exhaustive(seq).feasible) << seq.str();
  }
}

TEST(MaxDeficitExcludingFirst, Examples) {
  EXPECT_EQ(max_deficit_excluding_first(parse("6/5,6/5,3/5")), Rational(2, 5));
  EXPECT_EQ(max_deficit_excluding_first(ints({0})), Rational(0));
  EXPECT_EQ(max_deficit_excluding_first(ints({1, 1, 1})), Rational(0));
  EXPECT_THROW(max_deficit_excluding_first(ScoreSequence()), ValidationError);
}

TEST(MaxDeficitExcludingFirst, MatchesSubsetEnumerationAndStaysBelowTheMaximum) {
  std::mt19937_64 rng(7);
  for (int checked = 0; checked < 400; ++checked) {
    const std::size_t n = 1 + rng() % 10;
    auto seq = random_feasible(n, 1 + rng() % 6, rng());
    std::vector<Rational> v(seq.begin(), seq.end());
    auto top = std::max_element(v.begin(), v.end());
    std::rotate(v.begin(), top, top + 1);
    ScoreSequence ordered(v);
    Rational slack = max_deficit_excluding_first(ordered);
    EXPECT_EQ(slack, testing::brute_force_slack(ordered)) << ordered.str();
    if (n >= 2) EXPECT_GT(ordered[0], slack) << ordered.str();
  }
}

}  // namespace
}  // namespace moonforge
