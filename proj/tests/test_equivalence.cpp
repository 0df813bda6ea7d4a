#include <gtest/gtest.h>

#include "invseq/enumerate.hpp"
#include "invseq/equivalence.hpp"

using namespace invseq;

namespace {

Pattern P(const char* s) { return Pattern::parse(s); }
InversionSequence E(const char* s) { return InversionSequence::parse(s); }

}  // namespace

TEST(Overlap, Basics) {
  EXPECT_TRUE(is_nonoverlapping(P("0021")));
  EXPECT_TRUE(is_nonoverlapping(P("0121")));
  EXPECT_TRUE(are_mutually_nonoverlapping(P("0021"), P("0121")));
  EXPECT_TRUE(is_nonoverlapping(P("100")));
  EXPECT_FALSE(is_nonoverlapping(P("000")));
  EXPECT_FALSE(is_nonoverlapping(P("0102")));
  EXPECT_THROW(are_mutually_nonoverlapping(P("001"), P("0012")), UsageError);
}

TEST(Overlap, AgreesWithSearch) {
  // Two occurrences sharing at least two entries show up as starts closer than r - 1.
  for (const auto& p : enumerate_patterns(3)) {
    bool close = false;
    for_each_inversion_sequence(7, [&](std::span<const int> w) {
      const auto em = find_occurrences(w, p);
      for (std::size_t i = 1; i < em.size(); ++i) close = close || em[i] - em[i - 1] < p.size() - 1;
    });
    EXPECT_EQ(is_nonoverlapping(p), !close) << p.str();
  }
}

TEST(Change, WorkedExamples) {
  const auto e = E("00134015331");
  const auto good = apply_change(e, 7, P("02110"), P("02100"));
  ASSERT_TRUE(good);
  EXPECT_EQ(good->str(), "00134015311");
  EXPECT_FALSE(apply_change(e, 2, P("01230"), P("03210")));
  EXPECT_THROW(apply_change(e, 3, P("02110"), P("02100")), UsageError);
}

TEST(Change, Criterion) {
  EXPECT_TRUE(changeable(P("0021"), P("0121")));
  EXPECT_TRUE(changeable(P("0121"), P("0021")));
  EXPECT_FALSE(changeable(P("01230"), P("03210")));
  EXPECT_THROW(changeable(P("012"), P("010")), UsageError);

  const auto report = is_changeable(P("01230"), P("03210"));
  EXPECT_FALSE(report.changeable_forward);
  EXPECT_TRUE(report.changeable_backward);
  ASSERT_TRUE(report.witness);
  EXPECT_FALSE(apply_change(*report.witness, report.witness_position, P("01230"), P("03210")));
}

TEST(Change, WitnessExistsForEveryNonChangeablePair) {
  for (const auto& p : enumerate_patterns(4)) {
    for (const auto& q : enumerate_patterns(4)) {
      if (p == q || p.at(1) != q.at(1) || p.at(4) != q.at(4) || p.max_letter() != q.max_letter()) continue;
      const auto report = is_changeable(p, q);
      EXPECT_EQ(report.changeable_forward, changeable(p, q));
      EXPECT_EQ(report.witness.has_value(), !report.changeable_forward);
    }
  }
}

TEST(SwitchAll, ExampleAndInvolution) {
  EXPECT_EQ(switch_all(E("00032454"), P("0021"), P("0121")).str(), "00232254");
  for_each_inversion_sequence(6, [&](std::span<const int> w) {
    const InversionSequence e{Word(w.begin(), w.end())};
    EXPECT_EQ(switch_all(switch_all(e, P("0021"), P("0121")), P("0021"), P("0121")), e);
  });
  EXPECT_THROW(switch_all(E("000"), P("000"), P("000")), UsageError);
}

TEST(Families, Patterns) {
  EXPECT_EQ(build_family_pattern(Family::A1, 2, 2).str(), "001002");
  EXPECT_EQ(build_family_pattern(Family::A1, 1, 2).str(), "0102");
  EXPECT_EQ(build_family_pattern(Family::A2, 1, 2).str(), "0112");
  EXPECT_EQ(build_family_pattern(Family::B1, 1, 2).str(), "2010");
  EXPECT_EQ(build_family_pattern(Family::B2, 1, 2).str(), "2120");
  EXPECT_EQ(build_family_pattern(Family::B3, 1, 2).str(), "2110");
  EXPECT_EQ(parse_family("B3"), Family::B3);
  EXPECT_THROW(parse_family("C1"), UsageError);
}

TEST(Families, BlockDecomposition) {
  EXPECT_EQ(block_decompose({3, 5, 9}, 2, 1), (std::vector<PositionSet>{{3, 5}, {9}}));
  EXPECT_EQ(block_decompose({}, 2, 1), std::vector<PositionSet>{});
}

TEST(Families, WorkedExample) {
  const auto e = E("0102040523262889");
  const auto f = phi_blocks(e, {3, 5, 9}, Family::A2, 1, 2);
  EXPECT_EQ(f.str(), "0102244523362889");
  EXPECT_EQ(psi_blocks(f, {3, 5, 9}, Family::A2, 1, 2), e);
  EXPECT_THROW(phi_blocks(e, {2}, Family::A2, 1, 2), UsageError);
}

TEST(Families, RoundTripLongerBlocks) {
  // r = 1, s = 3 and r = 2, s = 2 on I_8.
  for (auto [r, s] : {std::pair{1, 3}, std::pair{2, 2}}) {
    for (Family target : {Family::A2, Family::B2, Family::B3}) {
      const Family source = target == Family::A2 ? Family::A1 : Family::B1;
      const Pattern from = build_family_pattern(source, r, s);
      const Pattern to = build_family_pattern(target, r, s);
      for_each_inversion_sequence(8, [&](std::span<const int> w) {
        const PositionSet em = find_occurrences(w, from);
        if (em.empty()) return;
        const InversionSequence e{Word(w.begin(), w.end())};
        const auto img = phi_blocks(e, em, target, r, s);
        const auto img_em = find_occurrences(img, to);
        EXPECT_TRUE(std::includes(img_em.begin(), img_em.end(), em.begin(), em.end()));
        EXPECT_EQ(psi_blocks(img, em, target, r, s), e);
      });
    }
  }
}

TEST(Patterns, FubiniCounts) {
  const std::size_t fubini[] = {1, 3, 13, 75, 541};
  for (int r = 1; r <= 5; ++r) EXPECT_EQ(enumerate_patterns(r).size(), fubini[r - 1]);
  EXPECT_THROW(enumerate_patterns(7), UsageError);
}

TEST(Extension, LetterTestMatchesSearch) {
  EXPECT_EQ(extends(P("0100"), P("100")), Extension::left);
  EXPECT_EQ(extends(P("1002"), P("100")), Extension::right);
  EXPECT_EQ(extends(P("1100"), P("100")), Extension::left);
  EXPECT_EQ(extends(P("1100"), P("110")), Extension::right);
  EXPECT_EQ(extends(P("1102"), P("110")), Extension::right);
  EXPECT_EQ(extends(P("2110"), P("110")), Extension::left);
  EXPECT_EQ(extends(P("0123"), P("210")), Extension::none);
  EXPECT_THROW(extends(P("012"), P("012")), UsageError);
  for (const auto& p : enumerate_patterns(4)) {
    for (const char* q : {"100", "110", "010"}) {
      EXPECT_EQ(extends(p, P(q)), extends_by_search(p, P(q), 7)) << p.str() << " " << q;
    }
  }
}

TEST(Extension, Correspondence) {
  const auto pairs = extension_correspondence(7);
  EXPECT_EQ(pairs.size(), 10u);
}
