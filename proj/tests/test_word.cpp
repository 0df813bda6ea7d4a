#include <gtest/gtest.h>

#include <algorithm>

#include "invseq/enumerate.hpp"
#include "invseq/word.hpp"

using namespace invseq;

TEST(Reduce, RelabelsByRank) {
  EXPECT_EQ(reduce(Word{3, 7, 3, 9}), (Word{0, 1, 0, 2}));
  EXPECT_EQ(reduce(Word{5}), (Word{0}));
  EXPECT_THROW(reduce(Word{}), UsageError);
  EXPECT_THROW(reduce(Word{1, -1}), UsageError);
}

TEST(Reduce, IdempotentOnAllShortWords) {
  for (int n = 1; n <= 6; ++n) {
    for (const Word& w : generate_all(n)) {
      const Word r = reduce(w);
      EXPECT_EQ(reduce(r), r);
      EXPECT_TRUE(is_reduced(r));
    }
  }
}

TEST(InversionSequence, Validation) {
  EXPECT_TRUE(is_inversion_sequence(Word{0, 1, 2, 0}));
  EXPECT_FALSE(is_inversion_sequence(Word{1}));
  EXPECT_FALSE(is_inversion_sequence(Word{0, 0, 3}));
  EXPECT_THROW(InversionSequence(Word{0, 2}), UsageError);
  EXPECT_EQ(InversionSequence::zeros(4).str(), "0000");
  const auto e = InversionSequence::parse("0102");
  EXPECT_EQ(e.size(), 4);
  EXPECT_EQ(e.at(4), 2);
}

TEST(Parse, DigitAndCommaForms) {
  EXPECT_EQ(parse_word("0021"), (Word{0, 0, 2, 1}));
  EXPECT_EQ(parse_word("0,1,10"), (Word{0, 1, 10}));
  EXPECT_EQ(format_word(Word{0, 1, 10}), "0,1,10");
  EXPECT_EQ(format_word(Word{0, 1, 2}), "012");
  EXPECT_EQ(format_positions({3, 5, 8}), "{3,5,8}");
  EXPECT_THROW(parse_word("01x"), UsageError);
  EXPECT_TRUE(parse_word("").empty());
  EXPECT_THROW(Pattern::parse(""), UsageError);
}

TEST(Pattern, RejectsUnreducedWords) {
  EXPECT_THROW(Pattern::parse("13"), UsageError);
  EXPECT_THROW(Pattern(Word{}), UsageError);
  EXPECT_EQ(Pattern::parse("2010").max_letter(), 2);
}

TEST(Occurrences, WorkedExample) {
  const auto e = InversionSequence::parse("0102040523262889");
  EXPECT_EQ(find_occurrences(e, Pattern::parse("0102")), (PositionSet{1, 3, 5, 9, 11}));
  const auto f = InversionSequence::parse("0102244523362889");
  EXPECT_EQ(find_occurrences(f, Pattern::parse("0112")), (PositionSet{3, 5, 9, 13}));
  EXPECT_TRUE(find_occurrences(InversionSequence::parse("01"), Pattern::parse("000")).empty());
}

TEST(Occurrences, LongerPatterns) {
  const auto e = InversionSequence::parse("00134015331");
  EXPECT_EQ(find_occurrences(e, Pattern::parse("02110")), (PositionSet{7}));
  EXPECT_EQ(find_occurrences(e, Pattern::parse("01230")), (PositionSet{2}));
}

TEST(Classical, Subsequences) {
  EXPECT_FALSE(contains_classical(Word{0, 0, 1, 0, 2}, Pattern::parse("021")));
  EXPECT_TRUE(contains_classical(Word{0, 1, 0, 2}, Pattern::parse("102")));
  EXPECT_FALSE(contains_classical(Word{0, 0, 1, 2}, Pattern::parse("10")));
  EXPECT_TRUE(contains_consecutive(Word{0, 1, 0}, Pattern::parse("10")));
}

TEST(Classical, ConsecutiveImpliesClassical) {
  const Pattern p = Pattern::parse("101");
  for_each_inversion_sequence(6, [&](std::span<const int> w) {
    if (contains_consecutive(w, p)) EXPECT_TRUE(contains_classical(w, p));
  });
}

TEST(Examples, CoreOperations) {
  EXPECT_EQ(reduce(Word{2, 2, 1}), (Word{1, 1, 0}));
  EXPECT_EQ(reduce(Word{0, 3, 0}), (Word{0, 1, 0}));
  EXPECT_EQ(reduce(Word{7, 7, 7}), (Word{0, 0, 0}));

  EXPECT_TRUE(is_inversion_sequence(parse_word("002031")));
  EXPECT_TRUE(is_inversion_sequence(Word{0}));
  EXPECT_FALSE(is_inversion_sequence(Word{1, 0}));

  const auto e = InversionSequence::parse("0021100300");
  EXPECT_EQ(find_occurrences(e, Pattern::parse("100")), (PositionSet{3, 5, 8}));
  EXPECT_TRUE(find_occurrences(e, Pattern::parse("120")).empty());
  EXPECT_EQ(find_occurrences(InversionSequence::zeros(6), Pattern::parse("000")), (PositionSet{1, 2, 3, 4}));

  const auto f = InversionSequence::parse("0021213");
  EXPECT_FALSE(contains_classical(f, Pattern::parse("210")));
  EXPECT_TRUE(contains_classical(f, Pattern::parse("110")));
  EXPECT_TRUE(contains_classical(InversionSequence::zeros(3), Pattern::parse("0")));
}

TEST(Occurrences, WindowsReduceToPattern) {
  for (const char* s : {"010", "0021", "102"}) {
    const Pattern p = Pattern::parse(s);
    for_each_inversion_sequence(7, [&](std::span<const int> w) {
      const auto em = find_occurrences(w, p);
      for (int i = 1; i + p.size() - 1 <= static_cast<int>(w.size()); ++i) {
        const bool hit = reduce(w.subspan(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(p.size()))) == p.letters();
        EXPECT_EQ(hit, std::binary_search(em.begin(), em.end(), i));
      }
    });
  }
}
