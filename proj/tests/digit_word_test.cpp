#include <random>

#include <gtest/gtest.h>

#include <pascalrows/digit_word.hpp>

using namespace pascalrows;

namespace {

DigitWord w(const char* text, std::uint32_t base) { return DigitWord::parse(text, base); }

}  // namespace

TEST(DigitWord, ToDigits) {
  EXPECT_EQ(to_digits(BigInt(1947), 5).to_string(), "30242");
  EXPECT_TRUE(to_digits(BigInt(0), 7).empty());
  EXPECT_EQ(to_digits(std::uint64_t{4}, 2).to_string(), "100");
  EXPECT_THROW(to_digits(BigInt(5), 1), DomainError);
  EXPECT_THROW(to_digits(BigInt(-5), 3), DomainError);
}

TEST(DigitWord, FromDigits) {
  EXPECT_EQ(from_digits(w("30242", 5)), 1947);
  EXPECT_EQ(from_digits(DigitWord(3)), 0);
  EXPECT_EQ(from_digits(w("100", 2)), 4);
}

TEST(DigitWord, RejectsOutOfRangeDigits) {
  EXPECT_THROW(w("12", 2), DomainError);
  EXPECT_THROW(DigitWord(10, {3, 10}), DomainError);
  EXPECT_THROW(w("1a", 10), DomainError);
}

TEST(DigitWord, RenderingAboveBaseTen) {
  DigitWord word = to_digits(BigInt(12 * 13 + 7), 13);
  EXPECT_EQ(word.to_string(), "12,7");
  EXPECT_EQ(DigitWord::parse("12,7", 13), word);
  EXPECT_EQ(DigitWord::parse("12", 13).size(), 1u);
}

TEST(DigitWord, AtSubscriptUsesPowerIndex) {
  DigitWord word = w("30242", 5);
  EXPECT_EQ(word.at_subscript(0), 2u);
  EXPECT_EQ(word.at_subscript(4), 3u);
}

TEST(SubwordCount, Examples) {
  DigitWord n = w("30242", 5);
  EXPECT_EQ(subword_count(n, w("30", 5)), 1u);
  EXPECT_EQ(subword_count(n, w("42", 5)), 1u);
  EXPECT_EQ(subword_count(n, w("2", 5)), 2u);
  EXPECT_EQ(subword_count(w("111", 3), w("11", 3)), 2u);  // overlapping
  EXPECT_EQ(subword_count(DigitWord(2), w("1", 2)), 0u);
  EXPECT_EQ(subword_count(w("10", 2), w("100", 2)), 0u);
}

TEST(SubwordCount, Errors) {
  EXPECT_THROW(subword_count(w("10", 2), w("10", 3)), DomainError);
  EXPECT_THROW(subword_count(w("10", 2), DigitWord(2)), DomainError);
}

TEST(AllSubwordCounts, Examples) {
  SubwordCounts expected{{w("1", 2), 1}, {w("0", 2), 2}, {w("10", 2), 1}, {w("00", 2), 1}};
  EXPECT_EQ(all_subword_counts(w("100", 2), 2), expected);
  EXPECT_TRUE(all_subword_counts(DigitWord(2), 3).empty());
  SubwordCounts singles{{w("3", 5), 1}, {w("0", 5), 1}, {w("2", 5), 2}, {w("4", 5), 1}};
  EXPECT_EQ(all_subword_counts(w("30242", 5), 1), singles);
  EXPECT_THROW(all_subword_counts(w("1", 2), 0), DomainError);
}

TEST(Suffix, DropsLeadingDigits) {
  EXPECT_EQ(suffix(w("30242", 5), 2), w("242", 5));
  EXPECT_EQ(suffix(w("30242", 5), 0), w("30242", 5));
  EXPECT_TRUE(suffix(w("100", 2), 3).empty());
  EXPECT_THROW(suffix(w("100", 2), 4), DomainError);
}

TEST(DigitWordProperties, RandomizedInvariants) {
  std::mt19937_64 rng(1947);
  for (int trial = 0; trial < 400; ++trial) {
    const std::uint64_t base = 2 + rng() % 11;
    const std::uint64_t n = rng() % 5'000'000;
    DigitWord word = to_digits(n, base);
    ASSERT_EQ(from_digits(word), static_cast<unsigned long>(n));
    ASSERT_EQ(to_digits(BigInt(static_cast<unsigned long>(n)), base), word);
    if (!word.empty()) ASSERT_NE(word[0], 0u);

    // Single-digit counts sum to the length.
    std::size_t total = 0;
    for (Digit r = 0; r < base; ++r) total += subword_count(word, DigitWord(static_cast<std::uint32_t>(base), {r}));
    ASSERT_EQ(total, word.size());

    // Naive window scan on the rendered digit vector.
    const std::size_t len = 1 + rng() % 3;
    std::vector<Digit> pattern;
    for (std::size_t i = 0; i < len; ++i) pattern.push_back(static_cast<Digit>(rng() % base));
    std::size_t naive = 0;
    auto d = word.digits();
    for (std::size_t i = 0; i + len <= d.size(); ++i) {
      bool match = true;
      for (std::size_t j = 0; j < len; ++j) match = match && d[i + j] == pattern[j];
      naive += match ? 1 : 0;
    }
    DigitWord pattern_word(static_cast<std::uint32_t>(base), pattern);
    ASSERT_EQ(subword_count(word, pattern_word), naive);
    auto counts = all_subword_counts(word, 3);
    auto it = counts.find(pattern_word);
    ASSERT_EQ(it == counts.end() ? 0u : it->second, naive);

    // prod (n_i + 1) = prod_r (r + 1)^{|n|_r}
    BigInt by_digit = 1, by_letter = 1;
    for (Digit x : d) by_digit *= x + 1;
    for (Digit r = 0; r < base; ++r) {
      for (std::size_t k = subword_count(word, DigitWord(static_cast<std::uint32_t>(base), {r})); k > 0; --k) {
        by_letter *= r + 1;
      }
    }
    ASSERT_EQ(by_digit, by_letter);
  }
}
