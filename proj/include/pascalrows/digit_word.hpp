#pragma once

// Base-b digit strings and subword occurrence counts |n|_w.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace pascalrows {

using Digit = std::uint32_t;

/// Digits of a number in a fixed base, most significant first. Position i
/// from the right (the coefficient of base^i) is `at_subscript(i)`.
class DigitWord {
 public:
  DigitWord() = default;

  explicit DigitWord(std::uint32_t base, std::vector<Digit> digits = {})
      : base_(base), digits_(std::move(digits)) {
    if (base_ < 2) throw DomainError("base must be at least 2");
    for (Digit d : digits_) {
      if (d >= base_) throw DomainError("digit " + std::to_string(d) + " out of range for base " + std::to_string(base_));
    }
  }

  /// Parses "30242" (base <= 10) or "12,0,7" (comma separated; always for base > 10).
  static DigitWord parse(std::string_view text, std::uint32_t base) {
    std::vector<Digit> digits;
    if (text.empty()) return DigitWord(base);
    if (base > 10 || text.find(',') != std::string_view::npos) {
      std::size_t pos = 0;
      while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        BigInt value = parse_bigint(piece);
        if (sgn(value) < 0 || !value.fits_ulong_p()) throw DomainError("bad digit: " + std::string(piece));
        digits.push_back(static_cast<Digit>(value.get_ui()));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
      }
    } else {
      for (char ch : text) {
        if (ch < '0' || ch > '9') throw DomainError("bad digit character in word: " + std::string(text));
        digits.push_back(static_cast<Digit>(ch - '0'));
      }
    }
    return DigitWord(base, std::move(digits));
  }

  std::uint32_t base() const { return base_; }
  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  std::span<const Digit> digits() const { return digits_; }
  Digit operator[](std::size_t index) const { return digits_[index]; }

  Digit at_subscript(std::size_t i) const { return digits_[digits_.size() - 1 - i]; }

  /// Contiguous slice [offset, offset + length) in left-to-right order.
  DigitWord slice(std::size_t offset, std::size_t length) const {
    if (offset + length > digits_.size()) throw DomainError("slice out of range");
    DigitWord out;
    out.base_ = base_;
    out.digits_.assign(digits_.begin() + static_cast<std::ptrdiff_t>(offset),
                       digits_.begin() + static_cast<std::ptrdiff_t>(offset + length));
    return out;
  }

  /// ASCII digits for base <= 10, comma-separated integers otherwise.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (base_ <= 10) {
        out.push_back(static_cast<char>('0' + digits_[i]));
      } else {
        if (i > 0) out.push_back(',');
        out += std::to_string(digits_[i]);
      }
    }
    return out;
  }

  friend bool operator==(const DigitWord&, const DigitWord&) = default;

  /// Base first, then shorter words first, then digit-wise lexicographic.
  friend std::strong_ordering operator<=>(const DigitWord& a, const DigitWord& b) {
    if (auto c = a.base_ <=> b.base_; c != 0) return c;
    if (auto c = a.digits_.size() <=> b.digits_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.digits_.begin(), a.digits_.end(), b.digits_.begin(),
                                                  b.digits_.end());
  }

 private:
  std::uint32_t base_ = 2;
  std::vector<Digit> digits_;
};

inline void require_base(std::uint64_t base) {
  if (base < 2) throw DomainError("base must be at least 2, got " + std::to_string(base));
  if (base > UINT32_MAX) throw DomainError("base too large");
}

inline DigitWord to_digits(const BigInt& n, std::uint64_t base) {
  require_base(base);
  if (sgn(n) < 0) throw DomainError("negative integers have no digit word");
  std::vector<Digit> digits;
  BigInt rest = n;
  BigInt digit;
  while (sgn(rest) > 0) {
    digit = rest % static_cast<unsigned long>(base);
    digits.push_back(static_cast<Digit>(digit.get_ui()));
    rest /= static_cast<unsigned long>(base);
  }
  std::reverse(digits.begin(), digits.end());
  return DigitWord(static_cast<std::uint32_t>(base), std::move(digits));
}

inline DigitWord to_digits(std::uint64_t n, std::uint64_t base) {
  require_base(base);
  std::vector<Digit> digits;
  while (n > 0) {
    digits.push_back(static_cast<Digit>(n % base));
    n /= base;
  }
  std::reverse(digits.begin(), digits.end());
  return DigitWord(static_cast<std::uint32_t>(base), std::move(digits));
}

inline BigInt from_digits(const DigitWord& word) {
  BigInt value = 0;
  for (Digit d : word.digits()) {
    value *= static_cast<unsigned long>(word.base());
    value += static_cast<unsigned long>(d);
  }
  return value;
}

/// Number of (possibly overlapping) occurrences of `pattern` in `word`.
inline std::size_t subword_count(const DigitWord& word, const DigitWord& pattern) {
  if (word.base() != pattern.base()) throw DomainError("subword_count: base mismatch");
  if (pattern.empty()) throw DomainError("subword_count: empty pattern");
  if (pattern.size() > word.size()) return 0;
  auto hay = word.digits();
  auto needle = pattern.digits();
  std::size_t count = 0;
  for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i) {
    if (std::equal(needle.begin(), needle.end(), hay.begin() + static_cast<std::ptrdiff_t>(i))) ++count;
  }
  return count;
}

using SubwordCounts = std::map<DigitWord, std::size_t>;

/// Counts of every subword of length 1..max_length that occurs in `word`.
inline SubwordCounts all_subword_counts(const DigitWord& word, std::size_t max_length) {
  if (max_length == 0) throw DomainError("all_subword_counts: max_length must be positive");
  SubwordCounts counts;
  for (std::size_t len = 1; len <= std::min(max_length, word.size()); ++len) {
    for (std::size_t i = 0; i + len <= word.size(); ++i) ++counts[word.slice(i, len)];
  }
  return counts;
}

/// Drops the i most significant digits.
inline DigitWord suffix(const DigitWord& word, std::size_t i) {
  if (i > word.size()) throw DomainError("suffix: index exceeds word length");
  return word.slice(i, word.size() - i);
}

}  // namespace pascalrows
