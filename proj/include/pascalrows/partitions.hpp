#pragma once

/**
 * @file partitions.hpp
 * @brief The weight c, partition sets, nonoverlapping placements, and direct
 * evaluation of the partition-sum expressions for A_n(beta) and a_{p^alpha}(n).
 *
 * For a word w = w_k ... w_0 of length >= 2,
 *
 *   c(w) = w_k/(w_k + 1) * prod_{h=1}^{k-1} (b - w_{k-h})/(w_{k-h} + 1) * (b - w_0 - 1)/(w_0 + 1)
 *
 * and c vanishes on single digits. Then
 *
 *   A_n(beta)/A_n(0) = sum_{gamma=beta}^{2 beta} sum_{P in S(gamma, gamma-beta)} sum_{placements of P in n} prod c
 *   a_{p^alpha}(n)   = a_p(n) * sum_{gamma=0}^{2(alpha-1)} sum_{P in S_alpha(gamma)} sum_{placements} prod c
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "borrow.hpp"
#include "digit_word.hpp"
#include "errors.hpp"
#include "primes.hpp"
#include "rational.hpp"

namespace pascalrows {

/// Multiset of parts, each >= 2, stored in non-increasing order.
class IntPartition {
 public:
  IntPartition() = default;
  explicit IntPartition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
    for (auto part : parts_) {
      if (part < 2) throw DomainError("partition parts must be at least 2");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }

  std::span<const std::uint32_t> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  std::uint32_t sum() const {
    std::uint32_t total = 0;
    for (auto part : parts_) total += part;
    return total;
  }

  /// (part size, multiplicity) pairs, largest part first.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> multiplicities() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (auto part : parts_) {
      if (!out.empty() && out.back().first == part) {
        ++out.back().second;
      } else {
        out.emplace_back(part, 1);
      }
    }
    return out;
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(parts_[i]);
    }
    return out + "}";
  }

  friend bool operator==(const IntPartition&, const IntPartition&) = default;
  friend auto operator<=>(const IntPartition&, const IntPartition&) = default;

 private:
  std::vector<std::uint32_t> parts_;
};

/// Closed range of digit subscripts [low, high]; subscript i is the digit of b^i.
struct Interval {
  std::size_t low = 0;
  std::size_t high = 0;

  std::size_t length() const { return high - low + 1; }
  bool overlaps(const Interval& other) const { return low <= other.high && other.low <= high; }

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Pairwise-disjoint intervals, listed left to right (descending subscripts).
using PlacementSet = std::vector<Interval>;

namespace detail {

inline Rational c_weight_digits(std::span<const Digit> w, std::uint32_t base) {
  if (w.size() < 2) return Rational(0);
  const long b = base;
  const long first = w.front();
  const long last = w.back();
  if (first == 0 || last == b - 1) return Rational(0);
  BigInt num = first * (b - last - 1);
  BigInt den = (first + 1) * (last + 1);
  for (std::size_t i = 1; i + 1 < w.size(); ++i) {
    num *= static_cast<unsigned long>(b - w[i]);
    den *= static_cast<unsigned long>(w[i] + 1);
  }
  return Rational(num, den);
}

}  // namespace detail

inline Rational c_weight(const DigitWord& word) {
  if (word.empty()) throw DomainError("c_weight: empty word");
  return detail::c_weight_digits(word.digits(), word.base());
}

inline Rational c_weight(const DigitWord& word, std::uint32_t base) {
  if (word.base() != base) return c_weight(DigitWord(base, {word.digits().begin(), word.digits().end()}));
  return c_weight(word);
}

/// S(gamma, delta): partitions of gamma into exactly delta parts, all >= 2,
/// in reverse lexicographic order ({6,2,2} before {5,3,2}).
inline std::vector<IntPartition> partitions_s(std::uint32_t gamma, std::uint32_t delta) {
  std::vector<IntPartition> out;
  std::vector<std::uint32_t> parts;
  std::function<void(std::uint32_t, std::uint32_t, std::uint32_t)> fill =
      [&](std::uint32_t remaining, std::uint32_t slots, std::uint32_t max_part) {
        if (slots == 0) {
          if (remaining == 0) out.emplace_back(parts);
          return;
        }
        if (remaining < 2 * slots) return;
        std::uint32_t top = std::min(max_part, remaining - 2 * (slots - 1));
        for (std::uint32_t part = top; part >= 2 && part * slots >= remaining; --part) {
          parts.push_back(part);
          fill(remaining - part, slots - 1, part);
          parts.pop_back();
        }
      };
  fill(gamma, delta, gamma);
  return out;
}

/// S_alpha(gamma): partitions of gamma into at least max(0, gamma - (alpha - 1))
/// parts, all >= 2; ordered by part count, then as in partitions_s.
inline std::vector<IntPartition> partitions_s_alpha(std::uint32_t alpha, std::uint32_t gamma) {
  std::int64_t min_parts = std::max<std::int64_t>(0, std::int64_t{gamma} - (std::int64_t{alpha} - 1));
  std::vector<IntPartition> out;
  for (std::int64_t delta = min_parts; delta <= gamma / 2; ++delta) {
    auto block = partitions_s(gamma, static_cast<std::uint32_t>(delta));
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

/// Calls `visit` once per placement set of P in a word of the given length.
/// Placements are produced in lexicographic order of their left-to-right
/// (start offset, length) sequence.
template <typename Visitor>
void for_each_placement(const IntPartition& partition, std::size_t word_length, Visitor&& visit) {
  auto mult = partition.multiplicities();
  std::vector<std::uint32_t> remaining;
  std::vector<std::uint32_t> sizes;
  for (auto [size, count] : mult) {
    sizes.push_back(size);
    remaining.push_back(count);
  }
  std::size_t total = partition.sum();
  PlacementSet current;

  // `offset` counts digits from the left; `still_needed` is the total length of unplaced parts.
  std::function<void(std::size_t, std::size_t)> place = [&](std::size_t offset, std::size_t still_needed) {
    if (still_needed == 0) {
      visit(static_cast<const PlacementSet&>(current));
      return;
    }
    for (std::size_t start = offset; start + still_needed <= word_length; ++start) {
      for (std::size_t k = sizes.size(); k-- > 0;) {  // ascending part size
        if (remaining[k] == 0) continue;
        const std::size_t len = sizes[k];
        --remaining[k];
        const std::size_t high = word_length - 1 - start;
        current.push_back(Interval{high + 1 - len, high});
        place(start + len, still_needed - len);
        current.pop_back();
        ++remaining[k];
      }
    }
  };
  if (total > word_length) return;
  place(0, total);
}

inline std::vector<PlacementSet> enumerate_placements(const IntPartition& partition, std::size_t word_length) {
  std::vector<PlacementSet> out;
  for_each_placement(partition, word_length, [&](const PlacementSet& placement) { out.push_back(placement); });
  return out;
}

/// Sum over placements of P in `word` of the product of c over the placed subwords.
inline Rational placement_sum(const IntPartition& partition, const DigitWord& word) {
  const std::size_t len = word.size();
  auto digits = word.digits();
  // c of every window, indexed by [start][length].
  std::vector<std::vector<Rational>> weights(len);
  std::uint32_t max_part = partition.empty() ? 0 : partition.parts().front();
  for (std::size_t start = 0; start < len; ++start) {
    for (std::size_t l = 0; l <= max_part && start + l <= len; ++l) {
      weights[start].push_back(detail::c_weight_digits(digits.subspan(start, l), word.base()));
    }
  }
  Rational total;
  for_each_placement(partition, len, [&](const PlacementSet& placement) {
    Rational term(1);
    for (const auto& iv : placement) {
      const Rational& w = weights[len - 1 - iv.high][iv.length()];
      if (w.is_zero()) return;
      term *= w;
    }
    total += term;
  });
  return total;
}

/// A_n(beta)/A_n(0) by summing over partitions and placements. Any base.
inline Rational proposition_ratio(const DigitWord& word, std::uint32_t beta) {
  if (beta == 0) return Rational(1);
  Rational total;
  for (std::uint32_t gamma = beta; gamma <= 2 * beta && gamma <= word.size(); ++gamma) {
    for (const auto& partition : partitions_s(gamma, gamma - beta)) total += placement_sum(partition, word);
  }
  return total;
}

/// a_p(n) = prod (n_i + 1).
inline BigInt fine_product(const DigitWord& word) {
  BigInt product = 1;
  for (Digit d : word.digits()) product *= static_cast<unsigned long>(d + 1);
  return product;
}

inline BigInt fine_count(const BigInt& n, std::uint64_t p) {
  require_prime(p);
  return fine_product(to_digits(n, p));
}

namespace detail {

inline BigInt require_integral(const Rational& value, const char* where) {
  if (!value.is_integer()) {
    throw ConsistencyError(std::string(where) + " produced non-integral value " + value.to_string());
  }
  return value.numerator();
}

}  // namespace detail

/// Partition sum of a_{p^alpha}(n)/a_p(n), for a word in any base.
inline Rational theorem1_ratio(const DigitWord& word, std::uint32_t alpha) {
  if (alpha == 0) return Rational(0);
  Rational total;
  for (std::uint32_t gamma = 0; gamma <= 2 * (alpha - 1) && gamma <= word.size(); ++gamma) {
    for (const auto& partition : partitions_s_alpha(alpha, gamma)) total += placement_sum(partition, word);
  }
  return total;
}

/// a_{p^alpha}(n) for a base-p digit word.
inline BigInt theorem1_count(const DigitWord& word, std::uint32_t alpha) {
  require_prime(word.base());
  Rational value = theorem1_ratio(word, alpha) * Rational(fine_product(word));
  return detail::require_integral(value, "theorem1_count");
}

inline BigInt theorem1_count(const BigInt& n, std::uint64_t p, std::uint32_t alpha) {
  require_prime(p);
  return theorem1_count(to_digits(n, p), alpha);
}

/// a_{p^2}(n) = a_p(n) (1 + sum_i n_{i+1}/(n_{i+1}+1) * (p - n_i - 1)/(n_i + 1)).
inline BigInt corollary_p2_count(const BigInt& n, std::uint64_t p) {
  require_prime(p);
  DigitWord word = to_digits(n, p);
  Rational sum(1);
  const long pl = static_cast<long>(p);
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    const long hi = word.at_subscript(i + 1);
    const long lo = word.at_subscript(i);
    sum += Rational(hi, hi + 1) * Rational(pl - lo - 1, lo + 1);
  }
  return detail::require_integral(sum * Rational(fine_product(word)), "corollary_p2_count");
}

}  // namespace pascalrows
