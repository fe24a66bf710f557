#pragma once

/**
 * @file borrow.hpp
 * @brief Ground-truth row counts from borrow counting (Kummer).
 *
 * A_n(beta) counts 0 <= m <= n whose subtraction n - m takes exactly beta
 * borrows. B_n(beta) counts n < m < b^(l+1) with beta borrows, where the
 * borrow out of the top digit of n is included and nothing beyond it. Both
 * are computed by brute enumeration and by the digit recurrence
 *
 *   A_n(beta) = (d + 1) A_n'(beta) + d B_n'(beta)
 *   B_n(beta) = (b - d - 1) A_n'(beta - 1) + (b - d) B_n'(beta - 1)
 *
 * where d is the leading digit of n and n' the rest. Neither route needs a
 * prime base. For prime p, a_{p^alpha}(n) = sum_{beta < alpha} A_n(beta).
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "digit_word.hpp"
#include "errors.hpp"
#include "primes.hpp"
#include "rational.hpp"

namespace pascalrows {

inline constexpr std::uint64_t kDefaultEnumerationLimit = 10'000'000;
inline constexpr std::uint64_t kDefaultBigintRowLimit = 3000;

/// Borrows taken computing n - m in base `base`, over the digit positions of
/// n plus the borrow out of its top position. Digits of m beyond the width
/// of n are ignored; for m <= n this is the usual schoolbook count.
inline std::uint32_t count_borrows(std::uint64_t n, std::uint64_t m, std::uint64_t base) {
  require_base(base);
  std::uint32_t borrows = 0;
  std::uint64_t borrow = 0;
  while (n > 0) {
    std::uint64_t nd = n % base;
    std::uint64_t md = m % base + borrow;
    borrow = md > nd ? 1 : 0;
    borrows += static_cast<std::uint32_t>(borrow);
    n /= base;
    m /= base;
  }
  return borrows;
}

struct BorrowDistribution {
  std::uint32_t base = 2;
  DigitWord n;
  std::vector<BigInt> a_counts;  // A_n(beta), indexed by beta
  std::vector<BigInt> b_counts;  // B_n(beta)

  BigInt a(std::size_t beta) const { return beta < a_counts.size() ? a_counts[beta] : BigInt(0); }
  BigInt b(std::size_t beta) const { return beta < b_counts.size() ? b_counts[beta] : BigInt(0); }

  friend bool operator==(const BorrowDistribution&, const BorrowDistribution&) = default;
};

namespace detail {

inline std::uint64_t checked_power(std::uint64_t base, std::size_t exponent, std::uint64_t limit) {
  std::uint64_t value = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (value > limit / base) throw ResourceError("enumeration size exceeds limit of " + std::to_string(limit));
    value *= base;
  }
  return value;
}

inline std::uint64_t to_u64(const BigInt& value, const char* what) {
  if (sgn(value) < 0) throw DomainError(std::string(what) + " must be nonnegative");
  if (!value.fits_ulong_p()) throw ResourceError(std::string(what) + " too large to enumerate");
  return value.get_ui();
}

}  // namespace detail

/// Definition-level A and B by trying every m below base^(l+1).
inline BorrowDistribution borrow_distribution_enumerate(const DigitWord& n,
                                                        std::uint64_t limit = kDefaultEnumerationLimit) {
  const std::uint64_t base = n.base();
  const std::uint64_t top = detail::checked_power(base, n.size(), limit);  // b^(l+1)
  const std::uint64_t value = detail::to_u64(from_digits(n), "n");

  std::vector<std::uint64_t> a(n.size() + 1, 0);
  std::vector<std::uint64_t> b(n.size() + 1, 0);
  for (std::uint64_t m = 0; m < top; ++m) {
    std::uint32_t beta = count_borrows(value, m, base);
    (m <= value ? a : b)[beta] += 1;
  }

  BorrowDistribution out{n.base(), n, {}, {}};
  for (auto x : a) out.a_counts.emplace_back(static_cast<unsigned long>(x));
  for (auto x : b) out.b_counts.emplace_back(static_cast<unsigned long>(x));
  return out;
}

/// A and B by the leading-digit recurrence; beta_max defaults to length(n).
inline BorrowDistribution borrow_distribution_recurrence(const DigitWord& n,
                                                         std::optional<std::size_t> beta_max = std::nullopt) {
  const std::size_t width = beta_max.value_or(n.size()) + 1;
  const unsigned long base = n.base();
  std::vector<BigInt> a(width, 0);
  std::vector<BigInt> b(width, 0);
  a[0] = 1;  // A_eps = [1], B_eps = 0

  std::vector<BigInt> next_a(width);
  std::vector<BigInt> next_b(width);
  // Grow n' one leading digit at a time, starting from the least significant.
  for (std::size_t i = 0; i < n.size(); ++i) {
    const unsigned long d = n.at_subscript(i);
    for (std::size_t beta = 0; beta < width; ++beta) {
      next_a[beta] = (d + 1) * a[beta] + d * b[beta];
      if (beta == 0) {
        next_b[beta] = 0;
      } else {
        next_b[beta] = (base - d - 1) * a[beta - 1] + (base - d) * b[beta - 1];
      }
    }
    std::swap(a, next_a);
    std::swap(b, next_b);
  }
  return BorrowDistribution{n.base(), n, std::move(a), std::move(b)};
}

/// a_{p^alpha}(n) by counting borrows for every 0 <= m <= n.
inline BigInt row_nonzero_count_kummer(std::uint64_t n, std::uint64_t p, std::uint32_t alpha,
                                       std::uint64_t limit = kDefaultEnumerationLimit) {
  require_prime(p);
  if (n >= limit) throw ResourceError("n exceeds enumeration limit of " + std::to_string(limit));
  if (alpha == 0) return 0;
  unsigned long count = 0;
  for (std::uint64_t m = 0; m <= n; ++m) {
    if (count_borrows(n, m, p) < alpha) ++count;
  }
  return BigInt(count);
}

/// a_{p^alpha}(n) = sum_{beta < alpha} A_n(beta) via the recurrence.
inline BigInt row_nonzero_count_recurrence(const BigInt& n, std::uint64_t p, std::uint32_t alpha) {
  require_prime(p);
  if (alpha == 0) return 0;
  DigitWord word = to_digits(n, p);
  auto dist = borrow_distribution_recurrence(word, alpha - 1);
  BigInt total = 0;
  for (std::uint32_t beta = 0; beta < alpha; ++beta) total += dist.a(beta);
  return total;
}

/// a_k(n) straight from the definition: exact binomials along row n, reduced mod k.
inline BigInt row_nonzero_count_bigint(std::uint64_t n, std::uint64_t k,
                                       std::uint64_t limit = kDefaultBigintRowLimit) {
  if (k < 2) throw DomainError("modulus must be at least 2");
  if (n > limit) throw ResourceError("row " + std::to_string(n) + " exceeds big-integer limit " + std::to_string(limit));
  BigInt entry = 1;
  BigInt modulus(static_cast<unsigned long>(k));
  unsigned long count = 0;
  for (std::uint64_t m = 0; m <= n; ++m) {
    if (entry % modulus != 0) ++count;
    entry *= static_cast<unsigned long>(n - m);
    mpz_divexact_ui(entry.get_mpz_t(), entry.get_mpz_t(), static_cast<unsigned long>(m + 1));
  }
  return BigInt(count);
}

}  // namespace pascalrows
