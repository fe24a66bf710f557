#pragma once

/**
 * @file kernel_rank.hpp
 * @brief Experimental rank probe for the p-kernel of a_{p^alpha}.
 *
 * Row (e, i) holds a(p^e n + i) for n = 0..n_max. The rank of the row space
 * over Q is a lower bound on the rank of the sequence; it is reported as an
 * experimental estimate, never as a proof.
 */

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "borrow.hpp"
#include "errors.hpp"
#include "primes.hpp"
#include "rational.hpp"

namespace pascalrows {

inline constexpr std::uint64_t kDefaultKernelLimit = 5'000'000;
inline constexpr std::uint32_t kDefaultKernelDepth = 4;
inline constexpr std::uint64_t kDefaultKernelColumns = 512;

struct KernelRow {
  std::uint32_t e = 0;  // depth
  BigInt i = 0;         // residue, 0 <= i < p^e
  std::vector<BigInt> values;
};

struct KernelMatrix {
  std::uint32_t p = 2;
  std::uint32_t alpha = 1;
  std::uint32_t depth = 0;
  std::uint64_t n_max = 0;
  std::vector<KernelRow> rows;
};

inline KernelMatrix build_kernel_matrix(std::uint32_t p, std::uint32_t alpha, std::uint32_t depth, std::uint64_t n_max,
                                        std::uint64_t limit = kDefaultKernelLimit) {
  require_prime(p);
  // Guard on p^depth * (n_max + 1).
  BigInt reach;
  mpz_ui_pow_ui(reach.get_mpz_t(), p, depth);
  reach *= static_cast<unsigned long>(n_max + 1);
  if (reach > static_cast<unsigned long>(limit)) {
    throw ResourceError("kernel matrix p^depth*(n_max+1) = " + to_string(reach) + " exceeds limit " +
                        std::to_string(limit));
  }

  KernelMatrix m{p, alpha, depth, n_max, {}};
  BigInt scale = 1;  // p^e
  for (std::uint32_t e = 0; e <= depth; ++e, scale *= static_cast<unsigned long>(p)) {
    for (BigInt i = 0; i < scale; ++i) {
      KernelRow row{e, i, {}};
      row.values.reserve(n_max + 1);
      for (std::uint64_t n = 0; n <= n_max; ++n) {
        row.values.push_back(row_nonzero_count_recurrence(scale * static_cast<unsigned long>(n) + i, p, alpha));
      }
      m.rows.push_back(std::move(row));
    }
  }
  return m;
}

/// Rank over Q of the rows with depth <= max_depth (all rows by default),
/// by fraction-free (Bareiss) elimination.
inline std::size_t estimate_rank(const KernelMatrix& m, std::uint32_t max_depth = UINT32_MAX) {
  std::vector<std::vector<BigInt>> a;
  for (const auto& row : m.rows) {
    if (row.e <= max_depth) a.push_back(row.values);
  }
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();

  std::size_t rank = 0;
  BigInt previous = 1;
  BigInt scratch;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const BigInt& lead = a[rank][col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = col + 1; k < cols; ++k) {
        scratch = lead * a[r][k] - a[r][col] * a[rank][k];
        mpz_divexact(a[r][k].get_mpz_t(), scratch.get_mpz_t(), previous.get_mpz_t());
      }
      a[r][col] = 0;
    }
    previous = lead;
    ++rank;
  }
  return rank;
}

struct RankProbe {
  std::vector<std::size_t> rank_by_depth;  // index e: rank using depths 0..e
  std::size_t rank = 0;
  bool converged = false;  // unchanged across the last two depth increments
};

inline RankProbe probe_kernel_rank(const KernelMatrix& m) {
  RankProbe probe;
  for (std::uint32_t d = 0; d <= m.depth; ++d) probe.rank_by_depth.push_back(estimate_rank(m, d));
  probe.rank = probe.rank_by_depth.back();
  const auto& r = probe.rank_by_depth;
  probe.converged = r.size() >= 3 && r[r.size() - 1] == r[r.size() - 2] && r[r.size() - 2] == r[r.size() - 3];
  return probe;
}

/// Tab-separated dump: header "e\ti\tn=0\t...", then one line per row.
inline void write_kernel_tsv(const KernelMatrix& m, std::ostream& out) {
  out << "e\ti";
  for (std::uint64_t n = 0; n <= m.n_max; ++n) out << "\tn=" << n;
  out << '\n';
  for (const auto& row : m.rows) {
    out << row.e << '\t' << to_string(row.i);
    for (const auto& v : row.values) out << '\t' << to_string(v);
    out << '\n';
  }
}

}  // namespace pascalrows
