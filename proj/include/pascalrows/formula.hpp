#pragma once

/**
 * @file formula.hpp
 * @brief Symbolic closed forms for a_{p^alpha}(n)/a_p(n) as polynomials in
 * the subword counts |n|_w.
 *
 * Each nonoverlapping placement sum is rewritten by inclusion-exclusion. For
 * a partition with k parts we sum over ordered k-tuples of intervals and
 * divide by prod m_j! (m_j = multiplicity of each part size). A tuple is
 * pairwise disjoint iff no pair overlaps, so
 *
 *   sum_{disjoint tuples} prod c = sum_{A subset of pairs} (-1)^|A| sum_{tuples overlapping on A} prod c.
 *
 * For fixed A the connected components of the graph ([k], A) range over the
 * word independently. A component whose intervals sit at fixed relative
 * offsets (a cluster) spanning L digits contributes
 * sum_{w in [p]^L} (prod c over its segments of w) |n|_w, so each A yields a
 * product of linear forms in |n|_w. Identical intervals count as overlapping.
 */

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "digit_word.hpp"
#include "errors.hpp"
#include "partitions.hpp"
#include "primes.hpp"
#include "rational.hpp"

namespace pascalrows {

/// Product of powers of subword-count variables, e.g. |n|_10^2 |n|_11.
class SubwordMonomial {
 public:
  using Factor = std::pair<DigitWord, std::uint32_t>;

  SubwordMonomial() = default;

  explicit SubwordMonomial(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
    for (auto& [word, exp] : factors) {
      if (word.empty()) throw DomainError("monomial variable must be a nonempty word");
      if (exp == 0) continue;
      if (!factors_.empty() && factors_.back().first == word) {
        factors_.back().second += exp;
      } else {
        factors_.emplace_back(std::move(word), exp);
      }
    }
  }

  static SubwordMonomial variable(DigitWord word, std::uint32_t exp = 1) {
    return SubwordMonomial({Factor{std::move(word), exp}});
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_constant() const { return factors_.empty(); }

  std::uint32_t degree() const {
    std::uint32_t total = 0;
    for (const auto& f : factors_) total += f.second;
    return total;
  }

  BigInt evaluate(const SubwordCounts& counts) const {
    BigInt value = 1;
    for (const auto& [word, exp] : factors_) {
      auto it = counts.find(word);
      if (it == counts.end()) return 0;
      BigInt power;
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(it->second), exp);
      value *= power;
    }
    return value;
  }

  friend SubwordMonomial operator*(const SubwordMonomial& a, const SubwordMonomial& b) {
    std::vector<Factor> merged = a.factors_;
    merged.insert(merged.end(), b.factors_.begin(), b.factors_.end());
    return SubwordMonomial(std::move(merged));
  }

  friend bool operator==(const SubwordMonomial&, const SubwordMonomial&) = default;

  /// Canonical order: degree, then the sorted list of variables (with
  /// repetition) compared word by word, shorter words first.
  friend std::strong_ordering operator<=>(const SubwordMonomial& a, const SubwordMonomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    std::size_t ia = 0, ib = 0;
    std::uint32_t used_a = 0, used_b = 0;
    while (ia < a.factors_.size() && ib < b.factors_.size()) {
      if (auto c = a.factors_[ia].first <=> b.factors_[ib].first; c != 0) return c;
      if (++used_a == a.factors_[ia].second) ++ia, used_a = 0;
      if (++used_b == b.factors_[ib].second) ++ib, used_b = 0;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::vector<Factor> factors_;  // sorted by word, exponents >= 1
};

/// a_{p^alpha}(n)/a_p(n) as a polynomial in |n|_w. Zero coefficients are never stored.
class SubwordPolynomial {
 public:
  using Terms = std::map<SubwordMonomial, Rational>;

  SubwordPolynomial() = default;
  SubwordPolynomial(std::uint32_t p, std::uint32_t alpha) : p_(p), alpha_(alpha) {}

  static SubwordPolynomial constant(std::uint32_t p, std::uint32_t alpha, const Rational& value) {
    SubwordPolynomial out(p, alpha);
    out.add_term(SubwordMonomial(), value);
    return out;
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t alpha() const { return alpha_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  void set_alpha(std::uint32_t alpha) { alpha_ = alpha; }

  void add_term(const SubwordMonomial& monomial, const Rational& coefficient) {
    if (coefficient.is_zero()) return;
    for (const auto& [word, exp] : monomial.factors()) {
      if (word.base() != p_) throw DomainError("monomial word base does not match polynomial base");
    }
    auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Rational coefficient(const SubwordMonomial& monomial) const {
    auto it = terms_.find(monomial);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (const auto& term : terms_) d = std::max(d, term.first.degree());
    return d;
  }

  std::size_t max_word_length() const {
    std::size_t len = 0;
    for (const auto& term : terms_) {
      for (const auto& factor : term.first.factors()) len = std::max(len, factor.first.size());
    }
    return len;
  }

  Rational evaluate(const SubwordCounts& counts) const {
    Rational total;
    for (const auto& [monomial, coefficient] : terms_) {
      BigInt value = monomial.evaluate(counts);
      if (sgn(value) != 0) total += coefficient * Rational(value);
    }
    return total;
  }

  SubwordPolynomial& operator+=(const SubwordPolynomial& other) {
    for (const auto& [monomial, coefficient] : other.terms_) add_term(monomial, coefficient);
    return *this;
  }

  SubwordPolynomial& operator*=(const Rational& factor) {
    if (factor.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& term : terms_) term.second *= factor;
    return *this;
  }

  friend SubwordPolynomial operator*(const SubwordPolynomial& a, const SubwordPolynomial& b) {
    SubwordPolynomial out(a.p_, a.alpha_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
  }

  friend bool operator==(const SubwordPolynomial&, const SubwordPolynomial&) = default;

 private:
  std::uint32_t p_ = 2;
  std::uint32_t alpha_ = 1;
  Terms terms_;
};

// Generation budget ------------------------------------------------------------

/// Abstract work units: one per inclusion-exclusion subset, cluster offset
/// assignment, cluster word prefix visited, and monomial product formed.
inline constexpr std::uint64_t kDefaultGenerationBudget = 50'000'000ULL;

struct GenerationProgress {
  std::size_t partitions_done = 0;
  std::size_t partitions_total = 0;
  IntPartition current;
  std::uint64_t work_used = 0;
};

struct GenerationOptions {
  std::uint64_t budget = kDefaultGenerationBudget;
  std::function<void(const GenerationProgress&)> progress;

  /// Default options with PASCALROWS_BUDGET applied when set.
  static GenerationOptions from_environment() {
    GenerationOptions options;
    if (const char* env = std::getenv("PASCALROWS_BUDGET"); env != nullptr && *env != '\0') {
      BigInt value = parse_bigint(env);
      if (sgn(value) <= 0 || !value.fits_ulong_p()) throw DomainError("PASCALROWS_BUDGET must be a positive integer");
      options.budget = value.get_ui();
    }
    return options;
  }
};

namespace detail {

/// Shared state for one generation run: c table, component cache, work meter.
class ClusterEngine {
 public:
  using LinearForm = std::vector<std::pair<DigitWord, Rational>>;

  ClusterEngine(std::uint32_t p, std::uint64_t budget) : p_(p), budget_(budget) {}

  std::uint64_t work_used() const { return work_; }
  void set_progress_context(std::string context) { context_ = std::move(context); }

  /// Sum over placements of P of prod c, as a polynomial in |n|_w.
  SubwordPolynomial nonoverlap(const IntPartition& partition, std::uint32_t alpha) {
    const auto parts = partition.parts();
    const std::size_t k = parts.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
    }
    if (pairs.size() > 40) throw ResourceError("partition " + partition.to_string() + " has too many parts");

    // Signed count of subsets A per multiset of component types.
    std::map<std::vector<std::size_t>, long long> groups;
    std::vector<std::size_t> root(k);
    const std::uint64_t subsets = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      charge(1);
      std::iota(root.begin(), root.end(), std::size_t{0});
      auto find = [&](std::size_t x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
      };
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if ((mask >> e) & 1U) root[find(pairs[e].first)] = find(pairs[e].second);
      }
      std::vector<std::size_t> ids;
      std::vector<bool> seen(k, false);
      for (std::size_t v = 0; v < k; ++v) {
        std::size_t r = find(v);
        if (seen[r]) continue;
        seen[r] = true;
        std::vector<std::size_t> members;
        for (std::size_t u = 0; u < k; ++u) {
          if (find(u) == r) members.push_back(u);
        }
        ids.push_back(component_id(members, parts, pairs, mask));
      }
      std::sort(ids.begin(), ids.end());
      groups[ids] += (std::popcount(mask) % 2 == 0) ? 1 : -1;
    }

    SubwordPolynomial total(p_, alpha);
    for (const auto& [ids, weight] : groups) {
      if (weight == 0) continue;
      SubwordPolynomial product = SubwordPolynomial::constant(p_, alpha, Rational(1));
      for (std::size_t id : ids) {
        const LinearForm& form = cluster_form(id);
        SubwordPolynomial next(p_, alpha);
        for (const auto& [monomial, coefficient] : product.terms()) {
          for (const auto& [word, c] : form) {
            charge(1);
            next.add_term(monomial * SubwordMonomial::variable(word), coefficient * c);
          }
        }
        product = std::move(next);
      }
      product *= Rational(static_cast<long>(weight));
      total += product;
    }

    BigInt symmetry = 1;
    for (auto [size, count] : partition.multiplicities()) {
      BigInt f;
      mpz_fac_ui(f.get_mpz_t(), count);
      symmetry *= f;
    }
    total *= Rational(BigInt(1), symmetry);
    return total;
  }

 private:
  struct ComponentShape {
    std::vector<std::uint32_t> sizes;
    std::vector<std::uint32_t> adjacency;  // bit j of row i: parts i and j must overlap

    friend auto operator<=>(const ComponentShape&, const ComponentShape&) = default;
  };

  void charge(std::uint64_t units) {
    work_ += units;
    if (work_ > budget_) {
      throw ResourceError("formula generation exceeded budget of " + std::to_string(budget_) + " work units" +
                          (context_.empty() ? std::string() : " (" + context_ + ")"));
    }
  }

  std::size_t component_id(const std::vector<std::size_t>& members, std::span<const std::uint32_t> parts,
                           const std::vector<std::pair<std::size_t, std::size_t>>& pairs, std::uint64_t mask) {
    const std::size_t m = members.size();
    ComponentShape raw{std::vector<std::uint32_t>(m), std::vector<std::uint32_t>(m, 0)};
    std::vector<std::size_t> local(parts.size(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      raw.sizes[i] = parts[members[i]];
      local[members[i]] = i;
    }
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (!((mask >> e) & 1U)) continue;
      auto [a, b] = pairs[e];
      if (std::find(members.begin(), members.end(), a) == members.end()) continue;
      raw.adjacency[local[a]] |= 1U << local[b];
      raw.adjacency[local[b]] |= 1U << local[a];
    }
    auto it = raw_ids_.find(raw);
    if (it != raw_ids_.end()) return it->second;

    ComponentShape canonical = canonicalize(raw);
    auto [cit, inserted] = canonical_ids_.try_emplace(canonical, shapes_.size());
    if (inserted) {
      shapes_.push_back(canonical);
      forms_.emplace_back();
    }
    raw_ids_.emplace(std::move(raw), cit->second);
    return cit->second;
  }

  /// Smallest relabeling among those that sort sizes in non-increasing order.
  ComponentShape canonicalize(const ComponentShape& raw) {
    const std::size_t m = raw.sizes.size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return raw.sizes[a] > raw.sizes[b]; });
    std::optional<ComponentShape> best;
    // Permute only within runs of equal size.
    std::function<void(std::size_t)> permute = [&](std::size_t from) {
      if (from >= m) {
        charge(1);
        ComponentShape candidate{std::vector<std::uint32_t>(m), std::vector<std::uint32_t>(m, 0)};
        std::vector<std::size_t> position(m);
        for (std::size_t i = 0; i < m; ++i) position[order[i]] = i;
        for (std::size_t i = 0; i < m; ++i) {
          candidate.sizes[i] = raw.sizes[order[i]];
          for (std::size_t j = 0; j < m; ++j) {
            if ((raw.adjacency[order[i]] >> j) & 1U) candidate.adjacency[i] |= 1U << position[j];
          }
        }
        if (!best || candidate < *best) best = std::move(candidate);
        return;
      }
      std::size_t to = from;
      while (to < m && raw.sizes[order[to]] == raw.sizes[order[from]]) ++to;
      std::sort(order.begin() + static_cast<std::ptrdiff_t>(from), order.begin() + static_cast<std::ptrdiff_t>(to));
      do {
        permute(to);
      } while (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(from),
                                     order.begin() + static_cast<std::ptrdiff_t>(to)));
    };
    permute(0);
    return *best;
  }

  const LinearForm& cluster_form(std::size_t id) {
    if (forms_[id]) return *forms_[id];
    const ComponentShape shape = shapes_[id];
    const std::size_t m = shape.sizes.size();

    // Visit order where every vertex after the first has an earlier neighbour.
    std::vector<std::size_t> order{0};
    std::vector<std::size_t> parent(m, 0);
    std::vector<bool> placed(m, false);
    placed[0] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (std::size_t v = 0; v < m; ++v) {
        if (!placed[v] && ((shape.adjacency[order[head]] >> v) & 1U)) {
          placed[v] = true;
          parent[v] = order[head];
          order.push_back(v);
        }
      }
    }

    std::map<DigitWord, Rational> accumulated;
    std::vector<long> start(m, 0);
    std::function<void(std::size_t)> assign = [&](std::size_t index) {
      if (index == m) {
        charge(1);
        long lo = start[0], hi = start[0] + static_cast<long>(shape.sizes[0]);
        for (std::size_t v = 1; v < m; ++v) {
          lo = std::min(lo, start[v]);
          hi = std::max(hi, start[v] + static_cast<long>(shape.sizes[v]));
        }
        std::vector<std::pair<std::size_t, std::size_t>> segments;
        for (std::size_t v = 0; v < m; ++v) segments.emplace_back(start[v] - lo, shape.sizes[v]);
        sum_cluster_words(static_cast<std::size_t>(hi - lo), segments, accumulated);
        return;
      }
      const std::size_t v = order[index];
      const long anchor = start[parent[v]];
      const long first = anchor - static_cast<long>(shape.sizes[v]) + 1;
      const long last = anchor + static_cast<long>(shape.sizes[parent[v]]) - 1;
      for (long s = first; s <= last; ++s) {
        start[v] = s;
        bool ok = true;
        for (std::size_t i = 0; i < index && ok; ++i) {
          const std::size_t u = order[i];
          if ((shape.adjacency[v] >> u) & 1U) {
            ok = s < start[u] + static_cast<long>(shape.sizes[u]) && start[u] < s + static_cast<long>(shape.sizes[v]);
          }
        }
        if (ok) assign(index + 1);
      }
    };
    assign(1);

    LinearForm form;
    for (auto& [word, coefficient] : accumulated) {
      if (!coefficient.is_zero()) form.emplace_back(word, std::move(coefficient));
    }
    forms_[id] = std::move(form);
    return *forms_[id];
  }

  /// Adds sum_{w in [p]^length} prod_{segments} c(w[start, start+len)) |n|_w.
  void sum_cluster_words(std::size_t length, const std::vector<std::pair<std::size_t, std::size_t>>& segments,
                         std::map<DigitWord, Rational>& out) {
    std::vector<std::vector<std::size_t>> ending(length);  // segments ending at each position
    std::vector<bool> starts_here(length, false);
    for (std::size_t s = 0; s < segments.size(); ++s) {
      ending[segments[s].first + segments[s].second - 1].push_back(s);
      starts_here[segments[s].first] = true;
    }
    std::vector<Digit> digits(length);
    std::vector<Rational> partial(length + 1);
    partial[0] = Rational(1);
    std::function<void(std::size_t)> extend = [&](std::size_t pos) {
      if (pos == length) {
        out[DigitWord(p_, digits)] += partial[length];
        return;
      }
      for (Digit d = starts_here[pos] ? 1 : 0; d < p_; ++d) {
        charge(1);
        digits[pos] = d;
        Rational value = partial[pos];
        for (std::size_t s : ending[pos]) {
          auto [seg_start, seg_len] = segments[s];
          Rational c = c_weight_digits(std::span<const Digit>(digits).subspan(seg_start, seg_len), p_);
          if (c.is_zero()) {
            value = Rational(0);
            break;
          }
          value *= c;
        }
        if (value.is_zero()) continue;
        partial[pos + 1] = std::move(value);
        extend(pos + 1);
      }
    };
    extend(0);
  }

  std::uint32_t p_;
  std::uint64_t budget_;
  std::uint64_t work_ = 0;
  std::string context_;
  std::map<ComponentShape, std::size_t> raw_ids_;
  std::map<ComponentShape, std::size_t> canonical_ids_;
  std::vector<ComponentShape> shapes_;
  std::vector<std::optional<LinearForm>> forms_;
};

}  // namespace detail

/// Sum over nonoverlapping placements of P of prod c, rewritten in |n|_w.
inline SubwordPolynomial nonoverlap_polynomial(const IntPartition& partition, std::uint32_t p, std::uint32_t alpha,
                                               const GenerationOptions& options = {}) {
  require_prime(p);
  detail::ClusterEngine engine(p, options.budget);
  engine.set_progress_context("partition " + partition.to_string());
  return engine.nonoverlap(partition, alpha);
}

/// The full closed form a_{p^alpha}(n)/a_p(n).
inline SubwordPolynomial generate_formula(std::uint32_t p, std::uint32_t alpha, const GenerationOptions& options = {}) {
  require_prime(p);
  if (alpha == 0) throw DomainError("generate_formula requires alpha >= 1");

  std::vector<IntPartition> work;
  for (std::uint32_t gamma = 0; gamma <= 2 * (alpha - 1); ++gamma) {
    for (auto& partition : partitions_s_alpha(alpha, gamma)) work.push_back(std::move(partition));
  }

  detail::ClusterEngine engine(p, options.budget);
  SubwordPolynomial formula(p, alpha);
  for (std::size_t i = 0; i < work.size(); ++i) {
    engine.set_progress_context(std::to_string(i) + " of " + std::to_string(work.size()) +
                                " partitions complete; working on " + work[i].to_string());
    formula += engine.nonoverlap(work[i], alpha);
    if (options.progress) options.progress(GenerationProgress{i + 1, work.size(), work[i], engine.work_used()});
  }
  return formula;
}

inline SubwordCounts formula_counts(const SubwordPolynomial& formula, const DigitWord& word) {
  return all_subword_counts(word, std::max<std::size_t>(1, formula.max_word_length()));
}

/// a_{p^alpha}(n): the Fine prefactor times the polynomial at n's subword counts.
inline BigInt evaluate_formula(const SubwordPolynomial& formula, const DigitWord& word) {
  if (word.base() != formula.p()) throw DomainError("evaluate_formula: word base differs from formula base");
  Rational value = formula.evaluate(formula_counts(formula, word)) * Rational(fine_product(word));
  return detail::require_integral(value, "evaluate_formula");
}

inline BigInt evaluate_formula(const SubwordPolynomial& formula, const BigInt& n) {
  return evaluate_formula(formula, to_digits(n, formula.p()));
}

inline Rational extract_coefficient(const SubwordPolynomial& formula, const SubwordMonomial& monomial) {
  return formula.coefficient(monomial);
}

}  // namespace pascalrows
