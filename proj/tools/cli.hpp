#pragma once

// Command-line front end. `run_cli` is separate from main() so the test
// suite can drive it with captured streams.

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <pascalrows/pascalrows.hpp>

namespace pascalrows::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDomainError = 1,
  kVerificationFailure = 2,
  kResourceError = 3,
};

inline const std::vector<std::string> kMethods{"theorem1", "recurrence", "brute", "bigint", "formula"};

/// Parsed flags shared by all subcommands.
struct CommandConfig {
  std::uint32_t p = 0;
  std::uint32_t alpha = 0;
  std::string n = "0";
  std::string method = "recurrence";
  std::string format = "text";
  std::string out_path;
  std::uint64_t n_max = 0;
  std::string from = "0";
  std::string to = "0";
  std::uint64_t base = 10;
  std::uint64_t m = 0;
  std::uint32_t beta = 0;
  std::uint32_t depth = kDefaultKernelDepth;
  std::uint64_t kernel_columns = kDefaultKernelColumns;
  std::string tsv_path;
};

namespace detail {

inline BigInt parse_nonnegative(const std::string& text, const char* what) {
  BigInt value = parse_bigint(text);
  if (sgn(value) < 0) throw DomainError(std::string(what) + " must be nonnegative");
  return value;
}

inline std::uint64_t as_u64(const BigInt& value, const char* what) {
  if (!value.fits_ulong_p()) throw ResourceError(std::string(what) + " too large for this method");
  return value.get_ui();
}

/// Lazily generated closed form, reused across a verify/table run.
class FormulaCache {
 public:
  FormulaCache(std::uint32_t p, std::uint32_t alpha) : p_(p), alpha_(alpha) {}
  const SubwordPolynomial& get() {
    if (!formula_) formula_ = generate_formula(p_, alpha_, GenerationOptions::from_environment());
    return *formula_;
  }

 private:
  std::uint32_t p_;
  std::uint32_t alpha_;
  std::optional<SubwordPolynomial> formula_;
};

inline BigInt count_with(const std::string& method, const BigInt& n, std::uint32_t p, std::uint32_t alpha,
                         FormulaCache& formula) {
  if (method == "theorem1") return theorem1_count(n, p, alpha);
  if (method == "recurrence") return row_nonzero_count_recurrence(n, p, alpha);
  if (method == "brute") return row_nonzero_count_kummer(as_u64(n, "n"), p, alpha);
  if (method == "bigint") {
    if (alpha == 0) return 0;
    BigInt modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), p, alpha);
    return row_nonzero_count_bigint(as_u64(n, "n"), as_u64(modulus, "p^alpha"));
  }
  if (method == "formula") {
    if (alpha == 0) return 0;
    return evaluate_formula(formula.get(), n);
  }
  throw DomainError("unknown method: " + method);
}

inline int run_count(const CommandConfig& cfg, std::ostream& out) {
  require_prime(cfg.p);
  FormulaCache formula(cfg.p, cfg.alpha);
  out << to_string(count_with(cfg.method, parse_nonnegative(cfg.n, "n"), cfg.p, cfg.alpha, formula)) << '\n';
  return kSuccess;
}

inline int run_formula(const CommandConfig& cfg, std::ostream& out) {
  require_prime(cfg.p);
  const FormulaFormat format = parse_formula_format(cfg.format);
  const std::string text = serialize_formula(generate_formula(cfg.p, cfg.alpha, GenerationOptions::from_environment()), format);
  if (cfg.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw DomainError("cannot open output file: " + cfg.out_path);
    file << text;
  }
  return kSuccess;
}

inline int run_verify(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  require_prime(cfg.p);
  FormulaCache formula(cfg.p, cfg.alpha);
  std::size_t mismatches = 0;
  bool bigint_truncated = false;
  for (std::uint64_t n = 0; n <= cfg.n_max; ++n) {
    const BigInt value(static_cast<unsigned long>(n));
    const BigInt reference = count_with("theorem1", value, cfg.p, cfg.alpha, formula);
    for (const auto& method : kMethods) {
      if (method == "theorem1") continue;
      if (method == "bigint" && n > kDefaultBigintRowLimit) {
        bigint_truncated = true;
        continue;
      }
      BigInt got = count_with(method, value, cfg.p, cfg.alpha, formula);
      if (got != reference) {
        ++mismatches;
        err << "mismatch at n=" << n << ": theorem1=" << to_string(reference) << " " << method << "=" << to_string(got)
            << '\n';
      }
    }
  }
  if (mismatches > 0) {
    err << mismatches << " mismatches\n";
    return kVerificationFailure;
  }
  out << "ok: p=" << cfg.p << " alpha=" << cfg.alpha << " n=0.." << cfg.n_max
      << " theorem1 = recurrence = brute = bigint = formula";
  if (bigint_truncated) out << " (bigint checked for n<=" << kDefaultBigintRowLimit << ")";
  out << '\n';
  return kSuccess;
}

inline int run_table(const CommandConfig& cfg, std::ostream& out) {
  require_prime(cfg.p);
  const BigInt from = parse_nonnegative(cfg.from, "--from");
  const BigInt to = parse_nonnegative(cfg.to, "--to");
  if (from > to) throw DomainError("empty range: --from exceeds --to");
  out << "n\tcount\n";
  for (BigInt n = from; n <= to; ++n) {
    out << to_string(n) << '\t' << to_string(row_nonzero_count_recurrence(n, cfg.p, cfg.alpha)) << '\n';
  }
  return kSuccess;
}

inline int run_borrows(const CommandConfig& cfg, std::ostream& out) {
  out << count_borrows(as_u64(parse_nonnegative(cfg.n, "n"), "n"), cfg.m, cfg.base) << '\n';
  return kSuccess;
}

inline int run_ratio(const CommandConfig& cfg, std::ostream& out) {
  DigitWord word = to_digits(parse_nonnegative(cfg.n, "n"), cfg.base);
  out << proposition_ratio(word, cfg.beta).to_string() << '\n';
  return kSuccess;
}

inline int run_rank(const CommandConfig& cfg, std::ostream& out) {
  require_prime(cfg.p);
  if (cfg.alpha == 0) throw DomainError("rank requires alpha >= 1");
  KernelMatrix matrix = build_kernel_matrix(cfg.p, cfg.alpha, cfg.depth, cfg.kernel_columns);
  RankProbe probe = probe_kernel_rank(matrix);
  out << "experimental estimate: rank " << probe.rank << " (" << (probe.converged ? "converged" : "not converged")
      << "; ranks by depth";
  for (std::size_t i = 0; i < probe.rank_by_depth.size(); ++i) out << (i == 0 ? " " : ",") << probe.rank_by_depth[i];
  out << "; conjectured 2*alpha-1 = " << (2 * cfg.alpha - 1) << ")\n";
  if (!cfg.tsv_path.empty()) {
    std::ofstream file(cfg.tsv_path, std::ios::binary);
    if (!file) throw DomainError("cannot open output file: " + cfg.tsv_path);
    write_kernel_tsv(matrix, file);
  }
  return kSuccess;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Count nonzero binomial coefficients modulo prime powers and generate subword-count formulas",
               "pascalrows"};
  app.require_subcommand(1);
  CommandConfig cfg;

  auto add_prime_power = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "prime")->required();
    sub->add_option("--alpha", cfg.alpha, "exponent")->required();
  };

  auto* count = app.add_subcommand("count", "Print a_{p^alpha}(n)");
  add_prime_power(count);
  count->add_option("--n", cfg.n, "row index")->required();
  count->add_option("--method", cfg.method, "counting route")->check(CLI::IsMember(kMethods));

  auto* formula = app.add_subcommand("formula", "Generate the closed form in subword counts");
  add_prime_power(formula);
  formula->add_option("--format", cfg.format, "text, latex, or json")->check(CLI::IsMember({"text", "latex", "json"}));
  formula->add_option("--out", cfg.out_path, "write to FILE instead of stdout");

  auto* verify = app.add_subcommand("verify", "Cross-check every counting route for n = 0..N");
  add_prime_power(verify);
  verify->add_option("--n-max", cfg.n_max, "largest n")->required();

  auto* table = app.add_subcommand("table", "TSV of (n, count) for n in [from, to]");
  add_prime_power(table);
  table->add_option("--from", cfg.from, "first n")->required();
  table->add_option("--to", cfg.to, "last n")->required();

  auto* borrows = app.add_subcommand("borrows", "Borrows in n - m");
  borrows->add_option("--base", cfg.base, "base")->required();
  borrows->add_option("--n", cfg.n, "minuend")->required();
  borrows->add_option("--m", cfg.m, "subtrahend")->required();

  auto* ratio = app.add_subcommand("ratio", "A_n(beta)/A_n(0) from the partition sum");
  ratio->add_option("--base", cfg.base, "base")->required();
  ratio->add_option("--n", cfg.n, "n")->required();
  ratio->add_option("--beta", cfg.beta, "borrow count")->required();

  auto* rank = app.add_subcommand("rank", "Experimental p-kernel rank estimate");
  add_prime_power(rank);
  rank->add_option("--depth", cfg.depth, "kernel depth")->capture_default_str();
  rank->add_option("--n-max", cfg.kernel_columns, "last column index")->capture_default_str();
  rank->add_option("--tsv", cfg.tsv_path, "dump the kernel matrix as TSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kDomainError;
  }

  try {
    if (*count) return detail::run_count(cfg, out);
    if (*formula) return detail::run_formula(cfg, out);
    if (*verify) return detail::run_verify(cfg, out, err);
    if (*table) return detail::run_table(cfg, out);
    if (*borrows) return detail::run_borrows(cfg, out);
    if (*ratio) return detail::run_ratio(cfg, out);
    if (*rank) return detail::run_rank(cfg, out);
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceError;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kDomainError;
}

}  // namespace pascalrows::cli
