#pragma once

// Text, LaTeX, and JSON renderings of SubwordPolynomial.
//
// JSON layout (one line, newline-terminated):
//   {"p":2,"alpha":3,"prefactor":"fine",
//    "terms":[{"coeff":"3/8","vars":[{"word":"10","exp":1}]}, ...]}

#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "formula.hpp"

namespace pascalrows {

enum class FormulaFormat { text, latex, json };

inline FormulaFormat parse_formula_format(std::string_view name) {
  if (name == "text") return FormulaFormat::text;
  if (name == "latex") return FormulaFormat::latex;
  if (name == "json") return FormulaFormat::json;
  throw DomainError("unknown formula format: " + std::string(name));
}

namespace detail {

inline std::string modulus_string(std::uint32_t p, std::uint32_t alpha) {
  BigInt modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), p, alpha);
  return to_string(modulus);
}

inline std::string latex_subscript(const std::string& s) { return s.size() == 1 ? "_" + s : "_{" + s + "}"; }
inline std::string latex_superscript(const std::string& s) { return s.size() == 1 ? "^" + s : "^{" + s + "}"; }

inline std::string latex_coefficient(const Rational& magnitude) {
  if (magnitude.is_integer()) return to_string(magnitude.numerator());
  return "\\frac{" + to_string(magnitude.numerator()) + "}{" + to_string(magnitude.denominator()) + "}";
}

inline std::string render_text(const SubwordPolynomial& f) {
  std::ostringstream out;
  out << "a_" << modulus_string(f.p(), f.alpha()) << "(n)/";
  if (f.p() > 2) out << "(";
  for (std::uint32_t r = 1; r < f.p(); ++r) {
    if (r > 1) out << "*";
    out << (r + 1) << "^|n|_" << r;
  }
  if (f.p() > 2) out << ")";
  out << " = ";
  if (f.terms().empty()) return out.str() + "0";

  bool first = true;
  for (const auto& [monomial, coefficient] : f.terms()) {
    Rational magnitude = coefficient.sign() < 0 ? -coefficient : coefficient;
    if (first) {
      if (coefficient.sign() < 0) out << "-";
    } else {
      out << (coefficient.sign() < 0 ? " - " : " + ");
    }
    first = false;
    std::string vars;
    for (const auto& [word, exp] : monomial.factors()) {
      if (!vars.empty()) vars += "*";
      vars += "|" + word.to_string() + "|";
      if (exp > 1) vars += "^" + std::to_string(exp);
    }
    if (vars.empty()) {
      out << magnitude.to_string();
    } else if (magnitude == Rational(1)) {
      out << vars;
    } else {
      out << magnitude.to_string() << "*" << vars;
    }
  }
  return out.str();
}

inline std::string render_latex(const SubwordPolynomial& f) {
  std::ostringstream out;
  out << "a" << latex_subscript(modulus_string(f.p(), f.alpha())) << "(n) = ";
  for (std::uint32_t r = 1; r < f.p(); ++r) {
    out << std::to_string(r + 1) << "^{|n|" << latex_subscript(std::to_string(r)) << "} ";
  }
  out << "\\left(";
  if (f.terms().empty()) out << "0";
  bool first = true;
  for (const auto& [monomial, coefficient] : f.terms()) {
    Rational magnitude = coefficient.sign() < 0 ? -coefficient : coefficient;
    if (first) {
      if (coefficient.sign() < 0) out << "-";
    } else {
      out << (coefficient.sign() < 0 ? " - " : " + ");
    }
    first = false;
    std::string vars;
    for (const auto& [word, exp] : monomial.factors()) {
      if (!vars.empty()) vars += " ";
      vars += "|n|" + latex_subscript(word.to_string());
      if (exp > 1) vars += latex_superscript(std::to_string(exp));
    }
    if (vars.empty()) {
      out << latex_coefficient(magnitude);
    } else if (magnitude == Rational(1)) {
      out << vars;
    } else {
      out << latex_coefficient(magnitude) << " " << vars;
    }
  }
  out << "\\right)";
  return out.str();
}

inline std::string render_json(const SubwordPolynomial& f) {
  nlohmann::ordered_json doc;
  doc["p"] = f.p();
  doc["alpha"] = f.alpha();
  doc["prefactor"] = "fine";
  doc["terms"] = nlohmann::ordered_json::array();
  for (const auto& [monomial, coefficient] : f.terms()) {
    nlohmann::ordered_json term;
    term["coeff"] = coefficient.to_string();
    term["vars"] = nlohmann::ordered_json::array();
    for (const auto& [word, exp] : monomial.factors()) {
      nlohmann::ordered_json var;
      var["word"] = word.to_string();
      var["exp"] = exp;
      term["vars"].push_back(std::move(var));
    }
    doc["terms"].push_back(std::move(term));
  }
  return doc.dump() + "\n";
}

}  // namespace detail

inline std::string serialize_formula(const SubwordPolynomial& f, FormulaFormat format) {
  switch (format) {
    case FormulaFormat::text:
      return detail::render_text(f) + "\n";
    case FormulaFormat::latex:
      return detail::render_latex(f) + "\n";
    case FormulaFormat::json:
      return detail::render_json(f);
  }
  throw DomainError("unknown formula format");
}

inline SubwordPolynomial deserialize_formula(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed formula JSON: ") + e.what());
  }
  try {
    const auto p = doc.at("p").get<std::uint32_t>();
    const auto alpha = doc.at("alpha").get<std::uint32_t>();
    if (doc.at("prefactor").get<std::string>() != "fine") throw DomainError("unsupported prefactor");
    require_prime(p);
    SubwordPolynomial f(p, alpha);
    for (const auto& term : doc.at("terms")) {
      std::vector<SubwordMonomial::Factor> factors;
      for (const auto& var : term.at("vars")) {
        auto exp = var.at("exp").get<std::uint32_t>();
        if (exp == 0) throw DomainError("variable exponent must be positive");
        factors.emplace_back(DigitWord::parse(var.at("word").get<std::string>(), p), exp);
      }
      f.add_term(SubwordMonomial(std::move(factors)), Rational::parse(term.at("coeff").get<std::string>()));
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed formula JSON: ") + e.what());
  }
}

}  // namespace pascalrows
