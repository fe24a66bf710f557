#include <random>

#include <gtest/gtest.h>

#include <pascalrows/formula_io.hpp>

using namespace pascalrows;

TEST(FormulaText, FourMatchesLayout) {
  EXPECT_EQ(serialize_formula(generate_formula(2, 2), FormulaFormat::text), "a_4(n)/2^|n|_1 = 1 + 1/2*|10|\n");
}

TEST(FormulaText, MultiDigitPrefactorAndPowers) {
  EXPECT_EQ(serialize_formula(generate_formula(3, 2), FormulaFormat::text),
            "a_9(n)/(2^|n|_1*3^|n|_2) = 1 + |10| + 1/4*|11| + 4/3*|20| + 1/3*|21|\n");
  EXPECT_EQ(serialize_formula(generate_formula(2, 3), FormulaFormat::text),
            "a_8(n)/2^|n|_1 = 1 + 3/8*|10| + |100| + 1/4*|110| + 1/8*|10|^2\n");
  EXPECT_EQ(serialize_formula(nonoverlap_polynomial(IntPartition({2, 2}), 2, 3), FormulaFormat::text),
            "a_8(n)/2^|n|_1 = -1/8*|10| + 1/8*|10|^2\n");
}

TEST(FormulaLatex, NineMatchesPrintedDisplay) {
  EXPECT_EQ(serialize_formula(generate_formula(3, 2), FormulaFormat::latex),
            "a_9(n) = 2^{|n|_1} 3^{|n|_2} \\left(1 + |n|_{10} + \\frac{1}{4} |n|_{11} + \\frac{4}{3} |n|_{20} + "
            "\\frac{1}{3} |n|_{21}\\right)\n");
  std::string a27 = serialize_formula(generate_formula(3, 3), FormulaFormat::latex);
  EXPECT_NE(a27.find("a_{27}(n) = "), std::string::npos);
  EXPECT_NE(a27.find(" + \\frac{1}{32} |n|_{11}^2 + "), std::string::npos);
  EXPECT_NE(a27.find(" + \\frac{4}{9} |n|_{20} |n|_{21} + "), std::string::npos);
}

TEST(FormulaJson, CanonicalDocument) {
  EXPECT_EQ(serialize_formula(generate_formula(2, 2), FormulaFormat::json),
            "{\"p\":2,\"alpha\":2,\"prefactor\":\"fine\",\"terms\":[{\"coeff\":\"1\",\"vars\":[]},"
            "{\"coeff\":\"1/2\",\"vars\":[{\"word\":\"10\",\"exp\":1}]}]}\n");
}

TEST(FormulaJson, RoundTripsGeneratedFormulas) {
  for (auto [p, alpha] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {3, 3}, {5, 2}, {13, 2}}) {
    auto f = generate_formula(p, alpha);
    EXPECT_EQ(deserialize_formula(serialize_formula(f, FormulaFormat::json)), f);
  }
}

TEST(FormulaJson, RoundTripsRandomPolynomials) {
  std::mt19937_64 rng(3);
  const std::uint32_t primes[] = {2, 3, 5, 11, 13};
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t p = primes[rng() % 5];
    SubwordPolynomial f(p, 1 + static_cast<std::uint32_t>(rng() % 6));
    for (int t = static_cast<int>(rng() % 8); t > 0; --t) {
      std::vector<SubwordMonomial::Factor> factors;
      for (int v = static_cast<int>(rng() % 4); v > 0; --v) {
        std::vector<Digit> digits(1 + rng() % 4);
        for (auto& d : digits) d = static_cast<Digit>(rng() % p);
        factors.emplace_back(DigitWord(p, digits), 1 + static_cast<std::uint32_t>(rng() % 3));
      }
      long num = static_cast<long>(rng() % 2001) - 1000;
      long den = 1 + static_cast<long>(rng() % 500);
      f.add_term(SubwordMonomial(std::move(factors)), Rational(num, den));
    }
    auto text = serialize_formula(f, FormulaFormat::json);
    ASSERT_EQ(text.back(), '\n');
    ASSERT_EQ(deserialize_formula(text), f) << text;
    ASSERT_EQ(serialize_formula(deserialize_formula(text), FormulaFormat::json), text);
  }
}

TEST(FormulaJson, RejectsMalformedInput) {
  EXPECT_THROW(deserialize_formula("not json"), DomainError);
  EXPECT_THROW(deserialize_formula(R"({"p":2,"alpha":2,"terms":[]})"), DomainError);
  EXPECT_THROW(deserialize_formula(R"({"p":4,"alpha":2,"prefactor":"fine","terms":[]})"), DomainError);
  EXPECT_THROW(deserialize_formula(R"({"p":2,"alpha":2,"prefactor":"fine","terms":[{"coeff":"1/0","vars":[]}]})"),
               ArithmeticError);
  EXPECT_THROW(
      deserialize_formula(R"({"p":2,"alpha":2,"prefactor":"fine","terms":[{"coeff":"1","vars":[{"word":"12","exp":1}]}]})"),
      DomainError);
}

TEST(FormulaFormat, Parses) {
  EXPECT_EQ(parse_formula_format("latex"), FormulaFormat::latex);
  EXPECT_THROW(parse_formula_format("xml"), DomainError);
}
