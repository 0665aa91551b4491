#include <gtest/gtest.h>

#include "fdb/core/combinatorics.hpp"
#include "fdb/core/lincomb.hpp"
#include "fdb/core/monomial.hpp"
#include "fdb/core/scalar.hpp"
#include "oracles/oracles.hpp"

using namespace fdb;

TEST(Scalar, ArithmeticIsExact) {
    EXPECT_EQ(Scalar(1, 2) + Scalar(1, 3), Scalar(5, 6));
    EXPECT_EQ(Scalar(2, 4), Scalar(1, 2));
    EXPECT_EQ(Scalar(-3, -6).str(), "1/2");
    EXPECT_EQ(Scalar(3, -6).str(), "-1/2");
    EXPECT_EQ(Scalar(7, 3) * Scalar(3, 7), Scalar(1));
    EXPECT_EQ(Scalar(1) / Scalar(3) - Scalar(1, 3), Scalar(0));
}

TEST(Scalar, ParseRoundTrip) {
    for (const char* s : {"0", "5", "-8/3", "3/2", "123456789012345678901234567890/11"})
        EXPECT_EQ(Scalar::parse(s).str(), s);
    EXPECT_EQ(Scalar::parse(" 4/6 "), Scalar(2, 3));
}

TEST(Scalar, Errors) {
    EXPECT_THROW(Scalar(1, 0), std::domain_error);
    EXPECT_THROW(Scalar(1) / Scalar(0), std::domain_error);
    EXPECT_THROW(Scalar::parse("1/0"), std::domain_error);
    EXPECT_THROW(Scalar::parse("abc"), std::invalid_argument);
    EXPECT_THROW(Scalar::parse(""), std::invalid_argument);
}

TEST(LinComb, Combine) {
    using L = LinComb<CommMonomial>;
    const auto x1 = CommMonomial::generator(1), x2 = CommMonomial::generator(2);
    EXPECT_TRUE((L(x1) + L(x1) * Scalar(-1)).is_zero());
    EXPECT_EQ(L(x2, 2) + L(x2) * Scalar(3), L(x2, 5));
    const auto t = tensor(x1, x1) + tensor(x2, CommMonomial{});
    EXPECT_EQ(t.size(), 2U);
    EXPECT_EQ(t.coeff({x1, x1}), Scalar(1));
    EXPECT_EQ(t.coeff({x2, CommMonomial{}}), Scalar(1));
}

TEST(LinComb, NoZeroCoefficientsStored) {
    LinComb<Word> v;
    v.add(Word{1, 2}, 3);
    v.add(Word{1, 2}, -3);
    EXPECT_TRUE(v.is_zero());
    EXPECT_EQ(v.size(), 0U);
}

TEST(Functional, Evaluate) {
    const auto x1 = CommMonomial::generator(1), x2 = CommMonomial::generator(2);
    std::map<CommMonomial, Scalar> f{{x1, 1}};
    EXPECT_EQ(functional_eval(f, LinComb<CommMonomial>(x1, 3)), Scalar(3));
    EXPECT_EQ(functional_eval(f, LinComb<CommMonomial>(x2)), Scalar(0));
    f[x2] = 2;
    EXPECT_EQ(functional_eval(f, LinComb<CommMonomial>(x1) + LinComb<CommMonomial>(x2)), Scalar(3));
}

TEST(Monomial, DegreeAndParse) {
    const CommMonomial m{{1, 2}, {3, 1}};
    EXPECT_EQ(m.degree(), 5);
    EXPECT_EQ(to_string(m), "x1^2 x3");
    EXPECT_EQ(parse_monomial("x1^2 x3"), m);
    EXPECT_EQ(parse_monomial("x3 x1 x1"), m);
    EXPECT_EQ(parse_monomial("1"), CommMonomial{});
    EXPECT_THROW(parse_monomial("y2"), std::invalid_argument);
    EXPECT_THROW(parse_monomial(""), std::invalid_argument);
    EXPECT_THROW(parse_monomial("x0"), std::invalid_argument);
}

TEST(Word, ParseAndConcat) {
    EXPECT_EQ(parse_word("x1x2"), (Word{1, 2}));
    EXPECT_EQ(parse_word("x2 x1^2"), (Word{2, 1, 1}));
    EXPECT_EQ(to_string(Word{2, 1}), "x2x1");
    EXPECT_EQ(parse_word(to_string(Word{3, 1, 4})), (Word{3, 1, 4}));
    EXPECT_EQ((Word{1} * Word{2, 3}), (Word{1, 2, 3}));
    EXPECT_EQ((Word{1, 2}).degree(), 3);
    EXPECT_THROW(Word({0}), std::invalid_argument);
}

TEST(Combinatorics, CountsMatchOracles) {
    for (int n = 1; n <= 7; ++n) {
        long parts = 0, sets = 0;
        comb::for_each_partition(n, [&](const std::vector<int>&) { ++parts; });
        comb::for_each_set_partition(n, [&](const std::vector<std::vector<int>>&) { ++sets; });
        EXPECT_EQ(parts, oracle::partition_number(n)) << n;
        EXPECT_EQ(sets, oracle::bell_number(n)) << n;
        for (int k = 0; k <= n; ++k) EXPECT_EQ(comb::binomial(n, k), oracle::binomial(n, k));
    }
}
