#include <gtest/gtest.h>

#include "fdb/checks.hpp"
#include "fdb/series.hpp"
#include "oracles/oracles.hpp"

using namespace fdb;

namespace {

TruncSeries t_plus_t2(int N) { return TruncSeries::diffeo(N, {{2, Scalar(1)}}); }

DerivTerm term(int f_order, CommMonomial g) { return DerivTerm{f_order, std::move(g)}; }

}  // namespace

TEST(Series, ConstructionRules) {
    EXPECT_THROW(TruncSeries::diffeo(0), std::invalid_argument);
    EXPECT_THROW(TruncSeries::diffeo(4, {{1, Scalar(2)}}), std::invalid_argument);
    EXPECT_THROW(TruncSeries::diffeo(4, {{5, Scalar(2)}}), std::invalid_argument);
    EXPECT_THROW(TruncSeries::invertible(4, {{0, Scalar(2)}}), std::invalid_argument);
    const auto f = t_plus_t2(4);
    EXPECT_EQ(f.coeff(1), Scalar(1));
    EXPECT_EQ(f.coeff(0), Scalar(0));
    EXPECT_THROW(f.coeff(5), std::out_of_range);
}

TEST(Series, ComposeExamples) {
    const auto f = t_plus_t2(4);
    EXPECT_EQ(compose(f, f), TruncSeries::diffeo(4, {{2, Scalar(2)}, {3, Scalar(2)}, {4, Scalar(1)}}));
    Rng rng(11);
    const auto r = random_diffeo(6, rng);
    EXPECT_EQ(compose(r, TruncSeries::identity(6)), r);
    EXPECT_EQ(compose(TruncSeries::identity(6), r), r);
    EXPECT_THROW(compose(f, t_plus_t2(5)), std::invalid_argument);
    EXPECT_THROW(compose(f, TruncSeries::one(4)), std::invalid_argument);
}

TEST(Series, ComposeMatchesSubstitutionOracle) {
    Rng rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        const int N = 2 + trial % 8;
        const auto f = random_diffeo(N, rng), g = random_diffeo(N, rng);
        const auto expected = oracle::substitute(f.dense(), g.dense(), N);
        EXPECT_EQ(compose(f, g).dense(), expected) << "N=" << N;
    }
}

TEST(Series, GroupLaws) {
    Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = random_diffeo(7, rng), g = random_diffeo(7, rng), h = random_diffeo(7, rng);
        EXPECT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
        const auto fi = compositional_inverse(f);
        EXPECT_EQ(compose(f, fi), TruncSeries::identity(7));
        EXPECT_EQ(compose(fi, f), TruncSeries::identity(7));
    }
}

TEST(Series, InverseExamples) {
    EXPECT_EQ(compositional_inverse(t_plus_t2(5)),
              TruncSeries::diffeo(5, {{2, Scalar(-1)}, {3, Scalar(2)}, {4, Scalar(-5)}, {5, Scalar(14)}}));
    EXPECT_EQ(compositional_inverse(TruncSeries::identity(6)), TruncSeries::identity(6));
    const auto lambert = lambert_coefficients(8);
    ASSERT_EQ(lambert.size(), 8U);
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(lambert[static_cast<std::size_t>(n - 1)], oracle::lambert(n)) << n;
    const std::vector<Scalar> first4{Scalar(1), Scalar(-1), Scalar(3, 2), Scalar(-8, 3)};
    EXPECT_EQ(lambert_coefficients(4), first4);
}

TEST(Series, InverseRoutesAgreeWithFixedPointOracle) {
    Rng rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = random_diffeo(8, rng);
        const auto expected = oracle::inverse_fixed_point(f.dense(), 8);
        EXPECT_EQ(compositional_inverse(f).dense(), expected);
        EXPECT_EQ(inverse_by_back_substitution(f).dense(), expected);
    }
}

TEST(Series, MultiplicativeInverse) {
    const auto one_plus_t = TruncSeries::invertible(6, {{1, Scalar(1)}});
    std::map<int, Scalar> alt;
    for (int n = 1; n <= 6; ++n) alt.emplace(n, n % 2 ? Scalar(-1) : Scalar(1));
    EXPECT_EQ(multiplicative_inverse(one_plus_t), TruncSeries::invertible(6, alt));
    EXPECT_EQ(multiplicative_inverse(TruncSeries::one(6)), TruncSeries::one(6));
    EXPECT_EQ(multiply(one_plus_t, multiplicative_inverse(one_plus_t)), TruncSeries::one(6));
    Rng rng(3);
    const auto f = random_invertible(7, rng);
    EXPECT_EQ(multiplicative_inverse(f).dense(), oracle::reciprocal(f.dense(), 7));
    EXPECT_THROW(multiplicative_inverse(t_plus_t2(3)), std::invalid_argument);
}

TEST(Bell, Examples) {
    EXPECT_EQ(bell_polynomial(3, 1), LinComb<CommMonomial>(CommMonomial::generator(3)));
    EXPECT_EQ(bell_polynomial(3, 2), LinComb<CommMonomial>(CommMonomial{{1, 1}, {2, 1}}, 3));
    EXPECT_EQ(bell_polynomial(4, 2),
              LinComb<CommMonomial>(CommMonomial{{1, 1}, {3, 1}}, 4) + LinComb<CommMonomial>(CommMonomial{{2, 2}}, 3));
    EXPECT_THROW(bell_polynomial(0, 1), std::invalid_argument);
}

TEST(Bell, MatchesSetPartitionOracle) {
    for (int n = 1; n <= 8; ++n)
        for (int m = 1; m <= n; ++m) {
            LinComb<CommMonomial> expected;
            for (const auto& [sizes, count] : oracle::bell_polynomial(n, m))
                expected.add(CommMonomial::from_indices(sizes), Scalar(count));
            EXPECT_EQ(bell_polynomial(n, m), expected) << n << "," << m;
        }
}

TEST(FaaDiBruno, Examples) {
    using D = LinComb<DerivTerm>;
    EXPECT_EQ(fdb_derivative(1), D(term(1, CommMonomial::generator(1))));
    const D three = D(term(1, CommMonomial::generator(3))) + D(term(2, CommMonomial{{1, 1}, {2, 1}}), 3) +
                    D(term(3, CommMonomial{{1, 3}}));
    EXPECT_EQ(fdb_derivative(3), three);
    const auto four = fdb_derivative(4);
    EXPECT_EQ(four.coeff(term(2, CommMonomial{{1, 1}, {3, 1}})), Scalar(4));
    EXPECT_EQ(four.coeff(term(2, CommMonomial{{2, 2}})), Scalar(3));
    EXPECT_EQ(fdb_determinant(1), fdb_derivative(1));
    EXPECT_EQ(fdb_determinant(2), D(term(2, CommMonomial{{1, 2}})) + D(term(1, CommMonomial::generator(2))));
    for (int n = 1; n <= 7; ++n) EXPECT_EQ(fdb_determinant(n), fdb_derivative(n)) << n;
}

TEST(FaaDiBruno, AgreesWithDifferentiatingACompositeOracle) {
    // n-th derivative at 0 of f(g(t)) with g(0) = 0 equals n! [t^n] f(g(t)).
    Rng rng(17);
    const int N = 7;
    for (int trial = 0; trial < 5; ++trial) {
        oracle::Poly f(N + 1), g(N + 1);
        for (int k = 1; k <= N; ++k) {
            f[k] = random_scalar(rng);
            g[k] = random_scalar(rng);
        }
        const auto fg = oracle::substitute(f, g, N);
        for (int n = 1; n <= N; ++n) {
            Scalar value;
            for (const auto& [t, c] : fdb_derivative(n)) {
                Scalar v = c * Scalar(oracle::factorial(t.f_order)) * f[t.f_order];
                for (const auto& [k, e] : t.g.powers())
                    v *= pow(Scalar(oracle::factorial(k)) * g[k], static_cast<unsigned>(e));
                value += v;
            }
            EXPECT_EQ(value, Scalar(oracle::factorial(n)) * fg[n]) << "n=" << n;
        }
    }
}

TEST(BellMatrix, Examples) {
    const auto g = t_plus_t2(5);
    const auto m = bell_matrix(g, 5);
    EXPECT_EQ(m.at(1, 1), Scalar(1));
    EXPECT_EQ(m.at(1, 2), Scalar(1));
    EXPECT_EQ(m.at(1, 3), Scalar(0));
    EXPECT_EQ(m.at(2, 3), Scalar(2));
    EXPECT_EQ(m.at(3, 2), Scalar(0));
    EXPECT_EQ(bell_matrix(TruncSeries::identity(5), 5), BellMatrix::identity(5));
    EXPECT_THROW(bell_matrix(g, 6), std::invalid_argument);
}

TEST(BellMatrix, ClosedFormAndRepresentation) {
    Rng rng(8);
    for (int trial = 0; trial < 5; ++trial) {
        const auto f = random_diffeo(6, rng), g = random_diffeo(6, rng);
        const auto mg = bell_matrix(g, 6);
        for (int i = 1; i <= 6; ++i)
            for (int j = 1; j <= 6; ++j) EXPECT_EQ(mg.at(i, j), bell_matrix_entry_closed_form(g, i, j));
        EXPECT_EQ(bell_matrix(compose(f, g), 6), bell_matrix(f, 6) * mg);
    }
}
