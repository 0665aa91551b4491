#include <gtest/gtest.h>

#include "fdb/checks.hpp"
#include "fdb/fdb_hopf.hpp"
#include "oracles/oracles.hpp"

using namespace fdb;

namespace {

CommMonomial x(int n, int e = 1) { return CommMonomial::generator(n, e); }
const CommMonomial one{};

using T = Tensor2<CommMonomial>;
using L = LinComb<CommMonomial>;

}  // namespace

TEST(FdbHopf, CoproductExamples) {
    const CommHopf fdb(CommAlgebra::fdb), inv(CommAlgebra::inv);
    EXPECT_EQ(fdb.coproduct(x(1)), tensor(x(1), one) + tensor(one, x(1)));
    EXPECT_EQ(fdb.coproduct(x(2)), tensor(x(2), one) + tensor(x(1), x(1), 2) + tensor(one, x(2)));
    EXPECT_EQ(inv.coproduct(x(2)), tensor(x(2), one) + tensor(x(1), x(1)) + tensor(one, x(2)));
    const T d3 = tensor(x(3), one) + tensor(x(2), x(1), 2) + tensor(x(1, 2), x(1)) + tensor(x(1), x(2), 3) +
                 tensor(one, x(3));
    EXPECT_EQ(fdb.coproduct(x(3)), d3);
}

TEST(FdbHopf, NotCocommutative) {
    const CommHopf fdb(CommAlgebra::fdb), inv(CommAlgebra::inv);
    // x2 alone does not separate the coproduct from its flip; x3 does.
    EXPECT_EQ(flip(fdb.coproduct(x(2))), fdb.coproduct(x(2)));
    EXPECT_NE(flip(fdb.coproduct(x(3))), fdb.coproduct(x(3)));
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(flip(inv.coproduct(x(n))), inv.coproduct(x(n)));
}

TEST(FdbHopf, AntipodeExamples) {
    const CommHopf fdb(CommAlgebra::fdb);
    EXPECT_EQ(fdb.antipode(x(1)), L(x(1), -1));
    EXPECT_EQ(fdb.antipode(x(2)), L(x(2), -1) + L(x(1, 2), 2));
    EXPECT_EQ(fdb.antipode(x(3)), L(x(3), -1) + L(CommMonomial{{1, 1}, {2, 1}}, 5) + L(x(1, 3), -5));
    EXPECT_EQ(fdb.antipode(one), L(one));
}

TEST(FdbHopf, AntipodeEvaluatesToTheInverseSeries) {
    const CommHopf fdb(CommAlgebra::fdb);
    Rng rng(41);
    for (int trial = 0; trial < 6; ++trial) {
        const auto f = random_diffeo(8, rng);
        const auto ch = character_of(f);
        const auto inv = oracle::inverse_fixed_point(f.dense(), 8);
        for (int n = 1; n <= 7; ++n)
            EXPECT_EQ(functional_eval_with<CommMonomial>(ch, fdb.antipode(x(n))), inv[static_cast<std::size_t>(n + 1)]);
    }
}

TEST(FdbHopf, AxiomsUpToDegreeFive) {
    for (auto alg : {CommAlgebra::fdb, CommAlgebra::inv}) {
        const CommHopf h(alg);
        for (const auto& m : monomials_up_to(5)) {
            EXPECT_FALSE(axioms::coassociative(h, m)) << to_string(m);
            EXPECT_FALSE(axioms::counital(h, m)) << to_string(m);
            EXPECT_FALSE(axioms::antipode_identities(h, m)) << to_string(m);
        }
    }
}

TEST(Convolution, UnitAndComposition) {
    const int N = 5;
    Rng rng(7);
    const auto a = character_of(random_diffeo(N + 1, rng)).as_functional();
    const auto eps = Functional::counit(CommAlgebra::fdb, N);
    EXPECT_EQ(convolve(eps, a), a);
    EXPECT_EQ(convolve(a, eps), a);
    EXPECT_EQ(convolve(a, compose_antipode(a)), eps);

    const auto f = TruncSeries::diffeo(4, {{2, Scalar(1)}});
    const auto prod = convolve(character_of(f).as_functional(), character_of(f).as_functional());
    EXPECT_EQ(prod.on_generator(2), Scalar(2));
    EXPECT_EQ(prod.on_generator(2), compose(f, f).coeff(3));
}

TEST(Convolution, HopfRouteEqualsSeriesComposition) {
    Rng rng(123);
    for (int trial = 0; trial < 10; ++trial) {
        const int N = 3 + trial % 6;
        const auto f = random_diffeo(N, rng), g = random_diffeo(N, rng);
        EXPECT_EQ(compose_via_hopf(f, g).dense(), oracle::substitute(f.dense(), g.dense(), N));
    }
}

TEST(Convolution, InvertibleSeriesMultiply) {
    Rng rng(9);
    const auto f = random_invertible(5, rng), g = random_invertible(5, rng);
    const auto lhs = convolve(character_of_invertible(f).as_functional(), character_of_invertible(g).as_functional());
    EXPECT_EQ(to_character(lhs), character_of_invertible(multiply(f, g)));
}

TEST(CharacterSeries, IndexShift) {
    const auto ch = character_of(TruncSeries::diffeo(5, {{2, Scalar(1)}}));
    EXPECT_EQ(ch.values, (std::vector<Scalar>{Scalar(1), Scalar(0), Scalar(0), Scalar(0)}));
    EXPECT_EQ(character_of(TruncSeries::identity(5)).as_functional(), Functional::counit(CommAlgebra::fdb, 4));
    Rng rng(1);
    const auto f = random_diffeo(6, rng);
    EXPECT_EQ(series_of(character_of(f)), f);
    EXPECT_THROW(character_of(TruncSeries::one(3)), std::invalid_argument);
}

TEST(ExpLog, Examples) {
    const int N = 5;
    const InfChar a{CommAlgebra::fdb, {Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(0)}};
    const auto ex = exp_char(a);
    for (const auto& v : ex.values) EXPECT_EQ(v, Scalar(1));
    // exp(a) is the character of t/(1 - t)
    std::map<int, Scalar> geo;
    for (int n = 2; n <= N + 1; ++n) geo.emplace(n, Scalar(1));
    EXPECT_EQ(ex, character_of(TruncSeries::diffeo(N + 1, geo)));

    const auto lg = log_char(character_of(TruncSeries::diffeo(N + 1, {{2, Scalar(1)}})));
    EXPECT_EQ(lg.values[0], Scalar(1));
    EXPECT_EQ(lg.values[1], Scalar(-1));

    const InfChar zero{CommAlgebra::fdb, std::vector<Scalar>(N)};
    EXPECT_EQ(exp_char(zero).as_functional(), Functional::counit(CommAlgebra::fdb, N));
}

TEST(ExpLog, AreInverseBijections) {
    Rng rng(77);
    for (auto alg : {CommAlgebra::fdb, CommAlgebra::inv}) {
        std::vector<Scalar> v;
        for (int n = 1; n <= 5; ++n) v.push_back(random_scalar(rng));
        const InfChar a{alg, v};
        const auto ex = exp_char(a);
        EXPECT_TRUE(is_multiplicative(ex.as_functional()));
        EXPECT_EQ(log_char(ex), a);
        const Character c{alg, v};
        EXPECT_EQ(exp_char(log_char(c)), c);
    }
    EXPECT_THROW(to_character(Functional(CommAlgebra::fdb, 2, {{x(1), Scalar(1)}})), std::invalid_argument);
}
