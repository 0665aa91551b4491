#include <gtest/gtest.h>

#include "fdb/core/hopf_axioms.hpp"
#include "fdb/fdb_hopf.hpp"
#include "fdb/trees.hpp"
#include "oracles/oracles.hpp"

using namespace fdb;

namespace {

RootedTree T(const char* s) { return RootedTree::parse(s); }
Forest F(const char* s) { return Forest::parse(s); }
const Forest unit{};

using TF = Tensor2<Forest>;

}  // namespace

TEST(RootedTree, ParseIsCanonical) {
    EXPECT_EQ(T("[]").size(), 1);
    EXPECT_EQ(T("[[][[]]]"), T("[[[]][]]"));
    EXPECT_EQ(T("[ [] [] ]").code(), "[[][]]");
    EXPECT_EQ(RootedTree::ladder(3), T("[[[]]]"));
    EXPECT_THROW(T("[[]"), std::invalid_argument);
    EXPECT_THROW(T("[]]"), std::invalid_argument);
    EXPECT_THROW(T("x"), std::invalid_argument);
    EXPECT_EQ(F("[] [[]]"), F("[[]] []"));
    EXPECT_TRUE(F("1").is_unit());
    EXPECT_THROW(F("1 []"), std::invalid_argument);
}

TEST(RootedTree, Enumeration) {
    const std::vector<std::size_t> trees{1, 1, 2, 4, 9, 20, 48};
    for (int n = 1; n <= 7; ++n) EXPECT_EQ(trees_of_degree(n).size(), trees[static_cast<std::size_t>(n - 1)]);
    const std::vector<std::size_t> forests{1, 2, 4, 9, 20, 48};
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(forests_of_degree(n).size(), forests[static_cast<std::size_t>(n - 1)]);
}

TEST(RootedTree, SymmetryFactor) {
    EXPECT_EQ(symmetry_factor(T("[]")), 1);
    EXPECT_EQ(symmetry_factor(T("[[][]]")), 2);
    EXPECT_EQ(symmetry_factor(RootedTree::ladder(3)), 1);
    for (int n = 1; n <= 6; ++n)
        for (const auto& t : trees_of_degree(n)) EXPECT_EQ(symmetry_factor(t), oracle::automorphisms(t.code())) << t.code();
}

TEST(RootedTree, BPlus) {
    EXPECT_EQ(bplus(unit), T("[]"));
    EXPECT_EQ(bplus(F("[]")), RootedTree::ladder(2));
    EXPECT_EQ(bplus(F("[] []")), T("[[][]]"));
}

TEST(RTHopf, CoproductExamples) {
    const RTHopf h;
    const Forest l2 = F("[[]]"), dot = F("[]"), cherry = F("[[][]]");
    EXPECT_EQ(h.coproduct(l2), tensor(l2, unit) + tensor(unit, l2) + tensor(dot, dot));
    EXPECT_EQ(h.coproduct(cherry),
              tensor(cherry, unit) + tensor(unit, cherry) + tensor(dot, l2, 2) + tensor(F("[] []"), dot));
    EXPECT_EQ(h.coproduct(dot), tensor(dot, unit) + tensor(unit, dot));
}

TEST(RTHopf, CoproductMatchesSubsetEnumeration) {
    const RTHopf h;
    for (int n = 1; n <= 5; ++n)
        for (const auto& f : forests_of_degree(n)) {
            TF expected;
            for (const auto& [p, count] : oracle::cuts(to_string(f)))
                expected.add({Forest::parse(p.first), Forest::parse(p.second)}, Scalar(count));
            EXPECT_EQ(h.coproduct(f), expected) << to_string(f);
        }
}

TEST(RTHopf, Axioms) {
    const RTHopf h;
    for (const auto& f : forests_up_to(4)) {
        EXPECT_FALSE(axioms::coassociative(h, f)) << to_string(f);
        EXPECT_FALSE(axioms::counital(h, f)) << to_string(f);
        EXPECT_FALSE(axioms::antipode_identities(h, f)) << to_string(f);
    }
}

TEST(RTHopf, BPlusIsACocycle) {
    const RTHopf h;
    for (const auto& f : forests_up_to(4)) {
        const Forest b(bplus(f));
        const TF rhs = tensor(b, unit) + apply_tensor(h.coproduct(f), [](const Forest& a) { return LinComb<Forest>(a); },
                                                      [](const Forest& a) { return LinComb<Forest>(Forest(bplus(a))); });
        EXPECT_EQ(h.coproduct(b), rhs) << to_string(f);
    }
}

TEST(Graft, Examples) {
    const auto dot = T("[]"), l2 = RootedTree::ladder(2), cherry = T("[[][]]");
    EXPECT_EQ(graft(dot, dot), LinComb<RootedTree>(l2));
    EXPECT_EQ(graft(dot, l2), LinComb<RootedTree>(RootedTree::ladder(3)) + LinComb<RootedTree>(cherry));
    EXPECT_EQ(graft_count_N(dot, l2, cherry), 2);
    EXPECT_EQ(graft_count_M(dot, l2, cherry), Scalar(1));
}

TEST(Graft, CoefficientsAreTheNormalizedCutCounts) {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; a + b <= 5; ++b)
            for (const auto& t : trees_of_degree(a))
                for (const auto& u : trees_of_degree(b)) {
                    const auto g = graft(t, u);
                    for (const auto& big : trees_of_degree(a + b)) EXPECT_EQ(g.coeff(big), graft_count_M(t, u, big));
                }
}

TEST(Graft, LeftPreLieIdentity) {
    std::vector<RootedTree> small;
    for (int n = 1; n <= 2; ++n)
        for (const auto& t : trees_of_degree(n)) small.push_back(t);
    for (const auto& a : small)
        for (const auto& b : small)
            for (const auto& c : small) {
                const LinComb<RootedTree> A(a), B(b), C(c);
                auto assoc = [](const LinComb<RootedTree>& x, const LinComb<RootedTree>& y, const LinComb<RootedTree>& z) {
                    return graft(graft(x, y), z) - graft(x, graft(y, z));
                };
                EXPECT_EQ(assoc(A, B, C), assoc(B, A, C));
            }
}

TEST(GrossmanLarson, Examples) {
    const GLFunctional d_dot = delta(F("[]"));
    EXPECT_EQ(gl_product(d_dot, d_dot), delta(F("[] []"), 2) + delta(F("[[]]")));
    const auto dd = delta_tilde(T("[]")), dl = delta_tilde(RootedTree::ladder(2));
    EXPECT_EQ(gl_product(dd, dl) - gl_product(dl, dd), delta_tilde(T("[[][]]")));
    const auto pbw = pbw_decompose(F("[] []"));
    LinComb<TreeWord> expected;
    expected.add(TreeWord{{T("[]"), T("[]")}}, Scalar(1, 2));
    expected.add(TreeWord{{RootedTree::ladder(2)}}, Scalar(-1, 2));
    EXPECT_EQ(pbw, expected);
}

TEST(GrossmanLarson, PBWReconstructsDeltas) {
    for (int n = 1; n <= 4; ++n) {
        const PBWTable table(n);
        for (const auto& f : table.forests()) {
            GLFunctional back;
            for (const auto& [w, c] : table.decompose(f)) back += gl_expand(w) * c;
            EXPECT_EQ(back, delta(f)) << to_string(f);
        }
    }
}

TEST(Phi, Examples) {
    EXPECT_EQ(phi(T("[]")), e(1));
    EXPECT_EQ(phi(RootedTree::ladder(2)), e(2, 2));
    EXPECT_EQ(phi(T("[[][]]")), e(3, 2));
    EXPECT_EQ(phi(RootedTree::ladder(3)), e(3, 4));
}

TEST(Phi, IsAPreLieMorphism) {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; a + b <= 6; ++b)
            for (const auto& t : trees_of_degree(a))
                for (const auto& u : trees_of_degree(b))
                    EXPECT_EQ(phi(graft(t, u)), prelie(phi(t), phi(u))) << t.code() << " -> " << u.code();
}

TEST(Psi, Examples) {
    const PsiEmbedding psi(3);
    EXPECT_EQ(psi(CommMonomial::generator(1)), LinComb<Forest>(F("[]")));
    EXPECT_EQ(psi(CommMonomial::generator(1, 2)), LinComb<Forest>(F("[] []")));
    EXPECT_EQ(psi(CommMonomial::generator(2)), LinComb<Forest>(F("[[]]"), 2));
    EXPECT_THROW(psi(CommMonomial::generator(4)), std::out_of_range);
}

TEST(Psi, HopfMorphismAndInjective) {
    const int N = 5;
    const PsiEmbedding psi(N);
    const CommHopf fdb(CommAlgebra::fdb);
    const RTHopf rt;
    const auto monos = monomials_up_to(N);
    for (const auto& m : monos) {
        const auto lhs = rt.coproduct(psi(m));
        const auto rhs = apply_tensor(fdb.coproduct(m), [&](const CommMonomial& a) { return psi(a); },
                                      [&](const CommMonomial& a) { return psi(a); });
        EXPECT_EQ(lhs, rhs) << to_string(m);
    }
    for (const auto& a : monos)
        for (const auto& b : monos)
            if (a.degree() + b.degree() <= N) EXPECT_EQ(psi(a * b), psi(a) * psi(b));
    for (int n = 1; n <= N; ++n) EXPECT_EQ(psi_rank(psi, n), oracle::partition_number(n));
}
