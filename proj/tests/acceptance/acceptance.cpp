// Acceptance run: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.
#include <chrono>
#include <functional>
#include <iostream>

#include "fdb/checks.hpp"
#include "fdb/fdb.hpp"
#include "oracles/oracles.hpp"

using namespace fdb;

namespace {

/// Empty string on success, otherwise the first counterexample.
using Verdict = std::string;

struct Criterion {
    const char* id;
    const char* title;
    std::function<Verdict()> run;
};

Verdict first_failure(const checks::Recorder& rec) {
    for (const auto& item : rec.items)
        if (!item.passed) return item.name + ": " + item.counterexample;
    return {};
}

Verdict ac01_lambert() {
    // t e^t = sum_{n>=1} t^n / (n-1)!
    std::map<int, Scalar> c;
    for (int n = 2; n <= 8; ++n) c.emplace(n, Scalar(1) / Scalar(oracle::factorial(n - 1)));
    const auto inv = compositional_inverse(TruncSeries::diffeo(8, c));
    const auto direct = lambert_coefficients(8);
    for (int n = 1; n <= 8; ++n) {
        if (inv.coeff(n) != oracle::lambert(n)) return "inverse of t e^t at n=" + std::to_string(n) + ": " + inv.coeff(n).str();
        if (direct[static_cast<std::size_t>(n - 1)] != oracle::lambert(n)) return "lambert_coefficients at n=" + std::to_string(n);
    }
    return {};
}

Verdict ac02_fdb3() {
    LinComb<DerivTerm> expected;
    expected.add(DerivTerm{1, CommMonomial::generator(3)}, 1);
    expected.add(DerivTerm{2, CommMonomial{{1, 1}, {2, 1}}}, 3);
    expected.add(DerivTerm{3, CommMonomial::generator(1, 3)}, 1);
    if (fdb_derivative(3) != expected) return "got " + format(fdb_derivative(3));
    return {};
}

Verdict ac03_three_routes() {
    Rng rng(20240301);
    const int N = 8;
    for (int i = 0; i < 50; ++i) {
        const auto f = random_diffeo(N, rng), g = random_diffeo(N, rng);
        const auto formula = compose(f, g).dense();
        const auto subst = oracle::substitute(f.dense(), g.dense(), N);
        const auto hopf = compose_via_hopf(f, g).dense();
        if (formula != subst || hopf != subst) return "pair " + std::to_string(i);
    }
    return {};
}

Verdict ac04_antipode_inverse() {
    Rng rng(404);
    const CommHopf h(CommAlgebra::fdb);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = random_diffeo(8, rng);
        const auto ch = character_of(f);
        const auto inv = oracle::inverse_fixed_point(f.dense(), 8);
        for (int n = 1; n <= 7; ++n)
            if (functional_eval_with<CommMonomial>(ch, h.antipode(CommMonomial::generator(n))) != inv[static_cast<std::size_t>(n + 1)])
                return "trial " + std::to_string(trial) + ", n=" + std::to_string(n);
    }
    return {};
}

Verdict ac05_hopf_axioms() {
    checks::Recorder rec;
    const int d = 6;
    checks::hopf_checks(rec, CommHopf(CommAlgebra::inv), monomials_up_to(d), d, false, "inv: ");
    checks::hopf_checks(rec, CommHopf(CommAlgebra::fdb), monomials_up_to(d), d, false, "fdb: ");
    checks::hopf_checks(rec, NCHopf(NCAlgebra::inv_nc), words_up_to(d), d, true, "invnc: ");
    checks::hopf_checks(rec, NCHopf(NCAlgebra::fdb_nc), words_up_to(d), d, true, "fdbnc: ");
    checks::hopf_checks(rec, RTHopf(), forests_up_to(5), 5, false, "rt: ");
    return first_failure(rec);
}

Verdict ac06_nc_lagrange() {
    const NCHopf nc(NCAlgebra::fdb_nc);
    const CommHopf c(CommAlgebra::fdb);
    for (int n = 1; n <= 7; ++n) {
        const auto closed = antipode_nc_closed(n);
        if (closed != nc.antipode(Word{n})) return "closed form differs from recursion at n=" + std::to_string(n);
        if (abelianize(closed) != c.antipode(CommMonomial::generator(n))) return "abelianization differs at n=" + std::to_string(n);
    }
    return {};
}

Verdict ac07_cocycle() {
    const RTHopf h;
    for (const auto& f : forests_up_to(5)) {
        const Forest b(bplus(f));
        // expected: B+(F) (x) 1 + sum over cuts of F: crown (x) B+(trunk), cuts enumerated by the oracle
        Tensor2<Forest> rhs = tensor(b, Forest{});
        for (const auto& [p, k] : oracle::cuts(to_string(f)))
            rhs.add({Forest::parse(p.first), Forest(bplus(Forest::parse(p.second)))}, Scalar(k));
        if (h.coproduct(b) != rhs) return "forest " + to_string(f);
    }
    return {};
}

Verdict ac08_prelie_lie() {
    std::vector<RootedTree> trees;
    for (int n = 1; n <= 4; ++n)
        for (const auto& t : trees_of_degree(n)) trees.push_back(t);
    for (const auto& a : trees)
        for (const auto& b : trees)
            for (const auto& c : trees) {
                if (a.size() + b.size() + c.size() > 6) continue;
                auto assoc = [&](const RootedTree& x, const RootedTree& y) {
                    return graft(graft(x, y), LinComb<RootedTree>(c)) - graft(LinComb<RootedTree>(x), graft(y, c));
                };
                if (assoc(a, b) != assoc(b, a)) return "grafting on " + a.code() + ", " + b.code() + ", " + c.code();
            }
    for (const Scalar lam : {Scalar(0), Scalar(1), Scalar(-2), Scalar(1, 3), Scalar(5)})
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 4; ++b)
                for (int c = 1; c <= 4; ++c) {
                    auto assoc = [&](int x, int y) {
                        return prelie_lambda(prelie_lambda(e(x), e(y), lam), e(c), lam) -
                               prelie_lambda(e(x), prelie_lambda(e(y), e(c), lam), lam);
                    };
                    if (assoc(a, b) != assoc(b, a)) return "lambda=" + lam.str();
                }
    for (int p = 1; p <= 6; ++p)
        for (int q = 1; q <= 6; ++q) {
            const int N = p + q;
            Functional comm = convolve(e_functional(p, N), e_functional(q, N));
            comm -= convolve(e_functional(q, N), e_functional(p, N));
            // [e_p, e_q] = (q - p) e_{p+q}
            std::map<CommMonomial, Scalar> expected;
            if (p != q) expected.emplace(CommMonomial::generator(N), Scalar(q - p));
            if (comm.values() != expected) return "convolution commutator p=" + std::to_string(p) + ", q=" + std::to_string(q);
        }
    return {};
}

Verdict ac09_phi_psi() {
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; a + b <= 6; ++b)
            for (const auto& t : trees_of_degree(a))
                for (const auto& u : trees_of_degree(b))
                    if (phi(graft(t, u)) != prelie(phi(t), phi(u))) return "phi on " + t.code() + ", " + u.code();
    const int N = 5;
    const PsiEmbedding psi(N);
    const CommHopf fdb(CommAlgebra::fdb);
    const RTHopf rt;
    const auto monos = monomials_up_to(N);
    for (const auto& x : monos)
        for (const auto& y : monos)
            if (x.degree() + y.degree() <= N && psi(x * y) != psi(x) * psi(y))
                return "Psi not multiplicative on " + to_string(x) + ", " + to_string(y);
    for (const auto& m : monos) {
        const auto rhs = apply_tensor(fdb.coproduct(m), [&](const CommMonomial& a) { return psi(a); },
                                      [&](const CommMonomial& a) { return psi(a); });
        if (rt.coproduct(psi(m)) != rhs) return "Psi not comultiplicative on " + to_string(m);
    }
    for (int n = 1; n <= N; ++n)
        if (psi_rank(psi, n) != oracle::partition_number(n)) return "rank deficit in degree " + std::to_string(n);
    if (psi(CommMonomial::generator(2)) != LinComb<Forest>(Forest(RootedTree::ladder(2)), 2))
        return "Psi(x2) = " + format(psi(CommMonomial::generator(2)));
    return {};
}

Verdict ac10_incidence() {
    const CommHopf fdb(CommAlgebra::fdb);
    for (int n = 1; n <= 5; ++n)
        if (checks::partition_coproduct_as_fdb(n) != fdb.coproduct(CommMonomial::generator(n)))
            return "partition family at n=" + std::to_string(n);
    const IncidenceHopf h;
    const PosetClass b1 = boolean_generator();
    auto power = [&](int k) { return IncMonomial(std::vector<PosetClass>(static_cast<std::size_t>(k), b1)); };
    for (int n = 1; n <= 6; ++n) {
        const auto d = h.coproduct_poset(boolean_lattice(n));
        Tensor2<IncMonomial> expected;
        for (int k = 0; k <= n; ++k) expected.add({power(k), power(n - k)}, Scalar(oracle::binomial(n, k)));
        if (d != expected) return "boolean coproduct at n=" + std::to_string(n);
        // divided powers: y_m * y_{n-m} = C(n, m) y_n
        for (int m = 0; m <= n; ++m)
            if (d.coeff({power(m), power(n - m)}) != Scalar(oracle::binomial(n, m))) return "divided power at n=" + std::to_string(n);
    }
    const RTHopf rt;
    for (const auto& f : forests_up_to(5)) {
        Tensor2<IncMonomial> flipped;
        for (const auto& [p, k] : oracle::cuts(to_string(f)))
            flipped.add({forest_to_incidence(Forest::parse(p.second)), forest_to_incidence(Forest::parse(p.first))}, Scalar(k));
        if (h.coproduct_poset(forest_ideals(f)) != flipped) return "forest ideals of " + to_string(f);
    }
    return {};
}

Verdict ac11_operads() {
    checks::Recorder rec;
    checks::operad_axioms<AssocOperad>(rec, 4, "assoc: ");
    checks::operad_axioms<DupOperad>(rec, 3, "dup: ");
    if (auto v = first_failure(rec); !v.empty()) return v;
    Rng rng(1111);
    for (int i = 0; i < 10; ++i) {
        const auto f = random_diffeo(8, rng), g = random_diffeo(8, rng);
        if (assoc_to_series(operad_group_compose(series_to_assoc(f), series_to_assoc(g))).dense() !=
            oracle::substitute(f.dense(), g.dense(), 8))
            return "assoc group differs from composition at degree 8";
    }
    std::vector<PlanarBinaryTree> trees;
    for (int n = 1; n <= 3; ++n)
        for (const auto& t : planar_trees(n)) trees.push_back(t);
    for (const auto& x : trees)
        for (const auto& y : trees)
            for (const auto& z : trees)
                if (dup_over(dup_over(x, y), z) != dup_over(x, dup_over(y, z)) ||
                    dup_under(dup_over(x, y), z) != dup_over(x, dup_under(y, z)) ||
                    dup_under(dup_under(x, y), z) != dup_under(x, dup_under(y, z)))
                    return "duplicial axiom on " + x.code() + ", " + y.code() + ", " + z.code();
    for (int i = 0; i < 3; ++i) {
        const auto f = random_diffeo(5, rng), g = random_diffeo(5, rng);
        if (order_project(section_embed(f)) != f) return "project o section != id";
        if (operad_group_compose(section_embed(f), section_embed(g)) != section_embed(compose(f, g))) return "section not a morphism";
        const auto a = checks::random_operad_series<DupOperad>(5, rng), b = checks::random_operad_series<DupOperad>(5, rng);
        if (order_project(operad_group_compose(a, b)) != compose(order_project(a), order_project(b))) return "projection not a morphism";
    }
    for (int i = 0; i < 4; ++i) {
        TreeSeries f;
        for (int n = 0; n <= 3; ++n)
            for (const auto& t : planar_trees(n)) f.add(t, random_scalar(rng));
        if (!alpha_residual(f, alpha_series(f, 3), 3).is_zero()) return "alpha residual nonzero";
    }
    return {};
}

Verdict ac12_brace() {
    for (int n = 1; n <= 5; ++n)
        for (int q = 0; q <= 3; ++q) {
            std::vector<int> ms(static_cast<std::size_t>(q), 1);
            // every choice of m_i in 1..3
            std::function<Verdict(std::size_t)> rec = [&](std::size_t i) -> Verdict {
                if (i == ms.size()) {
                    int sum = n;
                    for (int m : ms) sum += m;
                    const LinComb<XGen> expected(XGen{sum}, Scalar(oracle::binomial(n + 1, q)));
                    if (brace_product(n, ms) != expected) return "brace on x" + std::to_string(n);
                    return {};
                }
                for (int m = 1; m <= 3; ++m) {
                    ms[i] = m;
                    if (auto v = rec(i + 1); !v.empty()) return v;
                }
                return {};
            };
            if (auto v = rec(0); !v.empty()) return v;
        }
    auto x = [](int n) { return LinComb<XGen>(XGen{n}); };
    auto br = [](const LinComb<XGen>& a, const std::vector<LinComb<XGen>>& args) { return brace_product(a, args); };
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int c = 1; c <= 2; ++c)
                for (int d = 1; d <= 2; ++d) {
                    if (br(br(x(a), {x(b)}), {x(c), x(d)}) != brace_identity_rhs(x(a), {x(b)}, {x(c), x(d)}, br))
                        return "brace identity with one inner argument";
                    if (br(br(x(a), {x(b), x(c)}), {x(d)}) != brace_identity_rhs(x(a), {x(b), x(c)}, {x(d)}, br))
                        return "brace identity with one outer argument";
                    for (int f = 1; f <= 2; ++f)
                        if (br(br(x(a), {x(b), x(c)}), {x(d), x(f)}) != brace_identity_rhs(x(a), {x(b), x(c)}, {x(d), x(f)}, br))
                            return "brace identity with two and two arguments";
                }
    for (int k = 0; k <= 3; ++k)
        for (int head = 1; head <= 3; ++head) {
            std::vector<int> args;
            for (int i = 0; i < k; ++i) args.push_back(i + 1);
            std::vector<L1Element> base;
            for (int v : args) base.push_back(e(v));
            const auto ref = symmetric_brace(e(head), base);
            while (std::next_permutation(args.begin(), args.end())) {
                std::vector<L1Element> perm;
                for (int v : args) perm.push_back(e(v));
                if (symmetric_brace(e(head), perm) != ref) return "symmetric brace depends on argument order";
            }
        }
    return {};
}

Verdict ac13_nonassociative() {
    const auto w = find_nonassociativity(4);
    if (!w) return "no counterexample up to degree 4";
    if (w->degree > 4 || w->left_coeff == w->right_coeff) return "witness is not a counterexample";
    std::cout << "       witness: degree " << w->degree << ", word " << to_string(w->word) << ", coefficients "
              << w->left_coeff.str() << " vs " << w->right_coeff.str() << "\n";
    return {};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC01", "Lambert W inverse coefficients, n <= 8", ac01_lambert},
        {"AC02", "Faa di Bruno expansion at n = 3", ac02_fdb3},
        {"AC03", "formula, substitution and Hopf composition on 50 pairs, N = 8", ac03_three_routes},
        {"AC04", "antipode evaluates to the compositional inverse, n <= 7", ac04_antipode_inverse},
        {"AC05", "Hopf axioms for inv, fdb, invnc, fdbnc (degree 6) and rt (degree 5)", ac05_hopf_axioms},
        {"AC06", "non-commutative closed antipode, n <= 7", ac06_nc_lagrange},
        {"AC07", "B+ cocycle on forests of degree <= 5", ac07_cocycle},
        {"AC08", "pre-Lie identities and the Witt bracket by convolution", ac08_prelie_lie},
        {"AC09", "phi pre-Lie morphism and Psi embedding", ac09_phi_psi},
        {"AC10", "incidence families", ac10_incidence},
        {"AC11", "operads", ac11_operads},
        {"AC12", "brace products and identity", ac12_brace},
        {"AC13", "naive non-commutative composition is not associative", ac13_nonassociative},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (v.empty() ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title;
        std::cout.precision(2);
        std::cout << std::fixed << " (" << secs << "s)";
        if (!v.empty()) std::cout << ": " << v;
        std::cout << "\n" << std::flush;
        failures += !v.empty();
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
