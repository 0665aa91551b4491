#pragma once

// Named invariant suites, one per module, shared by the CLI `check` command.

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fdb/core/combinatorics.hpp"
#include "fdb/core/hopf_axioms.hpp"
#include "fdb/fdb_hopf.hpp"
#include "fdb/incidence.hpp"
#include "fdb/lie_brace.hpp"
#include "fdb/nc_hopf.hpp"
#include "fdb/operads.hpp"
#include "fdb/series.hpp"
#include "fdb/trees.hpp"

namespace fdb {

using Rng = std::mt19937_64;

/// Small random rational p/q with |p| <= 5, 1 <= q <= 4.
inline Scalar random_scalar(Rng& rng) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    return Scalar(num(rng), den(rng));
}

inline TruncSeries random_diffeo(int N, Rng& rng) {
    std::map<int, Scalar> c;
    for (int n = 2; n <= N; ++n) c.emplace(n, random_scalar(rng));
    return TruncSeries::diffeo(N, c);
}

inline TruncSeries random_invertible(int N, Rng& rng) {
    std::map<int, Scalar> c;
    for (int n = 1; n <= N; ++n) c.emplace(n, random_scalar(rng));
    return TruncSeries::invertible(N, c);
}

namespace checks {

struct SuiteReport {
    std::string suite;
    int max_degree = 0;
    std::vector<CheckItem> items;

    bool passed() const {
        return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.passed; });
    }
};

/// Collects check items; `over` stops at the first counterexample.
class Recorder {
public:
    template <class Range, class F>
    void over(const std::string& name, const Range& cases, F&& check) {
        CheckItem item{name, true, {}, 0};
        for (const auto& c : cases) {
            ++item.cases;
            if (std::optional<std::string> fail = check(c)) {
                item.passed = false;
                item.counterexample = *fail;
                break;
            }
        }
        items.push_back(std::move(item));
    }

    void expect(const std::string& name, bool ok, const std::string& detail, int cases = 1) {
        items.push_back(CheckItem{name, ok, ok ? std::string() : detail, cases});
    }

    void append(const std::vector<CheckItem>& more) { items.insert(items.end(), more.begin(), more.end()); }

    std::vector<CheckItem> items;
};

inline std::optional<std::string> fail_if(bool bad, const std::string& what) {
    if (bad) return what;
    return std::nullopt;
}

inline std::vector<int> range(int lo, int hi) {
    std::vector<int> r;
    for (int i = lo; i <= hi; ++i) r.push_back(i);
    return r;
}

// ---------------------------------------------------------------- algebra_core

inline SuiteReport algebra_core_suite(int d) {
    Rng rng(0xA1);
    Recorder rec;
    const auto monos = monomials_up_to(d);
    auto random_comb = [&]() {
        LinComb<CommMonomial> v;
        std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
        for (int i = 0; i < 4; ++i) v.add(monos[pick(rng)], random_scalar(rng));
        return v;
    };
    rec.over("lincomb vector-space axioms", range(1, 50), [&](int) {
        const auto u = random_comb(), v = random_comb(), w = random_comb();
        const Scalar c = random_scalar(rng);
        if ((u + v) + w != u + (v + w)) return fail_if(true, "(u+v)+w != u+(v+w) for u=" + format(u));
        if (u + LinComb<CommMonomial>{} != u || u * Scalar(1) != u) return fail_if(true, "unit laws fail on " + format(u));
        if (u + v != v + u || (u - u) != LinComb<CommMonomial>{}) return fail_if(true, "commutativity or negation fails");
        return fail_if((u + v) * c != u * c + v * c, "scalar distributivity fails");
    });
    rec.over("monomials commute, degree additive", monos, [&](const CommMonomial& a) {
        for (const auto& b : monos) {
            if (a.degree() + b.degree() > d) continue;
            if (a * b != b * a || (a * b).degree() != a.degree() + b.degree())
                return fail_if(true, to_string(a) + " * " + to_string(b));
        }
        return std::optional<std::string>{};
    });
    const auto words = words_up_to(std::min(d, 4));
    rec.over("words associative, degree additive", words, [&](const Word& a) {
        for (const auto& b : words)
            for (const auto& c : words) {
                if ((a * b) * c != a * (b * c)) return fail_if(true, to_string(a) + "," + to_string(b) + "," + to_string(c));
                if ((a * b).degree() != a.degree() + b.degree()) return fail_if(true, "degree of " + to_string(a * b));
            }
        return std::optional<std::string>{};
    });
    rec.over("functional_eval linear", range(1, 50), [&](int) {
        std::map<CommMonomial, Scalar> f;
        for (const auto& m : monos)
            if (rng() % 2) f.emplace(m, random_scalar(rng));
        const auto u = random_comb(), v = random_comb();
        const Scalar c = random_scalar(rng);
        return fail_if(functional_eval(f, u + v * c) != functional_eval(f, u) + c * functional_eval(f, v),
                       "eval(f, u + c v) != eval(f,u) + c eval(f,v) for u=" + format(u));
    });
    return {"algebra_core", d, rec.items};
}

// ---------------------------------------------------------------- series

/// f o g as sum_m f_m g(t)^m with truncated polynomial arithmetic.
inline TruncSeries compose_by_substitution(const TruncSeries& f, const TruncSeries& g) {
    const int N = f.truncation();
    std::vector<Scalar> acc(static_cast<std::size_t>(N) + 1), power(static_cast<std::size_t>(N) + 1);
    power[0] = 1;
    for (int m = 1; m <= N; ++m) {
        power = series_detail::mul_trunc(power, g.dense(), N);
        for (int k = 0; k <= N; ++k) acc[static_cast<std::size_t>(k)] += f.coeff(m) * power[static_cast<std::size_t>(k)];
    }
    std::map<int, Scalar> c;
    for (int k = 2; k <= N; ++k) c.emplace(k, acc[static_cast<std::size_t>(k)]);
    return TruncSeries::diffeo(N, c);
}

/// B_{n,m} as a sum over set partitions of {1..n} into m blocks.
inline LinComb<CommMonomial> bell_polynomial_by_partitions(int n, int m) {
    LinComb<CommMonomial> r;
    comb::for_each_set_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
        if (static_cast<int>(blocks.size()) != m) return;
        std::vector<int> sizes;
        for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
        r.add(CommMonomial::from_indices(sizes), 1);
    });
    return r;
}

inline SuiteReport series_suite(int d) {
    Rng rng(0xB2);
    Recorder rec;
    const int N = std::max(2, d);
    const int G = std::min(N, 8);
    rec.over("group associativity", range(1, 20), [&](int) {
        const auto f = random_diffeo(G, rng), g = random_diffeo(G, rng), h = random_diffeo(G, rng);
        return fail_if(compose(compose(f, g), h) != compose(f, compose(g, h)), "(fg)h != f(gh) at N=" + std::to_string(G));
    });
    rec.over("identity and two-sided inverse", range(1, 20), [&](int) {
        const auto f = random_diffeo(G, rng);
        const auto id = TruncSeries::identity(G);
        const auto inv = compositional_inverse(f);
        if (compose(f, id) != f || compose(id, f) != f) return fail_if(true, "identity law fails");
        if (compose(f, inv) != id || compose(inv, f) != id) return fail_if(true, "inverse law fails");
        return fail_if(inv != inverse_by_back_substitution(f), "Lagrange inverse != back-substitution inverse");
    });
    rec.over("multinomial composition equals substitution", range(1, 20), [&](int) {
        const int n = std::min(N, 10);
        const auto f = random_diffeo(n, rng), g = random_diffeo(n, rng);
        return fail_if(compose(f, g) != compose_by_substitution(f, g), "mismatch at N=" + std::to_string(n));
    });
    rec.over("Bell polynomial equals partition enumeration", range(1, std::min(N, 8)), [&](int n) {
        for (int m = 1; m <= n; ++m)
            if (bell_polynomial(n, m) != bell_polynomial_by_partitions(n, m))
                return fail_if(true, "B(" + std::to_string(n) + "," + std::to_string(m) + ")");
        return std::optional<std::string>{};
    });
    rec.over("Bell matrix is a representation", range(1, 10), [&](int) {
        const auto f = random_diffeo(G, rng), g = random_diffeo(G, rng);
        if (bell_matrix(TruncSeries::identity(G), G) != BellMatrix::identity(G)) return fail_if(true, "M(t) != Id");
        if (bell_matrix(compose(f, g), G) != bell_matrix(f, G) * bell_matrix(g, G))
            return fail_if(true, "M(f o g) != M(f) M(g)");
        for (int i = 1; i <= G; ++i)
            for (int j = 1; j <= G; ++j)
                if (bell_matrix(g, G).at(i, j) != bell_matrix_entry_closed_form(g, i, j))
                    return fail_if(true, "closed form differs at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        return std::optional<std::string>{};
    });
    rec.over("determinant form equals Faa di Bruno", range(1, std::min(N, 6)), [&](int n) {
        return fail_if(fdb_determinant(n) != fdb_derivative(n), "n=" + std::to_string(n));
    });
    return {"series", d, rec.items};
}

// ---------------------------------------------------------------- fdb_hopf

/// Basis elements whose pairwise products stay within degree d.
template <class B>
std::vector<std::pair<B, B>> pairs_within(const std::vector<B>& basis, int d) {
    std::vector<std::pair<B, B>> out;
    for (const auto& a : basis)
        for (const auto& b : basis)
            if (a.degree() + b.degree() <= d) out.emplace_back(a, b);
    return out;
}

template <HopfAlgebra H>
void hopf_checks(Recorder& rec, const H& h, const std::vector<typename H::basis_type>& basis, int d, bool anti,
                 const std::string& prefix) {
    using B = typename H::basis_type;
    rec.over(prefix + "coassociativity", basis, [&](const B& b) { return axioms::coassociative(h, b); });
    rec.over(prefix + "counit", basis, [&](const B& b) { return axioms::counital(h, b); });
    rec.over(prefix + "antipode identities", basis, [&](const B& b) { return axioms::antipode_identities(h, b); });
    const auto pairs = pairs_within(basis, d);
    rec.over(prefix + "coproduct multiplicative", pairs,
             [&](const std::pair<B, B>& p) { return axioms::coproduct_multiplicative(h, p.first, p.second); });
    rec.over(prefix + "counit multiplicative", pairs,
             [&](const std::pair<B, B>& p) { return axioms::counit_multiplicative(h, p.first, p.second); });
    rec.over(prefix + (anti ? "antipode antimorphism" : "antipode morphism"), pairs,
             [&](const std::pair<B, B>& p) { return axioms::antipode_morphism(h, p.first, p.second, anti); });
}

inline SuiteReport fdb_hopf_suite(int d) {
    Rng rng(0xC3);
    Recorder rec;
    const auto monos = monomials_up_to(d);
    const CommHopf inv(CommAlgebra::inv), fdb(CommAlgebra::fdb);
    hopf_checks(rec, inv, monos, d, false, "inv: ");
    hopf_checks(rec, fdb, monos, d, false, "fdb: ");
    rec.over("inv: cocommutative", monos, [&](const CommMonomial& m) {
        return fail_if(inv.coproduct(m) != flip(inv.coproduct(m)), "D != tD on " + to_string(m));
    });
    if (d >= 3) {
        const auto x3 = CommMonomial::generator(3);
        rec.expect("fdb: not cocommutative (witness x3)", fdb.coproduct(x3) != flip(fdb.coproduct(x3)),
                   "D(x3) is symmetric");
    }
    const int G = std::clamp(d + 1, 2, 9);
    rec.over("character composition matches series composition", range(1, 10), [&](int) {
        const auto f = random_diffeo(G, rng), g = random_diffeo(G, rng);
        return fail_if(compose_via_hopf(f, g) != compose(f, g), "m(g (x) f)D != f o g");
    });
    rec.over("character <-> series round trip", range(1, 10), [&](int) {
        const auto f = random_diffeo(G, rng);
        if (series_of(character_of(f)) != f) return fail_if(true, "series_of(character_of(f)) != f");
        return fail_if(!is_multiplicative(character_of(f).as_functional()), "character not multiplicative");
    });
    rec.over("antipode evaluates to the compositional inverse", range(1, 5), [&](int) {
        const int n = std::min(d, 7);
        const auto f = random_diffeo(n + 1, rng);
        const auto ch = character_of(f);
        const auto inv_f = compositional_inverse(f);
        for (int k = 1; k <= n; ++k)
            if (functional_eval_with<CommMonomial>(ch, fdb.antipode(CommMonomial::generator(k))) != inv_f.coeff(k + 1))
                return fail_if(true, "S(x" + std::to_string(k) + ") on f != (f^-1)_" + std::to_string(k + 1));
        return std::optional<std::string>{};
    });
    const int E = std::min(d, 6);
    rec.over("exp and log are inverse", range(1, 5), [&](int) {
        InfChar a{CommAlgebra::fdb, {}};
        for (int n = 1; n <= E; ++n) a.values.push_back(random_scalar(rng));
        const Character c = exp_char(a);
        if (log_char(c) != a) return fail_if(true, "log(exp(a)) != a");
        const auto f = random_diffeo(E + 1, rng);
        return fail_if(exp_char(log_char(character_of(f))) != character_of(f), "exp(log(c)) != c");
    });
    rec.over("exp(a + ca) = exp(a) * exp(ca)", range(1, 3), [&](int) {
        InfChar a{CommAlgebra::fdb, {}};
        for (int n = 1; n <= E; ++n) a.values.push_back(random_scalar(rng));
        const Scalar c = random_scalar(rng);
        InfChar b = a, s = a;
        for (int n = 0; n < E; ++n) {
            b.values[static_cast<std::size_t>(n)] *= c;
            s.values[static_cast<std::size_t>(n)] += b.values[static_cast<std::size_t>(n)];
        }
        return fail_if(exp_functional(s.as_functional()) !=
                           convolve(exp_functional(a.as_functional()), exp_functional(b.as_functional())),
                       "exp is not additive on commuting arguments");
    });
    return {"fdb_hopf", d, rec.items};
}

// ---------------------------------------------------------------- lie_brace

inline SuiteReport lie_brace_suite(int d) {
    Recorder rec;
    const std::vector<Scalar> lambdas{Scalar(0), Scalar(1), Scalar(2), Scalar(-1), Scalar(1, 2)};
    rec.over("left pre-Lie identity for |>_lambda", lambdas, [&](const Scalar& lam) {
        for (int a = 1; a <= d; ++a)
            for (int b = 1; a + b <= d; ++b)
                for (int c = 1; a + b + c <= d; ++c) {
                    auto tri = [&](int x, int y, int z) {
                        return prelie_lambda(e(x), prelie_lambda(e(y), e(z), lam), lam) -
                               prelie_lambda(prelie_lambda(e(x), e(y), lam), e(z), lam);
                    };
                    if (tri(a, b, c) != tri(b, a, c))
                        return fail_if(true, "lambda=" + lam.str() + " on (" + std::to_string(a) + "," +
                                                 std::to_string(b) + "," + std::to_string(c) + ")");
                }
        return std::optional<std::string>{};
    });
    const int P = std::min(d, 6);
    std::vector<std::pair<int, int>> pq;
    for (int p = 1; p <= P; ++p)
        for (int q = 1; q <= P; ++q) pq.emplace_back(p, q);
    rec.over("commutator of |> is the Witt bracket", pq, [&](const std::pair<int, int>& x) {
        const auto [p, q] = x;
        return fail_if(prelie(e(p), e(q)) - prelie(e(q), e(p)) != witt_bracket(p, q),
                       "p=" + std::to_string(p) + ", q=" + std::to_string(q));
    });
    rec.over("convolution commutator of e_p, e_q is the Witt bracket", pq, [&](const std::pair<int, int>& x) {
        const auto [p, q] = x;
        const int n = p + q;
        const CommHopf h(CommAlgebra::fdb);
        for (const auto& m : monomials_of_degree(n)) {
            Scalar v;
            for (const auto& [t, c] : h.coproduct(m)) {
                const bool pq_term = t.left == CommMonomial::generator(p) && t.right == CommMonomial::generator(q);
                const bool qp_term = t.left == CommMonomial::generator(q) && t.right == CommMonomial::generator(p);
                if (pq_term) v += c;
                if (qp_term) v -= c;
            }
            const Scalar expected = m == CommMonomial::generator(n) ? witt_bracket(p, q).coeff(EGen{n}) : Scalar(0);
            if (v != expected) return fail_if(true, "p=" + std::to_string(p) + ", q=" + std::to_string(q) + " on " + to_string(m));
        }
        return std::optional<std::string>{};
    });
    std::vector<std::vector<int>> arg_lists;
    for (int k = 1; k <= 3; ++k)
        comb::for_each_weak_composition(std::max(0, d - 1 - k), k, [&](const std::vector<int>& c) {
            std::vector<int> v;
            for (int x : c) v.push_back(x + 1);
            arg_lists.push_back(v);
        });
    rec.over("symmetric brace is symmetric in its arguments", arg_lists, [&](std::vector<int> args) {
        std::sort(args.begin(), args.end());
        std::vector<L1Element> base;
        for (int a : args) base.push_back(e(a));
        const auto ref = symmetric_brace(e(1), base);
        do {
            std::vector<L1Element> perm;
            for (int a : args) perm.push_back(e(a));
            if (symmetric_brace(e(1), perm) != ref) return fail_if(true, "argument order changes the brace");
        } while (std::next_permutation(args.begin(), args.end()));
        return std::optional<std::string>{};
    });
    // {{x; y1 y2}; z1 z2} on generators, total degree <= d.
    std::vector<std::vector<int>> brace_cases;
    for (int total = 5; total <= d; ++total)
        comb::for_each_composition(total, [&](const std::vector<int>& c) {
            if (c.size() == 5) brace_cases.push_back(c);
        });
    rec.over("brace identity", brace_cases, [&](const std::vector<int>& c) {
        auto x = [](int n) { return LinComb<XGen>(XGen{n}); };
        auto br = [](const LinComb<XGen>& a, const std::vector<LinComb<XGen>>& args) { return brace_product(a, args); };
        const auto lhs = br(br(x(c[0]), {x(c[1]), x(c[2])}), {x(c[3]), x(c[4])});
        const auto rhs = brace_identity_rhs(x(c[0]), {x(c[1]), x(c[2])}, {x(c[3]), x(c[4])}, br);
        return fail_if(lhs != rhs, "instance x" + std::to_string(c[0]) + "; x" + std::to_string(c[1]) + " x" +
                                       std::to_string(c[2]) + "; x" + std::to_string(c[3]) + " x" + std::to_string(c[4]));
    });
    const int H = std::min(d, 5);
    std::vector<UEnvElement> ws;
    for (const auto& w : words_up_to(H)) ws.emplace_back(w);
    rec.over("pairing: <ab, u> = <a (x) b, Du>", monomials_up_to(H), [&](const CommMonomial& a) {
        for (const auto& b : monomials_up_to(H - a.degree()))
            for (const auto& w : words_of_degree(a.degree() + b.degree())) {
                Scalar rhs;
                for (const auto& [p, c] : uenv_coproduct(w))
                    rhs += c * pairing(LinComb<CommMonomial>(a), UEnvElement(p.left), H) *
                           pairing(LinComb<CommMonomial>(b), UEnvElement(p.right), H);
                if (pairing(LinComb<CommMonomial>(a * b), UEnvElement(w), H) != rhs)
                    return fail_if(true, "a=" + to_string(a) + ", b=" + to_string(b) + ", u=" + to_string(w, "e"));
            }
        return std::optional<std::string>{};
    });
    const CommHopf h(CommAlgebra::fdb);
    rec.over("pairing: <a, uv> = <Da, u (x) v>", monomials_up_to(H), [&](const CommMonomial& a) {
        for (int k = 0; k <= a.degree(); ++k)
            for (const auto& u : words_of_degree(k))
                for (const auto& v : words_of_degree(a.degree() - k)) {
                    Scalar rhs;
                    for (const auto& [p, c] : h.coproduct(a))
                        rhs += c * pairing(LinComb<CommMonomial>(p.left), UEnvElement(u), H) *
                               pairing(LinComb<CommMonomial>(p.right), UEnvElement(v), H);
                    if (pairing(LinComb<CommMonomial>(a), UEnvElement(u * v), H) != rhs)
                        return fail_if(true, "a=" + to_string(a) + ", u=" + to_string(u, "e") + ", v=" + to_string(v, "e"));
                }
        return std::optional<std::string>{};
    });
    return {"lie_brace", d, rec.items};
}

// ---------------------------------------------------------------- trees_hopf

inline SuiteReport trees_hopf_suite(int d) {
    Recorder rec;
    const std::vector<int> tree_counts{1, 1, 2, 4, 9, 20, 48, 115};
    rec.over("rooted tree counts", range(1, std::min(d, 8)), [&](int n) {
        return fail_if(static_cast<int>(trees_of_degree(n).size()) != tree_counts[static_cast<std::size_t>(n - 1)],
                       "degree " + std::to_string(n));
    });
    const RTHopf rt;
    const auto forests = forests_up_to(d);
    hopf_checks(rec, rt, forests, d, false, "rt: ");
    rec.over("B+ is a 1-cocycle", forests, [&](const Forest& f) {
        const RootedTree t = bplus(f);
        Tensor2<Forest> rhs = tensor(Forest(t), Forest{});
        for (const auto& [p, c] : rt.coproduct(f)) rhs.add({p.left, Forest(bplus(p.right))}, c);
        return fail_if(rt.coproduct(Forest(t)) != rhs, "forest " + to_string(f));
    });
    std::vector<RootedTree> trees;
    for (int n = 1; n < d; ++n)
        for (const auto& t : trees_of_degree(n)) trees.push_back(t);
    rec.over("grafting is left pre-Lie", trees, [&](const RootedTree& s) {
        for (const auto& t : trees)
            for (const auto& u : trees) {
                if (s.size() + t.size() + u.size() > d) continue;
                auto assoc = [&](const RootedTree& a, const RootedTree& b) {
                    return graft(LinComb<RootedTree>(a), graft(b, u)) - graft(graft(a, b), LinComb<RootedTree>(u));
                };
                if (assoc(s, t) != assoc(t, s)) return fail_if(true, s.code() + ", " + t.code() + ", " + u.code());
            }
        return std::optional<std::string>{};
    });
    rec.over("graft coefficients equal M'", trees, [&](const RootedTree& t) {
        for (const auto& u : trees) {
            if (t.size() + u.size() > d) continue;
            const auto g = graft(t, u);
            for (const auto& T : trees_of_degree(t.size() + u.size()))
                if (g.coeff(T) != graft_count_M(t, u, T)) return fail_if(true, t.code() + " -> " + u.code() + " at " + T.code());
        }
        return std::optional<std::string>{};
    });
    rec.over("GL commutator of normalized duals is grafting", trees, [&](const RootedTree& t) {
        for (const auto& u : trees) {
            if (t.size() + u.size() > d) continue;
            const auto lhs = gl_product(delta_tilde(t), delta_tilde(u)) - gl_product(delta_tilde(u), delta_tilde(t));
            GLFunctional rhs;
            for (const auto& [T, c] : graft(t, u) - graft(u, t)) rhs += delta_tilde(T) * c;
            if (lhs != rhs) return fail_if(true, "t=" + t.code() + ", u=" + u.code());
        }
        return std::optional<std::string>{};
    });
    rec.over("phi is a pre-Lie morphism", trees, [&](const RootedTree& t) {
        for (const auto& u : trees)
            if (t.size() + u.size() <= d && phi(graft(t, u)) != prelie(phi(t), phi(u)))
                return fail_if(true, "t=" + t.code() + ", u=" + u.code());
        return std::optional<std::string>{};
    });
    rec.over("phi is surjective in each degree", range(1, d), [&](int n) {
        for (const auto& t : trees_of_degree(n))
            if (!phi(t).is_zero()) return std::optional<std::string>{};
        return fail_if(true, "degree " + std::to_string(n));
    });
    const int P = std::min(d, 5);
    const PsiEmbedding psi(P);
    const CommHopf fdb(CommAlgebra::fdb);
    const auto monos = monomials_up_to(P);
    rec.over("Psi multiplicative", pairs_within(monos, P), [&](const std::pair<CommMonomial, CommMonomial>& p) {
        return fail_if(psi(p.first * p.second) != psi(p.first) * psi(p.second),
                       to_string(p.first) + " * " + to_string(p.second));
    });
    rec.over("Psi comultiplicative", monos, [&](const CommMonomial& m) {
        const auto lhs = rt.coproduct(psi(m));
        const auto rhs = apply_tensor(fdb.coproduct(m), [&](const CommMonomial& a) { return psi(a); },
                                      [&](const CommMonomial& a) { return psi(a); });
        return fail_if(lhs != rhs, "on " + to_string(m));
    });
    rec.over("Psi injective per degree", range(1, P), [&](int n) {
        return fail_if(psi_rank(psi, n) != comb::partition_count(n), "rank deficit in degree " + std::to_string(n));
    });
    if (P >= 2)
        rec.expect("Psi(x2) = 2 l2", psi(CommMonomial::generator(2)) == LinComb<Forest>(Forest(RootedTree::ladder(2)), 2),
                   "Psi(x2) = " + format(psi(CommMonomial::generator(2))));
    return {"trees_hopf", d, rec.items};
}

// ---------------------------------------------------------------- nc_hopf

inline SuiteReport nc_hopf_suite(int d) {
    Recorder rec;
    const auto words = words_up_to(d);
    const NCHopf inv(NCAlgebra::inv_nc), fdb(NCAlgebra::fdb_nc);
    hopf_checks(rec, inv, words, d, true, "invnc: ");
    hopf_checks(rec, fdb, words, d, true, "fdbnc: ");
    rec.over("closed-form antipode equals recursion", range(1, d), [&](int n) {
        return fail_if(antipode_nc_closed(n) != fdb.antipode_generator(n), "n=" + std::to_string(n));
    });
    rec.over("left and right recursions agree", range(1, d), [&](int n) {
        return fail_if(fdb.antipode_generator(n) != fdb.antipode_generator_right(n), "n=" + std::to_string(n));
    });
    const CommHopf cfdb(CommAlgebra::fdb);
    rec.over("abelianization is a Hopf morphism", words, [&](const Word& w) {
        const auto pw = abelianize(LinComb<Word>(w));
        if (abelianize(fdb.coproduct(w)) != cfdb.coproduct(pw)) return fail_if(true, "coproduct on " + to_string(w));
        return fail_if(abelianize(fdb.antipode(w)) != cfdb.antipode(pw), "antipode on " + to_string(w));
    });
    rec.over("invnc: cocommutative", words, [&](const Word& w) {
        return fail_if(inv.coproduct(w) != flip(inv.coproduct(w)), "D != tD on " + to_string(w));
    });
    if (d >= 4) {
        const Word x4{4};
        rec.expect("fdbnc: not cocommutative (witness x4)", fdb.coproduct(x4) != flip(fdb.coproduct(x4)),
                   "D(x4) is symmetric");
    }
    const auto short_words = words_up_to(std::min(d, 3));
    rec.over("shuffle commutative and associative", short_words, [&](const Word& a) {
        for (const auto& b : short_words) {
            if (shuffle(a, b) != shuffle(b, a)) return fail_if(true, to_string(a) + " sh " + to_string(b));
            for (const auto& c : short_words)
                if (shuffle(shuffle(LinComb<Word>(a), LinComb<Word>(b)), LinComb<Word>(c)) !=
                    shuffle(LinComb<Word>(a), shuffle(LinComb<Word>(b), LinComb<Word>(c))))
                    return fail_if(true, "associativity on " + to_string(a) + "," + to_string(b) + "," + to_string(c));
        }
        return std::optional<std::string>{};
    });
    rec.over("deconcatenation coassociative", words, [&](const Word& w) {
        Tensor3<Word> l, r;
        for (const auto& [p, c] : deconcat(w)) {
            for (const auto& [q, cq] : deconcat(p.left)) l.add({q.left, q.right, p.right}, c * cq);
            for (const auto& [q, cq] : deconcat(p.right)) r.add({p.left, q.left, q.right}, c * cq);
        }
        return fail_if(l != r, "on " + to_string(w));
    });
    // Words of length <= 4 in letters 1, 2.
    std::vector<Word> small;
    for (int len = 0; len <= 4; ++len)
        for (int mask = 0; mask < (1 << len); ++mask) {
            std::vector<int> l;
            for (int i = 0; i < len; ++i) l.push_back((mask >> i) & 1 ? 2 : 1);
            small.emplace_back(l);
        }
    auto pair_tensor = [](const Tensor2<Word>& t, const Word& u, const Word& v) { return t.coeff(Pair2<Word>{u, v}); };
    rec.over("shuffle dual to unshuffle", small, [&](const Word& w) {
        for (const auto& u : small)
            for (const auto& v : small)
                if (u.size() + v.size() == w.size() && shuffle(u, v).coeff(w) != pair_tensor(unshuffle(w), u, v))
                    return fail_if(true, "u=" + to_string(u) + ", v=" + to_string(v) + ", w=" + to_string(w));
        return std::optional<std::string>{};
    });
    rec.over("concatenation dual to deconcatenation", small, [&](const Word& w) {
        for (const auto& u : small)
            for (const auto& v : small)
                if (u.size() + v.size() == w.size() && Scalar((u * v) == w ? 1 : 0) != pair_tensor(deconcat(w), u, v))
                    return fail_if(true, "u=" + to_string(u) + ", v=" + to_string(v) + ", w=" + to_string(w));
        return std::optional<std::string>{};
    });
    const int C = std::min(d, 5);
    rec.over("cogroup: projection of D* is D_inv^nc", words_up_to(C), [&](const Word& w) {
        return fail_if(star_project(cogroup_coproduct_inv(w)) != inv.coproduct(w), "on " + to_string(w));
    });
    auto retag = [](const LinComb<Word>& v, char tag) {
        FreeProductElement r;
        for (const auto& [w, c] : v) r.add(tagged(tag, w), c);
        return r;
    };
    auto letter = [](char tag, int n) { return FreeProductElement(TaggedWord{{tag, n}}); };
    rec.over("cogroup coassociativity on generators", range(1, C), [&](int n) {
        const auto lhs = map_letters(cogroup_coproduct_generator(n, 'a', 'b'), [&](const TaggedLetter& l) {
            return l.tag == 'b' ? cogroup_coproduct_generator(l.index, 'b', 'c') : letter(l.tag, l.index);
        });
        const auto rhs = map_letters(cogroup_coproduct_generator(n, 'a', 'c'), [&](const TaggedLetter& l) {
            return l.tag == 'a' ? cogroup_coproduct_generator(l.index, 'a', 'b') : letter(l.tag, l.index);
        });
        return fail_if(lhs != rhs, "n=" + std::to_string(n));
    });
    rec.over("cogroup counit on generators", range(1, C), [&](int n) {
        const auto d_n = cogroup_coproduct_generator(n);
        auto kill = [&](char dead) {
            LinComb<Word> r;
            for (const auto& [w, c] : d_n) {
                std::vector<int> kept;
                bool zero = false;
                for (const auto& l : w.letters) {
                    if (l.tag == dead) zero = true;
                    else kept.push_back(l.index);
                }
                if (!zero) r.add(Word(kept), c);
            }
            return r;
        };
        const LinComb<Word> xn(Word{n});
        return fail_if(kill('x') != xn || kill('y') != xn, "n=" + std::to_string(n));
    });
    rec.over("cogroup antipode through the lifted product", range(1, C), [&](int n) {
        const auto d_n = cogroup_coproduct_generator(n);
        const auto left = map_letters(d_n, [&](const TaggedLetter& l) {
            return l.tag == 'x' ? retag(cogroup_antipode_generator(l.index), 'x') : letter(l.tag, l.index);
        });
        const auto right = map_letters(d_n, [&](const TaggedLetter& l) {
            return l.tag == 'y' ? retag(cogroup_antipode_generator(l.index), 'y') : letter(l.tag, l.index);
        });
        return fail_if(!lifted_multiply(left).is_zero() || !lifted_multiply(right).is_zero(), "n=" + std::to_string(n));
    });
    if (d >= 4) {
        const auto w3 = find_nonassociativity(3);
        const auto w4 = find_nonassociativity(4);
        rec.expect("naive non-commutative composition fails associativity at degree 4", !w3 && w4 && w4->degree == 4,
                   w3 ? "already non-associative at degree 3" : "no counterexample at degree 4");
    }
    return {"nc_hopf", d, rec.items};
}

// ---------------------------------------------------------------- incidence

/// All posets on {0..k-1} whose order extends the natural order (every class occurs).
inline std::vector<Poset> naturally_labeled_posets(int k) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) slots.emplace_back(i, j);
    std::vector<Poset> out;
    for (unsigned long mask = 0; mask < (1UL << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> rel;
        for (std::size_t s = 0; s < slots.size(); ++s)
            if ((mask >> s) & 1UL) rel.push_back(slots[s]);
        const Poset p = Poset::from_relations(k, rel);
        bool closed = true;
        for (std::size_t s = 0; s < slots.size() && closed; ++s)
            if (p.le(slots[s].first, slots[s].second) != static_cast<bool>((mask >> s) & 1UL)) closed = false;
        if (closed) out.push_back(p);
    }
    return out;
}

/// Rescaled partition-lattice coproduct of x_n = X_n/(n+1)! read as an H_FdB tensor.
inline Tensor2<CommMonomial> partition_coproduct_as_fdb(int n) {
    std::map<PosetClass, int> index;
    for (int j = 1; j <= n; ++j) index.emplace(partition_class(j), j);
    auto to_mono = [&](const IncMonomial& m, Scalar& scale) {
        std::vector<int> idx;
        for (const auto& c : m.factors) {
            const auto it = index.find(c);
            if (it == index.end()) throw std::logic_error("interval outside the partition family");
            idx.push_back(it->second);
            scale *= Scalar(comb::factorial(it->second + 1));
        }
        return CommMonomial::from_indices(idx);
    };
    const IncidenceHopf h;
    Tensor2<CommMonomial> r;
    for (const auto& [p, c] : h.coproduct_class(partition_class(n))) {
        Scalar scale = 1;
        const auto l = to_mono(p.left, scale);
        const auto rr = to_mono(p.right, scale);
        r.add({l, rr}, c * scale / Scalar(comb::factorial(n + 1)));
    }
    return r;
}

inline SuiteReport incidence_suite(int d) {
    Recorder rec;
    const IncidenceHopf h;
    std::vector<IncMonomial> basis;
    for (int n = 1; n <= d; ++n) basis.push_back(factor(boolean_lattice(n)));
    for (int j = 1; j <= std::min(d, 5); ++j) basis.emplace_back(std::vector<PosetClass>{partition_class(j)});
    for (const auto& f : forests_up_to(d)) basis.push_back(forest_to_incidence(f));
    rec.over("coassociativity on the three families", basis, [&](const IncMonomial& m) { return axioms::coassociative(h, m); });
    rec.over("counit on the three families", basis, [&](const IncMonomial& m) { return axioms::counital(h, m); });
    std::vector<IncMonomial> small;
    for (const auto& m : basis) {
        int sz = 0;
        for (const auto& c : m.factors) sz += c.size();
        if (sz <= 16) small.push_back(m);
    }
    rec.over("antipode identities", small, [&](const IncMonomial& m) { return axioms::antipode_identities(h, m); });
    rec.over("conilpotence: iterated reduced coproduct vanishes", small, [&](const IncMonomial& m) {
        int bound = 0;
        for (const auto& c : m.factors) bound += c.size() - 1;
        // Iterate the reduced coproduct on the leftmost factor.
        std::vector<std::pair<std::vector<IncMonomial>, Scalar>> terms{{{m}, Scalar(1)}};
        int steps = 0;
        while (!terms.empty()) {
            std::vector<std::pair<std::vector<IncMonomial>, Scalar>> next;
            for (const auto& [seq, c] : terms)
                for (const auto& [p, cp] : h.coproduct(seq.front())) {
                    if (p.left.is_unit() || p.right.is_unit()) continue;
                    auto s = seq;
                    s.front() = p.right;
                    s.insert(s.begin(), p.left);
                    next.emplace_back(s, c * cp);
                }
            terms = std::move(next);
            if (!terms.empty()) ++steps;
            if (steps > bound) return fail_if(true, "nonzero after " + std::to_string(steps) + " steps on " + to_string(m));
        }
        return std::optional<std::string>{};
    });
    std::vector<std::pair<Poset, Poset>> prod_pairs;
    const std::vector<Poset> bounded{chain(2), chain(3), boolean_lattice(2), partition_lattice(3)};
    for (const auto& p : bounded)
        for (const auto& q : bounded) prod_pairs.emplace_back(p, q);
    rec.over("coproduct multiplicative over direct products", prod_pairs, [&](const std::pair<Poset, Poset>& pq) {
        const auto lhs = h.coproduct_poset(direct_product(pq.first, pq.second));
        const auto rhs = h.coproduct_poset(pq.first) * h.coproduct_poset(pq.second);
        return fail_if(lhs != rhs, "on P" + std::to_string(pq.first.size()) + " x P" + std::to_string(pq.second.size()));
    });
    const CommHopf fdb(CommAlgebra::fdb);
    rec.over("partition family matches the Faa di Bruno coproduct", range(1, std::min(d, 5)), [&](int n) {
        return fail_if(partition_coproduct_as_fdb(n) != fdb.coproduct(CommMonomial::generator(n)), "n=" + std::to_string(n));
    });
    rec.over("boolean family: binomial coproduct and divided powers", range(1, std::min(d, 6)), [&](int n) {
        const PosetClass b1 = boolean_generator();
        auto power = [&](int k) { return IncMonomial(std::vector<PosetClass>(static_cast<std::size_t>(k), b1)); };
        Tensor2<IncMonomial> expected;
        for (int k = 0; k <= n; ++k) expected.add({power(k), power(n - k)}, Scalar(comb::binomial(n, k)));
        if (h.coproduct_poset(boolean_lattice(n)) != expected) return fail_if(true, "binomial coproduct at n=" + std::to_string(n));
        if (factor(boolean_lattice(n)) != power(n)) return fail_if(true, "B_n != B_1^n");
        // y_m * y_k evaluated through the coproduct: <y_m (x) y_k, D x^n>.
        for (int m = 0; m <= n; ++m) {
            const Scalar val = h.coproduct_poset(boolean_lattice(n)).coeff(Pair2<IncMonomial>{power(m), power(n - m)});
            if (val != Scalar(comb::binomial(n, m))) return fail_if(true, "divided power product at n=" + std::to_string(n));
        }
        return std::optional<std::string>{};
    });
    const RTHopf rt;
    rec.over("forest ideals reproduce the flipped tree coproduct", forests_up_to(d), [&](const Forest& f) {
        const auto lhs = h.coproduct_poset(forest_ideals(f));
        Tensor2<IncMonomial> rhs;
        for (const auto& [p, c] : rt.coproduct(f)) rhs.add({forest_to_incidence(p.right), forest_to_incidence(p.left)}, c);
        return fail_if(lhs != rhs, "forest " + to_string(f));
    });
    const int K = std::min(d, 5);
    rec.over("J(P) determines P", range(1, K), [&](int k) {
        const auto posets = naturally_labeled_posets(k);
        std::map<PosetClass, PosetClass> j_to_p;
        for (const auto& p : posets) {
            const PosetClass pc(p), jc(initial_segments(p));
            auto [it, fresh] = j_to_p.emplace(jc, pc);
            if (!fresh && it->second != pc) return fail_if(true, "two non-isomorphic posets share J(P) at size " + std::to_string(k));
        }
        const std::vector<std::size_t> expected{1, 2, 5, 16, 63};
        return fail_if(j_to_p.size() != expected[static_cast<std::size_t>(k - 1)],
                       "found " + std::to_string(j_to_p.size()) + " classes of size " + std::to_string(k));
    });
    rec.over("boolean intervals are boolean", range(1, std::min(d, 4)), [&](int n) {
        const Poset b = boolean_lattice(n);
        for (int x = 0; x < b.size(); ++x)
            for (int y = 0; y < b.size(); ++y)
                if (b.le(x, y) && !isomorphic(interval(b, x, y), boolean_lattice(__builtin_popcount(static_cast<unsigned>(y & ~x)))))
                    return fail_if(true, "[" + std::to_string(x) + "," + std::to_string(y) + "] in B" + std::to_string(n));
        return std::optional<std::string>{};
    });
    return {"incidence", d, rec.items};
}

// ---------------------------------------------------------------- operads

template <class Op>
void operad_axioms(Recorder& rec, int max_arity, const std::string& prefix) {
    using E = typename Op::element;
    std::vector<E> elems;
    for (int n = 1; n <= max_arity; ++n)
        for (const auto& e : Op::basis(n)) elems.push_back(e);
    rec.over(prefix + "unit axiom", elems, [&](const E& a) {
        for (int i = 1; i <= Op::arity(a); ++i)
            if (partial_compose<Op>(a, i, Op::identity()) != a) return fail_if(true, "a o_i e != a");
        return fail_if(partial_compose<Op>(Op::identity(), 1, a) != a, "e o_1 a != a");
    });
    rec.over(prefix + "nested associativity", elems, [&](const E& a) {
        for (const auto& b : elems)
            for (const auto& c : elems)
                for (int i = 1; i <= Op::arity(a); ++i)
                    for (int j = 1; j <= Op::arity(b); ++j)
                        if (partial_compose<Op>(partial_compose<Op>(a, i, b), i + j - 1, c) !=
                            partial_compose<Op>(a, i, partial_compose<Op>(b, j, c)))
                            return fail_if(true, "slots i=" + std::to_string(i) + ", j=" + std::to_string(j));
        return std::optional<std::string>{};
    });
    rec.over(prefix + "disjoint associativity", elems, [&](const E& a) {
        for (const auto& b : elems)
            for (const auto& c : elems)
                for (int i = 1; i <= Op::arity(a); ++i)
                    for (int j = i + 1; j <= Op::arity(a); ++j)
                        if (partial_compose<Op>(partial_compose<Op>(a, i, b), j + Op::arity(b) - 1, c) !=
                            partial_compose<Op>(partial_compose<Op>(a, j, c), i, b))
                            return fail_if(true, "slots i=" + std::to_string(i) + ", j=" + std::to_string(j));
        return std::optional<std::string>{};
    });
    rec.over(prefix + "total composition equals iterated partial compositions", elems, [&](const E& a) {
        std::vector<E> args;
        for (int i = 0; i < Op::arity(a); ++i) args.push_back(elems[static_cast<std::size_t>(i) % elems.size()]);
        E iter = a;
        for (int i = Op::arity(a); i >= 1; --i) iter = partial_compose<Op>(iter, i, args[static_cast<std::size_t>(i - 1)]);
        return fail_if(Op::compose(a, args) != iter, "gamma differs from iterated o_i");
    });
    rec.over(prefix + "pre-Lie identity (associator symmetric in the first two arguments)", elems, [&](const E& a) {
        for (const auto& b : elems)
            for (const auto& c : elems) {
                if (Op::arity(a) + Op::arity(b) + Op::arity(c) > max_arity + 2) continue;
                auto assoc = [&](const E& x, const E& y) {
                    return operadic_prelie<Op>(operadic_prelie<Op>(LinComb<E>(x), LinComb<E>(y)), LinComb<E>(c)) -
                           operadic_prelie<Op>(LinComb<E>(x), operadic_prelie<Op>(LinComb<E>(y), LinComb<E>(c)));
                };
                if (assoc(a, b) != assoc(b, a)) return fail_if(true, "associator not symmetric");
            }
        return std::optional<std::string>{};
    });
}

template <class Op>
OperadSeries<Op> random_operad_series(int N, Rng& rng) {
    std::map<typename Op::element, Scalar> c;
    for (int n = 2; n <= N; ++n)
        for (const auto& e : Op::basis(n)) c.emplace(e, random_scalar(rng));
    return OperadSeries<Op>(N, c);
}

template <class Op>
void operad_group_checks(Recorder& rec, int N, Rng& rng, const std::string& prefix) {
    rec.over(prefix + "group associativity", range(1, 3), [&](int) {
        const auto f = random_operad_series<Op>(N, rng), g = random_operad_series<Op>(N, rng),
                   h = random_operad_series<Op>(N, rng);
        return fail_if(operad_group_compose(operad_group_compose(f, g), h) != operad_group_compose(f, operad_group_compose(g, h)),
                       "(fg)h != f(gh) at N=" + std::to_string(N));
    });
    rec.over(prefix + "group identity and inverse", range(1, 3), [&](int) {
        const auto f = random_operad_series<Op>(N, rng);
        const auto id = OperadSeries<Op>::identity(N);
        if (operad_group_compose(f, id) != f || operad_group_compose(id, f) != f) return fail_if(true, "identity law fails");
        const auto g = operad_group_inverse(f);
        return fail_if(operad_group_compose(f, g) != id || operad_group_compose(g, f) != id, "inverse law fails");
    });
}

inline SuiteReport operads_suite(int d) {
    Rng rng(0xE5);
    Recorder rec;
    operad_axioms<AssocOperad>(rec, std::min(std::max(d, 2), 4), "assoc: ");
    operad_axioms<DupOperad>(rec, std::min(std::max(d, 2), 3), "dup: ");
    std::vector<PlanarBinaryTree> trees;
    for (int n = 1; n <= std::min(d, 3); ++n)
        for (const auto& t : planar_trees(n)) trees.push_back(t);
    rec.over("duplicial identities", trees, [&](const PlanarBinaryTree& x) {
        for (const auto& y : trees)
            for (const auto& z : trees) {
                if (dup_over(dup_over(x, y), z) != dup_over(x, dup_over(y, z))) return fail_if(true, "(x/y)/z on " + x.code());
                if (dup_under(dup_over(x, y), z) != dup_over(x, dup_under(y, z))) return fail_if(true, "(x/y)\\z on " + x.code());
                if (dup_under(dup_under(x, y), z) != dup_under(x, dup_under(y, z))) return fail_if(true, "(x\\y)\\z on " + x.code());
            }
        return std::optional<std::string>{};
    });
    const std::vector<std::size_t> catalan{1, 1, 2, 5, 14, 42, 132, 429};
    rec.over("Catalan counts", range(0, std::min(d, 7)), [&](int n) {
        return fail_if(planar_trees(n).size() != catalan[static_cast<std::size_t>(n)], "degree " + std::to_string(n));
    });
    rec.over("over/under generate every tree", range(1, std::min(d, 5)), [&](int n) {
        std::set<PlanarBinaryTree> seen{PlanarBinaryTree::vertex()};
        for (int k = 2; k <= n; ++k) {
            std::set<PlanarBinaryTree> next = seen;
            for (const auto& a : seen)
                for (const auto& b : seen)
                    if (a.degree() + b.degree() <= k) {
                        next.insert(dup_over(a, b));
                        next.insert(dup_under(a, b));
                    }
            seen = std::move(next);
        }
        std::size_t top = 0;
        for (const auto& t : seen) top += t.degree() == n;
        return fail_if(top != catalan[static_cast<std::size_t>(n)], "degree " + std::to_string(n));
    });
    std::vector<std::pair<int, int>> ab;
    for (int a = 1; a <= std::max(d, 2); ++a)
        for (int b = 1; b <= std::max(d, 2); ++b) ab.emplace_back(a, b);
    rec.over("assoc: bracket [p_a, p_b] = (b - a) p_{a+b-1}", ab, [&](const std::pair<int, int>& x) {
        const auto [a, b] = x;
        if (operadic_prelie<AssocOperad>(a, b) != LinComb<int>(a + b - 1, Scalar(b))) return fail_if(true, "p_a <| p_b");
        return fail_if(operadic_bracket<AssocOperad>(a, b) != LinComb<int>(a + b - 1, Scalar(b - a)),
                       "a=" + std::to_string(a) + ", b=" + std::to_string(b));
    });
    const int A = std::clamp(d, 2, 8);
    operad_group_checks<AssocOperad>(rec, A, rng, "assoc: ");
    rec.over("assoc: group law is series composition", range(1, 10), [&](int) {
        const auto f = random_diffeo(A, rng), g = random_diffeo(A, rng);
        return fail_if(assoc_to_series(operad_group_compose(series_to_assoc(f), series_to_assoc(g))) != compose(f, g),
                       "mismatch at N=" + std::to_string(A));
    });
    const int D = std::clamp(d, 2, 5);
    operad_group_checks<DupOperad>(rec, D, rng, "dup: ");
    rec.over("projection is a group morphism", range(1, 3), [&](int) {
        const auto f = random_operad_series<DupOperad>(D, rng), g = random_operad_series<DupOperad>(D, rng);
        return fail_if(order_project(operad_group_compose(f, g)) != compose(order_project(f), order_project(g)),
                       "project(f o g) != project(f) o project(g)");
    });
    rec.over("section is a group morphism and project o section = id", range(1, 3), [&](int) {
        const auto f = random_diffeo(D, rng), g = random_diffeo(D, rng);
        if (order_project(section_embed(f)) != f) return fail_if(true, "project(section(f)) != f");
        return fail_if(operad_group_compose(section_embed(f), section_embed(g)) != section_embed(compose(f, g)),
                       "section(f) o section(g) != section(f o g)");
    });
    const int Q = std::min(d, 3);
    std::vector<TreeSeries> fs{TreeSeries{}, TreeSeries(PlanarBinaryTree::leaf())};
    for (int i = 0; i < 3; ++i) {
        TreeSeries f;
        for (int n = 0; n <= Q; ++n)
            for (const auto& t : planar_trees(n)) f.add(t, random_scalar(rng));
        fs.push_back(f);
    }
    rec.over("alpha satisfies its defining identity", fs, [&](const TreeSeries& f) {
        return fail_if(!alpha_residual(f, alpha_series(f, Q), Q).is_zero(), "nonzero residual for f=" + format(f));
    });
    TreeSeries combs;
    for (int n = 1; n <= Q; ++n) combs.add(comb_tree(n), 1);
    rec.expect("alpha of the leaf is the sum of combs", alpha_series(TreeSeries(PlanarBinaryTree::leaf()), Q) == combs,
               "got " + format(alpha_series(TreeSeries(PlanarBinaryTree::leaf()), Q)));
    return {"operads", d, rec.items};
}

// ---------------------------------------------------------------- registry

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"algebra_core", "series",  "fdb_hopf",  "lie_brace",
                                                "trees_hopf",   "nc_hopf", "incidence", "operads"};
    return names;
}

inline SuiteReport run_suite(const std::string& name, int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("check: --max-degree must be >= 1");
    if (name == "algebra_core") return algebra_core_suite(max_degree);
    if (name == "series") return series_suite(max_degree);
    if (name == "fdb_hopf") return fdb_hopf_suite(max_degree);
    if (name == "lie_brace") return lie_brace_suite(max_degree);
    if (name == "trees_hopf") return trees_hopf_suite(max_degree);
    if (name == "nc_hopf") return nc_hopf_suite(max_degree);
    if (name == "incidence") return incidence_suite(max_degree);
    if (name == "operads") return operads_suite(max_degree);
    throw std::invalid_argument("unknown check suite '" + name + "'");
}

}  // namespace checks
}  // namespace fdb
