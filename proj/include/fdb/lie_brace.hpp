#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdb/core/combinatorics.hpp"
#include "fdb/core/lincomb.hpp"
#include "fdb/core/monomial.hpp"
#include "fdb/fdb_hopf.hpp"

namespace fdb {

using EGen = Gen<'e'>;
using XGen = Gen<'x'>;

/// Element of L_1 = Span{e_n, n >= 1}, e_n = t^{n+1} d/dt.
using L1Element = LinComb<EGen>;

/// Element of U(L_1) in the word basis e_{i1} * ... * e_{ik}.
using UEnvElement = LinComb<Word>;

inline L1Element e(int n, const Scalar& c = Scalar(1)) {
    if (n < 1) throw std::invalid_argument("e_n requires n >= 1");
    return L1Element(EGen{n}, c);
}

inline int degree(const EGen& g) { return g.n; }

/// Extends a product defined on generators bilinearly.
template <class F>
L1Element bilinear(const L1Element& a, const L1Element& b, F&& on_gens) {
    L1Element r;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) r += on_gens(x.n, y.n) * (cx * cy);
    return r;
}

/// [e_p, e_q] = (q - p) e_{p+q}.
inline L1Element witt_bracket(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("witt_bracket requires indices >= 1");
    return e(p + q, Scalar(q - p));
}

inline L1Element witt_bracket(const L1Element& a, const L1Element& b) {
    return bilinear(a, b, [](int p, int q) { return witt_bracket(p, q); });
}

/// Left pre-Lie family e_p |>_lambda e_q = (q + lambda) e_{p+q}.
inline L1Element prelie_lambda(int p, int q, const Scalar& lambda) {
    if (p < 1 || q < 1) throw std::invalid_argument("prelie_lambda requires indices >= 1");
    return e(p + q, Scalar(q) + lambda);
}

inline L1Element prelie_lambda(const L1Element& a, const L1Element& b, const Scalar& lambda) {
    return bilinear(a, b, [&](int p, int q) { return prelie_lambda(p, q, lambda); });
}

/// The pre-Lie product |> = |>_1.
inline L1Element prelie(const L1Element& a, const L1Element& b) { return prelie_lambda(a, b, Scalar(1)); }

/// Right pre-Lie product opposite to |>: x <| y = y |> x, so e_p <| e_q = (p + 1) e_{p+q}.
inline L1Element right_prelie(const L1Element& a, const L1Element& b) { return prelie(b, a); }

/// Symmetric brace {x; y_1 ... y_p} built from <| by
///   {x; y_1..y_p} = {x; y_1..y_{p-1}} <| y_p - sum_i {x; y_1..(y_i <| y_p)..y_{p-1}}.
inline L1Element symmetric_brace(const L1Element& x, const std::vector<L1Element>& args) {
    if (args.empty()) return x;
    std::vector<L1Element> head(args.begin(), args.end() - 1);
    const L1Element& last = args.back();
    L1Element r = right_prelie(symmetric_brace(x, head), last);
    for (std::size_t i = 0; i < head.size(); ++i) {
        auto modified = head;
        modified[i] = right_prelie(head[i], last);
        r -= symmetric_brace(x, modified);
    }
    return r;
}

/// The literal three-term recursion {x; y_1..y_{p-1}} <| y_p - {x; {y_1; y_2..y_{p-1}}},
/// kept for comparison; it is not symmetric in its arguments once p >= 3.
inline L1Element abbreviated_brace(const L1Element& x, const std::vector<L1Element>& args) {
    if (args.empty()) return x;
    if (args.size() == 1) return right_prelie(x, args[0]);
    std::vector<L1Element> head(args.begin(), args.end() - 1);
    std::vector<L1Element> tail(args.begin() + 1, args.end() - 1);
    return right_prelie(abbreviated_brace(x, head), args.back()) -
           abbreviated_brace(x, {abbreviated_brace(args[0], tail)});
}

/// Right brace on V = Span{x_n}: {x_n; x_{m1} ... x_{mq}} = C(n+1, q) x_{n + m1 + ... + mq}.
inline LinComb<XGen> brace_product(int n, const std::vector<int>& ms) {
    if (n < 1) throw std::invalid_argument("brace_product requires n >= 1");
    int total = n;
    for (int m : ms) {
        if (m < 1) throw std::invalid_argument("brace_product arguments must be >= 1");
        total += m;
    }
    return LinComb<XGen>(XGen{total}, Scalar(comb::binomial(n + 1, static_cast<int>(ms.size()))));
}

/// Multilinear extension of brace_product.
inline LinComb<XGen> brace_product(const LinComb<XGen>& x, const std::vector<LinComb<XGen>>& args) {
    LinComb<XGen> r;
    std::vector<int> ms(args.size());
    std::function<void(std::size_t, Scalar)> rec = [&](std::size_t i, Scalar c) {
        if (i == args.size()) {
            for (const auto& [g, cx] : x) r += brace_product(g.n, ms) * (c * cx);
            return;
        }
        for (const auto& [g, cg] : args[i]) {
            ms[i] = g.n;
            rec(i + 1, c * cg);
        }
    };
    rec(0, Scalar(1));
    return r;
}

/// Right-hand side of the brace identity for {{x; y_1..y_p}; z_1..z_q}: the sum over
/// 0 <= i_1 <= j_1 <= ... <= i_p <= j_p <= q of {x; z.. {y_1; z..} z.. {y_p; z..} z..}.
template <class Brace, class V>
V brace_identity_rhs(const V& x, const std::vector<V>& ys, const std::vector<V>& zs, Brace&& brace) {
    V total;
    const std::size_t p = ys.size(), q = zs.size();
    std::vector<std::size_t> cuts(2 * p);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t lo) {
        if (k == cuts.size()) {
            std::vector<V> args;
            std::size_t pos = 0;
            for (std::size_t a = 0; a < p; ++a) {
                const std::size_t i = cuts[2 * a], j = cuts[2 * a + 1];
                for (; pos < i; ++pos) args.push_back(zs[pos]);
                std::vector<V> inner(zs.begin() + static_cast<long>(i), zs.begin() + static_cast<long>(j));
                args.push_back(brace(ys[a], inner));
                pos = j;
            }
            for (; pos < q; ++pos) args.push_back(zs[pos]);
            total += brace(x, args);
            return;
        }
        for (std::size_t c = lo; c <= q; ++c) {
            cuts[k] = c;
            rec(k + 1, c);
        }
    };
    rec(0, 0);
    return total;
}

/// The infinitesimal character e_n of H_FdB dual to x_n, as a functional up to degree N.
inline Functional e_functional(int n, int N) {
    if (n < 1) throw std::invalid_argument("e_n requires n >= 1");
    std::map<CommMonomial, Scalar> v;
    if (n <= N) v.emplace(CommMonomial::generator(n), Scalar(1));
    return Functional(CommAlgebra::fdb, N, v);
}

/// L_1 element as a functional on H_FdB up to degree N.
inline Functional as_functional(const L1Element& a, int N) {
    Functional f(CommAlgebra::fdb, N);
    for (const auto& [g, c] : a) f += e_functional(g.n, N) * c;
    return f;
}

/// U(L_1) element realized as iterated convolution of the e_n on H_FdB up to degree N.
inline Functional as_functional(const UEnvElement& u, int N) {
    Functional total(CommAlgebra::fdb, N);
    for (const auto& [w, c] : u) {
        Functional f = Functional::counit(CommAlgebra::fdb, N);
        for (int n : w.letters) f = convolve(f, e_functional(n, N));
        total += f * c;
    }
    return total;
}

/// <h, u> for h in H_FdB and u in U(L_1); N bounds the degrees involved.
inline Scalar pairing(const LinComb<CommMonomial>& h, const UEnvElement& u, int N) {
    for (const auto& [m, c] : h)
        if (m.degree() > N)
            throw std::out_of_range("pairing: element of degree " + std::to_string(m.degree()) +
                                    " exceeds the bound " + std::to_string(N));
    return as_functional(u, N)(h);
}

inline Scalar pairing(const LinComb<CommMonomial>& h, const UEnvElement& u) {
    int N = 0;
    for (const auto& [m, c] : h) N = std::max(N, m.degree());
    return pairing(h, u, N);
}

/// Word-basis product in U(L_1) is concatenation; the coproduct makes each e_n primitive.
inline Tensor2<Word> uenv_coproduct(const Word& w) {
    Tensor2<Word> r = tensor(Word{}, Word{});
    for (int n : w.letters) {
        Tensor2<Word> g;
        g.add({Word{n}, Word{}}, 1);
        g.add({Word{}, Word{n}}, 1);
        r = r * g;
    }
    return r;
}

}  // namespace fdb
