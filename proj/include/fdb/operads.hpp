#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fdb/core/lincomb.hpp"
#include "fdb/core/scalar.hpp"
#include "fdb/series.hpp"

namespace fdb {

/// Planar binary tree: a leaf "o" or an ordered pair "(L R)".
/// Degree (and arity in the duplicial operad) is the number of internal vertices.
class PlanarBinaryTree {
public:
    PlanarBinaryTree() : code_("o") {}

    PlanarBinaryTree(const PlanarBinaryTree& l, const PlanarBinaryTree& r)
        : node_(std::make_shared<const Node>(
              Node{std::make_shared<const PlanarBinaryTree>(l), std::make_shared<const PlanarBinaryTree>(r)})),
          code_("(" + l.code_ + " " + r.code_ + ")"),
          vertices_(1 + l.vertices_ + r.vertices_) {}

    static PlanarBinaryTree leaf() { return {}; }
    static PlanarBinaryTree vertex() { return {leaf(), leaf()}; }

    static PlanarBinaryTree parse(std::string_view s) {
        std::size_t pos = 0;
        auto skip = [&] {
            while (pos < s.size() && s[pos] == ' ') ++pos;
        };
        std::function<PlanarBinaryTree()> rec = [&]() -> PlanarBinaryTree {
            skip();
            if (pos >= s.size()) throw std::invalid_argument("malformed planar tree '" + std::string(s) + "'");
            if (s[pos] == 'o') {
                ++pos;
                return leaf();
            }
            if (s[pos] != '(') throw std::invalid_argument("malformed planar tree '" + std::string(s) + "'");
            ++pos;
            PlanarBinaryTree l = rec();
            PlanarBinaryTree r = rec();
            skip();
            if (pos >= s.size() || s[pos] != ')')
                throw std::invalid_argument("malformed planar tree '" + std::string(s) + "': expected ')'");
            ++pos;
            return {l, r};
        };
        PlanarBinaryTree t = rec();
        skip();
        if (pos != s.size()) throw std::invalid_argument("malformed planar tree '" + std::string(s) + "': trailing input");
        return t;
    }

    bool is_leaf() const { return !node_; }
    const PlanarBinaryTree& left() const { return *checked().left; }
    const PlanarBinaryTree& right() const { return *checked().right; }
    int degree() const { return vertices_; }
    const std::string& code() const { return code_; }

    friend bool operator==(const PlanarBinaryTree& a, const PlanarBinaryTree& b) { return a.code_ == b.code_; }
    friend std::strong_ordering operator<=>(const PlanarBinaryTree& a, const PlanarBinaryTree& b) {
        if (auto c = a.vertices_ <=> b.vertices_; c != 0) return c;
        return a.code_ <=> b.code_;
    }

private:
    struct Node {
        std::shared_ptr<const PlanarBinaryTree> left, right;
    };
    const Node& checked() const {
        if (!node_) throw std::logic_error("leaf has no subtrees");
        return *node_;
    }

    std::shared_ptr<const Node> node_;
    std::string code_;
    int vertices_ = 0;
};

inline std::string to_string(const PlanarBinaryTree& t) { return t.code(); }

/// All planar binary trees with n internal vertices (Catalan many).
inline std::vector<PlanarBinaryTree> planar_trees(int n) {
    if (n < 0) return {};
    if (n == 0) return {PlanarBinaryTree::leaf()};
    std::vector<PlanarBinaryTree> out;
    for (int k = 0; k < n; ++k)
        for (const auto& l : planar_trees(k))
            for (const auto& r : planar_trees(n - 1 - k)) out.emplace_back(l, r);
    std::sort(out.begin(), out.end());
    return out;
}

/// t / s: the root of t grafted onto the left-most leaf of s.
inline PlanarBinaryTree dup_over(const PlanarBinaryTree& t, const PlanarBinaryTree& s) {
    if (s.is_leaf()) return t;
    return {dup_over(t, s.left()), s.right()};
}

/// t \ s: the root of s grafted onto the right-most leaf of t.
inline PlanarBinaryTree dup_under(const PlanarBinaryTree& t, const PlanarBinaryTree& s) {
    if (t.is_leaf()) return s;
    return {t.left(), dup_under(t.right(), s)};
}

/// The associative operad: one operation p_n per arity n >= 1, composing by adding arities.
struct AssocOperad {
    using element = int;  // the arity n of p_n
    static constexpr const char* name = "assoc";

    static int arity(int p) { return p; }
    static int identity() { return 1; }
    static std::vector<int> basis(int n) {
        if (n < 1) return {};
        return {n};
    }
    static int compose(int p, const std::vector<int>& args) {
        if (static_cast<int>(args.size()) != p)
            throw std::invalid_argument("assoc total composition needs " + std::to_string(p) + " arguments");
        int s = 0;
        for (int a : args) {
            if (a < 1) throw std::invalid_argument("assoc elements have arity >= 1");
            s += a;
        }
        return s;
    }
};

inline std::string assoc_name(int n) { return "p" + std::to_string(n); }

/// The duplicial operad on planar binary trees; vertices are inputs in in-order.
struct DupOperad {
    using element = PlanarBinaryTree;
    static constexpr const char* name = "dup";

    static int arity(const PlanarBinaryTree& t) { return t.degree(); }
    static PlanarBinaryTree identity() { return PlanarBinaryTree::vertex(); }
    static std::vector<PlanarBinaryTree> basis(int n) { return planar_trees(n); }

    /// gamma((L R); s) = (gamma(L; s_L) / s_root) \ gamma(R; s_R).
    static PlanarBinaryTree compose(const PlanarBinaryTree& t, const std::vector<PlanarBinaryTree>& args) {
        if (static_cast<int>(args.size()) != t.degree())
            throw std::invalid_argument("dup total composition of " + t.code() + " needs " +
                                        std::to_string(t.degree()) + " arguments");
        std::size_t pos = 0;
        std::function<PlanarBinaryTree(const PlanarBinaryTree&)> rec = [&](const PlanarBinaryTree& u) {
            if (u.is_leaf()) return PlanarBinaryTree::leaf();
            PlanarBinaryTree l = rec(u.left());
            const PlanarBinaryTree& root = args[pos++];
            PlanarBinaryTree r = rec(u.right());
            return dup_under(dup_over(l, root), r);
        };
        return rec(t);
    }
};

/// a o_i b = gamma(a; e, ..., b, ..., e) with b in slot i (1-based).
template <class Op>
typename Op::element partial_compose(const typename Op::element& a, int i, const typename Op::element& b) {
    const int n = Op::arity(a);
    if (i < 1 || i > n)
        throw std::out_of_range("partial composition slot " + std::to_string(i) + " outside 1.." + std::to_string(n));
    std::vector<typename Op::element> args(static_cast<std::size_t>(n), Op::identity());
    args[static_cast<std::size_t>(i - 1)] = b;
    return Op::compose(a, args);
}

template <class Op>
typename Op::element total_compose(const typename Op::element& a, const std::vector<typename Op::element>& args) {
    return Op::compose(a, args);
}

/// Right pre-Lie product p <| q = sum_i q o_i p.
template <class Op>
LinComb<typename Op::element> operadic_prelie(const typename Op::element& p, const typename Op::element& q) {
    LinComb<typename Op::element> r;
    for (int i = 1; i <= Op::arity(q); ++i) r.add(partial_compose<Op>(q, i, p), 1);
    return r;
}

template <class Op>
LinComb<typename Op::element> operadic_prelie(const LinComb<typename Op::element>& a,
                                              const LinComb<typename Op::element>& b) {
    LinComb<typename Op::element> r;
    for (const auto& [p, cp] : a)
        for (const auto& [q, cq] : b) r += operadic_prelie<Op>(p, q) * (cp * cq);
    return r;
}

template <class Op>
LinComb<typename Op::element> operadic_bracket(const typename Op::element& p, const typename Op::element& q) {
    return operadic_prelie<Op>(p, q) - operadic_prelie<Op>(q, p);
}

/// Element e + sum f_p p of the group of P-expanded series, truncated at arity N.
template <class Op>
class OperadSeries {
public:
    using element = typename Op::element;

    explicit OperadSeries(int truncation, std::map<element, Scalar> coeffs = {}) : n_(truncation) {
        if (truncation < 1) throw std::invalid_argument("operad series truncation must be >= 1");
        for (auto& [p, c] : coeffs) {
            const int a = Op::arity(p);
            if (a < 2 || a > truncation)
                throw std::invalid_argument("operad series coefficient at arity " + std::to_string(a) +
                                            " outside 2.." + std::to_string(truncation));
            if (!c.is_zero()) c_.emplace(p, c);
        }
    }

    static OperadSeries identity(int N) { return OperadSeries(N); }

    int truncation() const { return n_; }

    /// Free coefficients (arity >= 2).
    const std::map<element, Scalar>& coeffs() const { return c_; }

    Scalar coeff(const element& p) const {
        if (p == Op::identity()) return 1;
        const auto it = c_.find(p);
        return it == c_.end() ? Scalar(0) : it->second;
    }

    /// Every term including the identity.
    std::vector<std::pair<element, Scalar>> terms() const {
        std::vector<std::pair<element, Scalar>> t{{Op::identity(), Scalar(1)}};
        for (const auto& kv : c_) t.push_back(kv);
        return t;
    }

    friend bool operator==(const OperadSeries&, const OperadSeries&) = default;

private:
    int n_;
    std::map<element, Scalar> c_;
};

/// (f o g)(x) = sum_p sum_{q_1..q_|p|} f_p g_{q_1} ... g_{q_|p|} x^{gamma(p; q_1..q_|p|)}.
template <class Op>
OperadSeries<Op> operad_group_compose(const OperadSeries<Op>& f, const OperadSeries<Op>& g) {
    if (f.truncation() != g.truncation()) throw std::invalid_argument("operad series truncation mismatch");
    using E = typename Op::element;
    const int N = f.truncation();
    const auto gt = g.terms();
    std::map<E, Scalar> out;
    std::vector<E> args;
    for (const auto& [p, fp] : f.terms()) {
        const int n = Op::arity(p);
        std::function<void(int, int, Scalar)> rec = [&](int i, int used, Scalar c) {
            if (i == n) {
                const E r = Op::compose(p, args);
                if (Op::arity(r) >= 2) out[r] += c;
                return;
            }
            const int slots_left = n - i - 1;  // each later slot needs arity >= 1
            for (const auto& [q, gq] : gt) {
                const int a = Op::arity(q);
                if (used + a + slots_left > N) continue;
                args.push_back(q);
                rec(i + 1, used + a, c * gq);
                args.pop_back();
            }
        };
        rec(0, 0, fp);
    }
    return OperadSeries<Op>(N, out);
}

/// Two-sided inverse by solving f o g = e one arity at a time.
template <class Op>
OperadSeries<Op> operad_group_inverse(const OperadSeries<Op>& f) {
    using E = typename Op::element;
    const int N = f.truncation();
    std::map<E, Scalar> g;
    for (int n = 2; n <= N; ++n) {
        const auto partial = operad_group_compose(f, OperadSeries<Op>(N, g));
        for (const auto& p : Op::basis(n)) {
            const Scalar c = partial.coeff(p);
            if (!c.is_zero()) g[p] = -c;
        }
    }
    return OperadSeries<Op>(N, g);
}

/// Assoc series <-> diffeo series: p_n <-> t^n.
inline TruncSeries assoc_to_series(const OperadSeries<AssocOperad>& f) {
    return TruncSeries::diffeo(f.truncation(), f.coeffs());
}

inline OperadSeries<AssocOperad> series_to_assoc(const TruncSeries& f) {
    if (f.kind() != SeriesKind::diffeo) throw std::invalid_argument("assoc series need a diffeo series");
    return OperadSeries<AssocOperad>(f.truncation(), f.free_coeffs());
}

/// Order map: sums the coefficients of all trees of each arity.
inline TruncSeries order_project(const OperadSeries<DupOperad>& f) {
    std::map<int, Scalar> m;
    for (const auto& [t, c] : f.coeffs()) m[t.degree()] += c;
    return TruncSeries::diffeo(f.truncation(), m);
}

/// Left comb p_n = gamma(p_2; p_{n-1}, e) with p_2 = Y / Y.
inline PlanarBinaryTree comb_tree(int n) {
    if (n < 1) throw std::invalid_argument("comb_tree requires n >= 1");
    const auto y = DupOperad::identity();
    if (n == 1) return y;
    const auto p2 = dup_over(y, y);
    PlanarBinaryTree p = y;
    for (int k = 2; k <= n; ++k) p = DupOperad::compose(p2, {p, y});
    return p;
}

/// Section G^dif -> G^Dup through the comb morphism.
inline OperadSeries<DupOperad> section_embed(const TruncSeries& f) {
    if (f.kind() != SeriesKind::diffeo) throw std::invalid_argument("section_embed requires a diffeo series");
    std::map<PlanarBinaryTree, Scalar> m;
    for (const auto& [n, c] : f.free_coeffs()) m.emplace(comb_tree(n), c);
    return OperadSeries<DupOperad>(f.truncation(), m);
}

// ---- Tree-expanded series under the over product ----

/// Finite combination of planar binary trees, leaf included, truncated by degree.
using TreeSeries = LinComb<PlanarBinaryTree>;

inline TreeSeries truncate(const TreeSeries& s, int N) {
    TreeSeries r;
    for (const auto& [t, c] : s)
        if (t.degree() <= N) r.add(t, c);
    return r;
}

inline TreeSeries over_product(const TreeSeries& a, const TreeSeries& b, int N) {
    TreeSeries r;
    for (const auto& [t, ct] : a)
        for (const auto& [s, cs] : b)
            if (t.degree() + s.degree() <= N) r.add(dup_over(t, s), ct * cs);
    return r;
}

inline TreeSeries under_product(const TreeSeries& a, const TreeSeries& b, int N) {
    TreeSeries r;
    for (const auto& [t, ct] : a)
        for (const auto& [s, cs] : b)
            if (t.degree() + s.degree() <= N) r.add(dup_under(t, s), ct * cs);
    return r;
}

/// Inverse of leaf - h under the over product, h without a leaf term: sum_k h^{/k}.
inline TreeSeries over_inverse_of_one_minus(const TreeSeries& h, int N) {
    for (const auto& [t, c] : h)
        if (t.is_leaf()) throw std::invalid_argument("over inverse needs h without a leaf term");
    const TreeSeries one(PlanarBinaryTree::leaf());
    TreeSeries result = one, power = one;
    for (int k = 1; k <= N; ++k) {
        power = over_product(power, h, N);
        if (power.is_zero()) break;
        result += power;
    }
    return result;
}

/// alpha_f = (leaf - Y \ f)^{-1} / Y, truncated at degree N.
inline TreeSeries alpha_series(const TreeSeries& f, int N) {
    if (N < 1) throw std::invalid_argument("alpha_series requires N >= 1");
    const TreeSeries y(PlanarBinaryTree::vertex());
    const TreeSeries h = under_product(y, truncate(f, N), N);
    return over_product(over_inverse_of_one_minus(h, N), y, N);
}

/// (leaf - Y \ f) / alpha_f - Y, which vanishes up to degree N.
inline TreeSeries alpha_residual(const TreeSeries& f, const TreeSeries& alpha, int N) {
    const TreeSeries one(PlanarBinaryTree::leaf());
    const TreeSeries y(PlanarBinaryTree::vertex());
    const TreeSeries lhs = one - under_product(y, truncate(f, N), N);
    return over_product(lhs, alpha, N) - y;
}

}  // namespace fdb
