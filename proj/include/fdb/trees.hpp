#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fdb/core/combinatorics.hpp"
#include "fdb/core/hopf_axioms.hpp"
#include "fdb/core/lincomb.hpp"
#include "fdb/core/monomial.hpp"
#include "fdb/fdb_hopf.hpp"
#include "fdb/lie_brace.hpp"

namespace fdb {

/// Non-planar rooted tree. Children are kept sorted, and the bracket string
/// ("[]" for a single vertex, "[c1 c2 ...]" written without separators) is the canonical form.
class RootedTree {
public:
    RootedTree() : code_("[]"), size_(1) {}

    explicit RootedTree(std::vector<RootedTree> children) : children_(std::move(children)) {
        std::sort(children_.begin(), children_.end());
        code_ = "[";
        size_ = 1;
        for (const auto& c : children_) {
            code_ += c.code_;
            size_ += c.size_;
        }
        code_ += "]";
    }

    static RootedTree parse(std::string_view s) {
        std::size_t pos = 0;
        auto skip = [&] {
            while (pos < s.size() && s[pos] == ' ') ++pos;
        };
        std::function<RootedTree()> rec = [&]() -> RootedTree {
            skip();
            if (pos >= s.size() || s[pos] != '[')
                throw std::invalid_argument("malformed tree '" + std::string(s) + "': expected '['");
            ++pos;
            std::vector<RootedTree> kids;
            for (;;) {
                skip();
                if (pos >= s.size()) throw std::invalid_argument("malformed tree '" + std::string(s) + "': unbalanced");
                if (s[pos] == ']') {
                    ++pos;
                    return RootedTree(std::move(kids));
                }
                kids.push_back(rec());
            }
        };
        RootedTree t = rec();
        skip();
        if (pos != s.size()) throw std::invalid_argument("malformed tree '" + std::string(s) + "': trailing input");
        return t;
    }

    static RootedTree ladder(int n) {
        if (n < 1) throw std::invalid_argument("ladder requires n >= 1");
        RootedTree t;
        for (int i = 1; i < n; ++i) t = RootedTree(std::vector<RootedTree>{t});
        return t;
    }

    const std::vector<RootedTree>& children() const { return children_; }
    const std::string& code() const { return code_; }
    int size() const { return size_; }

    friend bool operator==(const RootedTree& a, const RootedTree& b) { return a.code_ == b.code_; }
    /// Degree first, then canonical string.
    friend std::strong_ordering operator<=>(const RootedTree& a, const RootedTree& b) {
        if (auto c = a.size_ <=> b.size_; c != 0) return c;
        return a.code_ <=> b.code_;
    }

private:
    std::vector<RootedTree> children_;
    std::string code_;
    int size_;
};

inline std::string to_string(const RootedTree& t) { return t.code(); }

/// Commutative monomial in rooted trees; the empty forest is the unit 1.
class Forest {
public:
    Forest() = default;
    explicit Forest(std::vector<RootedTree> trees) : trees_(std::move(trees)) { std::sort(trees_.begin(), trees_.end()); }
    Forest(const RootedTree& t) : trees_{t} {}  // NOLINT(google-explicit-constructor)

    /// Space-separated tree strings, or "1".
    static Forest parse(std::string_view s) {
        std::vector<RootedTree> trees;
        std::size_t i = 0;
        bool saw_unit = false;
        while (i < s.size()) {
            if (s[i] == ' ') {
                ++i;
                continue;
            }
            if (s[i] == '1') {
                saw_unit = true;
                ++i;
                continue;
            }
            if (s[i] != '[') throw std::invalid_argument("malformed forest '" + std::string(s) + "'");
            int depth = 0;
            std::size_t j = i;
            for (; j < s.size(); ++j) {
                if (s[j] == '[') ++depth;
                else if (s[j] == ']') {
                    if (--depth == 0) break;
                } else if (s[j] != ' ')
                    throw std::invalid_argument("malformed forest '" + std::string(s) + "'");
            }
            if (j == s.size()) throw std::invalid_argument("malformed forest '" + std::string(s) + "': unbalanced");
            trees.push_back(RootedTree::parse(s.substr(i, j - i + 1)));
            i = j + 1;
        }
        if (saw_unit && !trees.empty()) throw std::invalid_argument("forest '1' cannot be mixed with trees");
        if (!saw_unit && trees.empty()) throw std::invalid_argument("empty forest string (write 1)");
        return Forest(std::move(trees));
    }

    const std::vector<RootedTree>& trees() const { return trees_; }
    bool is_unit() const { return trees_.empty(); }
    std::size_t components() const { return trees_.size(); }

    int degree() const {
        int d = 0;
        for (const auto& t : trees_) d += t.size();
        return d;
    }

    friend Forest operator*(const Forest& a, const Forest& b) {
        std::vector<RootedTree> t = a.trees_;
        t.insert(t.end(), b.trees_.begin(), b.trees_.end());
        return Forest(std::move(t));
    }

    friend bool operator==(const Forest&, const Forest&) = default;
    friend std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        return std::lexicographical_compare_three_way(a.trees_.begin(), a.trees_.end(), b.trees_.begin(),
                                                      b.trees_.end());
    }

private:
    std::vector<RootedTree> trees_;
};

inline std::string to_string(const Forest& f) {
    if (f.is_unit()) return "1";
    std::string s;
    for (const auto& t : f.trees()) {
        if (!s.empty()) s += ' ';
        s += t.code();
    }
    return s;
}

/// sigma(t) = |Aut t|: product over vertices of mult! sigma(c)^mult over identical child classes.
inline mpz_class symmetry_factor(const RootedTree& t) {
    mpz_class r = 1;
    const auto& ch = t.children();
    for (std::size_t i = 0; i < ch.size();) {
        std::size_t j = i;
        while (j < ch.size() && ch[j] == ch[i]) ++j;
        const mpz_class s = symmetry_factor(ch[i]);
        r *= comb::factorial(static_cast<int>(j - i));
        for (std::size_t k = i; k < j; ++k) r *= s;
        i = j;
    }
    return r;
}

inline mpz_class symmetry_factor(const Forest& f) {
    mpz_class r = 1;
    const auto& ts = f.trees();
    for (std::size_t i = 0; i < ts.size();) {
        std::size_t j = i;
        while (j < ts.size() && ts[j] == ts[i]) ++j;
        r *= comb::factorial(static_cast<int>(j - i));
        for (std::size_t k = i; k < j; ++k) r *= symmetry_factor(ts[k]);
        i = j;
    }
    return r;
}

/// B_+: graft the components of F onto a new common root.
inline RootedTree bplus(const Forest& f) { return RootedTree(f.trees()); }

/// Rooted trees with n vertices in canonical order.
inline std::vector<RootedTree> trees_of_degree(int n);

/// Forests with n vertices in canonical order (n = 0 gives the unit).
inline std::vector<Forest> forests_of_degree(int n) {
    if (n < 0) return {};
    if (n == 0) return {Forest{}};
    std::vector<RootedTree> all;
    for (int k = 1; k <= n; ++k) {
        auto t = trees_of_degree(k);
        all.insert(all.end(), t.begin(), t.end());
    }
    std::vector<Forest> out;
    std::vector<RootedTree> cur;
    std::function<void(int, std::size_t)> rec = [&](int remaining, std::size_t max_index) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (std::size_t i = 0; i <= max_index && i < all.size(); ++i) {
            if (all[i].size() > remaining) continue;
            cur.push_back(all[i]);
            rec(remaining - all[i].size(), i);
            cur.pop_back();
        }
    };
    rec(n, all.size() - 1);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<RootedTree> trees_of_degree(int n) {
    if (n < 1) return {};
    std::vector<RootedTree> out;
    for (const auto& f : forests_of_degree(n - 1)) out.push_back(bplus(f));
    std::sort(out.begin(), out.end());
    return out;
}

/// All forests of degree 0..N.
inline std::vector<Forest> forests_up_to(int N) {
    std::vector<Forest> out;
    for (int n = 0; n <= N; ++n) {
        auto f = forests_of_degree(n);
        out.insert(out.end(), f.begin(), f.end());
    }
    return out;
}

namespace trees_detail {

/// A forest flattened to parent pointers (-1 for roots).
struct FlatForest {
    std::vector<int> parent;
};

inline void flatten_into(const RootedTree& t, int parent, FlatForest& out) {
    const int me = static_cast<int>(out.parent.size());
    out.parent.push_back(parent);
    for (const auto& c : t.children()) flatten_into(c, me, out);
}

inline FlatForest flatten(const Forest& f) {
    FlatForest out;
    for (const auto& t : f.trees()) flatten_into(t, -1, out);
    return out;
}

/// Restriction of the forest to the vertex set `keep`; vertices whose parent is dropped become roots.
inline Forest restrict(const FlatForest& ff, const std::vector<bool>& keep) {
    const std::size_t n = ff.parent.size();
    std::vector<std::vector<int>> kids(n);
    std::vector<int> roots;
    for (std::size_t v = 0; v < n; ++v) {
        if (!keep[v]) continue;
        const int p = ff.parent[v];
        if (p >= 0 && keep[static_cast<std::size_t>(p)])
            kids[static_cast<std::size_t>(p)].push_back(static_cast<int>(v));
        else
            roots.push_back(static_cast<int>(v));
    }
    std::function<RootedTree(int)> build = [&](int v) {
        std::vector<RootedTree> c;
        for (int k : kids[static_cast<std::size_t>(v)]) c.push_back(build(k));
        return RootedTree(std::move(c));
    };
    std::vector<RootedTree> ts;
    for (int r : roots) ts.push_back(build(r));
    return Forest(std::move(ts));
}

/// Visits every admissible cut as (crown, trunk): the trunk contains the parent of each of its vertices.
inline void for_each_cut(const Forest& f, const std::function<void(const Forest&, const Forest&)>& visit) {
    const auto ff = flatten(f);
    const std::size_t n = ff.parent.size();
    if (n > 20) throw std::invalid_argument("forest too large for cut enumeration");
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        std::vector<bool> trunk(n), crown(n);
        bool ok = true;
        for (std::size_t v = 0; v < n; ++v) {
            trunk[v] = (mask >> v) & 1UL;
            crown[v] = !trunk[v];
        }
        for (std::size_t v = 0; v < n && ok; ++v)
            if (trunk[v] && ff.parent[v] >= 0 && !trunk[static_cast<std::size_t>(ff.parent[v])]) ok = false;
        if (ok) visit(restrict(ff, crown), restrict(ff, trunk));
    }
}

}  // namespace trees_detail

/// Connes-Kreimer Hopf algebra on forests. D(F) = sum over admissible cuts of crown (x) trunk.
class RTHopf {
public:
    using basis_type = Forest;

    RTHopf() = default;
    RTHopf(const RTHopf&) {}

    Forest unit() const { return {}; }
    Scalar counit(const Forest& f) const { return f.is_unit() ? 1 : 0; }

    Tensor2<Forest> coproduct(const Forest& f) const {
        Tensor2<Forest> r;
        trees_detail::for_each_cut(f, [&](const Forest& crown, const Forest& trunk) { r.add({crown, trunk}, 1); });
        return r;
    }

    Tensor2<Forest> coproduct(const LinComb<Forest>& v) const {
        Tensor2<Forest> r;
        for (const auto& [f, c] : v) r += coproduct(f) * c;
        return r;
    }

    /// S(t) = -sum over cuts with nonempty trunk of S(crown) trunk; multiplicative on forests.
    LinComb<Forest> antipode_tree(const RootedTree& t) const {
        {
            std::lock_guard lock(mu_);
            if (auto it = cache_.find(t.code()); it != cache_.end()) return it->second;
        }
        LinComb<Forest> s;
        for (const auto& [p, c] : coproduct(Forest(t))) {
            if (p.right.is_unit()) continue;
            s -= antipode(p.left) * LinComb<Forest>(p.right) * c;
        }
        std::lock_guard lock(mu_);
        cache_.emplace(t.code(), s);
        return s;
    }

    LinComb<Forest> antipode(const Forest& f) const {
        LinComb<Forest> r{Forest{}};
        for (const auto& t : f.trees()) r = r * antipode_tree(t);
        return r;
    }

private:
    mutable std::mutex mu_;
    mutable std::map<std::string, LinComb<Forest>> cache_;
};

/// Grafting t -> u: attach the root of t by a new edge to each vertex of u.
inline LinComb<RootedTree> graft(const RootedTree& t, const RootedTree& u) {
    LinComb<RootedTree> r;
    std::vector<RootedTree> kids = u.children();
    kids.push_back(t);
    r.add(RootedTree(kids), 1);
    const auto& ch = u.children();
    for (std::size_t i = 0; i < ch.size(); ++i) {
        for (const auto& [g, c] : graft(t, ch[i])) {
            auto k = ch;
            k[i] = g;
            r.add(RootedTree(k), c);
        }
    }
    return r;
}

inline LinComb<RootedTree> graft(const LinComb<RootedTree>& a, const LinComb<RootedTree>& b) {
    LinComb<RootedTree> r;
    for (const auto& [t, ct] : a)
        for (const auto& [u, cu] : b) r += graft(t, u) * (ct * cu);
    return r;
}

/// N'(t, u, T): admissible cuts of T with crown t and trunk u.
inline mpz_class graft_count_N(const RootedTree& t, const RootedTree& u, const RootedTree& T) {
    mpz_class n = 0;
    const Forest ft(t), fu(u);
    trees_detail::for_each_cut(Forest(T), [&](const Forest& crown, const Forest& trunk) {
        if (crown == ft && trunk == fu) ++n;
    });
    return n;
}

/// M'(t, u, T) = sigma(t) sigma(u) / sigma(T) N'(t, u, T), the coefficient of T in t -> u.
inline Scalar graft_count_M(const RootedTree& t, const RootedTree& u, const RootedTree& T) {
    return Scalar(symmetry_factor(t) * symmetry_factor(u) * graft_count_N(t, u, T), symmetry_factor(T));
}

/// Pre-Lie morphism phi: (trees, ->) -> (L_1, |>) with phi(.) = e_1, from
/// B_+(t_1..t_k) = {.; t_1..t_k} transported by the symmetric brace.
inline L1Element phi(const RootedTree& t) {
    std::vector<L1Element> args;
    for (const auto& c : t.children()) args.push_back(phi(c));
    return symmetric_brace(e(1), args);
}

inline L1Element phi(const LinComb<RootedTree>& v) {
    L1Element r;
    for (const auto& [t, c] : v) r += phi(t) * c;
    return r;
}

/// Element of the Grossman-Larson algebra in the dual basis delta_F.
using GLFunctional = LinComb<Forest>;

inline GLFunctional delta(const Forest& f, const Scalar& c = Scalar(1)) { return GLFunctional(f, c); }

/// Normalized dual element sigma(t) delta_t.
inline GLFunctional delta_tilde(const RootedTree& t) { return delta(Forest(t), Scalar(symmetry_factor(t))); }

/// (zeta * eta)(F) = (zeta (x) eta) D_RT(F), crown evaluated by zeta.
inline GLFunctional gl_product(const GLFunctional& zeta, const GLFunctional& eta) {
    std::vector<int> dz, de;
    for (const auto& [f, c] : zeta) dz.push_back(f.degree());
    for (const auto& [f, c] : eta) de.push_back(f.degree());
    std::sort(dz.begin(), dz.end());
    dz.erase(std::unique(dz.begin(), dz.end()), dz.end());
    std::sort(de.begin(), de.end());
    de.erase(std::unique(de.begin(), de.end()), de.end());
    const RTHopf h;
    GLFunctional r;
    std::vector<int> targets;
    for (int a : dz)
        for (int b : de) targets.push_back(a + b);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (int n : targets)
        for (const auto& F : forests_of_degree(n)) {
            Scalar s;
            for (const auto& [p, c] : h.coproduct(F)) {
                const Scalar a = zeta.coeff(p.left);
                if (a.is_zero()) continue;
                s += c * a * eta.coeff(p.right);
            }
            r.add(F, s);
        }
    return r;
}

/// Ordered sequence of trees t_1..t_k standing for delta_{t_1} * ... * delta_{t_k}.
struct TreeWord {
    std::vector<RootedTree> trees;
    friend bool operator==(const TreeWord&, const TreeWord&) = default;
    friend auto operator<=>(const TreeWord& a, const TreeWord& b) {
        return std::lexicographical_compare_three_way(a.trees.begin(), a.trees.end(), b.trees.begin(),
                                                      b.trees.end());
    }
};

inline std::string to_string(const TreeWord& w) {
    if (w.trees.empty()) return "1";
    std::string s;
    for (const auto& t : w.trees) {
        if (!s.empty()) s += '*';
        s += "d" + t.code();
    }
    return s;
}

/// Evaluates a product of tree duals in the delta_F basis.
inline GLFunctional gl_expand(const TreeWord& w) {
    GLFunctional r = delta(Forest{});
    for (const auto& t : w.trees) r = gl_product(r, delta(Forest(t)));
    return r;
}

/// Writes delta_F as a combination of ordered products of tree duals by inverting the
/// degree-n system relating products (one per forest, trees in canonical order) to the delta basis.
class PBWTable {
public:
    explicit PBWTable(int degree) : n_(degree) {
        if (degree < 0) throw std::invalid_argument("PBW degree must be >= 0");
        forests_ = forests_of_degree(degree);
        const std::size_t k = forests_.size();
        std::map<Forest, std::size_t> index;
        for (std::size_t i = 0; i < k; ++i) index.emplace(forests_[i], i);
        // a[i][j] = coefficient of delta_{F_j} in the product attached to F_i.
        std::vector<std::vector<Scalar>> a(k, std::vector<Scalar>(k));
        for (std::size_t i = 0; i < k; ++i) {
            words_.push_back(TreeWord{forests_[i].trees()});
            for (const auto& [f, c] : gl_expand(words_.back())) a[i][index.at(f)] = c;
        }
        // Gauss-Jordan on [A | I].
        std::vector<std::vector<Scalar>> inv(k, std::vector<Scalar>(k));
        for (std::size_t i = 0; i < k; ++i) inv[i][i] = 1;
        for (std::size_t col = 0; col < k; ++col) {
            std::size_t piv = col;
            while (piv < k && a[piv][col].is_zero()) ++piv;
            if (piv == k) throw std::domain_error("PBW system is singular");
            std::swap(a[piv], a[col]);
            std::swap(inv[piv], inv[col]);
            const Scalar d = a[col][col];
            for (std::size_t j = 0; j < k; ++j) {
                a[col][j] /= d;
                inv[col][j] /= d;
            }
            for (std::size_t r = 0; r < k; ++r) {
                if (r == col || a[r][col].is_zero()) continue;
                const Scalar f = a[r][col];
                for (std::size_t j = 0; j < k; ++j) {
                    a[r][j] -= f * a[col][j];
                    inv[r][j] -= f * inv[col][j];
                }
            }
        }
        // A^{-1} maps products to deltas: delta_j = sum_i (A^{-1})[j][i] P_i.
        for (std::size_t j = 0; j < k; ++j) {
            LinComb<TreeWord> d;
            for (std::size_t i = 0; i < k; ++i) d.add(words_[i], inv[j][i]);
            decomposition_.emplace(forests_[j], d);
        }
    }

    int degree() const { return n_; }
    const std::vector<Forest>& forests() const { return forests_; }

    const LinComb<TreeWord>& decompose(const Forest& f) const {
        const auto it = decomposition_.find(f);
        if (it == decomposition_.end()) throw std::out_of_range("forest not of the table's degree");
        return it->second;
    }

private:
    int n_;
    std::vector<Forest> forests_;
    std::vector<TreeWord> words_;
    std::map<Forest, LinComb<TreeWord>> decomposition_;
};

inline LinComb<TreeWord> pbw_decompose(const Forest& f) { return PBWTable(f.degree()).decompose(f); }

/// Image in U(L_1) of a product of tree duals, with delta_t -> phi(t)/sigma(t).
inline UEnvElement phi_of_word(const TreeWord& w) {
    UEnvElement r(Word{});
    for (const auto& t : w.trees) {
        UEnvElement g;
        for (const auto& [gen, c] : phi(t)) g.add(Word{gen.n}, c / Scalar(symmetry_factor(t)));
        r = r * g;
    }
    return r;
}

/// Embedding Psi: H_FdB -> H_RT, Psi(h) = sum over forests F of <h, Phi(delta_F)> F,
/// tabulated for every degree up to N.
class PsiEmbedding {
public:
    explicit PsiEmbedding(int max_degree) : n_(max_degree) {
        if (max_degree < 0) throw std::invalid_argument("psi degree bound must be >= 0");
        for (int d = 0; d <= max_degree; ++d) {
            const PBWTable table(d);
            for (const auto& F : table.forests()) {
                UEnvElement u;
                for (const auto& [w, c] : table.decompose(F)) u += phi_of_word(w) * c;
                const Functional fn = as_functional(u, d);
                for (const auto& m : monomials_of_degree(d)) {
                    const Scalar v = fn(m);
                    if (!v.is_zero()) image_[m].add(F, v);
                }
            }
        }
    }

    int max_degree() const { return n_; }

    LinComb<Forest> operator()(const CommMonomial& m) const {
        if (m.degree() > n_)
            throw std::out_of_range("psi: degree " + std::to_string(m.degree()) + " above table bound " +
                                    std::to_string(n_));
        const auto it = image_.find(m);
        return it == image_.end() ? LinComb<Forest>{} : it->second;
    }

    LinComb<Forest> operator()(const LinComb<CommMonomial>& v) const {
        LinComb<Forest> r;
        for (const auto& [m, c] : v) r += (*this)(m) * c;
        return r;
    }

private:
    int n_;
    std::map<CommMonomial, LinComb<Forest>> image_;
};

/// Rank of Psi restricted to degree-n monomials.
inline int psi_rank(const PsiEmbedding& psi, int n) {
    const auto monos = monomials_of_degree(n);
    const auto forests = forests_of_degree(n);
    std::vector<std::vector<Scalar>> rows;
    for (const auto& m : monos) {
        const auto img = psi(m);
        std::vector<Scalar> row;
        for (const auto& f : forests) row.push_back(img.coeff(f));
        rows.push_back(row);
    }
    int rank = 0;
    const std::size_t cols = forests.size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || rows[r][c].is_zero()) continue;
            const Scalar f = rows[r][c] / rows[static_cast<std::size_t>(rank)][c];
            for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[static_cast<std::size_t>(rank)][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace fdb
