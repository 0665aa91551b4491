#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdb/core/combinatorics.hpp"
#include "fdb/core/lincomb.hpp"
#include "fdb/trees.hpp"

namespace fdb {

/// Finite poset on 0..k-1 stored as its full order relation.
class Poset {
public:
    Poset() : Poset(0) {}
    explicit Poset(int k) : k_(k), le_(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0) {
        if (k < 0) throw std::invalid_argument("poset size must be >= 0");
        for (int i = 0; i < k; ++i) set(i, i);
    }

    /// Builds the order generated by the given relations (reflexive-transitive closure);
    /// throws if the closure is not antisymmetric.
    static Poset from_relations(int k, const std::vector<std::pair<int, int>>& less) {
        Poset p(k);
        for (const auto& [a, b] : less) {
            p.check_index(a);
            p.check_index(b);
            p.set(a, b);
        }
        for (int m = 0; m < k; ++m)
            for (int i = 0; i < k; ++i)
                if (p.le(i, m))
                    for (int j = 0; j < k; ++j)
                        if (p.le(m, j)) p.set(i, j);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (p.le(i, j) && p.le(j, i)) throw std::invalid_argument("relations contain a cycle");
        return p;
    }

    /// Poset whose order is the given predicate (assumed to be a partial order).
    static Poset from_predicate(int k, const std::function<bool(int, int)>& le) {
        Poset p(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (le(i, j)) p.set(i, j);
        return p;
    }

    int size() const { return k_; }
    bool le(int i, int j) const { return le_[idx(i, j)] != 0; }
    bool lt(int i, int j) const { return i != j && le(i, j); }

    /// Unique minimum / maximum, if any.
    std::optional<int> bottom() const {
        for (int i = 0; i < k_; ++i) {
            bool ok = true;
            for (int j = 0; j < k_ && ok; ++j) ok = le(i, j);
            if (ok) return i;
        }
        return std::nullopt;
    }
    std::optional<int> top() const {
        for (int i = 0; i < k_; ++i) {
            bool ok = true;
            for (int j = 0; j < k_ && ok; ++j) ok = le(j, i);
            if (ok) return i;
        }
        return std::nullopt;
    }

    /// Covering pairs (a, b): a < b with nothing strictly between.
    std::vector<std::pair<int, int>> covers() const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < k_; ++a)
            for (int b = 0; b < k_; ++b) {
                if (!lt(a, b)) continue;
                bool cover = true;
                for (int c = 0; c < k_ && cover; ++c)
                    if (lt(a, c) && lt(c, b)) cover = false;
                if (cover) out.emplace_back(a, b);
            }
        return out;
    }

    /// Relation matrix rows as a '0'/'1' string.
    std::string matrix_string() const {
        std::string s(le_.size(), '0');
        for (std::size_t i = 0; i < le_.size(); ++i)
            if (le_[i]) s[i] = '1';
        return s;
    }

    friend bool operator==(const Poset&, const Poset&) = default;

    void check_index(int i) const {
        if (i < 0 || i >= k_) throw std::out_of_range("poset element " + std::to_string(i) + " out of range");
    }

private:
    void set(int i, int j) { le_[idx(i, j)] = 1; }
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(j);
    }

    int k_;
    std::vector<char> le_;
};

/// The interval [x, y] = {z : x <= z <= y}, elements kept in increasing index order.
inline Poset interval(const Poset& p, int x, int y) {
    p.check_index(x);
    p.check_index(y);
    if (!p.le(x, y)) throw std::invalid_argument("interval requires x <= y");
    std::vector<int> elems;
    for (int z = 0; z < p.size(); ++z)
        if (p.le(x, z) && p.le(z, y)) elems.push_back(z);
    const int k = static_cast<int>(elems.size());
    return Poset::from_predicate(k, [&](int a, int b) { return p.le(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]); });
}

/// Induced subposet on a subset of elements (kept in the given order).
inline Poset subposet(const Poset& p, const std::vector<int>& elems) {
    const int k = static_cast<int>(elems.size());
    return Poset::from_predicate(k, [&](int a, int b) { return p.le(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]); });
}

/// Product order on P x Q; element (a, b) has index a * |Q| + b.
inline Poset direct_product(const Poset& p, const Poset& q) {
    const int kq = q.size();
    return Poset::from_predicate(p.size() * kq, [&](int u, int v) {
        return p.le(u / kq, v / kq) && q.le(u % kq, v % kq);
    });
}

inline Poset chain(int k) {
    return Poset::from_predicate(k, [](int a, int b) { return a <= b; });
}

namespace incidence_detail {

/// Canonical labeling by colour refinement plus individualisation, with pruning by
/// automorphisms discovered at equal leaves. The code of a labeling is its matrix string;
/// the canonical code is the least code over the search tree.
class Canonizer {
public:
    explicit Canonizer(const Poset& p) : p_(p), k_(p.size()) {
        down_.resize(static_cast<std::size_t>(k_));
        up_.resize(static_cast<std::size_t>(k_));
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < k_; ++j)
                if (p.lt(i, j)) {
                    up_[static_cast<std::size_t>(i)].push_back(j);
                    down_[static_cast<std::size_t>(j)].push_back(i);
                }
    }

    /// Returns (canonical matrix string, permutation perm with perm[old] = new position).
    std::pair<std::string, std::vector<int>> run() {
        if (k_ == 0) return {"", {}};
        std::vector<int> colors(static_cast<std::size_t>(k_), 0);
        std::vector<int> prefix;
        search(colors, prefix);
        return {best_code_, best_perm_};
    }

private:
    /// Refines until stable; colours are renumbered 0..c-1 by sorted signature.
    void refine(std::vector<int>& colors) const {
        int count = static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
        for (;;) {
            std::vector<std::vector<int>> sig(static_cast<std::size_t>(k_));
            for (int v = 0; v < k_; ++v) {
                auto& s = sig[static_cast<std::size_t>(v)];
                s.push_back(colors[static_cast<std::size_t>(v)]);
                std::vector<int> d, u;
                for (int w : down_[static_cast<std::size_t>(v)]) d.push_back(colors[static_cast<std::size_t>(w)]);
                for (int w : up_[static_cast<std::size_t>(v)]) u.push_back(colors[static_cast<std::size_t>(w)]);
                std::sort(d.begin(), d.end());
                std::sort(u.begin(), u.end());
                s.push_back(-1);
                s.insert(s.end(), d.begin(), d.end());
                s.push_back(-2);
                s.insert(s.end(), u.begin(), u.end());
            }
            std::vector<std::vector<int>> sorted = sig;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            for (int v = 0; v < k_; ++v)
                colors[static_cast<std::size_t>(v)] = static_cast<int>(
                    std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<std::size_t>(v)]) - sorted.begin());
            const int next = static_cast<int>(sorted.size());
            if (next == count) return;
            count = next;
        }
    }

    std::string code_of(const std::vector<int>& perm) const {
        std::vector<int> inv(static_cast<std::size_t>(k_));
        for (int v = 0; v < k_; ++v) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = v;
        std::string s(static_cast<std::size_t>(k_) * static_cast<std::size_t>(k_), '0');
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < k_; ++j)
                if (p_.le(inv[static_cast<std::size_t>(i)], inv[static_cast<std::size_t>(j)]))
                    s[static_cast<std::size_t>(i) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(j)] = '1';
        return s;
    }

    void record_automorphism(const std::vector<int>& a, const std::vector<int>& b) {
        // gamma maps the vertex at position q in labeling a to the vertex at position q in labeling b.
        std::vector<int> inv_b(static_cast<std::size_t>(k_));
        for (int v = 0; v < k_; ++v) inv_b[static_cast<std::size_t>(b[static_cast<std::size_t>(v)])] = v;
        std::vector<int> gamma(static_cast<std::size_t>(k_));
        bool identity = true;
        for (int v = 0; v < k_; ++v) {
            gamma[static_cast<std::size_t>(v)] = inv_b[static_cast<std::size_t>(a[static_cast<std::size_t>(v)])];
            if (gamma[static_cast<std::size_t>(v)] != v) identity = false;
        }
        if (!identity) autos_.push_back(std::move(gamma));
    }

    /// Orbit representative of v under automorphisms fixing every vertex of `prefix`.
    int orbit_root(int v, const std::vector<int>& prefix) const {
        std::vector<int> parent(static_cast<std::size_t>(k_));
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            return x;
        };
        for (const auto& g : autos_) {
            bool fixes = true;
            for (int f : prefix)
                if (g[static_cast<std::size_t>(f)] != f) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int x = 0; x < k_; ++x) {
                const int a = find(x), b = find(g[static_cast<std::size_t>(x)]);
                if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
            }
        }
        return find(v);
    }

    void search(std::vector<int> colors, std::vector<int>& prefix) {
        refine(colors);
        std::vector<int> cell_size(static_cast<std::size_t>(k_), 0);
        for (int c : colors) ++cell_size[static_cast<std::size_t>(c)];
        int target = -1;
        for (int c = 0; c < k_; ++c)
            if (cell_size[static_cast<std::size_t>(c)] > 1) {
                target = c;
                break;
            }
        if (target < 0) {
            const std::string code = code_of(colors);
            if (first_perm_.empty()) {
                first_perm_ = colors;
                first_code_ = code;
            } else if (code == first_code_) {
                record_automorphism(first_perm_, colors);
            }
            if (best_perm_.empty() || code < best_code_) {
                best_code_ = code;
                best_perm_ = colors;
            } else if (code == best_code_) {
                record_automorphism(best_perm_, colors);
            }
            return;
        }
        std::vector<int> explored;
        for (int v = 0; v < k_; ++v) {
            if (colors[static_cast<std::size_t>(v)] != target) continue;
            const int root = orbit_root(v, prefix);
            bool skip = false;
            for (int w : explored)
                if (orbit_root(w, prefix) == root) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            explored.push_back(v);
            std::vector<int> next(colors.size());
            for (int u = 0; u < k_; ++u) next[static_cast<std::size_t>(u)] = 2 * colors[static_cast<std::size_t>(u)] + 1;
            next[static_cast<std::size_t>(v)] = 2 * target;
            prefix.push_back(v);
            search(next, prefix);
            prefix.pop_back();
        }
    }

    const Poset& p_;
    int k_;
    std::vector<std::vector<int>> down_, up_;
    std::vector<std::vector<int>> autos_;
    std::vector<int> first_perm_, best_perm_;
    std::string first_code_, best_code_;
};

}  // namespace incidence_detail

/// Isomorphism class of a finite poset, keyed by its canonical relation-matrix string.
class PosetClass {
public:
    PosetClass() = default;

    explicit PosetClass(const Poset& p) : k_(p.size()) {
        code_ = incidence_detail::Canonizer(p).run().first;
    }

    int size() const { return k_; }
    const std::string& code() const { return code_; }

    /// The canonical representative.
    Poset representative() const {
        return Poset::from_predicate(k_, [&](int a, int b) {
            return code_[static_cast<std::size_t>(a) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(b)] == '1';
        });
    }

    friend bool operator==(const PosetClass&, const PosetClass&) = default;
    friend std::strong_ordering operator<=>(const PosetClass& a, const PosetClass& b) {
        if (auto c = a.k_ <=> b.k_; c != 0) return c;
        return a.code_ <=> b.code_;
    }

private:
    int k_ = 0;
    std::string code_;
};

/// "P<size>:<hex digest of the matrix string>" style short label for printing.
inline std::string to_string(const PosetClass& c) {
    // FNV-1a over the canonical string; the full string stays the identity.
    std::uint64_t h = 1469598103934665603ULL;
    for (char ch : c.code()) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return "P" + std::to_string(c.size()) + ":" + std::string(buf).substr(0, 8);
}

inline PosetClass poset_class(const Poset& p) { return PosetClass(p); }

inline bool isomorphic(const Poset& p, const Poset& q) {
    return p.size() == q.size() && poset_class(p) == poset_class(q);
}

/// Commutative monomial in indecomposable classes; the empty product is the singleton class.
struct IncMonomial {
    std::vector<PosetClass> factors;  // sorted, never the singleton class

    IncMonomial() = default;
    explicit IncMonomial(std::vector<PosetClass> f) : factors(std::move(f)) {
        std::erase_if(factors, [](const PosetClass& c) { return c.size() <= 1; });
        std::sort(factors.begin(), factors.end());
    }

    bool is_unit() const { return factors.empty(); }

    friend IncMonomial operator*(const IncMonomial& a, const IncMonomial& b) {
        std::vector<PosetClass> f = a.factors;
        f.insert(f.end(), b.factors.begin(), b.factors.end());
        return IncMonomial(std::move(f));
    }

    friend bool operator==(const IncMonomial&, const IncMonomial&) = default;
    friend std::strong_ordering operator<=>(const IncMonomial& a, const IncMonomial& b) {
        return std::lexicographical_compare_three_way(a.factors.begin(), a.factors.end(), b.factors.begin(),
                                                      b.factors.end());
    }
};

inline std::string to_string(const IncMonomial& m) {
    if (m.is_unit()) return "1";
    std::string s;
    for (const auto& c : m.factors) {
        if (!s.empty()) s += ' ';
        s += to_string(c);
    }
    return s;
}

namespace incidence_detail {

inline std::optional<int> join(const Poset& p, int a, int b) {
    std::vector<int> common;
    for (int z = 0; z < p.size(); ++z)
        if (p.le(a, z) && p.le(b, z)) common.push_back(z);
    for (int m : common) {
        bool least = true;
        for (int z : common)
            if (!p.le(m, z)) {
                least = false;
                break;
            }
        if (least) return m;
    }
    return std::nullopt;
}

/// If P = [0,a] x [0,b] via (u, v) -> u v v, returns the two factors.
inline std::optional<std::pair<Poset, Poset>> split(const Poset& p, int bottom, int a, int b) {
    std::vector<int> da, db;
    for (int z = 0; z < p.size(); ++z) {
        if (p.le(bottom, z) && p.le(z, a)) da.push_back(z);
        if (p.le(bottom, z) && p.le(z, b)) db.push_back(z);
    }
    if (da.size() * db.size() != static_cast<std::size_t>(p.size())) return std::nullopt;
    std::vector<int> image;
    image.reserve(static_cast<std::size_t>(p.size()));
    std::vector<char> hit(static_cast<std::size_t>(p.size()), 0);
    for (int u : da)
        for (int v : db) {
            const auto j = join(p, u, v);
            if (!j || hit[static_cast<std::size_t>(*j)]) return std::nullopt;
            hit[static_cast<std::size_t>(*j)] = 1;
            image.push_back(*j);
        }
    const std::size_t nb = db.size();
    for (std::size_t x = 0; x < image.size(); ++x)
        for (std::size_t y = 0; y < image.size(); ++y) {
            const bool prod = p.le(da[x / nb], da[y / nb]) && p.le(db[x % nb], db[y % nb]);
            if (prod != p.le(image[x], image[y])) return std::nullopt;
        }
    return std::make_pair(subposet(p, da), subposet(p, db));
}

inline void factor_into(const Poset& p, std::vector<PosetClass>& out) {
    if (p.size() <= 1) return;
    const auto bot = p.bottom();
    const auto tp = p.top();
    if (!bot || !tp) throw std::invalid_argument("factorization requires a bounded poset");
    std::vector<int> size_below(static_cast<std::size_t>(p.size()), 0);
    for (int z = 0; z < p.size(); ++z)
        for (int w = 0; w < p.size(); ++w)
            if (p.le(w, z)) ++size_below[static_cast<std::size_t>(z)];
    // Smallest candidate first so the first factor found is indecomposable.
    std::vector<int> order(static_cast<std::size_t>(p.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return size_below[static_cast<std::size_t>(x)] < size_below[static_cast<std::size_t>(y)]; });
    for (int a : order) {
        const int sa = size_below[static_cast<std::size_t>(a)];
        if (sa < 2 || sa >= p.size() || p.size() % sa != 0) continue;
        for (int b = 0; b < p.size(); ++b) {
            if (size_below[static_cast<std::size_t>(b)] * sa != p.size()) continue;
            if (auto parts = split(p, *bot, a, b)) {
                factor_into(parts->first, out);
                factor_into(parts->second, out);
                return;
            }
        }
    }
    out.push_back(PosetClass(p));
}

}  // namespace incidence_detail

/// Factorization of a bounded poset into indecomposable classes.
inline IncMonomial factor(const Poset& p) {
    std::vector<PosetClass> f;
    incidence_detail::factor_into(p, f);
    return IncMonomial(std::move(f));
}

/// Standard reduced incidence Hopf algebra: D[P] = sum_x [0,x] (x) [x,1], each interval factored.
class IncidenceHopf {
public:
    using basis_type = IncMonomial;

    IncidenceHopf() = default;
    IncidenceHopf(const IncidenceHopf&) {}

    IncMonomial unit() const { return {}; }
    Scalar counit(const IncMonomial& m) const { return m.is_unit() ? 1 : 0; }

    Tensor2<IncMonomial> coproduct_poset(const Poset& p) const {
        const auto bot = p.bottom();
        const auto tp = p.top();
        if (!bot || !tp) throw std::invalid_argument("incidence coproduct requires a poset with 0 and 1");
        Tensor2<IncMonomial> r;
        for (int x = 0; x < p.size(); ++x)
            r.add({factor(interval(p, *bot, x)), factor(interval(p, x, *tp))}, 1);
        return r;
    }

    Tensor2<IncMonomial> coproduct_class(const PosetClass& c) const {
        {
            std::lock_guard lock(mu_);
            if (auto it = cache_.find(c); it != cache_.end()) return it->second;
        }
        auto r = coproduct_poset(c.representative());
        std::lock_guard lock(mu_);
        cache_.emplace(c, r);
        return r;
    }

    Tensor2<IncMonomial> coproduct(const IncMonomial& m) const {
        Tensor2<IncMonomial> r = tensor(IncMonomial{}, IncMonomial{});
        for (const auto& c : m.factors) r = r * coproduct_class(c);
        return r;
    }

    /// Recursive antipode S(P) = -sum over terms with a nontrivial right factor of S(left) right.
    LinComb<IncMonomial> antipode_class(const PosetClass& c) const {
        {
            std::lock_guard lock(mu_);
            if (auto it = anti_cache_.find(c); it != anti_cache_.end()) return it->second;
        }
        LinComb<IncMonomial> s;
        for (const auto& [p, coef] : coproduct_class(c)) {
            if (p.right.is_unit()) continue;
            s -= antipode(p.left) * LinComb<IncMonomial>(p.right) * coef;
        }
        std::lock_guard lock(mu_);
        anti_cache_.emplace(c, s);
        return s;
    }

    LinComb<IncMonomial> antipode(const IncMonomial& m) const {
        LinComb<IncMonomial> r{IncMonomial{}};
        for (const auto& c : m.factors) r = r * antipode_class(c);
        return r;
    }

private:
    mutable std::mutex mu_;
    mutable std::map<PosetClass, Tensor2<IncMonomial>> cache_;
    mutable std::map<PosetClass, LinComb<IncMonomial>> anti_cache_;
};

// ---- Families ----

/// Subsets of {1..n} ordered by inclusion (element index = bitmask).
inline Poset boolean_lattice(int n) {
    if (n < 0 || n > 10) throw std::invalid_argument("boolean lattice supports 0 <= n <= 10");
    return Poset::from_predicate(1 << n, [](int a, int b) { return (a & b) == a; });
}

/// Set partitions of {1..n} as restricted growth strings, in enumeration order.
inline std::vector<std::vector<int>> set_partitions_rgs(int n) {
    std::vector<std::vector<int>> out;
    comb::for_each_set_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
        std::vector<int> label(static_cast<std::size_t>(n));
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (int i : blocks[b]) label[static_cast<std::size_t>(i)] = static_cast<int>(b);
        out.push_back(label);
    });
    return out;
}

/// Partition lattice SP(n) ordered by refinement (finer below).
inline Poset partition_lattice(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("partition lattice supports 1 <= n <= 7");
    const auto parts = set_partitions_rgs(n);
    return Poset::from_predicate(static_cast<int>(parts.size()), [&](int a, int b) {
        // a refines b when equal labels in a imply equal labels in b
        const auto& pa = parts[static_cast<std::size_t>(a)];
        const auto& pb = parts[static_cast<std::size_t>(b)];
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (pa[static_cast<std::size_t>(i)] == pa[static_cast<std::size_t>(j)] &&
                    pb[static_cast<std::size_t>(i)] != pb[static_cast<std::size_t>(j)])
                    return false;
        return true;
    });
}

/// Vertex poset of a forest: ancestors below descendants, roots minimal.
inline Poset forest_vertex_poset(const Forest& f) {
    std::vector<int> parent;
    std::function<void(const RootedTree&, int)> walk = [&](const RootedTree& t, int par) {
        const int me = static_cast<int>(parent.size());
        parent.push_back(par);
        for (const auto& c : t.children()) walk(c, me);
    };
    for (const auto& t : f.trees()) walk(t, -1);
    std::vector<std::pair<int, int>> rel;
    for (std::size_t v = 0; v < parent.size(); ++v)
        if (parent[v] >= 0) rel.emplace_back(parent[v], static_cast<int>(v));
    return Poset::from_relations(static_cast<int>(parent.size()), rel);
}

/// Lattice J(P) of initial segments (down-closed subsets) ordered by inclusion.
inline Poset initial_segments(const Poset& p) {
    const int k = p.size();
    if (k > 20) throw std::invalid_argument("initial_segments supports at most 20 elements");
    std::vector<unsigned long> ideals;
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
        bool ok = true;
        for (int v = 0; v < k && ok; ++v)
            if ((mask >> v) & 1UL)
                for (int w = 0; w < k && ok; ++w)
                    if (p.le(w, v) && !((mask >> w) & 1UL)) ok = false;
        if (ok) ideals.push_back(mask);
    }
    return Poset::from_predicate(static_cast<int>(ideals.size()), [&](int a, int b) {
        return (ideals[static_cast<std::size_t>(a)] & ideals[static_cast<std::size_t>(b)]) == ideals[static_cast<std::size_t>(a)];
    });
}

inline Poset forest_ideals(const Forest& f) { return initial_segments(forest_vertex_poset(f)); }

/// H_RT forest -> incidence monomial: each tree t goes to the class of J(t).
inline IncMonomial forest_to_incidence(const Forest& f) {
    std::vector<PosetClass> c;
    for (const auto& t : f.trees()) c.push_back(PosetClass(forest_ideals(Forest(t))));
    return IncMonomial(std::move(c));
}

/// Family member X_j = class of SP(j+1), the incidence generator matched with (j+1)! x_j.
inline PosetClass partition_class(int j) { return PosetClass(partition_lattice(j + 1)); }

/// Boolean generator B_1 (the 2-chain).
inline PosetClass boolean_generator() { return PosetClass(chain(2)); }

}  // namespace fdb
