#pragma once

// Brute-force reference computations for the tests. Everything here is written
// from first principles on plain vectors; only the Scalar type is shared.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fdb/core/scalar.hpp"

namespace oracle {

using fdb::Scalar;
using Poly = std::vector<Scalar>;  // dense, index = power of t

inline Poly mul(const Poly& a, const Poly& b, int n) {
    Poly r(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(n); ++i)
        for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(n); ++j) r[i + j] += a[i] * b[j];
    return r;
}

/// f(g(t)) mod t^{n+1} by Horner's rule on dense polynomials.
inline Poly substitute(const Poly& f, const Poly& g, int n) {
    Poly r(static_cast<std::size_t>(n) + 1);
    for (std::size_t k = f.size(); k-- > 0;) {
        r = mul(r, g, n);
        r[0] += f[k];
    }
    return r;
}

/// Compositional inverse by the fixed-point iteration g <- g - (f(g) - t).
inline Poly inverse_fixed_point(const Poly& f, int n) {
    Poly g(static_cast<std::size_t>(n) + 1);
    g[1] = 1;
    for (int it = 0; it < n; ++it) {
        const Poly fg = substitute(f, g, n);
        for (int k = 2; k <= n; ++k) g[static_cast<std::size_t>(k)] -= fg[static_cast<std::size_t>(k)];
    }
    return g;
}

/// 1/(1 + a_1 t + ...) by long division.
inline Poly reciprocal(const Poly& a, int n) {
    Poly r(static_cast<std::size_t>(n) + 1);
    r[0] = Scalar(1) / a[0];
    for (int k = 1; k <= n; ++k) {
        Scalar s;
        for (int j = 1; j <= k && j < static_cast<int>(a.size()); ++j) s += a[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(k - j)];
        r[static_cast<std::size_t>(k)] = -s / a[0];
    }
    return r;
}

inline mpz_class factorial(int n) {
    mpz_class r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// (-1)^{n-1} n^{n-1} / n!
inline Scalar lambert(int n) {
    mpz_class p = 1;
    for (int i = 1; i < n; ++i) p *= n;
    Scalar v(p, factorial(n));
    return n % 2 == 0 ? -v : v;
}

/// Every set partition of {0..n-1}, each as a block label per element (restricted growth string).
inline std::vector<std::vector<int>> set_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> go = [&](int i, int mx) {
        if (i == n) {
            out.push_back(a);
            return;
        }
        for (int v = 0; v <= mx + 1; ++v) {
            a[static_cast<std::size_t>(i)] = v;
            go(i + 1, std::max(mx, v));
        }
    };
    if (n == 0) return {{}};
    a[0] = 0;
    go(1, 0);
    return out;
}

/// B_{n,m} as a map from sorted block-size multisets to counts.
inline std::map<std::vector<int>, long> bell_polynomial(int n, int m) {
    std::map<std::vector<int>, long> r;
    for (const auto& p : set_partitions(n)) {
        const int blocks = *std::max_element(p.begin(), p.end()) + 1;
        if (blocks != m) continue;
        std::vector<int> sizes(static_cast<std::size_t>(blocks), 0);
        for (int b : p) ++sizes[static_cast<std::size_t>(b)];
        std::sort(sizes.begin(), sizes.end());
        ++r[sizes];
    }
    return r;
}

inline long bell_number(int n) { return static_cast<long>(set_partitions(n).size()); }

inline long partition_number(int n) {
    std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int s = k; s <= n; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - k)];
    return p[static_cast<std::size_t>(n)];
}

inline long catalan(int n) {
    long c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

inline mpz_class binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// ---- rooted forests as parent arrays ----

/// Vertex v has parent[v] (or -1 for a root).
struct ParentForest {
    std::vector<int> parent;
};

/// Reads bracket notation "[[][]] []" into a parent array.
inline ParentForest read_forest(const std::string& s) {
    ParentForest f;
    std::vector<int> stack;
    for (char c : s) {
        if (c == '[') {
            const int v = static_cast<int>(f.parent.size());
            f.parent.push_back(stack.empty() ? -1 : stack.back());
            stack.push_back(v);
        } else if (c == ']') {
            stack.pop_back();
        }
    }
    return f;
}

/// Canonical bracket string of the sub-forest on the kept vertices (parents outside make roots).
inline std::string canonical(const ParentForest& f, const std::vector<bool>& keep) {
    const int n = static_cast<int>(f.parent.size());
    std::function<std::string(int)> code = [&](int v) {
        std::vector<std::string> kids;
        for (int w = 0; w < n; ++w)
            if (keep[static_cast<std::size_t>(w)] && f.parent[static_cast<std::size_t>(w)] == v) kids.push_back(code(w));
        std::sort(kids.begin(), kids.end());
        std::string s = "[";
        for (const auto& k : kids) s += k;
        return s + "]";
    };
    std::vector<std::string> roots;
    for (int v = 0; v < n; ++v) {
        if (!keep[static_cast<std::size_t>(v)]) continue;
        const int p = f.parent[static_cast<std::size_t>(v)];
        if (p < 0 || !keep[static_cast<std::size_t>(p)]) roots.push_back(code(v));
    }
    if (roots.empty()) return "1";
    std::sort(roots.begin(), roots.end());
    std::string s;
    for (const auto& r : roots) s += (s.empty() ? "" : " ") + r;
    return s;
}

/// Admissible cuts by subset enumeration: trunk closed under parents, crown the rest.
/// Returns (crown, trunk) -> multiplicity.
inline std::map<std::pair<std::string, std::string>, long> cuts(const std::string& forest) {
    const ParentForest f = read_forest(forest);
    const int n = static_cast<int>(f.parent.size());
    std::map<std::pair<std::string, std::string>, long> r;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        std::vector<bool> trunk(static_cast<std::size_t>(n)), crown(static_cast<std::size_t>(n));
        bool ok = true;
        for (int v = 0; v < n; ++v) trunk[static_cast<std::size_t>(v)] = (mask >> v) & 1UL;
        for (int v = 0; v < n && ok; ++v) {
            const int p = f.parent[static_cast<std::size_t>(v)];
            if (trunk[static_cast<std::size_t>(v)] && p >= 0 && !trunk[static_cast<std::size_t>(p)]) ok = false;
        }
        if (!ok) continue;
        for (int v = 0; v < n; ++v) crown[static_cast<std::size_t>(v)] = !trunk[static_cast<std::size_t>(v)];
        ++r[{canonical(f, crown), canonical(f, trunk)}];
    }
    return r;
}

/// Automorphisms of a rooted tree counted over all vertex permutations.
inline long automorphisms(const std::string& tree) {
    const ParentForest f = read_forest(tree);
    const int n = static_cast<int>(f.parent.size());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            const int p = f.parent[static_cast<std::size_t>(v)];
            const int img = perm[static_cast<std::size_t>(v)];
            const int pimg = p < 0 ? -1 : perm[static_cast<std::size_t>(p)];
            if (f.parent[static_cast<std::size_t>(img)] != pimg) ok = false;
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// ---- posets as relation matrices ----

using Relation = std::vector<std::vector<bool>>;  // r[i][j] means i <= j

/// Isomorphism of finite posets by trying all bijections.
inline bool isomorphic(const Relation& a, const Relation& b) {
    const std::size_t n = a.size();
    if (b.size() != n) return false;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j)
                if (a[i][j] != b[perm[i]][perm[j]]) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Subsets of an n-set ordered by inclusion.
inline Relation boolean_relation(int n) {
    const std::size_t k = 1UL << n;
    Relation r(k, std::vector<bool>(k));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) r[a][b] = (a & ~b) == 0;
    return r;
}

// ---- vector fields on polynomials ----

/// e_n = t^{n+1} d/dt applied to a dense polynomial.
inline Poly apply_e(int n, const Poly& p) {
    Poly r(p.size() + static_cast<std::size_t>(n));
    for (std::size_t k = 1; k < p.size(); ++k) r[k + static_cast<std::size_t>(n)] += p[k] * Scalar(static_cast<long>(k));
    return r;
}

}  // namespace oracle
