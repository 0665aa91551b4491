#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdb/core/combinatorics.hpp"
#include "fdb/core/lincomb.hpp"
#include "fdb/core/monomial.hpp"
#include "fdb/fdb_hopf.hpp"

namespace fdb {

enum class NCAlgebra { inv_nc, fdb_nc };

inline std::string to_string(NCAlgebra a) { return a == NCAlgebra::inv_nc ? "invnc" : "fdbnc"; }

/// Words of degree n: one per composition of n.
inline std::vector<Word> words_of_degree(int n) {
    if (n == 0) return {Word{}};
    std::vector<Word> out;
    comb::for_each_composition(n, [&](const std::vector<int>& c) { out.emplace_back(c); });
    return out;
}

inline std::vector<Word> words_up_to(int N) {
    std::vector<Word> out;
    for (int n = 0; n <= N; ++n) {
        auto w = words_of_degree(n);
        out.insert(out.end(), w.begin(), w.end());
    }
    return out;
}

/// Free associative algebra K<x_1, x_2, ...> with the lifted coproducts
///   inv_nc: D(x_n) = sum_p x_p (x) x_{n-p}
///   fdb_nc: D(x_n) = sum_m (sum_{k_0+...+k_m = n-m} x_{k_0}...x_{k_m}) (x) x_m
/// where x_0 = 1, extended multiplicatively over concatenation.
class NCHopf {
public:
    using basis_type = Word;

    explicit NCHopf(NCAlgebra a) : alg_(a) {}
    NCHopf(const NCHopf& o) : alg_(o.alg_) {}

    NCAlgebra algebra() const { return alg_; }
    Word unit() const { return {}; }
    Scalar counit(const Word& w) const { return w.empty() ? 1 : 0; }

    Tensor2<Word> coproduct_generator(int n) const {
        if (n < 1) throw std::invalid_argument("generator index must be >= 1");
        auto x = [](int k) { return k == 0 ? Word{} : Word{k}; };
        Tensor2<Word> r;
        if (alg_ == NCAlgebra::inv_nc) {
            for (int p = 0; p <= n; ++p) r.add({x(p), x(n - p)}, 1);
            return r;
        }
        for (int m = 0; m <= n; ++m)
            comb::for_each_weak_composition(n - m, m + 1, [&](const std::vector<int>& k) {
                std::vector<int> letters;
                for (int v : k)
                    if (v > 0) letters.push_back(v);
                r.add({Word(letters), x(m)}, 1);
            });
        return r;
    }

    Tensor2<Word> coproduct(const Word& w) const {
        Tensor2<Word> r = tensor(Word{}, Word{});
        for (int n : w.letters) r = r * coproduct_generator(n);
        return r;
    }

    Tensor2<Word> coproduct(const LinComb<Word>& v) const {
        Tensor2<Word> r;
        for (const auto& [w, c] : v) r += coproduct(w) * c;
        return r;
    }

    /// S(x_n) from m(S (x) id)D = 0, i.e. S(x) = -sum over terms with nonempty right factor of S(x')x''.
    LinComb<Word> antipode_generator(int n) const {
        {
            std::lock_guard lock(mu_);
            if (auto it = cache_.find(n); it != cache_.end()) return it->second;
        }
        LinComb<Word> s;
        for (const auto& [p, c] : coproduct_generator(n)) {
            if (p.right.empty()) continue;
            s -= antipode(p.left) * LinComb<Word>(p.right) * c;
        }
        std::lock_guard lock(mu_);
        cache_.emplace(n, s);
        return s;
    }

    /// S(x_n) from m(id (x) S)D = 0; must agree with antipode_generator.
    LinComb<Word> antipode_generator_right(int n) const {
        LinComb<Word> s;
        for (const auto& [p, c] : coproduct_generator(n)) {
            if (p.left.empty()) continue;
            s -= LinComb<Word>(p.left) * antipode_right(p.right) * c;
        }
        return s;
    }

    /// Antimorphism: S(w_1 ... w_k) = S(w_k) ... S(w_1).
    LinComb<Word> antipode(const Word& w) const {
        LinComb<Word> r{Word{}};
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r = r * antipode_generator(*it);
        return r;
    }

    LinComb<Word> antipode_right(const Word& w) const {
        LinComb<Word> r{Word{}};
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r = r * antipode_generator_right(*it);
        return r;
    }

    LinComb<Word> antipode(const LinComb<Word>& v) const {
        return apply_linear(v, [&](const Word& w) { return antipode(w); });
    }

private:
    NCAlgebra alg_;
    mutable std::mutex mu_;
    mutable std::map<int, LinComb<Word>> cache_;
};

/// lambda(n_1..n_k) = sum over m_1+...+m_k = k with m_1+...+m_h >= h for h < k
/// of C(n_1+1, m_1) ... C(n_k+1, m_k).
inline mpz_class nc_lambda(const std::vector<int>& ns) {
    const int k = static_cast<int>(ns.size());
    if (k == 0) return 1;
    mpz_class total = 0;
    std::vector<int> m(static_cast<std::size_t>(k));
    std::function<void(int, int, mpz_class)> rec = [&](int h, int partial, mpz_class prod) {
        if (h == k) {
            if (partial == k) total += prod;
            return;
        }
        for (int v = 0; partial + v <= k; ++v) {
            const int np = partial + v;
            if (h + 1 < k && np < h + 1) continue;
            const mpz_class b = comb::binomial(ns[static_cast<std::size_t>(h)] + 1, v);
            if (b == 0) continue;
            rec(h + 1, np, prod * b);
        }
    };
    rec(0, 0, mpz_class(1));
    return total;
}

/// Which k indices of x_{n_1} ... x_{n_{k+1}} carry the lambda coefficient.
enum class LambdaAttach {
    first,          ///< lambda(n_1, ..., n_k), the literal reading
    last,           ///< lambda(n_2, ..., n_{k+1})
    last_reversed,  ///< lambda(n_{k+1}, ..., n_2)
};

/// Closed-form antipode of H_FdB^nc:
///   S(x_n) = -x_n - sum_{k=1}^{n-1} (-1)^k sum_{n_1+...+n_{k+1}=n} lambda(...) x_{n_1}...x_{n_{k+1}}.
inline LinComb<Word> antipode_nc_closed(int n, LambdaAttach attach = LambdaAttach::last_reversed) {
    if (n < 1) throw std::invalid_argument("antipode_nc_closed requires n >= 1");
    LinComb<Word> r(Word{n}, Scalar(-1));
    comb::for_each_composition(n, [&](const std::vector<int>& parts) {
        const int k = static_cast<int>(parts.size()) - 1;
        if (k < 1) return;
        std::vector<int> args;
        switch (attach) {
            case LambdaAttach::first: args.assign(parts.begin(), parts.end() - 1); break;
            case LambdaAttach::last: args.assign(parts.begin() + 1, parts.end()); break;
            case LambdaAttach::last_reversed: args.assign(parts.rbegin(), parts.rend() - 1); break;
        }
        const Scalar sign = (k % 2 == 0) ? Scalar(-1) : Scalar(1);
        r.add(Word(parts), sign * Scalar(nc_lambda(args)));
    });
    return r;
}

/// pi: sorts the letters of each word into a commutative monomial.
inline LinComb<CommMonomial> abelianize(const LinComb<Word>& v) {
    LinComb<CommMonomial> r;
    for (const auto& [w, c] : v) r.add(CommMonomial::from_indices(w.letters), c);
    return r;
}

inline Tensor2<CommMonomial> abelianize(const Tensor2<Word>& t) {
    Tensor2<CommMonomial> r;
    for (const auto& [p, c] : t)
        r.add({CommMonomial::from_indices(p.left.letters), CommMonomial::from_indices(p.right.letters)}, c);
    return r;
}

/// Shuffle product u ш v.
inline LinComb<Word> shuffle(const Word& u, const Word& v) {
    LinComb<Word> r;
    std::vector<int> cur;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
        if (i == u.size() && j == v.size()) {
            r.add(Word(cur), 1);
            return;
        }
        if (i < u.size()) {
            cur.push_back(u.letters[i]);
            rec(i + 1, j);
            cur.pop_back();
        }
        if (j < v.size()) {
            cur.push_back(v.letters[j]);
            rec(i, j + 1);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return r;
}

inline LinComb<Word> shuffle(const LinComb<Word>& a, const LinComb<Word>& b) {
    LinComb<Word> r;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) r += shuffle(u, v) * (cu * cv);
    return r;
}

/// Deconcatenation: sum over split points of prefix (x) suffix.
inline Tensor2<Word> deconcat(const Word& w) {
    Tensor2<Word> r;
    for (std::size_t i = 0; i <= w.size(); ++i)
        r.add({Word(std::vector<int>(w.letters.begin(), w.letters.begin() + static_cast<long>(i))),
               Word(std::vector<int>(w.letters.begin() + static_cast<long>(i), w.letters.end()))},
              1);
    return r;
}

/// Unshuffle: sum over subsets S of positions of w|_S (x) w|_{complement}.
inline Tensor2<Word> unshuffle(const Word& w) {
    const std::size_t n = w.size();
    if (n > 24) throw std::invalid_argument("word too long for unshuffle");
    Tensor2<Word> r;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        std::vector<int> a, b;
        for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1UL ? a : b).push_back(w.letters[i]);
        r.add({Word(a), Word(b)}, 1);
    }
    return r;
}

/// Canonical pairing <u, w> = [u = w] extended bilinearly.
template <class B>
Scalar word_pairing(const LinComb<B>& a, const LinComb<B>& b) {
    Scalar s;
    for (const auto& [u, c] : a) s += c * b.coeff(u);
    return s;
}

// ---- Free product H * H = K<x_1, y_1, x_2, y_2, ...> ----

using FreeProductElement = LinComb<TaggedWord>;

inline TaggedWord tagged(char tag, const Word& w) {
    TaggedWord t;
    for (int n : w.letters) t.letters.push_back({tag, n});
    return t;
}

/// D*(x_n) = sum_p x_p y_{n-p} with x_0 = y_0 = 1, letters tagged (left, right).
inline FreeProductElement cogroup_coproduct_generator(int n, char left = 'x', char right = 'y') {
    if (n < 1) throw std::invalid_argument("generator index must be >= 1");
    FreeProductElement r;
    for (int p = 0; p <= n; ++p) {
        TaggedWord w;
        if (p > 0) w.letters.push_back({left, p});
        if (n - p > 0) w.letters.push_back({right, n - p});
        r.add(w, 1);
    }
    return r;
}

/// D* extended as an algebra morphism K<x> -> K<x> * K<x>.
inline FreeProductElement cogroup_coproduct_inv(const Word& w, char left = 'x', char right = 'y') {
    FreeProductElement r{TaggedWord{}};
    for (int n : w.letters) r = r * cogroup_coproduct_generator(n, left, right);
    return r;
}

/// Applies per-tag algebra morphisms given on letters.
template <class F>
FreeProductElement map_letters(const FreeProductElement& v, F&& on_letter) {
    FreeProductElement r;
    for (const auto& [w, c] : v) {
        FreeProductElement term{TaggedWord{}};
        for (const auto& l : w.letters) term = term * on_letter(l);
        r += term * c;
    }
    return r;
}

/// Projection pi: x-letters (order kept) to the left factor, y-letters to the right.
inline Tensor2<Word> star_project(const FreeProductElement& v, char left = 'x', char right = 'y') {
    Tensor2<Word> r;
    for (const auto& [w, c] : v) {
        std::vector<int> a, b;
        for (const auto& l : w.letters) {
            if (l.tag == left)
                a.push_back(l.index);
            else if (l.tag == right)
                b.push_back(l.index);
            else
                throw std::invalid_argument(std::string("star_project: unexpected tag ") + l.tag);
        }
        r.add({Word(a), Word(b)}, c);
    }
    return r;
}

/// Lifted multiplication m o pi: H * H -> H.
inline LinComb<Word> lifted_multiply(const FreeProductElement& v, char left = 'x', char right = 'y') {
    return multiply_out(star_project(v, left, right));
}

/// Cogroup antipode of H_inv^nc, an algebra morphism with S(x_n) = -sum_{p<n} S(x_p) x_{n-p}.
inline LinComb<Word> cogroup_antipode_generator(int n) {
    std::vector<LinComb<Word>> s(static_cast<std::size_t>(n) + 1);
    s[0] = LinComb<Word>(Word{});
    for (int k = 1; k <= n; ++k)
        for (int p = 0; p < k; ++p) s[static_cast<std::size_t>(k)] -= s[static_cast<std::size_t>(p)] * LinComb<Word>(Word{k - p});
    return s[static_cast<std::size_t>(n)];
}

// ---- Naive composition with non-commuting coefficients ----

/// Series t + sum_{n>=2} a_n t^n whose coefficients are non-commutative polynomials;
/// t is central. coeffs[n] is the coefficient of t^n (coeffs[1] = 1, coeffs[0] = 0).
struct NCSeries {
    std::vector<FreeProductElement> coeffs;
    int truncation() const { return static_cast<int>(coeffs.size()) - 1; }
    friend bool operator==(const NCSeries&, const NCSeries&) = default;
};

/// Generic series t + a_2 t^2 + ... + a_N t^N with a_n the letter (tag, n).
inline NCSeries generic_nc_series(char tag, int N) {
    NCSeries s;
    s.coeffs.resize(static_cast<std::size_t>(N) + 1);
    s.coeffs[1] = FreeProductElement(TaggedWord{});
    for (int n = 2; n <= N; ++n) s.coeffs[static_cast<std::size_t>(n)] = FreeProductElement(TaggedWord{{tag, n}});
    return s;
}

/// (f o g)(t) = sum_n f_n g(t)^n, with each f_n multiplying from the left.
inline NCSeries compose_nc(const NCSeries& f, const NCSeries& g) {
    if (f.truncation() != g.truncation()) throw std::invalid_argument("compose_nc: truncation mismatch");
    const int N = f.truncation();
    NCSeries r;
    r.coeffs.resize(static_cast<std::size_t>(N) + 1);
    std::vector<FreeProductElement> power(static_cast<std::size_t>(N) + 1);
    power[0] = FreeProductElement(TaggedWord{});
    for (int n = 1; n <= N; ++n) {
        std::vector<FreeProductElement> next(static_cast<std::size_t>(N) + 1);
        for (int i = 0; i <= N; ++i)
            for (int j = 1; i + j <= N; ++j)
                next[static_cast<std::size_t>(i + j)] += power[static_cast<std::size_t>(i)] * g.coeffs[static_cast<std::size_t>(j)];
        power = std::move(next);
        for (int k = 0; k <= N; ++k)
            r.coeffs[static_cast<std::size_t>(k)] += f.coeffs[static_cast<std::size_t>(n)] * power[static_cast<std::size_t>(k)];
    }
    return r;
}

/// Lowest degree at which (f o g) o h and f o (g o h) differ, with one differing word.
struct AssociativityWitness {
    int degree;
    TaggedWord word;
    Scalar left_coeff;   ///< coefficient in ((f o g) o h)
    Scalar right_coeff;  ///< coefficient in (f o (g o h))
};

inline std::optional<AssociativityWitness> find_nonassociativity(int N) {
    const auto f = generic_nc_series('f', N), g = generic_nc_series('g', N), h = generic_nc_series('h', N);
    const auto lhs = compose_nc(compose_nc(f, g), h);
    const auto rhs = compose_nc(f, compose_nc(g, h));
    for (int k = 0; k <= N; ++k) {
        const auto diff = lhs.coeffs[static_cast<std::size_t>(k)] - rhs.coeffs[static_cast<std::size_t>(k)];
        if (diff.is_zero()) continue;
        const TaggedWord& w = diff.begin()->first;
        return AssociativityWitness{k, w, lhs.coeffs[static_cast<std::size_t>(k)].coeff(w),
                                    rhs.coeffs[static_cast<std::size_t>(k)].coeff(w)};
    }
    return std::nullopt;
}

}  // namespace fdb
