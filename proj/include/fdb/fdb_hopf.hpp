#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdb/core/combinatorics.hpp"
#include "fdb/core/hopf_axioms.hpp"
#include "fdb/core/lincomb.hpp"
#include "fdb/core/monomial.hpp"
#include "fdb/series.hpp"

namespace fdb {

enum class CommAlgebra { inv, fdb };

inline std::string to_string(CommAlgebra a) { return a == CommAlgebra::inv ? "inv" : "fdb"; }

inline CommAlgebra parse_comm_algebra(const std::string& s) {
    if (s == "inv") return CommAlgebra::inv;
    if (s == "fdb") return CommAlgebra::fdb;
    throw std::invalid_argument("unknown commutative algebra '" + s + "' (expected inv or fdb)");
}

/// All monomials of exactly degree n in x_1, x_2, ... (one per partition of n).
inline std::vector<CommMonomial> monomials_of_degree(int n) {
    std::vector<CommMonomial> out;
    comb::for_each_partition(n, [&](const std::vector<int>& mult) {
        std::vector<std::pair<int, int>> p;
        for (std::size_t i = 1; i < mult.size(); ++i)
            if (mult[i] > 0) p.emplace_back(static_cast<int>(i), mult[i]);
        out.emplace_back(std::move(p));
    });
    return out;
}

/// All monomials of degree 0..N, the unit first.
inline std::vector<CommMonomial> monomials_up_to(int N) {
    std::vector<CommMonomial> out;
    for (int n = 0; n <= N; ++n) {
        auto d = monomials_of_degree(n);
        out.insert(out.end(), d.begin(), d.end());
    }
    return out;
}

/// The polynomial Hopf algebras H_inv and H_FdB on generators x_1, x_2, ...
///
/// Both are free commutative on the x_n; they differ in the coproduct on generators:
///   inv: D(x_n) = sum_p x_p (x) x_{n-p}
///   fdb: D(x_n) = sum_m (sum over k_0+...+k_n = m+1, sum i k_i = n-m of
///                  (m+1)!/(k_0!...k_n!) x_0^{k_0}...x_n^{k_n}) (x) x_m
/// with x_0 = 1.
class CommHopf {
public:
    using basis_type = CommMonomial;

    explicit CommHopf(CommAlgebra a) : alg_(a) {}
    CommHopf(const CommHopf& o) : alg_(o.alg_) {}

    CommAlgebra algebra() const { return alg_; }

    CommMonomial unit() const { return {}; }
    Scalar counit(const CommMonomial& m) const { return m.is_unit() ? 1 : 0; }

    Tensor2<CommMonomial> coproduct_generator(int n) const {
        if (n < 1) throw std::invalid_argument("generator index must be >= 1");
        Tensor2<CommMonomial> r;
        auto x = [](int k) { return k == 0 ? CommMonomial{} : CommMonomial::generator(k); };
        if (alg_ == CommAlgebra::inv) {
            for (int p = 0; p <= n; ++p) r.add({x(p), x(n - p)}, 1);
            return r;
        }
        for (int m = 0; m <= n; ++m) {
            // Partitions of n-m into at most m+1 positive parts; k_0 pads the rest.
            comb::for_each_partition(n - m, [&](const std::vector<int>& k) {
                int parts = 0;
                for (std::size_t i = 1; i < k.size(); ++i) parts += k[i];
                if (parts > m + 1) return;
                mpz_class den = comb::factorial(m + 1 - parts);
                std::vector<std::pair<int, int>> pw;
                for (std::size_t i = 1; i < k.size(); ++i)
                    if (k[i] > 0) {
                        den *= comb::factorial(k[i]);
                        pw.emplace_back(static_cast<int>(i), k[i]);
                    }
                r.add({CommMonomial(pw), x(m)}, Scalar(comb::factorial(m + 1), den));
            });
        }
        return r;
    }

    /// Coproduct extended multiplicatively from the generators.
    Tensor2<CommMonomial> coproduct(const CommMonomial& m) const {
        Tensor2<CommMonomial> r = tensor(CommMonomial{}, CommMonomial{});
        for (const auto& [n, e] : m.powers()) {
            const auto g = coproduct_generator(n);
            for (int i = 0; i < e; ++i) r = r * g;
        }
        return r;
    }

    Tensor2<CommMonomial> coproduct(const LinComb<CommMonomial>& v) const {
        Tensor2<CommMonomial> r;
        for (const auto& [m, c] : v) r += coproduct(m) * c;
        return r;
    }

    /// Antipode from the recursion S(x) = -x - sum' S(x')x'' on generators,
    /// extended as an algebra morphism (the algebra is commutative).
    LinComb<CommMonomial> antipode_generator(int n) const {
        {
            std::lock_guard lock(mu_);
            if (auto it = cache_.find(n); it != cache_.end()) return it->second;
        }
        const CommMonomial xn = CommMonomial::generator(n);
        LinComb<CommMonomial> s;
        for (const auto& [p, c] : coproduct_generator(n)) {
            if (p.right.is_unit()) continue;  // the x (x) 1 term is S(x) itself
            s -= antipode(p.left) * LinComb<CommMonomial>(p.right) * c;
        }
        std::lock_guard lock(mu_);
        cache_.emplace(n, s);
        return s;
    }

    LinComb<CommMonomial> antipode(const CommMonomial& m) const {
        LinComb<CommMonomial> r(CommMonomial{});
        for (const auto& [n, e] : m.powers()) {
            const auto g = antipode_generator(n);
            for (int i = 0; i < e; ++i) r = r * g;
        }
        return r;
    }

    LinComb<CommMonomial> antipode(const LinComb<CommMonomial>& v) const {
        return apply_linear(v, [&](const CommMonomial& m) { return antipode(m); });
    }

private:
    CommAlgebra alg_;
    mutable std::mutex mu_;
    mutable std::map<int, LinComb<CommMonomial>> cache_;
};

/// Linear functional on the degree <= N part of a commutative Hopf algebra.
/// Values are stored on every monomial of degree <= N; evaluating above N is an error.
class Functional {
public:
    Functional(CommAlgebra alg, int max_degree, std::map<CommMonomial, Scalar> values = {})
        : alg_(alg), n_(max_degree) {
        if (max_degree < 0) throw std::invalid_argument("functional degree bound must be >= 0");
        for (auto& [m, v] : values) {
            if (m.degree() > max_degree)
                throw std::invalid_argument("functional value given above its degree bound");
            if (!v.is_zero()) values_.emplace(m, v);
        }
    }

    /// The convolution unit: 1 on the unit monomial, 0 elsewhere.
    static Functional counit(CommAlgebra alg, int N) { return Functional(alg, N, {{CommMonomial{}, Scalar(1)}}); }

    CommAlgebra algebra() const { return alg_; }
    int max_degree() const { return n_; }
    const std::map<CommMonomial, Scalar>& values() const { return values_; }

    Scalar operator()(const CommMonomial& m) const {
        if (m.degree() > n_)
            throw std::out_of_range("functional evaluated at degree " + std::to_string(m.degree()) +
                                    " above its bound " + std::to_string(n_));
        const auto it = values_.find(m);
        return it == values_.end() ? Scalar(0) : it->second;
    }

    Scalar operator()(const LinComb<CommMonomial>& v) const {
        return functional_eval_with<CommMonomial>([&](const CommMonomial& m) { return (*this)(m); }, v);
    }

    /// Value on the generator x_n.
    Scalar on_generator(int n) const { return (*this)(CommMonomial::generator(n)); }

    Functional& operator+=(const Functional& o) {
        check_compatible(o);
        for (const auto& [m, v] : o.values_) add(m, v);
        return *this;
    }
    Functional& operator-=(const Functional& o) {
        check_compatible(o);
        for (const auto& [m, v] : o.values_) add(m, -v);
        return *this;
    }
    Functional& operator*=(const Scalar& s) {
        if (s.is_zero()) values_.clear();
        for (auto& [m, v] : values_) v *= s;
        return *this;
    }
    friend Functional operator+(Functional a, const Functional& b) { return a += b; }
    friend Functional operator-(Functional a, const Functional& b) { return a -= b; }
    friend Functional operator*(Functional a, const Scalar& s) { return a *= s; }
    friend Functional operator*(const Scalar& s, Functional a) { return a *= s; }

    friend bool operator==(const Functional&, const Functional&) = default;

    void check_compatible(const Functional& o) const {
        if (alg_ != o.alg_)
            throw std::invalid_argument("functionals on different algebras (" + to_string(alg_) + " vs " +
                                        to_string(o.alg_) + ")");
        if (n_ != o.n_) throw std::invalid_argument("functionals with different degree bounds");
    }

private:
    void add(const CommMonomial& m, const Scalar& v) {
        if (v.is_zero()) return;
        auto [it, inserted] = values_.try_emplace(m, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) values_.erase(it);
        }
    }

    CommAlgebra alg_;
    int n_;
    std::map<CommMonomial, Scalar> values_;
};

/// Character: algebra morphism to Q, given by its values on x_1..x_N.
struct Character {
    CommAlgebra algebra;
    std::vector<Scalar> values;  // values[n-1] is the value on x_n

    int max_degree() const { return static_cast<int>(values.size()); }

    Scalar operator()(const CommMonomial& m) const {
        Scalar r = 1;
        for (const auto& [n, e] : m.powers()) {
            if (n > max_degree()) throw std::out_of_range("character evaluated beyond its generators");
            r *= pow(values[static_cast<std::size_t>(n - 1)], static_cast<unsigned>(e));
        }
        return r;
    }

    Functional as_functional() const {
        std::map<CommMonomial, Scalar> v;
        for (const auto& m : monomials_up_to(max_degree())) v.emplace(m, (*this)(m));
        return Functional(algebra, max_degree(), v);
    }

    friend bool operator==(const Character&, const Character&) = default;
};

/// Infinitesimal character: values on generators, zero on 1 and on products.
struct InfChar {
    CommAlgebra algebra;
    std::vector<Scalar> values;

    int max_degree() const { return static_cast<int>(values.size()); }

    Functional as_functional() const {
        std::map<CommMonomial, Scalar> v;
        for (int n = 1; n <= max_degree(); ++n) v.emplace(CommMonomial::generator(n), values[static_cast<std::size_t>(n - 1)]);
        return Functional(algebra, max_degree(), v);
    }

    friend bool operator==(const InfChar&, const InfChar&) = default;
};

/// Convolution (a*b)(h) = sum a(h')b(h'') over the coproduct.
inline Functional convolve(const Functional& a, const Functional& b) {
    a.check_compatible(b);
    const CommHopf h(a.algebra());
    std::map<CommMonomial, Scalar> out;
    for (const auto& m : monomials_up_to(a.max_degree())) {
        Scalar s;
        for (const auto& [p, c] : h.coproduct(m)) {
            const Scalar l = a(p.left);
            if (l.is_zero()) continue;
            s += c * l * b(p.right);
        }
        out.emplace(m, s);
    }
    return Functional(a.algebra(), a.max_degree(), out);
}

/// a o S, the convolution inverse of a character.
inline Functional compose_antipode(const Functional& a) {
    const CommHopf h(a.algebra());
    std::map<CommMonomial, Scalar> out;
    for (const auto& m : monomials_up_to(a.max_degree())) out.emplace(m, a(h.antipode(m)));
    return Functional(a.algebra(), a.max_degree(), out);
}

/// True when f(1) = 1 and f(uv) = f(u)f(v) for all monomials of degree <= N.
inline bool is_multiplicative(const Functional& f) {
    if (f(CommMonomial{}) != Scalar(1)) return false;
    for (const auto& m : monomials_up_to(f.max_degree())) {
        Scalar prod = 1;
        for (const auto& [n, e] : m.powers())
            prod *= pow(f.on_generator(n), static_cast<unsigned>(e));
        if (f(m) != prod) return false;
    }
    return true;
}

/// True when f vanishes on 1 and on every product of two or more generators.
inline bool is_infinitesimal(const Functional& f) {
    for (const auto& [m, v] : f.values())
        if (m.length() != 1) return false;
    return true;
}

inline Character to_character(const Functional& f) {
    if (!is_multiplicative(f)) throw std::invalid_argument("functional is not a character");
    std::vector<Scalar> v;
    for (int n = 1; n <= f.max_degree(); ++n) v.push_back(f.on_generator(n));
    return {f.algebra(), v};
}

inline InfChar to_infchar(const Functional& f) {
    if (!is_infinitesimal(f)) throw std::invalid_argument("functional is not an infinitesimal character");
    std::vector<Scalar> v;
    for (int n = 1; n <= f.max_degree(); ++n) v.push_back(f.on_generator(n));
    return {f.algebra(), v};
}

/// exp(a) = e + sum_{k>=1} a^{*k}/k!; the sum is finite since a vanishes on 1.
inline Functional exp_functional(const Functional& a) {
    if (!a(CommMonomial{}).is_zero()) throw std::invalid_argument("exp requires a functional vanishing on 1");
    Functional result = Functional::counit(a.algebra(), a.max_degree());
    Functional power = result;
    for (int k = 1; k <= a.max_degree(); ++k) {
        power = convolve(power, a) * Scalar(mpz_class(1), mpz_class(k));
        result += power;
    }
    return result;
}

/// log(e + g) = sum_{k>=1} (-1)^{k-1} g^{*k}/k.
inline Functional log_functional(const Functional& f) {
    if (f(CommMonomial{}) != Scalar(1)) throw std::invalid_argument("log requires a functional with value 1 on 1");
    const Functional g = f - Functional::counit(f.algebra(), f.max_degree());
    Functional result(f.algebra(), f.max_degree());
    Functional power = Functional::counit(f.algebra(), f.max_degree());
    for (int k = 1; k <= f.max_degree(); ++k) {
        power = convolve(power, g);
        result += power * Scalar(k % 2 == 1 ? 1 : -1, k);
    }
    return result;
}

inline Character exp_char(const InfChar& a) { return to_character(exp_functional(a.as_functional())); }
inline InfChar log_char(const Character& f) { return to_infchar(log_functional(f.as_functional())); }

/// Character of H_FdB attached to a diffeo series of truncation N+1: x_n -> f_{n+1}.
inline Character character_of(const TruncSeries& f) {
    if (f.kind() != SeriesKind::diffeo) throw std::invalid_argument("character_of requires a diffeo series");
    std::vector<Scalar> v;
    for (int n = 1; n < f.truncation(); ++n) v.push_back(f.coeff(n + 1));
    return {CommAlgebra::fdb, v};
}

/// Inverse of character_of.
inline TruncSeries series_of(const Character& c) {
    if (c.algebra != CommAlgebra::fdb) throw std::invalid_argument("series_of requires an fdb character");
    std::map<int, Scalar> m;
    for (int n = 1; n <= c.max_degree(); ++n) m.emplace(n + 1, c.values[static_cast<std::size_t>(n - 1)]);
    return TruncSeries::diffeo(c.max_degree() + 1, m);
}

/// f o g through the Hopf algebra: m o (g (x) f) o D_FdB, read back as a series.
inline TruncSeries compose_via_hopf(const TruncSeries& f, const TruncSeries& g) {
    if (f.truncation() != g.truncation()) throw std::invalid_argument("compose_via_hopf: truncation mismatch");
    if (f.truncation() < 2) return f;
    const auto prod = convolve(character_of(g).as_functional(), character_of(f).as_functional());
    return series_of(to_character(prod));
}

/// Element of the invertible-series group attached to a character of H_inv: x_n -> f_n.
inline Character character_of_invertible(const TruncSeries& f) {
    if (f.kind() != SeriesKind::invertible)
        throw std::invalid_argument("character_of_invertible requires an invertible series");
    std::vector<Scalar> v;
    for (int n = 1; n <= f.truncation(); ++n) v.push_back(f.coeff(n));
    return {CommAlgebra::inv, v};
}

}  // namespace fdb
