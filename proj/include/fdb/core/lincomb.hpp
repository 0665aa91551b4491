#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "fdb/core/scalar.hpp"

namespace fdb {

/// Finite formal Q-linear combination over a canonical, totally ordered basis.
///
/// Zero coefficients are never stored, so two combinations are equal exactly
/// when their term maps are equal. Iteration order is the basis order, which
/// makes every printed form deterministic.
template <class B>
class LinComb {
public:
    using basis_type = B;
    using map_type = std::map<B, Scalar>;

    LinComb() = default;
    LinComb(B b, Scalar c = Scalar(1)) { add(std::move(b), c); }  // NOLINT(google-explicit-constructor)

    static LinComb zero() { return {}; }

    void add(const B& b, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Scalar coeff(const B& b) const {
        const auto it = terms_.find(b);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const map_type& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add(b, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add(b, -c);
        return *this;
    }
    LinComb& operator*=(const Scalar& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, c] : terms_) c *= s;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Scalar& s) { return a *= s; }
    friend LinComb operator*(const Scalar& s, LinComb a) { return a *= s; }
    LinComb operator-() const { return *this * Scalar(-1); }

    friend bool operator==(const LinComb&, const LinComb&) = default;

    /// Algebra product, available when the basis itself multiplies (monomials, words, forests).
    friend LinComb operator*(const LinComb& a, const LinComb& b)
        requires requires(const B& x, const B& y) { { x * y } -> std::convertible_to<B>; }
    {
        LinComb r;
        for (const auto& [x, cx] : a.terms_)
            for (const auto& [y, cy] : b.terms_) r.add(x * y, cx * cy);
        return r;
    }

private:
    map_type terms_;
};

/// u + c v with zero terms pruned.
template <class B>
LinComb<B> combine(const LinComb<B>& u, const LinComb<B>& v, const Scalar& c) {
    LinComb<B> r = u;
    for (const auto& [b, coeff] : v) r.add(b, c * coeff);
    return r;
}

/// Ordered pair of basis elements, the basis of a tensor product.
template <class L, class R = L>
struct Pair2 {
    L left;
    R right;
    friend bool operator==(const Pair2&, const Pair2&) = default;
    friend auto operator<=>(const Pair2&, const Pair2&) = default;
};

template <class L, class R>
Pair2<L, R> operator*(const Pair2<L, R>& a, const Pair2<L, R>& b)
    requires requires(const L& l, const R& r) { l * l; r * r; }
{
    return {a.left * b.left, a.right * b.right};
}

/// Ordered triple, the basis of a threefold tensor product.
template <class B>
struct Triple {
    B first, second, third;
    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

template <class B>
using Tensor2 = LinComb<Pair2<B>>;

template <class B>
using Tensor3 = LinComb<Triple<B>>;

template <class B>
Tensor2<B> tensor(const B& l, const B& r, const Scalar& c = Scalar(1)) {
    return Tensor2<B>(Pair2<B>{l, r}, c);
}

template <class B>
Tensor2<B> tensor(const LinComb<B>& l, const LinComb<B>& r) {
    Tensor2<B> t;
    for (const auto& [a, ca] : l)
        for (const auto& [b, cb] : r) t.add(Pair2<B>{a, b}, ca * cb);
    return t;
}

/// Flip map u (x) v -> v (x) u.
template <class B>
Tensor2<B> flip(const Tensor2<B>& t) {
    Tensor2<B> r;
    for (const auto& [p, c] : t) r.add(Pair2<B>{p.right, p.left}, c);
    return r;
}

/// Extends a basis-level linear map f: A -> LinComb<C> to combinations.
template <class A, class F>
auto apply_linear(const LinComb<A>& v, F&& f) {
    using Out = std::invoke_result_t<F, const A&>;
    Out r;
    for (const auto& [a, c] : v) r += f(a) * c;
    return r;
}

/// Applies f (x) g to a two-fold tensor; f, g map basis elements to combinations.
template <class B, class F, class G>
auto apply_tensor(const Tensor2<B>& t, F&& f, G&& g) {
    using OutL = std::invoke_result_t<F, const B&>;
    using C = typename OutL::basis_type;
    Tensor2<C> r;
    for (const auto& [p, c] : t) {
        const auto fl = f(p.left);
        const auto gr = g(p.right);
        for (const auto& [a, ca] : fl)
            for (const auto& [b, cb] : gr) r.add(Pair2<C>{a, b}, c * ca * cb);
    }
    return r;
}

/// Multiplication map B (x) B -> B.
template <class B>
LinComb<B> multiply_out(const Tensor2<B>& t) {
    LinComb<B> r;
    for (const auto& [p, c] : t) r.add(p.left * p.right, c);
    return r;
}

/// Evaluates a finitely supported functional; absent basis keys count as zero.
template <class B>
Scalar functional_eval(const std::map<B, Scalar>& f, const LinComb<B>& v) {
    Scalar s;
    for (const auto& [b, c] : v) {
        const auto it = f.find(b);
        if (it != f.end()) s += c * it->second;
    }
    return s;
}

/// Evaluates a functional given as a callable on basis elements.
template <class B, class F>
Scalar functional_eval_with(F&& f, const LinComb<B>& v) {
    Scalar s;
    for (const auto& [b, c] : v) s += c * f(b);
    return s;
}

/// Human-readable rendering, e.g. "2*x1^2 - 1/2*x2". Uses ADL `to_string` on the basis.
template <class B, class Namer>
std::string format(const LinComb<B>& v, Namer&& name) {
    if (v.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [b, c] : v) {
        Scalar a = c;
        if (first) {
            if (a.sign() < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        const std::string bs = name(b);
        if (a == Scalar(1) && bs != "1")
            s += bs;
        else if (bs == "1")
            s += a.str();
        else
            s += a.str() + "*" + bs;
        first = false;
    }
    return s;
}

template <class B>
std::string format(const LinComb<B>& v) {
    return format(v, [](const B& b) { return to_string(b); });
}

template <class B>
std::string to_string(const Pair2<B>& p) {
    return to_string(p.left) + " (x) " + to_string(p.right);
}

template <class B>
std::string to_string(const Triple<B>& t) {
    return to_string(t.first) + " (x) " + to_string(t.second) + " (x) " + to_string(t.third);
}

}  // namespace fdb
