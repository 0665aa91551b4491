#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include "fdb/core/lincomb.hpp"

namespace fdb {

/// A graded connected bialgebra given on a multiplicative basis.
template <class H>
concept Bialgebra = requires(const H& h, const typename H::basis_type& b) {
    typename H::basis_type;
    { h.coproduct(b) } -> std::same_as<Tensor2<typename H::basis_type>>;
    { h.counit(b) } -> std::convertible_to<Scalar>;
    { h.unit() } -> std::same_as<typename H::basis_type>;
    { b * b } -> std::convertible_to<typename H::basis_type>;
};

template <class H>
concept HopfAlgebra = Bialgebra<H> && requires(const H& h, const typename H::basis_type& b) {
    { h.antipode(b) } -> std::same_as<LinComb<typename H::basis_type>>;
};

/// Outcome of one property check; `counterexample` is empty on success.
struct CheckItem {
    std::string name;
    bool passed = true;
    std::string counterexample;
    int cases = 0;
};

namespace axioms {

template <Bialgebra H>
Tensor2<typename H::basis_type> coproduct_of(const H& h, const LinComb<typename H::basis_type>& v) {
    Tensor2<typename H::basis_type> r;
    for (const auto& [b, c] : v) r += h.coproduct(b) * c;
    return r;
}

template <Bialgebra H>
std::optional<std::string> coassociative(const H& h, const typename H::basis_type& b) {
    using B = typename H::basis_type;
    const auto d = h.coproduct(b);
    Tensor3<B> lhs, rhs;
    for (const auto& [p, c] : d) {
        for (const auto& [q, cq] : h.coproduct(p.left)) lhs.add(Triple<B>{q.left, q.right, p.right}, c * cq);
        for (const auto& [q, cq] : h.coproduct(p.right)) rhs.add(Triple<B>{p.left, q.left, q.right}, c * cq);
    }
    if (lhs == rhs) return std::nullopt;
    return "(D(x)id)D != (id(x)D)D on " + to_string(b);
}

template <Bialgebra H>
std::optional<std::string> counital(const H& h, const typename H::basis_type& b) {
    using B = typename H::basis_type;
    LinComb<B> left, right;
    for (const auto& [p, c] : h.coproduct(b)) {
        left.add(p.right, c * h.counit(p.left));
        right.add(p.left, c * h.counit(p.right));
    }
    const LinComb<B> expected(b);
    if (left == expected && right == expected) return std::nullopt;
    return "counit axiom fails on " + to_string(b);
}

template <Bialgebra H>
std::optional<std::string> coproduct_multiplicative(const H& h, const typename H::basis_type& a,
                                                    const typename H::basis_type& b) {
    if (h.coproduct(a * b) == h.coproduct(a) * h.coproduct(b)) return std::nullopt;
    return "D(ab) != D(a)D(b) for a=" + to_string(a) + ", b=" + to_string(b);
}

template <Bialgebra H>
std::optional<std::string> counit_multiplicative(const H& h, const typename H::basis_type& a,
                                                 const typename H::basis_type& b) {
    if (Scalar(h.counit(a * b)) == Scalar(h.counit(a)) * Scalar(h.counit(b))) return std::nullopt;
    return "e(ab) != e(a)e(b) for a=" + to_string(a) + ", b=" + to_string(b);
}

/// Both identities m(S(x)id)D = m(id(x)S)D = unit counit.
template <HopfAlgebra H>
std::optional<std::string> antipode_identities(const H& h, const typename H::basis_type& b) {
    using B = typename H::basis_type;
    LinComb<B> left, right;
    for (const auto& [p, c] : h.coproduct(b)) {
        left += h.antipode(p.left) * LinComb<B>(p.right) * c;
        right += LinComb<B>(p.left) * h.antipode(p.right) * c;
    }
    const LinComb<B> expected(h.unit(), Scalar(h.counit(b)));
    if (left != expected) return "m(S(x)id)D != ue on " + to_string(b);
    if (right != expected) return "m(id(x)S)D != ue on " + to_string(b);
    return std::nullopt;
}

/// S(ab) = S(a)S(b) when `anti` is false, S(ab) = S(b)S(a) otherwise.
template <HopfAlgebra H>
std::optional<std::string> antipode_morphism(const H& h, const typename H::basis_type& a,
                                             const typename H::basis_type& b, bool anti) {
    const auto lhs = h.antipode(a * b);
    const auto rhs = anti ? h.antipode(b) * h.antipode(a) : h.antipode(a) * h.antipode(b);
    if (lhs == rhs) return std::nullopt;
    return std::string(anti ? "S(ab) != S(b)S(a)" : "S(ab) != S(a)S(b)") + " for a=" + to_string(a) +
           ", b=" + to_string(b);
}

/// Runs the full axiom list on `basis` (and on all pairs for the multiplicative laws).
template <HopfAlgebra H>
std::vector<CheckItem> hopf_suite(const H& h, const std::vector<typename H::basis_type>& basis,
                                  const std::vector<typename H::basis_type>& pair_basis, bool anti,
                                  const std::string& prefix) {
    std::vector<CheckItem> out;
    auto run_single = [&](const std::string& name, auto&& check) {
        CheckItem item{prefix + name, true, {}, 0};
        for (const auto& b : basis) {
            ++item.cases;
            if (auto fail = check(b); fail) {
                item.passed = false;
                item.counterexample = *fail;
                break;
            }
        }
        out.push_back(item);
    };
    auto run_pair = [&](const std::string& name, auto&& check) {
        CheckItem item{prefix + name, true, {}, 0};
        for (const auto& a : pair_basis) {
            for (const auto& b : pair_basis) {
                ++item.cases;
                if (auto fail = check(a, b); fail) {
                    item.passed = false;
                    item.counterexample = *fail;
                    break;
                }
            }
            if (!item.passed) break;
        }
        out.push_back(item);
    };
    run_single("coassociativity", [&](const auto& b) { return coassociative(h, b); });
    run_single("counit", [&](const auto& b) { return counital(h, b); });
    run_single("antipode identities", [&](const auto& b) { return antipode_identities(h, b); });
    run_pair("coproduct is an algebra morphism", [&](const auto& a, const auto& b) {
        return coproduct_multiplicative(h, a, b);
    });
    run_pair("counit is an algebra morphism", [&](const auto& a, const auto& b) {
        return counit_multiplicative(h, a, b);
    });
    run_pair(anti ? "antipode is an antimorphism" : "antipode is a morphism",
             [&](const auto& a, const auto& b) { return antipode_morphism(h, a, b, anti); });
    return out;
}

}  // namespace axioms
}  // namespace fdb
