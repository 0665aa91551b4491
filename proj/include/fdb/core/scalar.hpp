#pragma once

#include <compare>
#include <concepts>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fdb {

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Values are always kept in lowest terms with a positive denominator. Every
/// operation is exact; division by zero throws `std::domain_error`.
class Scalar {
public:
    Scalar() = default;

    template <std::signed_integral I>
    Scalar(I n) : value_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

    template <std::unsigned_integral U>
    Scalar(U n) : value_(static_cast<unsigned long>(n)) {}  // NOLINT(google-explicit-constructor)

    Scalar(const mpz_class& n) : value_(n) {}  // NOLINT(google-explicit-constructor)

    Scalar(long num, long den) : Scalar(mpz_class(num), mpz_class(den)) {}

    Scalar(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    /// Parses "p/q" or "p" (optional sign on p; surrounding spaces allowed).
    static Scalar parse(std::string_view text) {
        std::string s(text);
        const auto first = s.find_first_not_of(" \t\n");
        const auto last = s.find_last_not_of(" \t\n");
        if (first == std::string::npos) throw std::invalid_argument("empty rational literal");
        s = s.substr(first, last - first + 1);
        const auto slash = s.find('/');
        auto parse_int = [&](const std::string& part) {
            if (part.empty() || part.find_first_not_of("+-0123456789") != std::string::npos ||
                part.find_first_of("+-", 1) != std::string::npos || part == "-" || part == "+")
                throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
            return mpz_class(part[0] == '+' ? part.substr(1) : part, 10);
        };
        if (slash == std::string::npos) return Scalar(parse_int(s));
        const auto num = parse_int(s.substr(0, slash));
        const auto den_text = s.substr(slash + 1);
        if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
            throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
        const auto den = parse_int(den_text);
        if (den == 0) throw std::domain_error("rational with zero denominator: '" + std::string(text) + "'");
        return Scalar(num, den);
    }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// "p/q", or "p" when the denominator is one.
    std::string str() const {
        if (is_integer()) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    Scalar& operator+=(const Scalar& o) { value_ += o.value_; return *this; }
    Scalar& operator-=(const Scalar& o) { value_ -= o.value_; return *this; }
    Scalar& operator*=(const Scalar& o) { value_ *= o.value_; return *this; }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { Scalar r; r.value_ = -value_; return r; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_{0};
};

/// Integer power with non-negative exponent.
inline Scalar pow(Scalar base, unsigned exponent) {
    Scalar result(1);
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        base *= base;
        exponent >>= 1U;
    }
    return result;
}

}  // namespace fdb
