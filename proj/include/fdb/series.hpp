#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdb/core/combinatorics.hpp"
#include "fdb/core/lincomb.hpp"
#include "fdb/core/monomial.hpp"
#include "fdb/core/scalar.hpp"

namespace fdb {

enum class SeriesKind { diffeo, invertible };

inline std::string to_string(SeriesKind k) { return k == SeriesKind::diffeo ? "diffeo" : "invertible"; }

/// Truncated one-variable formal series.
///
/// A diffeo series is t + sum_{2<=n<=N} f_n t^n (f_0 = 0, f_1 = 1 implicit);
/// an invertible series is 1 + sum_{1<=n<=N} f_n t^n (f_0 = 1 implicit).
class TruncSeries {
public:
    /// Builds a diffeo series from its free coefficients (keys 2..N).
    static TruncSeries diffeo(int truncation, const std::map<int, Scalar>& coeffs = {}) {
        return TruncSeries(SeriesKind::diffeo, truncation, coeffs);
    }

    /// Builds an invertible series from its free coefficients (keys 1..N).
    static TruncSeries invertible(int truncation, const std::map<int, Scalar>& coeffs = {}) {
        return TruncSeries(SeriesKind::invertible, truncation, coeffs);
    }

    static TruncSeries identity(int truncation) { return diffeo(truncation); }
    static TruncSeries one(int truncation) { return invertible(truncation); }

    SeriesKind kind() const { return kind_; }
    int truncation() const { return static_cast<int>(c_.size()) - 1; }

    /// Full coefficient of t^n, fixed ones included; n must not exceed the truncation.
    const Scalar& coeff(int n) const {
        if (n < 0 || n > truncation())
            throw std::out_of_range("coefficient index " + std::to_string(n) + " outside 0.." +
                                    std::to_string(truncation()));
        return c_[static_cast<std::size_t>(n)];
    }

    /// Dense coefficients c_0..c_N.
    const std::vector<Scalar>& dense() const { return c_; }

    /// Nonzero free coefficients (the serialized form).
    std::map<int, Scalar> free_coeffs() const {
        std::map<int, Scalar> out;
        for (int n = first_free(); n <= truncation(); ++n)
            if (!c_[static_cast<std::size_t>(n)].is_zero()) out.emplace(n, c_[static_cast<std::size_t>(n)]);
        return out;
    }

    int first_free() const { return kind_ == SeriesKind::diffeo ? 2 : 1; }

    /// Same series truncated at a lower order.
    TruncSeries truncate(int n) const {
        if (n < 1 || n > truncation()) throw std::invalid_argument("truncate: order outside 1..N");
        TruncSeries r = *this;
        r.c_.resize(static_cast<std::size_t>(n) + 1);
        return r;
    }

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

private:
    TruncSeries(SeriesKind kind, int truncation, const std::map<int, Scalar>& coeffs) : kind_(kind) {
        if (truncation < 1) throw std::invalid_argument("series truncation must be >= 1");
        c_.assign(static_cast<std::size_t>(truncation) + 1, Scalar(0));
        if (kind == SeriesKind::diffeo)
            c_[1] = 1;
        else
            c_[0] = 1;
        for (const auto& [n, v] : coeffs) {
            if (n < first_free() || n > truncation)
                throw std::invalid_argument("coefficient index " + std::to_string(n) + " outside " +
                                            std::to_string(first_free()) + ".." + std::to_string(truncation) +
                                            " for a " + to_string(kind) + " series");
            c_[static_cast<std::size_t>(n)] = v;
        }
    }

    SeriesKind kind_;
    std::vector<Scalar> c_;
};

namespace series_detail {

/// Product of dense coefficient vectors truncated at order n.
inline std::vector<Scalar> mul_trunc(const std::vector<Scalar>& a, const std::vector<Scalar>& b, int n) {
    std::vector<Scalar> r(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(n); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(n); ++j)
            if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    return r;
}

inline std::vector<Scalar> pow_trunc(const std::vector<Scalar>& a, int e, int n) {
    std::vector<Scalar> r(static_cast<std::size_t>(n) + 1);
    r[0] = 1;
    for (int i = 0; i < e; ++i) r = mul_trunc(r, a, n);
    return r;
}

/// 1/a for a series with a_0 = 1.
inline std::vector<Scalar> reciprocal(const std::vector<Scalar>& a, int n) {
    std::vector<Scalar> r(static_cast<std::size_t>(n) + 1);
    r[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Scalar s;
        for (int j = 1; j <= k && j < static_cast<int>(a.size()); ++j)
            s += a[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(k - j)];
        r[static_cast<std::size_t>(k)] = -s;
    }
    return r;
}

inline void require_diffeo(const TruncSeries& f, const char* what) {
    if (f.kind() != SeriesKind::diffeo) throw std::invalid_argument(std::string(what) + " requires a diffeo series");
}

inline TruncSeries diffeo_from_dense(const std::vector<Scalar>& c, int n) {
    std::map<int, Scalar> m;
    for (int k = 2; k <= n; ++k) m.emplace(k, c[static_cast<std::size_t>(k)]);
    return TruncSeries::diffeo(n, m);
}

}  // namespace series_detail

/// Partial Bell polynomial B_{n,m}(x_1, ..., x_{n-m+1}) as a polynomial in the x_i.
///
/// Sum over (k_1, k_2, ...) with sum k_i = m, sum i k_i = n of
/// n! / prod(k_i! (i!)^{k_i}) prod x_i^{k_i}.
inline LinComb<CommMonomial> bell_polynomial(int n, int m) {
    if (n < 1 || m < 1 || m > n)
        throw std::invalid_argument("bell_polynomial requires 1 <= m <= n (got n=" + std::to_string(n) +
                                    ", m=" + std::to_string(m) + ")");
    LinComb<CommMonomial> r;
    comb::for_each_partition(n, [&](const std::vector<int>& mult) {
        int parts = 0;
        for (std::size_t i = 1; i < mult.size(); ++i) parts += mult[i];
        if (parts != m) return;
        mpz_class den = 1;
        std::vector<std::pair<int, int>> powers;
        for (std::size_t i = 1; i < mult.size(); ++i) {
            if (mult[i] == 0) continue;
            den *= comb::factorial(mult[i]);
            mpz_class fi = comb::factorial(static_cast<int>(i));
            for (int j = 0; j < mult[i]; ++j) den *= fi;
            powers.emplace_back(static_cast<int>(i), mult[i]);
        }
        r.add(CommMonomial(powers), Scalar(comb::factorial(n), den));
    });
    return r;
}

/// Evaluates a polynomial in x_1, x_2, ... at the given values (values[i-1] is x_i).
inline Scalar evaluate(const LinComb<CommMonomial>& p, const std::vector<Scalar>& values) {
    Scalar s;
    for (const auto& [mono, c] : p) {
        Scalar t = c;
        for (const auto& [i, e] : mono.powers()) {
            if (i > static_cast<int>(values.size())) {
                t = 0;
                break;
            }
            t *= pow(values[static_cast<std::size_t>(i - 1)], static_cast<unsigned>(e));
        }
        s += t;
    }
    return s;
}

/// Composition f o g of diffeo series by the multinomial coefficient formula:
/// (f o g)_n = sum_m sum_k m!/(k_1!...k_n!) f_m g_1^{k_1}...g_n^{k_n}.
inline TruncSeries compose(const TruncSeries& f, const TruncSeries& g) {
    series_detail::require_diffeo(f, "compose");
    series_detail::require_diffeo(g, "compose");
    if (f.truncation() != g.truncation()) throw std::invalid_argument("compose: truncation mismatch");
    const int N = f.truncation();
    std::map<int, Scalar> out;
    for (int n = 2; n <= N; ++n) {
        Scalar total;
        comb::for_each_partition(n, [&](const std::vector<int>& k) {
            int m = 0;
            for (std::size_t i = 1; i < k.size(); ++i) m += k[i];
            const Scalar& fm = f.coeff(m);
            if (fm.is_zero()) return;
            mpz_class den = 1;
            Scalar prod = fm;
            for (std::size_t i = 1; i < k.size(); ++i) {
                if (k[i] == 0) continue;
                den *= comb::factorial(k[i]);
                prod *= pow(g.coeff(static_cast<int>(i)), static_cast<unsigned>(k[i]));
            }
            total += prod * Scalar(comb::factorial(m), den);
        });
        out.emplace(n, total);
    }
    return TruncSeries::diffeo(N, out);
}

/// Compositional inverse by coefficient extraction: g_n = (1/n) [t^{n-1}] (t/f(t))^n.
inline TruncSeries compositional_inverse(const TruncSeries& f) {
    series_detail::require_diffeo(f, "compositional_inverse");
    const int N = f.truncation();
    // f(t)/t = 1 + f_2 t + ... + f_N t^{N-1}
    std::vector<Scalar> quotient(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k) quotient[static_cast<std::size_t>(k)] = f.coeff(k + 1);
    const auto t_over_f = series_detail::reciprocal(quotient, N - 1);
    std::map<int, Scalar> out;
    for (int n = 2; n <= N; ++n) {
        const auto p = series_detail::pow_trunc(t_over_f, n, n - 1);
        out.emplace(n, p[static_cast<std::size_t>(n - 1)] / Scalar(n));
    }
    return TruncSeries::diffeo(N, out);
}

/// Compositional inverse by solving compose(f, g) = t one coefficient at a time.
inline TruncSeries inverse_by_back_substitution(const TruncSeries& f) {
    series_detail::require_diffeo(f, "inverse_by_back_substitution");
    const int N = f.truncation();
    std::map<int, Scalar> g;
    for (int n = 2; n <= N; ++n) {
        // (f o g)_n = g_n + (terms in g_2..g_{n-1}); solve for g_n.
        g[n] = 0;
        const auto partial = compose(f, TruncSeries::diffeo(N, g));
        g[n] = -partial.coeff(n);
    }
    return TruncSeries::diffeo(N, g);
}

/// Inverse for the pointwise product of invertible series.
inline TruncSeries multiplicative_inverse(const TruncSeries& f) {
    if (f.kind() != SeriesKind::invertible)
        throw std::invalid_argument("multiplicative_inverse requires an invertible series");
    const int N = f.truncation();
    const auto r = series_detail::reciprocal(f.dense(), N);
    std::map<int, Scalar> out;
    for (int n = 1; n <= N; ++n) out.emplace(n, r[static_cast<std::size_t>(n)]);
    return TruncSeries::invertible(N, out);
}

/// Pointwise product of invertible series.
inline TruncSeries multiply(const TruncSeries& f, const TruncSeries& g) {
    if (f.kind() != SeriesKind::invertible || g.kind() != SeriesKind::invertible)
        throw std::invalid_argument("multiply requires invertible series");
    if (f.truncation() != g.truncation()) throw std::invalid_argument("multiply: truncation mismatch");
    const int N = f.truncation();
    const auto r = series_detail::mul_trunc(f.dense(), g.dense(), N);
    std::map<int, Scalar> out;
    for (int n = 1; n <= N; ++n) out.emplace(n, r[static_cast<std::size_t>(n)]);
    return TruncSeries::invertible(N, out);
}

/// Truncation of t e^t at order N: coefficients 1/(n-1)!.
inline TruncSeries t_exp_t(int N) {
    std::map<int, Scalar> m;
    for (int n = 2; n <= N; ++n) m.emplace(n, Scalar(mpz_class(1), comb::factorial(n - 1)));
    return TruncSeries::diffeo(N, m);
}

/// Coefficients g_1..g_N of the inverse of t e^t (Lambert's W).
inline std::vector<Scalar> lambert_coefficients(int N) {
    const auto g = compositional_inverse(t_exp_t(N));
    return {g.dense().begin() + 1, g.dense().end()};
}

/// Formal symbol f^{(m)} times a monomial in the derivatives g^{(k)}.
/// During determinant expansion `f_order` is the power of the symbol f.
struct DerivTerm {
    int f_order = 0;
    CommMonomial g;
    friend bool operator==(const DerivTerm&, const DerivTerm&) = default;
    friend auto operator<=>(const DerivTerm&, const DerivTerm&) = default;
    friend DerivTerm operator*(const DerivTerm& a, const DerivTerm& b) {
        return {a.f_order + b.f_order, a.g * b.g};
    }
};

inline std::string to_string(const DerivTerm& t) {
    std::string s;
    if (t.f_order > 0) s = "f(" + std::to_string(t.f_order) + ")";
    for (const auto& [k, e] : t.g.powers()) {
        if (!s.empty()) s += ' ';
        s += "g(" + std::to_string(k) + ")";
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

/// n-th derivative of f(g(t)): sum_m f^{(m)} B_{n,m}(g', g'', ..., g^{(n-m+1)}).
inline LinComb<DerivTerm> fdb_derivative(int n) {
    if (n < 1) throw std::invalid_argument("fdb_derivative requires n >= 1");
    LinComb<DerivTerm> r;
    for (int m = 1; m <= n; ++m)
        for (const auto& [mono, c] : bell_polynomial(n, m)) r.add(DerivTerm{m, mono}, c);
    return r;
}

/// n-th derivative of f(g(t)) as the determinant of the n x n Hessenberg matrix with
/// entries C(n-1-i, j-i) f g^{(j-i+1)} on and above the diagonal and -1 below it.
/// The determinant is expanded with f as a commuting symbol; f^m is then read as f^{(m)}.
inline LinComb<DerivTerm> fdb_determinant(int n) {
    if (n < 1) throw std::invalid_argument("fdb_determinant requires n >= 1");
    using Entry = LinComb<DerivTerm>;
    std::vector<std::vector<Entry>> a(static_cast<std::size_t>(n), std::vector<Entry>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j >= i)
                a[i][j] = Entry(DerivTerm{1, CommMonomial::generator(j - i + 1)},
                                Scalar(comb::binomial(n - 1 - i, j - i)));
            else if (j == i - 1)
                a[i][j] = Entry(DerivTerm{}, Scalar(-1));
        }
    // Laplace expansion along the first column of the remaining rows/columns.
    std::function<Entry(std::vector<int>, std::vector<int>)> det = [&](std::vector<int> rows,
                                                                       std::vector<int> cols) -> Entry {
        if (rows.empty()) return Entry(DerivTerm{});
        const int c0 = cols.front();
        std::vector<int> rest_cols(cols.begin() + 1, cols.end());
        Entry total;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Entry& e = a[rows[r]][c0];
            if (e.is_zero()) continue;
            std::vector<int> rest_rows = rows;
            rest_rows.erase(rest_rows.begin() + static_cast<long>(r));
            Entry minor = e * det(rest_rows, rest_cols);
            total += (r % 2 == 0) ? minor : -minor;
        }
        return total;
    };
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[i] = i;
    return det(idx, idx);
}

/// Upper-triangular N x N matrix M(g)_{ij} = [t^j] g(t)^i (1-based indices).
class BellMatrix {
public:
    explicit BellMatrix(int n) : n_(n), m_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

    int size() const { return n_; }
    const Scalar& at(int i, int j) const { return m_[index(i, j)]; }
    Scalar& at(int i, int j) { return m_[index(i, j)]; }

    friend BellMatrix operator*(const BellMatrix& a, const BellMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("BellMatrix size mismatch");
        BellMatrix r(a.n_);
        for (int i = 1; i <= a.n_; ++i)
            for (int k = i; k <= a.n_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (int j = k; j <= a.n_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }

    static BellMatrix identity(int n) {
        BellMatrix r(n);
        for (int i = 1; i <= n; ++i) r.at(i, i) = 1;
        return r;
    }

    friend bool operator==(const BellMatrix&, const BellMatrix&) = default;

private:
    std::size_t index(int i, int j) const {
        if (i < 1 || j < 1 || i > n_ || j > n_) throw std::out_of_range("BellMatrix index");
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1);
    }
    int n_;
    std::vector<Scalar> m_;
};

inline BellMatrix bell_matrix(const TruncSeries& g, int N) {
    series_detail::require_diffeo(g, "bell_matrix");
    if (N < 1 || N > g.truncation())
        throw std::invalid_argument("bell_matrix: size " + std::to_string(N) + " exceeds series truncation " +
                                    std::to_string(g.truncation()));
    BellMatrix m(N);
    std::vector<Scalar> power(static_cast<std::size_t>(N) + 1);
    power[0] = 1;
    for (int i = 1; i <= N; ++i) {
        power = series_detail::mul_trunc(power, g.dense(), N);
        for (int j = i; j <= N; ++j) m.at(i, j) = power[static_cast<std::size_t>(j)];
    }
    return m;
}

/// Closed form of the Bell-matrix entries: (i!/j!) B_{j,i}(g_1, 2! g_2, ..., (j-i+1)! g_{j-i+1}).
inline Scalar bell_matrix_entry_closed_form(const TruncSeries& g, int i, int j) {
    if (j < i) return 0;
    std::vector<Scalar> args;
    for (int k = 1; k <= j - i + 1; ++k) args.push_back(Scalar(comb::factorial(k)) * g.coeff(k));
    return Scalar(comb::factorial(i), comb::factorial(j)) * evaluate(bell_polynomial(j, i), args);
}

}  // namespace fdb
