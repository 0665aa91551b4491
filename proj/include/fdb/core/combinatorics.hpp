#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace fdb::comb {

inline mpz_class factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// C(n, k); zero outside 0 <= k <= n.
inline mpz_class binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Visits every integer partition of n as a multiplicity vector `mult`,
/// where mult[i] is the number of parts equal to i (index 0 unused).
inline void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit) {
    if (n < 0) return;
    std::vector<int> mult(static_cast<std::size_t>(n) + 1, 0);
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            visit(mult);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            ++mult[static_cast<std::size_t>(p)];
            rec(remaining - p, p);
            --mult[static_cast<std::size_t>(p)];
        }
    };
    rec(n, n);
}

/// Number of integer partitions of n.
inline int partition_count(int n) {
    int c = 0;
    for_each_partition(n, [&](const std::vector<int>&) { ++c; });
    return c;
}

/// Visits every weak composition (k_0, ..., k_{parts-1}) of `total`.
inline void for_each_weak_composition(int total, int parts,
                                      const std::function<void(const std::vector<int>&)>& visit) {
    if (parts <= 0) {
        if (total == 0) visit({});
        return;
    }
    std::vector<int> k(static_cast<std::size_t>(parts), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
        if (i + 1 == k.size()) {
            k[i] = remaining;
            visit(k);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            k[i] = v;
            rec(i + 1, remaining - v);
        }
    };
    rec(0, total);
}

/// Visits every composition of n into positive parts (any number of parts).
inline void for_each_composition(int n, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> parts;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            visit(parts);
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            parts.push_back(p);
            rec(remaining - p);
            parts.pop_back();
        }
    };
    if (n >= 1) rec(n);
}

/// Visits every set partition of {0, ..., n-1} as a block list, each block ascending.
inline void for_each_set_partition(int n,
                                   const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            visit(blocks);
            return;
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(i);
            rec(i + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({i});
        rec(i + 1);
        blocks.pop_back();
    };
    rec(0);
}

}  // namespace fdb::comb
