#pragma once

#include <vector>

#include "theta/errors.hpp"
#include "theta/numeric.hpp"

namespace theta {

/// Truncated integer power series: coefficients a_1..a_n of a q-expansion.
struct QSeries {
    std::vector<Int> coeffs;  // coeffs[i] = a_{i+1}

    long n_max() const { return static_cast<long>(coeffs.size()); }

    const Int& a(long n) const {
        require(n >= 1 && n <= n_max(), "coefficient index out of range");
        return coeffs[static_cast<size_t>(n - 1)];
    }
};

namespace detail {

// Truncated product of two series with constant term included,
// c[k] = coefficient of q^k, k < len.
inline std::vector<Int> series_mul(const std::vector<Int>& a,
                                   const std::vector<Int>& b, size_t len) {
    std::vector<Int> r(len, Int(0));
    for (size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size() && i + j < len; ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// Euler product prod (1 - q^n) truncated below q^len, via the pentagonal
// number sparse expansion.
inline std::vector<Int> euler_product(size_t len) {
    std::vector<Int> e(len, Int(0));
    e[0] = 1;
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2;
        long g2 = k * (3 * k + 1) / 2;
        if (g1 >= static_cast<long>(len) && g2 >= static_cast<long>(len)) break;
        Int s = (k % 2 == 0) ? 1 : -1;
        if (g1 < static_cast<long>(len)) e[static_cast<size_t>(g1)] += s;
        if (g2 < static_cast<long>(len)) e[static_cast<size_t>(g2)] += s;
    }
    return e;
}

}  // namespace detail

/// tau(1)..tau(n_max) from Delta(q) = q * prod (1-q^n)^24, by pentagonal
/// expansion of the Euler product and binary powering.
inline QSeries delta_coefficients(long n_max) {
    require(n_max >= 1, "n_max must be >= 1");
    const size_t len = static_cast<size_t>(n_max);  // degrees 0..n_max-1
    std::vector<Int> e = detail::euler_product(len);
    std::vector<Int> e2 = detail::series_mul(e, e, len);
    std::vector<Int> e4 = detail::series_mul(e2, e2, len);
    std::vector<Int> e8 = detail::series_mul(e4, e4, len);
    std::vector<Int> e16 = detail::series_mul(e8, e8, len);
    std::vector<Int> e24 = detail::series_mul(e16, e8, len);
    QSeries out;
    out.coeffs.assign(e24.begin(), e24.end());  // tau(n) = coeff of q^(n-1)
    ensure(out.coeffs.at(0) == 1, "leading Delta coefficient must be 1");
    return out;
}

/// tau(p)^2 <= 4 p^11, as an exact integer comparison.
inline bool ramanujan_bound_check(unsigned long p, const Int& tau_p) {
    require(is_prime(p), "p must be prime");
    return tau_p * tau_p <= Int(4) * pow_int(Int(static_cast<long>(p)), 11);
}

}  // namespace theta
