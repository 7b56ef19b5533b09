#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "theta/errors.hpp"

namespace theta {

using Int = mpz_class;
// Exact rational scalar. GMP keeps the canonical form (gcd 1, positive
// denominator) that the rest of the library relies on.
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
    require(den != 0, "rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw input_error("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline int sign_of(const Rational& x) { return sgn(x); }

inline Int pow_int(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational b = base;
    if (e < 0) {
        require(b != 0, "zero to a negative power");
        b = Rational(1) / b;
        e = -e;
    }
    Rational acc(1);
    for (long i = 0; i < e; ++i) acc *= b;
    return acc;
}

inline bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<unsigned long> primes_upto(unsigned long n) {
    std::vector<unsigned long> ps;
    for (unsigned long p = 2; p <= n; ++p)
        if (is_prime(p)) ps.push_back(p);
    return ps;
}

// Distinct prime factors by trial division; desk-scale inputs only.
inline std::vector<unsigned long> prime_factors(Int n) {
    n = abs(n);
    std::vector<unsigned long> out;
    if (n <= 1) return out;
    for (unsigned long d = 2; Int(d) * Int(d) <= n; ++d) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            out.push_back(d);
            while (mpz_divisible_ui_p(n.get_mpz_t(), d)) n /= static_cast<long>(d);
        }
    }
    if (n > 1) {
        ensure(n.fits_ulong_p(), "prime factor out of desk range");
        out.push_back(n.get_ui());
    }
    return out;
}

inline bool is_squarefree(const Int& n) {
    Int m = abs(n);
    if (m == 0) return false;
    for (unsigned long d = 2; Int(d) * Int(d) <= m; ++d) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            m /= static_cast<long>(d);
            if (mpz_divisible_ui_p(m.get_mpz_t(), d)) return false;
        }
    }
    return true;
}

// Legendre symbol (a|p) for odd prime p, a not divisible by p.
inline int legendre(const Int& a, unsigned long p) {
    Int m = a % static_cast<long>(p);
    if (m < 0) m += static_cast<long>(p);
    ensure(m != 0, "legendre symbol of a non-unit");
    Int r;
    Int base = m, mod(static_cast<long>(p));
    mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), (p - 1) / 2, mod.get_mpz_t());
    return r == 1 ? +1 : -1;
}

// p-adic valuation of a nonzero rational.
inline long p_valuation(const Rational& x, unsigned long p) {
    require(x != 0, "valuation of zero");
    long v = 0;
    Int num = x.get_num(), den = x.get_den();
    while (mpz_divisible_ui_p(num.get_mpz_t(), p)) {
        num /= static_cast<long>(p);
        ++v;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
        den /= static_cast<long>(p);
        --v;
    }
    return v;
}

// x = p^v * unit; returns the unit part.
inline Rational p_unit_part(const Rational& x, unsigned long p) {
    long v = p_valuation(x, p);
    Rational pw = pow_rational(Rational(static_cast<long>(p)), -v);
    return x * pw;
}

// Residue of a p-unit rational modulo p^k (odd or even p).
inline unsigned long unit_mod(const Rational& u, unsigned long pk) {
    Int num = u.get_num() % static_cast<long>(pk);
    Int den = u.get_den() % static_cast<long>(pk);
    if (num < 0) num += static_cast<long>(pk);
    if (den < 0) den += static_cast<long>(pk);
    Int inv;
    Int mod(static_cast<long>(pk));
    ensure(mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) != 0,
           "denominator not a unit modulo p^k");
    Int r = (num * inv) % mod;
    return r.get_ui();
}

}  // namespace theta
