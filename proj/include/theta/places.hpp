#pragma once

#include <compare>
#include <set>
#include <string>

#include "theta/errors.hpp"
#include "theta/numeric.hpp"

namespace theta {

/// A place of Q: the real place or a finite prime.
struct Place {
    // 0 encodes the real place, otherwise the prime p.
    unsigned long p = 0;

    static Place real() { return Place{0}; }
    static Place finite(unsigned long prime) {
        require(is_prime(prime), "finite place needs a prime");
        return Place{prime};
    }

    bool is_real() const { return p == 0; }

    auto operator<=>(const Place&) const = default;

    std::string to_string() const { return is_real() ? "infty" : std::to_string(p); }

    static Place from_string(const std::string& s) {
        if (s == "infty" || s == "real" || s == "oo") return real();
        try {
            unsigned long v = std::stoul(s);
            return finite(v);
        } catch (const input_error&) {
            throw;
        } catch (...) {
            throw input_error("bad place: " + s);
        }
    }
};

/// E = Q(sqrt(d)), d squarefree, d != 0, 1.
struct QuadExt {
    long d;

    explicit QuadExt(long d_) : d(d_) {
        require(d != 0 && d != 1, "d must not be 0 or 1");
        require(is_squarefree(Int(d)), "d must be squarefree");
    }
};

enum class PlaceBehavior { split, inert, ramified };

inline std::string to_string(PlaceBehavior b) {
    switch (b) {
        case PlaceBehavior::split: return "split";
        case PlaceBehavior::inert: return "inert";
        case PlaceBehavior::ramified: return "ramified";
    }
    return "?";
}

/// Hilbert symbol (a,b)_v over Q_v: +1 iff z^2 = a x^2 + b y^2 has a
/// nontrivial solution in the completion at v.
inline int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    require(a != 0 && b != 0, "hilbert symbol needs nonzero arguments");
    if (v.is_real()) return (a < 0 && b < 0) ? -1 : +1;
    const unsigned long p = v.p;
    const long alpha = p_valuation(a, p);
    const long beta = p_valuation(b, p);
    const Rational u = p_unit_part(a, p);
    const Rational w = p_unit_part(b, p);
    if (p != 2) {
        int s = +1;
        if ((alpha * beta) % 2 != 0 && legendre(Int(-1), p) == -1) s = -s;
        if (beta % 2 != 0 && legendre(Int(unit_mod(u, p)), p) == -1) s = -s;
        if (alpha % 2 != 0 && legendre(Int(unit_mod(w, p)), p) == -1) s = -s;
        return s;
    }
    // p = 2: (-1)^( eps(u)eps(w) + alpha*omega(w) + beta*omega(u) )
    auto eps2 = [](unsigned long m8) { return ((m8 - 1) / 2) % 2; };   // (u-1)/2 mod 2
    auto omega2 = [](unsigned long m8) { return ((m8 * m8 - 1) / 8) % 2; };  // (u^2-1)/8
    const unsigned long um = unit_mod(u, 8);
    const unsigned long wm = unit_mod(w, 8);
    unsigned long expo = eps2(um) * eps2(wm);
    expo += static_cast<unsigned long>(((alpha % 2) + 2) % 2) * omega2(wm);
    expo += static_cast<unsigned long>(((beta % 2) + 2) % 2) * omega2(um);
    return (expo % 2 == 0) ? +1 : -1;
}

/// omega_{E/F}(x) at v: +1 iff x is a local norm from E_v = Q_v(sqrt(d)).
inline int omega_EF(const Rational& x, const QuadExt& ext, const Place& v) {
    require(x != 0, "omega_EF needs a nonzero argument");
    return hilbert_symbol(x, Rational(ext.d), v);
}

/// Splitting behavior of E = Q(sqrt(d)) at v.
inline PlaceBehavior place_behavior(const QuadExt& ext, const Place& v) {
    const long d = ext.d;
    if (v.is_real()) return d > 0 ? PlaceBehavior::split : PlaceBehavior::inert;
    const unsigned long p = v.p;
    if (p == 2) {
        long m = ((d % 4) + 4) % 4;
        if (m != 1) return PlaceBehavior::ramified;  // 2 | disc(E) = 4d
        long m8 = ((d % 8) + 8) % 8;
        return m8 == 1 ? PlaceBehavior::split : PlaceBehavior::inert;
    }
    if (d % static_cast<long>(p) == 0) return PlaceBehavior::ramified;
    return legendre(Int(d), p) == +1 ? PlaceBehavior::split : PlaceBehavior::inert;
}

/// Places where (a,b)_v can be nontrivial: the real place and primes
/// dividing 2, the numerators and the denominators.
inline std::set<Place> hilbert_support(const Rational& a, const Rational& b) {
    std::set<Place> s;
    s.insert(Place::real());
    s.insert(Place::finite(2));
    for (const Rational* x : {&a, &b}) {
        for (unsigned long p : prime_factors(x->get_num())) s.insert(Place::finite(p));
        for (unsigned long p : prime_factors(x->get_den())) s.insert(Place::finite(p));
    }
    return s;
}

/// Non-split places relevant to sign data of x relative to E = Q(sqrt(d)).
inline std::set<Place> omega_support(const Rational& x, const QuadExt& ext) {
    std::set<Place> s = hilbert_support(x, Rational(ext.d));
    std::set<Place> out;
    for (const Place& v : s)
        if (place_behavior(ext, v) != PlaceBehavior::split) out.insert(v);
    return out;
}

}  // namespace theta
