#pragma once

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "theta/errors.hpp"
#include "theta/numeric.hpp"

namespace theta {

namespace detail {

// Monic integer polynomials, lowest degree first.
using IPoly = std::vector<Int>;

inline IPoly ipoly_x_pow_minus_one(unsigned long n) {
    IPoly p(n + 1, Int(0));
    p[0] = -1;
    p[n] = 1;
    return p;
}

// Exact division of integer polynomials (remainder must vanish).
inline IPoly ipoly_divide_exact(IPoly num, const IPoly& den) {
    ensure(!den.empty() && den.back() == 1, "divisor must be monic");
    IPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
    for (long i = static_cast<long>(num.size()) - 1;
         i >= static_cast<long>(den.size()) - 1; --i) {
        Int c = num[i];
        if (c == 0) continue;
        long shift = i - (static_cast<long>(den.size()) - 1);
        q[shift] = c;
        for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    }
    for (const Int& c : num) ensure(c == 0, "inexact polynomial division");
    while (q.size() > 1 && q.back() == 0) q.pop_back();
    return q;
}

inline const IPoly& cyclotomic_poly(unsigned long n) {
    static std::map<unsigned long, IPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    IPoly p = ipoly_x_pow_minus_one(n);
    for (unsigned long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        // Recursion depth is a divisor chain; compute iteratively via cache.
        IPoly pd;
        {
            auto jt = cache.find(d);
            if (jt != cache.end()) {
                pd = jt->second;
            } else {
                IPoly t = ipoly_x_pow_minus_one(d);
                for (unsigned long e = 1; e < d; ++e)
                    if (d % e == 0) t = ipoly_divide_exact(t, cache.at(e));
                cache[d] = t;
                pd = t;
            }
        }
        p = ipoly_divide_exact(p, pd);
    }
    return cache.emplace(n, std::move(p)).first->second;
}

using QPoly = std::vector<Rational>;

inline void qpoly_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    qpoly_trim(r);
    return r;
}

// Remainder of p modulo the monic integer polynomial m.
inline QPoly qpoly_mod(QPoly p, const IPoly& m) {
    const size_t dm = m.size() - 1;
    qpoly_trim(p);
    while (p.size() > dm) {
        Rational c = p.back();
        size_t shift = p.size() - 1 - dm;
        for (size_t j = 0; j < m.size(); ++j) p[shift + j] -= c * Rational(m[j]);
        qpoly_trim(p);
    }
    return p;
}

// Extended Euclid over Q[x]: returns u with u*f = 1 mod m (f nonzero mod m,
// m irreducible).
inline QPoly qpoly_inverse_mod(const QPoly& f, const IPoly& m) {
    QPoly r0(m.begin(), m.end());
    QPoly r1 = qpoly_mod(f, m);
    ensure(!r1.empty(), "inverse of zero");
    QPoly s0 = {}, s1 = {Rational(1)};
    while (true) {
        qpoly_trim(r1);
        if (r1.size() == 1) break;
        // divide r0 by r1
        QPoly q;
        QPoly rem = r0;
        qpoly_trim(rem);
        long dr = static_cast<long>(r1.size()) - 1;
        q.assign(rem.size() > r1.size() ? rem.size() - r1.size() + 1 : 1, Rational(0));
        while (static_cast<long>(rem.size()) - 1 >= dr && !rem.empty()) {
            Rational c = rem.back() / r1.back();
            long shift = static_cast<long>(rem.size()) - 1 - dr;
            q[shift] += c;
            for (size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= c * r1[j];
            qpoly_trim(rem);
        }
        QPoly s2 = s0;
        {
            QPoly qs1 = qpoly_mul(q, s1);
            if (s2.size() < qs1.size()) s2.resize(qs1.size(), Rational(0));
            for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
            qpoly_trim(s2);
        }
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
        ensure(!r1.empty(), "polynomials not coprime");
    }
    Rational lead = r1[0];
    QPoly u = s1;
    for (auto& c : u) c /= lead;
    return qpoly_mod(u, m);
}

}  // namespace detail

/// Exact element of Q(zeta_N), stored reduced modulo the N-th cyclotomic
/// polynomial in the power basis 1, zeta, ..., zeta^(phi(N)-1).
class Cyclotomic {
   public:
    Cyclotomic() : order_(1), c_{Rational(0)} {}

    explicit Cyclotomic(const Rational& r, unsigned long order = 1)
        : order_(order), c_{r} {
        require(order >= 1, "order must be positive");
        c_[0].canonicalize();
        normalize_();
    }

    explicit Cyclotomic(long n) : Cyclotomic(Rational(n)) {}

    // Sum of c_k * zeta_order^k from an exponent->coefficient list.
    Cyclotomic(unsigned long order, const std::vector<Rational>& raw_coeffs)
        : order_(order) {
        require(order >= 1, "order must be positive");
        detail::QPoly p(raw_coeffs.begin(), raw_coeffs.end());
        for (auto& c : p) c.canonicalize();
        c_ = detail::qpoly_mod(std::move(p), detail::cyclotomic_poly(order_));
        normalize_();
    }

    static Cyclotomic zeta(unsigned long order, long exponent = 1) {
        require(order >= 1, "order must be positive");
        long e = exponent % static_cast<long>(order);
        if (e < 0) e += static_cast<long>(order);
        std::vector<Rational> raw(static_cast<size_t>(e) + 1, Rational(0));
        raw[static_cast<size_t>(e)] = 1;
        return Cyclotomic(order, raw);
    }

    unsigned long order() const { return order_; }

    bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }

    bool is_rational() const { return c_.size() == 1; }

    Rational to_rational() const {
        ensure(is_rational(), "value is not rational");
        return c_[0];
    }

    // Image in Q(zeta_m); requires order | m.
    Cyclotomic embedded(unsigned long m) const {
        require(m % order_ == 0, "embedding target must be a multiple of the order");
        if (m == order_) return *this;
        unsigned long step = m / order_;
        std::vector<Rational> raw(order_ * step, Rational(0));
        for (size_t k = 0; k < c_.size(); ++k) raw[k * step] = c_[k];
        return Cyclotomic(m, raw);
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = to_common(a, b);
        detail::QPoly p = x.c_;
        if (p.size() < y.c_.size()) p.resize(y.c_.size(), Rational(0));
        for (size_t i = 0; i < y.c_.size(); ++i) p[i] += y.c_[i];
        return from_reduced(x.order_, std::move(p));
    }

    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        return a + (-b);
    }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = to_common(a, b);
        detail::QPoly p = detail::qpoly_mul(x.c_, y.c_);
        p = detail::qpoly_mod(std::move(p), detail::cyclotomic_poly(x.order_));
        return from_reduced(x.order_, std::move(p));
    }

    friend Cyclotomic operator*(const Rational& r, const Cyclotomic& a) {
        Cyclotomic out = a;
        for (auto& x : out.c_) x *= r;
        out.normalize_();
        return out;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    // Complex conjugation zeta -> zeta^(-1).
    Cyclotomic conj() const {
        std::vector<Rational> raw(order_, Rational(0));
        for (size_t k = 0; k < c_.size(); ++k) {
            size_t e = (k == 0) ? 0 : order_ - k;
            raw[e] += c_[k];
        }
        return Cyclotomic(order_, raw);
    }

    Cyclotomic inverse() const {
        ensure(!is_zero(), "inverse of zero");
        detail::QPoly u = detail::qpoly_inverse_mod(c_, detail::cyclotomic_poly(order_));
        return from_reduced(order_, std::move(u));
    }

    Cyclotomic pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Cyclotomic acc(Rational(1), order_);
        Cyclotomic base = *this;
        unsigned long n = static_cast<unsigned long>(e);
        while (n) {
            if (n & 1) acc *= base;
            base *= base;
            n >>= 1;
        }
        return acc;
    }

    // |x|^2 = x * conj(x).
    Cyclotomic norm2() const { return *this * conj(); }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = to_common(a, b);
        return x.c_ == y.c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) {
        return !(a == b);
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    std::string to_string() const {
        if (is_rational()) return c_[0].get_str();
        std::ostringstream os;
        bool first = true;
        for (size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            if (!first) os << " + ";
            os << "(" << c_[k].get_str() << ")";
            if (k > 0) os << "*z" << order_ << "^" << k;
            first = false;
        }
        return os.str();
    }

   private:
    static Cyclotomic from_reduced(unsigned long order, detail::QPoly p) {
        Cyclotomic r;
        r.order_ = order;
        r.c_ = std::move(p);
        r.normalize_();
        return r;
    }

    static std::pair<Cyclotomic, Cyclotomic> to_common(const Cyclotomic& a,
                                                       const Cyclotomic& b) {
        if (a.order_ == b.order_) return {a, b};
        unsigned long m = std::lcm(a.order_, b.order_);
        return {a.embedded(m), b.embedded(m)};
    }

    void normalize_() {
        detail::qpoly_trim(c_);
        if (c_.empty()) c_.push_back(Rational(0));
    }

    unsigned long order_;
    std::vector<Rational> c_;
};

inline Cyclotomic operator*(const Cyclotomic& a, const Rational& r) { return r * a; }

// Field hooks for generic exact linear algebra.
inline Cyclotomic conj_value(const Cyclotomic& x) { return x.conj(); }
inline Cyclotomic field_inverse(const Cyclotomic& x) { return x.inverse(); }

}  // namespace theta
