#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "theta/errors.hpp"
#include "theta/matrix.hpp"
#include "theta/places.hpp"

namespace theta {

/// Element a + b*sqrt(d) of E = Q(sqrt(d)).
struct EElement {
    Rational a, b;
    long d = -1;  // the extension's d; elements of different d never mix

    EElement() : a(0), b(0) {}
    EElement(Rational a_, Rational b_, long d_) : a(std::move(a_)), b(std::move(b_)), d(d_) {
        this->a.canonicalize();
        this->b.canonicalize();
    }
    explicit EElement(long n) : a(n), b(0) {}  // rational constant; d-agnostic

    static EElement rational(const Rational& r, long d) { return EElement(r, Rational(0), d); }
    static EElement sqrt_d(long d) { return EElement(Rational(0), Rational(1), d); }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    EElement conj() const { return EElement(a, -b, d); }
    Rational trace() const { return 2 * a; }
    Rational norm() const { return a * a - Rational(d) * b * b; }

    long common_d(const EElement& o) const {
        if (b == 0 && a == 0) return o.d;
        if (o.b == 0 && o.a == 0) return d;
        if (b == 0 && o.b == 0) return d;  // rationals mix freely
        require(d == o.d || b == 0 || o.b == 0, "mixing different quadratic fields");
        return b != 0 ? d : o.d;
    }

    friend EElement operator+(const EElement& x, const EElement& y) {
        long d = x.common_d(y);
        return EElement(x.a + y.a, x.b + y.b, d);
    }
    friend EElement operator-(const EElement& x, const EElement& y) {
        long d = x.common_d(y);
        return EElement(x.a - y.a, x.b - y.b, d);
    }
    EElement operator-() const { return EElement(-a, -b, d); }
    friend EElement operator*(const EElement& x, const EElement& y) {
        long d = x.common_d(y);
        return EElement(x.a * y.a + Rational(d) * x.b * y.b, x.a * y.b + x.b * y.a, d);
    }
    friend bool operator==(const EElement& x, const EElement& y) {
        return x.a == y.a && x.b == y.b;
    }
    EElement& operator+=(const EElement& o) { return *this = *this + o; }
    EElement& operator-=(const EElement& o) { return *this = *this - o; }
    EElement& operator*=(const EElement& o) { return *this = *this * o; }

    EElement inverse() const {
        Rational n = norm();
        require(n != 0, "inverse of zero in E");
        return EElement(a / n, -b / n, d);
    }

    EElement pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        EElement acc(1);
        acc.d = d;
        EElement base = *this;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    std::string to_string() const {
        return a.get_str() + (b >= 0 ? "+" : "") + b.get_str() + "*sqrt(" +
               std::to_string(d) + ")";
    }
};

inline EElement conj_value(const EElement& x) { return x.conj(); }
inline EElement field_inverse(const EElement& x) { return x.inverse(); }

/// Gram matrix of an epsilon-Hermitian form over E = Q(sqrt(d)).
struct GramMatrix {
    QuadExt ext;
    int eps;  // +1 Hermitian, -1 skew-Hermitian
    Matrix<EElement> entries;

    GramMatrix(QuadExt e, int eps_, Matrix<EElement> m)
        : ext(e), eps(eps_), entries(std::move(m)) {
        require(eps == +1 || eps == -1, "eps must be +1 or -1");
        require(entries.rows() == entries.cols() && entries.rows() > 0,
                "Gram matrix must be square and nonempty");
        for (size_t i = 0; i < entries.rows(); ++i)
            for (size_t j = 0; j < entries.cols(); ++j) {
                EElement lhs = entries(j, i).conj();
                EElement rhs = (eps == +1) ? entries(i, j) : -entries(i, j);
                require(lhs == rhs, "matrix is not eps-hermitian");
            }
    }

    size_t dim() const { return entries.rows(); }

    EElement determinant() const { return entries.det(); }

    bool degenerate() const { return determinant().is_zero(); }
};

inline Rational disc_sign_factor(size_t n) {
    return (n * (n - 1) / 2) % 2 == 0 ? Rational(1) : Rational(-1);
}

/// disc(V) = (-1)^(n(n-1)/2) det(A) for a Hermitian Gram matrix; the
/// determinant is rational by the Hermitian symmetry and asserted so.
inline Rational disc(const GramMatrix& g) {
    require(g.eps == +1, "disc expects a Hermitian matrix; use skew_disc");
    EElement det = g.determinant();
    require(!det.is_zero(), "degenerate Gram matrix");
    ensure(det.is_rational(), "Hermitian determinant must be rational");
    return disc_sign_factor(g.dim()) * det.a;
}

/// F-rational representative delta^(-dim) * disc(W) of a skew-Hermitian
/// Gram matrix, relative to the supplied trace-zero delta.
inline Rational skew_disc(const GramMatrix& g, const EElement& delta) {
    require(g.eps == -1, "skew_disc expects a skew-Hermitian matrix");
    require(!delta.is_zero() && delta.trace() == 0, "delta must be nonzero of trace 0");
    EElement det = g.determinant();
    require(!det.is_zero(), "degenerate Gram matrix");
    EElement norm = delta.inverse().pow(static_cast<long>(g.dim())) * det;
    ensure(norm.is_rational(), "delta-normalized determinant must be rational");
    return disc_sign_factor(g.dim()) * norm.a;
}

/// Local isomorphism class: (dim, sign) at a non-split finite place, the
/// canonical +1 class at split places, and a signature at the real place
/// when E_v = C.
struct LocalSpaceClass {
    size_t dim = 0;
    Place place;
    // Exactly one of these is meaningful: sign at non-archimedean / split
    // places, signature when the real place is non-split.
    int sign = +1;
    std::optional<std::pair<size_t, size_t>> signature;
};

namespace detail {

// Congruent diagonalization of a Hermitian Gram matrix over E; returns the
// rational diagonal entries.
inline std::vector<Rational> hermitian_diagonal(const GramMatrix& g) {
    Matrix<EElement> m = g.entries;
    const size_t n = m.rows();
    const long d = g.ext.d;
    std::vector<Rational> out;
    std::vector<size_t> alive;
    for (size_t i = 0; i < n; ++i) alive.push_back(i);
    // Work on the full matrix, clearing one pivot at a time.
    for (size_t step = 0; step < n; ++step) {
        // find a nonzero diagonal entry among remaining indices
        size_t piv = step;
        bool found = false;
        for (size_t i = step; i < n; ++i)
            if (!m(i, i).is_zero()) {
                piv = i;
                found = true;
                break;
            }
        if (!found) {
            // all remaining diagonal entries vanish; use <v_i + v_j> trick
            bool fixed = false;
            for (size_t i = step; i < n && !fixed; ++i)
                for (size_t j = i + 1; j < n && !fixed; ++j)
                    if (!m(i, j).is_zero()) {
                        // replace v_i by v_i + lambda v_j (lambda = sqrt(d)
                        // when the cross term is traceless)
                        EElement lambda(1);
                        EElement cross = m(i, j);
                        if (cross.trace() == 0) lambda = EElement::sqrt_d(d);
                        for (size_t k = 0; k < n; ++k)
                            m(i, k) = m(i, k) + lambda * m(j, k);
                        for (size_t k = 0; k < n; ++k)
                            m(k, i) = m(k, i) + lambda.conj() * m(k, j);
                        fixed = true;
                    }
            ensure(fixed, "degenerate block during diagonalization");
            --step;
            continue;
        }
        if (piv != step) {
            for (size_t k = 0; k < n; ++k) std::swap(m(piv, k), m(step, k));
            for (size_t k = 0; k < n; ++k) std::swap(m(k, piv), m(k, step));
        }
        EElement p = m(step, step);
        ensure(p.is_rational(), "Hermitian diagonal entry must be rational");
        out.push_back(p.a);
        EElement pinv = p.inverse();
        for (size_t i = step + 1; i < n; ++i) {
            if (m(i, step).is_zero()) continue;
            EElement f = m(i, step) * pinv;
            for (size_t k = 0; k < n; ++k) m(i, k) = m(i, k) - f * m(step, k);
            for (size_t k = 0; k < n; ++k) m(k, i) = m(k, i) - f.conj() * m(k, step);
        }
    }
    return out;
}

}  // namespace detail

/// Classify a Gram matrix at one place by (dim, sign), or by signature at
/// the real place when d < 0.  The skew sign uses the delta-normalized
/// discriminant; the skew signature is that of the delta-scaled Hermitian
/// form (and so depends on delta, which callers must echo).
inline LocalSpaceClass classify_local(const GramMatrix& g, const Place& v,
                                      std::optional<EElement> delta = std::nullopt) {
    require(!g.degenerate(), "degenerate Gram matrix");
    LocalSpaceClass out;
    out.dim = g.dim();
    out.place = v;
    if (place_behavior(g.ext, v) == PlaceBehavior::split) {
        out.sign = +1;  // U(V) = GL there; no invariant beyond dim
        return out;
    }
    if (g.eps == -1) require(delta.has_value(), "skew classification needs delta");
    const Rational rep = (g.eps == +1) ? disc(g) : skew_disc(g, *delta);
    out.sign = omega_EF(rep, g.ext, v);
    if (v.is_real() && g.ext.d < 0) {
        GramMatrix h = g;
        if (g.eps == -1) {
            Matrix<EElement> scaled = g.entries;
            for (size_t i = 0; i < scaled.rows(); ++i)
                for (size_t j = 0; j < scaled.cols(); ++j)
                    scaled(i, j) = *delta * scaled(i, j);
            h = GramMatrix(g.ext, +1, scaled);
        }
        std::vector<Rational> diag = detail::hermitian_diagonal(h);
        size_t pos = 0, neg = 0;
        for (const Rational& c : diag) {
            ensure(c != 0, "zero diagonal entry on a nondegenerate form");
            (c > 0 ? pos : neg)++;
        }
        out.signature = {pos, neg};
        // omega at the real place of the Hermitian discriminant is the
        // parity the signature predicts
        int expect = ((g.dim() * (g.dim() - 1) / 2 + neg) % 2 == 0) ? +1 : -1;
        ensure(omega_EF(disc(h), g.ext, v) == expect,
               "real signature inconsistent with discriminant sign");
    }
    return out;
}

enum class SpaceKind { hermitian, skew };

/// Global eps-Hermitian space given by its local sign data: sign +1
/// everywhere outside the listed deviations.
struct GlobalSpaceDescriptor {
    QuadExt ext;
    size_t dim;
    SpaceKind kind = SpaceKind::hermitian;
    std::optional<EElement> delta;   // required for skew
    std::map<Place, int> deviations;  // non-split places carrying sign -1
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Coherence of local data: signs multiply to +1, deviations live at
/// non-split places only, skew spaces carry a valid delta.  The skew case
/// is the delta-transfer of the Hermitian statement (inferred transfer).
inline ValidationReport validate_global(const GlobalSpaceDescriptor& desc) {
    ValidationReport rep;
    auto fail = [&rep](const std::string& why) {
        rep.ok = false;
        rep.violations.push_back(why);
    };
    if (desc.dim == 0) fail("dimension must be positive");
    if (desc.kind == SpaceKind::skew) {
        if (!desc.delta.has_value())
            fail("skew descriptor needs delta");
        else if (desc.delta->is_zero() || desc.delta->trace() != 0)
            fail("delta must be nonzero of trace 0");
    }
    int prod = 1;
    for (const auto& [v, s] : desc.deviations) {
        if (s != -1 && s != +1) fail("deviation signs must be +1 or -1");
        if (place_behavior(desc.ext, v) == PlaceBehavior::split)
            fail("sign deviation at split place " + v.to_string());
        prod *= s;
    }
    if (prod != 1) fail("product of local signs is -1, not +1");
    return rep;
}

/// Replace the local spaces at two non-split places by their partners
/// (negate both signs); the result is again globally coherent.
inline GlobalSpaceDescriptor flip_two_places(const GlobalSpaceDescriptor& desc,
                                             const Place& v1, const Place& v2) {
    require(!(v1 == v2), "flip places must be distinct");
    for (const Place& v : {v1, v2})
        require(place_behavior(desc.ext, v) != PlaceBehavior::split,
                "cannot flip at the split place " + v.to_string());
    GlobalSpaceDescriptor out = desc;
    for (const Place& v : {v1, v2}) {
        auto it = out.deviations.find(v);
        if (it == out.deviations.end())
            out.deviations[v] = -1;
        else if (it->second == -1)
            out.deviations.erase(it);
        else
            it->second = -1;
    }
    ValidationReport rep = validate_global(out);
    ensure(rep.ok, "flip produced an incoherent descriptor");
    return out;
}

/// Local sign of the descriptor at a place (+1 off the deviation set).
inline int descriptor_sign(const GlobalSpaceDescriptor& desc, const Place& v) {
    auto it = desc.deviations.find(v);
    return it == desc.deviations.end() ? +1 : it->second;
}

}  // namespace theta
