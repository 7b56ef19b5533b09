#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "theta/errors.hpp"
#include "theta/numeric.hpp"

namespace theta {

/// Rank-2 weight lattice with a declared symmetric pairing.
struct Lattice {
    std::string name;
    std::array<std::array<long, 2>, 2> pairing;

    long form(const std::array<long, 2>& x, const std::array<long, 2>& y) const {
        long s = 0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) s += x[i] * pairing[i][j] * y[j];
        return s;
    }
};

using Weight = std::array<long, 2>;

/// Weight multiset of a (virtual) representation on a fixed lattice.
class FormalCharacter {
   public:
    FormalCharacter() = default;
    explicit FormalCharacter(std::string lattice) : lattice_(std::move(lattice)) {}

    const std::string& lattice() const { return lattice_; }
    const std::map<Weight, long>& weights() const { return mult_; }

    void add(const Weight& w, long m = 1) {
        require(m >= 0, "multiplicities are nonnegative");
        if (m == 0) return;
        mult_[w] += m;
    }

    long multiplicity(const Weight& w) const {
        auto it = mult_.find(w);
        return it == mult_.end() ? 0 : it->second;
    }

    long dim() const {
        long d = 0;
        for (const auto& [w, m] : mult_) d += m;
        return d;
    }

    friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) {
        return a.lattice_ == b.lattice_ && a.mult_ == b.mult_;
    }

    /// Multiset difference a \ b and b \ a, for failure reports.
    static std::string diff(const FormalCharacter& a, const FormalCharacter& b) {
        std::string out;
        auto render = [](const Weight& w, long m) {
            return "(" + std::to_string(w[0]) + "," + std::to_string(w[1]) +
                   ")x" + std::to_string(m) + " ";
        };
        for (const auto& [w, m] : a.mult_) {
            long d = m - b.multiplicity(w);
            if (d > 0) out += "+" + render(w, d);
        }
        for (const auto& [w, m] : b.mult_) {
            long d = m - a.multiplicity(w);
            if (d > 0) out += "-" + render(w, d);
        }
        return out;
    }

   private:
    std::string lattice_;
    std::map<Weight, long> mult_;
};

inline FormalCharacter direct_sum(const FormalCharacter& a, const FormalCharacter& b) {
    require(a.lattice() == b.lattice(), "lattice mismatch in direct sum");
    FormalCharacter r = a;
    for (const auto& [w, m] : b.weights()) r.add(w, m);
    return r;
}

inline FormalCharacter tensor(const FormalCharacter& a, const FormalCharacter& b) {
    require(a.lattice() == b.lattice(), "lattice mismatch in tensor product");
    FormalCharacter r(a.lattice());
    for (const auto& [w1, m1] : a.weights())
        for (const auto& [w2, m2] : b.weights())
            r.add({w1[0] + w2[0], w1[1] + w2[1]}, m1 * m2);
    return r;
}

inline FormalCharacter dual(const FormalCharacter& a) {
    FormalCharacter r(a.lattice());
    for (const auto& [w, m] : a.weights()) r.add({-w[0], -w[1]}, m);
    return r;
}

/// k-th symmetric power of the representation with the given weights.
inline FormalCharacter sym_power(const FormalCharacter& a, long k) {
    require(k >= 0, "symmetric power needs k >= 0");
    // dp over the weight instances; dp[j] = character of Sym^j so far
    std::vector<FormalCharacter> dp(static_cast<size_t>(k) + 1,
                                    FormalCharacter(a.lattice()));
    dp[0].add({0, 0}, 1);
    for (const auto& [w, m] : a.weights()) {
        for (long copy = 0; copy < m; ++copy) {
            // include this basis vector with any exponent j
            for (long deg = k; deg >= 1; --deg) {
                for (long j = 1; j <= deg; ++j) {
                    for (const auto& [base, bm] :
                         dp[static_cast<size_t>(deg - j)].weights())
                        dp[static_cast<size_t>(deg)].add(
                            {base[0] + j * w[0], base[1] + j * w[1]}, bm);
                }
            }
        }
    }
    return dp[static_cast<size_t>(k)];
}

/// Restriction along a linear map of lattices: w -> M w (rows of M give
/// the target coordinates).
inline FormalCharacter restrict_along(const FormalCharacter& a,
                                      const std::array<std::array<long, 2>, 2>& M,
                                      const std::string& target_lattice) {
    FormalCharacter r(target_lattice);
    for (const auto& [w, m] : a.weights())
        r.add({M[0][0] * w[0] + M[0][1] * w[1], M[1][0] * w[0] + M[1][1] * w[1]}, m);
    return r;
}

// ---------------------------------------------------------------------------
// Fixed lattices.
//
// g2: coordinates (m, n) meaning m*alpha + n*beta for the simple roots
//     alpha (short) and beta (long); pairing normalizes |alpha|^2 = 2.
// a2: fundamental-weight coordinates of SL3.
// sl2sl2: (weight on the first SL2, weight on the second SL2).
// c2: orthonormal coordinates (e1, e2) for Sp4.
// ---------------------------------------------------------------------------

inline const Lattice& g2_lattice() {
    static const Lattice L{"g2", {{{2, -3}, {-3, 6}}}};
    return L;
}

inline const Lattice& sl2sl2_lattice() {
    static const Lattice L{"sl2sl2", {{{2, 0}, {0, 2}}}};
    return L;
}

inline const Lattice& a2_lattice() {
    // Gram matrix of the fundamental weights of A2, scaled by 3.
    static const Lattice L{"a2", {{{2, 1}, {1, 2}}}};
    return L;
}

inline const Lattice& c2_lattice() {
    static const Lattice L{"c2", {{{1, 0}, {0, 1}}}};
    return L;
}

struct G2RootData {
    std::vector<Weight> roots;
    std::vector<Weight> long_roots;
    std::vector<Weight> short_roots;
    std::pair<Weight, Weight> orthogonal_pair;  // (long, short)
};

/// The twelve G2 roots in (alpha, beta) coordinates, split by length,
/// with one mutually orthogonal long/short pair.
inline G2RootData g2_root_data() {
    const Lattice& L = g2_lattice();
    G2RootData out;
    const std::vector<Weight> positive = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
    for (const Weight& w : positive) {
        out.roots.push_back(w);
        out.roots.push_back({-w[0], -w[1]});
    }
    for (const Weight& w : out.roots) {
        long len2 = L.form(w, w);
        if (len2 == 2)
            out.short_roots.push_back(w);
        else if (len2 == 6)
            out.long_roots.push_back(w);
        else
            throw invariant_violation("unexpected root length");
    }
    ensure(out.roots.size() == 12 && out.long_roots.size() == 6 &&
               out.short_roots.size() == 6,
           "root count mismatch");
    std::optional<std::pair<Weight, Weight>> pair;
    for (const Weight& l : out.long_roots)
        for (const Weight& s : out.short_roots)
            if (!pair && L.form(l, s) == 0) pair = {l, s};
    ensure(pair.has_value(), "no orthogonal long/short pair found");
    out.orthogonal_pair = *pair;
    return out;
}

// Simple reflections, used by the Weyl-invariance checks.
inline Weight g2_reflect_alpha(const Weight& w) {
    // <w, alpha^vee> = 2m - 3n
    long c = 2 * w[0] - 3 * w[1];
    return {w[0] - c, w[1]};
}
inline Weight g2_reflect_beta(const Weight& w) {
    // <w, beta^vee> = -m + 2n
    long c = -w[0] + 2 * w[1];
    return {w[0], w[1] - c};
}
inline Weight a2_reflect(const Weight& w, int i) {
    if (i == 1) return {-w[0], w[0] + w[1]};
    return {w[0] + w[1], -w[1]};
}
inline Weight sl2sl2_reflect(const Weight& w, int i) {
    if (i == 1) return {-w[0], w[1]};
    return {w[0], -w[1]};
}
inline Weight c2_reflect(const Weight& w, int i) {
    if (i == 1) return {w[1], w[0]};  // swap e1, e2 (reflection in e1 - e2)
    return {w[0], -w[1]};             // reflection in 2 e2
}

inline bool weyl_invariant(const FormalCharacter& ch) {
    auto image_equal = [&ch](auto reflect) {
        FormalCharacter img(ch.lattice());
        for (const auto& [w, m] : ch.weights()) img.add(reflect(w), m);
        return img == ch;
    };
    if (ch.lattice() == "g2")
        return image_equal(g2_reflect_alpha) && image_equal(g2_reflect_beta);
    if (ch.lattice() == "a2")
        return image_equal([](const Weight& w) { return a2_reflect(w, 1); }) &&
               image_equal([](const Weight& w) { return a2_reflect(w, 2); });
    if (ch.lattice() == "sl2sl2")
        return image_equal([](const Weight& w) { return sl2sl2_reflect(w, 1); }) &&
               image_equal([](const Weight& w) { return sl2sl2_reflect(w, 2); });
    if (ch.lattice() == "c2")
        return image_equal([](const Weight& w) { return c2_reflect(w, 1); }) &&
               image_equal([](const Weight& w) { return c2_reflect(w, 2); });
    throw input_error("unknown lattice " + ch.lattice());
}

// Standard characters.

inline FormalCharacter g2_seven_dim() {
    FormalCharacter ch("g2");
    ch.add({0, 0});
    for (const Weight& w : g2_root_data().short_roots) ch.add(w);
    return ch;
}

inline FormalCharacter g2_adjoint() {
    FormalCharacter ch("g2");
    ch.add({0, 0}, 2);
    for (const Weight& w : g2_root_data().roots) ch.add(w);
    return ch;
}

inline FormalCharacter a2_std3() {
    FormalCharacter ch("a2");
    ch.add({1, 0});
    ch.add({-1, 1});
    ch.add({0, -1});
    return ch;
}

inline FormalCharacter a2_trivial() {
    FormalCharacter ch("a2");
    ch.add({0, 0});
    return ch;
}

inline FormalCharacter a2_adjoint() {
    FormalCharacter ch("a2");
    ch.add({0, 0}, 2);
    for (const Weight& w : {Weight{2, -1}, Weight{-1, 2}, Weight{1, 1}}) {
        ch.add(w);
        ch.add({-w[0], -w[1]});
    }
    return ch;
}

// SL2 x SL2 building blocks: factor 0 is the first coordinate.
inline FormalCharacter sl2sl2_std(int factor) {
    FormalCharacter ch("sl2sl2");
    if (factor == 0) {
        ch.add({1, 0});
        ch.add({-1, 0});
    } else {
        ch.add({0, 1});
        ch.add({0, -1});
    }
    return ch;
}

inline FormalCharacter sl2sl2_trivial() {
    FormalCharacter ch("sl2sl2");
    ch.add({0, 0});
    return ch;
}

// Restriction matrices (maximal-rank subgroups share the torus, so these
// are plain lattice maps).
//
// To SL3: fundamental-weight coordinates along the long-root A2 subsystem
// with simple roots beta and 3 alpha + beta.
inline constexpr std::array<std::array<long, 2>, 2> kG2ToA2 = {{{-1, 2}, {1, -1}}};
// To SL2 x SL2: pairings with the coroots of the orthogonal pair
// (3 alpha + 2 beta long, alpha short): (m, n) -> (n, 2m - 3n).
inline constexpr std::array<std::array<long, 2>, 2> kG2ToSl2Sl2 = {{{0, 1}, {2, -3}}};
// Swapped convention (short factor first), used to certify uniqueness.
inline constexpr std::array<std::array<long, 2>, 2> kG2ToSl2Sl2Swapped = {
    {{2, -3}, {0, 1}}};
// Sp4 to the two commuting SL2's along the long roots 2e1, 2e2.
inline constexpr std::array<std::array<long, 2>, 2> kC2ToSl2Sl2 = {{{1, 0}, {0, 1}}};

inline FormalCharacter sp4_adjoint() {
    FormalCharacter ch("c2");
    ch.add({0, 0}, 2);
    for (const Weight& w :
         {Weight{2, 0}, Weight{0, 2}, Weight{1, 1}, Weight{1, -1}}) {
        ch.add(w);
        ch.add({-w[0], -w[1]});
    }
    return ch;
}

struct BranchingCheck {
    std::string name;
    bool ok;
    long dim_lhs;
    long dim_rhs;
    std::string mismatch;  // empty when ok
};

struct BranchingReport {
    std::vector<BranchingCheck> checks;
    bool all_ok = true;
    // convention certification: does the swapped tensor-factor convention
    // also satisfy the two SL2 x SL2 identities?
    bool swapped_convention_passes = false;
    std::string convention_note;
};

namespace detail {

inline BranchingCheck compare(const std::string& name, const FormalCharacter& lhs,
                              const FormalCharacter& rhs) {
    BranchingCheck c{name, lhs == rhs, lhs.dim(), rhs.dim(), ""};
    if (!c.ok) c.mismatch = FormalCharacter::diff(lhs, rhs);
    return c;
}

inline FormalCharacter sl2sl2_expected_seven() {
    // std (x) std + 1 (x) Sym^2 std
    FormalCharacter f = tensor(sl2sl2_std(0), sl2sl2_std(1));
    FormalCharacter sym2 = sym_power(sl2sl2_std(1), 2);
    return direct_sum(f, sym2);
}

inline FormalCharacter sl2sl2_expected_adjoint() {
    // sl2 + sl2 + std (x) Sym^3 std  (std on the long factor)
    FormalCharacter sl2_l = sym_power(sl2sl2_std(0), 2);
    FormalCharacter sl2_s = sym_power(sl2sl2_std(1), 2);
    FormalCharacter mixed = tensor(sl2sl2_std(0), sym_power(sl2sl2_std(1), 3));
    return direct_sum(direct_sum(sl2_l, sl2_s), mixed);
}

inline FormalCharacter swap_factors(const FormalCharacter& ch) {
    FormalCharacter r(ch.lattice());
    for (const auto& [w, m] : ch.weights()) r.add({w[1], w[0]}, m);
    return r;
}

}  // namespace detail

/// The four restriction identities for the 7- and 14-dimensional
/// representations, as exact weight-multiset equalities, plus the
/// uniqueness certification of the tensor-factor convention.
inline BranchingReport verify_g2_branchings() {
    BranchingReport rep;
    const FormalCharacter seven = g2_seven_dim();
    const FormalCharacter adj = g2_adjoint();

    // (a) seven-dim to SL3
    FormalCharacter a_lhs = restrict_along(seven, kG2ToA2, "a2");
    FormalCharacter a_rhs = direct_sum(direct_sum(a2_std3(), a2_trivial()),
                                       dual(a2_std3()));
    rep.checks.push_back(detail::compare("seven_dim_to_sl3", a_lhs, a_rhs));

    // (b) seven-dim to SL2 x SL2
    FormalCharacter b_lhs = restrict_along(seven, kG2ToSl2Sl2, "sl2sl2");
    FormalCharacter b_rhs = detail::sl2sl2_expected_seven();
    rep.checks.push_back(detail::compare("seven_dim_to_sl2sl2", b_lhs, b_rhs));

    // (c) adjoint to SL3
    FormalCharacter c_lhs = restrict_along(adj, kG2ToA2, "a2");
    FormalCharacter c_rhs = direct_sum(direct_sum(a2_adjoint(), a2_std3()),
                                       dual(a2_std3()));
    rep.checks.push_back(detail::compare("adjoint_to_sl3", c_lhs, c_rhs));

    // (d) adjoint to SL2 x SL2
    FormalCharacter d_lhs = restrict_along(adj, kG2ToSl2Sl2, "sl2sl2");
    FormalCharacter d_rhs = detail::sl2sl2_expected_adjoint();
    rep.checks.push_back(detail::compare("adjoint_to_sl2sl2", d_lhs, d_rhs));

    for (const BranchingCheck& c : rep.checks) rep.all_ok = rep.all_ok && c.ok;

    // Convention certification: under the swapped restriction the expected
    // sides must be factor-swapped too; the question is whether the
    // *unswapped* expected sides still match.
    FormalCharacter b_sw = restrict_along(seven, kG2ToSl2Sl2Swapped, "sl2sl2");
    FormalCharacter d_sw = restrict_along(adj, kG2ToSl2Sl2Swapped, "sl2sl2");
    rep.swapped_convention_passes = (b_sw == b_rhs) && (d_sw == d_rhs);
    rep.convention_note =
        rep.swapped_convention_passes
            ? "both factor conventions satisfy the identities"
            : "unique convention: the std tensor factor sits on the long SL2";
    return rep;
}

// ---------------------------------------------------------------------------
// Satake classes.
// ---------------------------------------------------------------------------

/// Unitary phase: an integer power of a named unitary unknown (or an
/// explicit root of unity when base is "1").  Unitary values satisfy
/// conj = inverse, so conjugation negates the exponent.
struct Phase {
    std::string base = "1";
    long exponent = 0;  // base^exponent; base "1" forces exponent 0

    static Phase one() { return Phase{"1", 0}; }
    static Phase unknown(const std::string& name, long e = 1) {
        return e == 0 ? one() : Phase{name, e};
    }

    Phase conj() const { return Phase{base, -exponent}; }

    friend bool operator==(const Phase&, const Phase&) = default;
    friend auto operator<=>(const Phase&, const Phase&) = default;

    std::string display() const {
        if (exponent == 0) return "1";
        if (exponent == 1) return base;
        return base + "^" + std::to_string(exponent);
    }
};

/// Satake parameter data: eigenvalue magnitudes q^e with unitary phases.
struct SatakeClass {
    std::vector<std::pair<Rational, Phase>> eigenvalues;

    void add(Rational e, const Phase& p) {
        e.canonicalize();
        eigenvalues.push_back({std::move(e), p});
    }

    /// Closure under (e, zeta) -> (-e, conj zeta); meaningful for the
    /// families landing in a symplectic or orthogonal dual group.
    bool self_dual_closed() const {
        std::multiset<std::pair<std::string, std::string>> lhs, rhs;
        for (const auto& [e, p] : eigenvalues) {
            lhs.insert({e.get_str(), p.display()});
            Rational me = -e;
            rhs.insert({me.get_str(), p.conj().display()});
        }
        return lhs == rhs;
    }

    std::multiset<std::string> exponent_multiset() const {
        std::multiset<std::string> out;
        for (const auto& [e, p] : eigenvalues) out.insert(e.get_str());
        return out;
    }
};

inline bool is_tempered(const SatakeClass& s) {
    for (const auto& [e, p] : s.eigenvalues)
        if (e != 0) return false;
    return true;
}

enum class ParameterFamily { HPS_U3, SK, G2_short, G2_long, HPS_Sp4, tempered };

inline std::string to_string(ParameterFamily f) {
    switch (f) {
        case ParameterFamily::HPS_U3: return "HPS_U3";
        case ParameterFamily::SK: return "SK";
        case ParameterFamily::G2_short: return "G2_short";
        case ParameterFamily::G2_long: return "G2_long";
        case ParameterFamily::HPS_Sp4: return "HPS_Sp4";
        case ParameterFamily::tempered: return "tempered";
    }
    return "?";
}

struct LocalParameterPoint {
    ParameterFamily family;
    unsigned long q;                              // residue size, for display
    Phase chi_frob = Phase::unknown("chi");       // HPS: chi_v(Frob)
    Phase mu_frob = Phase::unknown("mu", 1);      // HPS_U3: mu~_v(Frob)
    Phase tau_alpha = Phase::unknown("alpha");    // SK / G2: GL2 Satake phase
    bool ramified = false;
    int rank = 3;  // tempered: how many eigenvalues to emit
};

/// Satake parameter of the unramified representation attached to the
/// parameter at one place: eigenvalue data of Frob x diag(q^1/2, q^-1/2)
/// in the standard representation of the dual group (the 7-dimensional
/// one for the exceptional family).
inline SatakeClass satake_of_parameter(const LocalParameterPoint& pt) {
    require(!pt.ramified, "satake data needs an unramified place");
    SatakeClass s;
    auto pw = [](const Phase& p, long k) {
        return Phase::unknown(p.base, p.exponent * k);
    };
    switch (pt.family) {
        case ParameterFamily::HPS_U3:
            // mu + chi (x) S2 on the dual side: unramified constituent of
            // the principal series with chi |.|^(1/2) x mu~.
            s.add(Rational(1, 2), pt.chi_frob);
            s.add(Rational(0), pt.mu_frob);
            s.add(Rational(-1, 2), pt.chi_frob);
            break;
        case ParameterFamily::SK:
            // GL2 phases {alpha, 1/alpha} tensored with diag(q^1/2, q^-1/2)
            for (long a : {1L, -1L})
                for (long h : {1L, -1L})
                    s.add(Rational(h, 2), pw(pt.tau_alpha, a));
            break;
        case ParameterFamily::HPS_Sp4:
            for (long a : {1L, -1L})
                for (long h : {1L, -1L})
                    s.add(Rational(h, 2), pw(pt.chi_frob, a));
            break;
        case ParameterFamily::G2_short:
            // seven-dim rep: std (x) std plus 1 (x) Sym^2(Arthur short)
            for (long a : {1L, -1L})
                for (long h : {1L, -1L})
                    s.add(Rational(h, 2), pw(pt.tau_alpha, a));
            for (long e : {1L, 0L, -1L}) s.add(Rational(e), Phase::one());
            break;
        case ParameterFamily::G2_long:
            // seven-dim rep: std (x) std plus 1 (x) Sym^2(rho on short)
            for (long a : {1L, -1L})
                for (long h : {1L, -1L})
                    s.add(Rational(h, 2), pw(pt.tau_alpha, a));
            for (long a : {2L, 0L, -2L}) s.add(Rational(0), pw(pt.tau_alpha, a));
            break;
        case ParameterFamily::tempered:
            for (int i = 0; i < pt.rank; ++i) s.add(Rational(0), Phase::one());
            break;
    }
    return s;
}

/// Satake exponents of the trivial representation: the modulus-character
/// ladder {(n-1)/2, ..., -(n-1)/2} in rank n (so {1, 0, -1} for the
/// quasi-split rank-three unitary group).
inline SatakeClass trivial_representation_satake(int n) {
    SatakeClass s;
    for (int i = 0; i < n; ++i) s.add(Rational(n - 1 - 2 * i, 2), Phase::one());
    return s;
}

}  // namespace theta
