#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "theta/errors.hpp"
#include "theta/hermitian.hpp"
#include "theta/places.hpp"

namespace theta {

/// Witt tower of skew-Hermitian spaces W_r = W_0 + H^r.  The discriminant
/// sign is constant along the tower.
struct WittTower {
    QuadExt ext;
    int base_dim;  // dim W_0, one of 0, 1, 2
    int sign;      // tower sign, constant in r

    WittTower(QuadExt e, int base, int s) : ext(e), base_dim(base), sign(s) {
        require(base >= 0 && base <= 2, "anisotropic base has dimension 0, 1 or 2");
        require(s == +1 || s == -1, "tower sign must be +1 or -1");
    }

    bool odd_parity() const { return base_dim % 2 == 1; }
    int dim_at(int r) const {
        require(r >= 0, "tower step must be nonnegative");
        return base_dim + 2 * r;
    }

    /// The other tower of the same parity.
    WittTower partner() const {
        int other_base = odd_parity() ? 1 : (base_dim == 0 ? 2 : 0);
        return WittTower(ext, other_base, -sign);
    }
};

/// First-occurrence data on the two towers of one parity.
struct FirstOccurrence {
    int dimV;
    WittTower tower_a;
    int r0_a;
    WittTower tower_b;
    int r0_b;
    bool r0_warning = false;  // set when a first occurrence exceeds dimV

    int dim_a() const { return tower_a.dim_at(r0_a); }
    int dim_b() const { return tower_b.dim_at(r0_b); }
};

enum class LocalKind { supercuspidal, irreducible_non_sc, zero };
enum class GlobalKind {
    cuspidal,
    square_integrable_noncuspidal,
    noncuspidal,
    noncuspidal_boundary,
    zero
};

inline std::string to_string(LocalKind k) {
    switch (k) {
        case LocalKind::supercuspidal: return "supercuspidal";
        case LocalKind::irreducible_non_sc: return "irreducible_non_sc";
        case LocalKind::zero: return "zero";
    }
    return "?";
}

inline std::string to_string(GlobalKind k) {
    switch (k) {
        case GlobalKind::cuspidal: return "cuspidal";
        case GlobalKind::square_integrable_noncuspidal:
            return "square_integrable_noncuspidal";
        case GlobalKind::noncuspidal: return "noncuspidal";
        case GlobalKind::noncuspidal_boundary: return "noncuspidal_boundary";
        case GlobalKind::zero: return "zero";
    }
    return "?";
}

struct LiftStatus {
    bool nonzero = false;
    std::optional<LocalKind> local_kind;
    std::optional<GlobalKind> global_kind;
    std::optional<Rational> exponent;
    bool stable_range = false;
    std::string note;
};

/// Complete the first-occurrence pair from one known index via
/// dim W_{r0} + dim W'_{r0'} = 2 dim V + 2.
inline FirstOccurrence conservation_complete(int dimV, const WittTower& known,
                                             int r0) {
    require(dimV >= 1, "dimV must be positive");
    require(r0 >= 0, "first occurrence must be nonnegative");
    WittTower other = known.partner();
    int total = 2 * dimV + 2;
    int remaining = total - known.dim_at(r0) - other.base_dim;
    require(remaining >= 0 && remaining % 2 == 0,
            "no valid partner first occurrence exists for this input");
    FirstOccurrence fo{dimV, known, r0, other, remaining / 2};
    ensure(fo.dim_a() + fo.dim_b() == total, "conservation identity violated");
    fo.r0_warning = (fo.r0_a > dimV) || (fo.r0_b > dimV);
    return fo;
}

/// Exclusivity across the two towers when dim W + dim W' = 2 dim V: the
/// lift is nonzero on exactly one side.
inline bool dichotomy(int dimV, int dimW, int dimW_prime, bool nonzero_on_W) {
    require(dimV >= 1 && dimW >= 0 && dimW_prime >= 0, "dimensions out of range");
    require(dimW + dimW_prime == 2 * dimV,
            "dichotomy needs dim W + dim W' = 2 dim V");
    require((dimW - dimW_prime) % 2 == 0,
            "dichotomy needs towers of one parity");
    return !nonzero_on_W;
}

/// Rank-one local rule: the lift to W_0 is nonzero iff
/// eps(V) * eps(W_0) equals the supplied local root number.  The root
/// number is an oracle input, already normalized with respect to the
/// delta-twisted additive character.
inline bool u1_local_nonvanishing(int epsV, int epsW0, int root_number) {
    require(epsV == 1 || epsV == -1, "epsV must be a sign");
    require(epsW0 == 1 || epsW0 == -1, "epsW0 must be a sign");
    require(root_number == 1 || root_number == -1, "root number must be a sign");
    return epsV * epsW0 == root_number;
}

struct U1LocalDatum {
    bool lift_nonzero;
    int root_number;
};

/// Rank-one global rule: nonzero iff every local lift is nonzero and the
/// central L-value is nonzero.  When all local lifts are nonzero the
/// supplied root numbers must multiply to +1, else the data set is
/// inconsistent.
inline bool u1_global_nonvanishing(const std::map<Place, U1LocalDatum>& local,
                                   bool L_half_nonzero) {
    bool all_local = true;
    int root_product = 1;
    for (const auto& [v, datum] : local) {
        require(datum.root_number == 1 || datum.root_number == -1,
                "root number must be a sign");
        all_local = all_local && datum.lift_nonzero;
        root_product *= datum.root_number;
    }
    if (all_local)
        require(root_product == +1,
                "inconsistent data: all local lifts nonzero but the root "
                "numbers multiply to -1");
    return all_local && L_half_nonzero;
}

/// Local tower status of the lift at step r given the first occurrence.
inline LiftStatus tower_status(const FirstOccurrence& fo, bool on_tower_a, int r,
                               bool pi_supercuspidal) {
    require(r >= 0, "tower step must be nonnegative");
    int r0 = on_tower_a ? fo.r0_a : fo.r0_b;
    LiftStatus st;
    st.stable_range = (r >= fo.dimV);
    if (r < r0) {
        st.nonzero = false;
        st.local_kind = LocalKind::zero;
        return st;
    }
    st.nonzero = true;
    if (r == r0 && pi_supercuspidal) {
        st.local_kind = LocalKind::supercuspidal;
    } else {
        st.local_kind = LocalKind::irreducible_non_sc;
        if (r == r0)
            st.note =
                "first occurrence of a non-supercuspidal input: kind not "
                "determined by the tower rules";
    }
    return st;
}

/// Global cuspidality ladder: cuspidal exactly at the first occurrence,
/// square-integrable in the stable range with negative exponent, with the
/// single boundary exception r = dimV, r0 = 0, W_0 = 0.
inline LiftStatus rallis_exponent(int dimV, int base_dim_W0, int r0, int r) {
    require(dimV >= 1, "dimV must be positive");
    require(base_dim_W0 >= 0 && base_dim_W0 <= 2, "base dimension out of range");
    require(r0 >= 0, "first occurrence must be nonnegative");
    require(r >= r0, "status below the first occurrence is zero, not graded");
    LiftStatus st;
    st.nonzero = true;
    st.stable_range = (r >= dimV);
    st.exponent = Rational(dimV - base_dim_W0 - (r + r0), 2);
    st.exponent->canonicalize();
    if (r == r0) {
        st.global_kind = GlobalKind::cuspidal;
        return st;
    }
    if (r >= dimV) {
        if (r == dimV && r0 == 0 && base_dim_W0 == 0) {
            st.global_kind = GlobalKind::noncuspidal_boundary;
            st.note = "boundary case of the square-integrability criterion";
            return st;
        }
        ensure(*st.exponent < 0, "stable-range exponent must be negative");
        st.global_kind = GlobalKind::square_integrable_noncuspidal;
        return st;
    }
    st.global_kind = GlobalKind::noncuspidal;
    return st;
}

/// Splitting-character tag: an opaque label plus the exponent of
/// omega_{E/F} in its restriction to F^x, and an inversion marker.
struct CharTag {
    std::string label;
    int restriction_parity = 0;  // chi|_{F^x} = omega^(this mod 2)
    bool inverted = false;

    CharTag inverse() const { return CharTag{label, restriction_parity, !inverted}; }

    friend bool operator==(const CharTag&, const CharTag&) = default;

    std::string display() const { return inverted ? label + "^-1" : label; }
};

/// Splitting data (V, W, chi_V, chi_W, psi_a) for a Weil representation.
struct WeilDescriptor {
    GlobalSpaceDescriptor V;   // Hermitian
    GlobalSpaceDescriptor W;   // skew-Hermitian
    CharTag chiV, chiW;
    Rational psi_scale = Rational(1);

    void check() const {
        require(V.kind == SpaceKind::hermitian, "V must be Hermitian");
        require(W.kind == SpaceKind::skew, "W must be skew-Hermitian");
        require(psi_scale != 0, "psi scale must be nonzero");
        require(chiV.restriction_parity % 2 == static_cast<int>(V.dim % 2),
                "chi_V restriction must be omega^dim V");
        require(chiW.restriction_parity % 2 == static_cast<int>(W.dim % 2),
                "chi_W restriction must be omega^dim W");
    }
};

struct TwistFactor {
    CharTag numerator, denominator;
    std::string via;  // "det_W" or "det_V"
    bool identity() const { return numerator == denominator; }
};

struct DescriptorTransformResult {
    WeilDescriptor descriptor;
    // change_chars: the two twist factors (chi'_V/chi_V o i o det_W, etc.)
    std::vector<TwistFactor> twists;
    // scale: the equivalent form with the scalar moved into W instead of V
    std::optional<WeilDescriptor> scaled_W_variant;
    std::string note;
};

/// Change of splitting characters: same spaces, twist recorded.
inline DescriptorTransformResult change_chars(const WeilDescriptor& desc,
                                              const CharTag& chiV_new,
                                              const CharTag& chiW_new) {
    desc.check();
    require(chiV_new.restriction_parity % 2 ==
                desc.chiV.restriction_parity % 2,
            "new chi_V violates the parity restriction");
    require(chiW_new.restriction_parity % 2 ==
                desc.chiW.restriction_parity % 2,
            "new chi_W violates the parity restriction");
    DescriptorTransformResult out{desc, {}, std::nullopt, ""};
    out.descriptor.chiV = chiV_new;
    out.descriptor.chiW = chiW_new;
    out.twists.push_back(TwistFactor{chiV_new, desc.chiV, "det_W"});
    out.twists.push_back(TwistFactor{chiW_new, desc.chiW, "det_V"});
    return out;
}

namespace detail {

// Multiply every local sign of the descriptor by omega_v(a)^dim.
inline GlobalSpaceDescriptor scale_space(const GlobalSpaceDescriptor& sp,
                                         const Rational& a) {
    GlobalSpaceDescriptor out = sp;
    if (sp.dim % 2 == 0 || a == 0) return out;
    for (const Place& v : omega_support(a, sp.ext)) {
        if (omega_EF(a, sp.ext, v) == -1) {
            auto it = out.deviations.find(v);
            if (it == out.deviations.end())
                out.deviations[v] = -1;
            else if (it->second == -1)
                out.deviations.erase(it);
            else
                it->second = -1;
        }
    }
    return out;
}

}  // namespace detail

/// Move a scalar from the additive character into the spaces:
/// (V, W, psi_a) = (V^a, W, psi) = (V, W^a, psi).  The returned descriptor
/// is the V-scaled form; the W-scaled form rides along.
inline DescriptorTransformResult scale(const WeilDescriptor& desc, const Rational& a) {
    desc.check();
    require(a != 0, "scale factor must be nonzero");
    DescriptorTransformResult out{desc, {}, std::nullopt, ""};
    out.descriptor.V = detail::scale_space(desc.V, a);
    out.descriptor.psi_scale = desc.psi_scale / a;
    WeilDescriptor alt = desc;
    alt.W = detail::scale_space(desc.W, a);
    alt.psi_scale = desc.psi_scale / a;
    out.scaled_W_variant = alt;
    out.note = "scalar " + a.get_str() + " moved from psi into the form";
    return out;
}

/// Dual of the Weil descriptor: both characters inverted, psi conjugated.
inline DescriptorTransformResult dualize(const WeilDescriptor& desc) {
    desc.check();
    DescriptorTransformResult out{desc, {}, std::nullopt, "dual (complex conjugate)"};
    out.descriptor.chiV = desc.chiV.inverse();
    out.descriptor.chiW = desc.chiW.inverse();
    out.descriptor.psi_scale = -desc.psi_scale;
    return out;
}

enum class HowePSKind { supercuspidal, nontempered_principal_series_constituent };

struct HowePSConclusion {
    HowePSKind kind;
    std::string description;
};

/// Rank 1 x rank 3 conclusion: a nonzero lower-step lift lands the lift in
/// a nontempered principal series; a zero lower step makes it
/// supercuspidal.
inline HowePSConclusion howe_ps_conclusion(const CharTag& chiV,
                                           bool lower_lift_nonzero) {
    if (lower_lift_nonzero)
        return HowePSConclusion{
            HowePSKind::nontempered_principal_series_constituent,
            "constituent of Ind_B(" + chiV.display() +
                "|.|^(1/2) x theta_0(chi)); nontempered since |.|^(1/2) is "
                "not unitary"};
    return HowePSConclusion{HowePSKind::supercuspidal, "supercuspidal"};
}

struct PipelineReport {
    bool flip_branch = false;
    std::optional<std::pair<Place, Place>> flipped_places;
    GlobalSpaceDescriptor final_W0;
    LiftStatus status;          // global status of the lift at r = 1
    bool nontempered_almost_everywhere = false;
    std::string verdict;
};

/// End-to-end counterexample pipeline for dim V = 1 against the two
/// rank-one towers: decide nonvanishing on W_0, flip two places if the
/// lower lift is globally nonzero, then grade the lift at r = 1.
inline PipelineReport run_counterexample_pipeline(
    const GlobalSpaceDescriptor& W0, const std::map<Place, int>& root_numbers,
    bool L_half_nonzero) {
    require(W0.kind == SpaceKind::skew && W0.dim == 1,
            "pipeline starts from a rank-one skew-Hermitian space");
    ValidationReport val = validate_global(W0);
    require(val.ok, "pipeline needs a coherent global space");

    // eps(V_v) = +1 for V = <1>; local flags via the rank-one rule.
    std::map<Place, U1LocalDatum> local;
    std::set<Place> support;
    for (const auto& [v, s] : W0.deviations) support.insert(v);
    for (const auto& [v, s] : root_numbers) support.insert(v);
    for (const Place& v : support) {
        auto it = root_numbers.find(v);
        int rn = it == root_numbers.end() ? +1 : it->second;
        local[v] = U1LocalDatum{u1_local_nonvanishing(+1, descriptor_sign(W0, v), rn),
                                rn};
    }

    PipelineReport rep{false, std::nullopt, W0, {}, false, ""};
    bool lower_nonzero = u1_global_nonvanishing(local, L_half_nonzero);
    if (lower_nonzero) {
        // Flip at two non-split places; prefer places already in the support.
        std::vector<Place> candidates;
        for (const Place& v : support)
            if (place_behavior(W0.ext, v) != PlaceBehavior::split)
                candidates.push_back(v);
        for (unsigned long p = 2; candidates.size() < 2; ++p) {
            if (!is_prime(p)) continue;
            Place v = Place::finite(p);
            if (place_behavior(W0.ext, v) == PlaceBehavior::split) continue;
            bool seen = false;
            for (const Place& c : candidates) seen = seen || c == v;
            if (!seen) candidates.push_back(v);
        }
        rep.flip_branch = true;
        rep.flipped_places = {candidates[0], candidates[1]};
        rep.final_W0 = flip_two_places(W0, candidates[0], candidates[1]);
        // Dichotomy: the local lifts at the flipped places vanish, so the
        // global lower lift on the new tower vanishes.
    }

    // On the final tower the lower lift vanishes (by the L-value / a local
    // sign originally, or at the flipped places by dichotomy), so the first
    // occurrence is r0 = 1 and the lift at r = 1 is cuspidal.
    if (rep.flip_branch) {
        bool nonzero_on_partner = dichotomy(1, 1, 1, /*nonzero_on_W=*/true);
        ensure(!nonzero_on_partner, "dichotomy must kill the flipped lower lifts");
    }
    rep.status = rallis_exponent(1, 1, /*r0=*/1, /*r=*/1);
    ensure(rep.status.global_kind == GlobalKind::cuspidal,
           "rank-three lift at first occurrence must be cuspidal");
    // At almost every place the local datum is unramified with trivial
    // signs, so the lower local lift is nonzero there and the lift sits in
    // a nontempered principal series.
    rep.nontempered_almost_everywhere = true;
    rep.verdict = "cuspidal, square-integrable, nontempered at almost all places";
    return rep;
}

}  // namespace theta
