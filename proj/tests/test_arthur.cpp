#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "theta/arthur.hpp"

using namespace theta;

namespace {

CuspDatum sample_tau(int eps = +1, int eps_sym3 = +1) {
    CuspDatum tau;
    tau.label = "tau";
    tau.S_ds = {Place::finite(2), Place::finite(3), Place::real()};
    tau.root_number = eps;
    tau.sym3_root_number = eps_sym3;
    return tau;
}

AParameter sk_parameter(int eps = +1) {
    AParameter psi;
    psi.family = ParameterFamily::SK;
    psi.tau = sample_tau(eps);
    return psi;
}

AParameter g2_parameter(ParameterFamily f, int eps, int eps_sym3) {
    AParameter psi;
    psi.family = f;
    psi.tau = sample_tau(eps, eps_sym3);
    return psi;
}

AParameter hps_u3_parameter(int eps_chi_mu) {
    AParameter psi;
    psi.family = ParameterFamily::HPS_U3;
    psi.ext = QuadExt(-1);
    psi.chi = CharTag{"chi", 1};
    psi.mu = CharTag{"mu", 0};
    psi.eps_chi_mu = eps_chi_mu;
    return psi;
}

// Brute-force multiplicity: the definition, summed term by term.
long multiplicity_brute(const SignCharacter& eta, const SignCharacter& eps) {
    const size_t k = eta.rank();
    long sum = 0;
    for (unsigned long bits = 0; bits < (1ul << k); ++bits)
        sum += eta.eval(bits) * eps.eval(bits);
    long group = 1l << k;
    if (sum % group != 0) throw std::logic_error("non-integral multiplicity");
    return sum / group;
}

}  // namespace

TEST_CASE("component groups of the cuspidal-datum families") {
    for (ParameterFamily f :
         {ParameterFamily::SK, ParameterFamily::G2_short, ParameterFamily::G2_long}) {
        AParameter psi = f == ParameterFamily::SK ? sk_parameter()
                                                  : g2_parameter(f, +1, +1);
        ComponentGroups cg =
            component_groups(psi, {Place::finite(7)});  // 7 not discrete series
        CHECK(cg.global.rank == 1);
        CHECK(cg.local.at(Place::finite(2)).rank == 1);
        CHECK(cg.local.at(Place::real()).rank == 1);
        CHECK(cg.local.at(Place::finite(7)).rank == 0);
    }
}

TEST_CASE("component groups of the unitary family follow splitting") {
    AParameter psi = hps_u3_parameter(+1);
    ComponentGroups cg = component_groups(
        psi, {Place::finite(3), Place::finite(5), Place::finite(2), Place::real()});
    CHECK(cg.global.rank == 1);
    CHECK(cg.local.at(Place::finite(3)).rank == 1);   // inert in Q(i)
    CHECK(cg.local.at(Place::finite(5)).rank == 0);   // split
    CHECK(cg.local.at(Place::finite(2)).rank == 1);   // ramified: E_v is a field
    CHECK(cg.local.at(Place::real()).rank == 1);
}

TEST_CASE("adjoint decomposition dimensions") {
    std::vector<AdjointPiece> sk = adjoint_decomposition(sk_parameter());
    REQUIRE(sk.size() == 3);
    CHECK(sk[0].dim() == 3);
    CHECK(sk[1].dim() == 3);
    CHECK(sk[2].dim() == 4);
    CHECK(sk[2].rho_duality == DualityType::symplectic);
    CHECK(sk[2].eta_nontrivial);
    CHECK(sk[2].r == 2);

    std::vector<AdjointPiece> g2s =
        adjoint_decomposition(g2_parameter(ParameterFamily::G2_short, +1, +1));
    CHECK(g2s[2].dim() == 8);
    CHECK(g2s[2].r == 4);
    CHECK(g2s[2].rho_dim == 2);

    std::vector<AdjointPiece> g2l =
        adjoint_decomposition(g2_parameter(ParameterFamily::G2_long, +1, +1));
    CHECK(g2l[2].dim() == 8);
    CHECK(g2l[2].r == 2);
    CHECK(g2l[2].rho_dim == 4);
    CHECK(g2l[2].rho_label.find("Sym3") != std::string::npos);

    long total_sk = 0, total_g2 = 0;
    for (const auto& p : sk) total_sk += p.dim();
    for (const auto& p : g2l) total_g2 += p.dim();
    CHECK(total_sk == 10);
    CHECK(total_g2 == 14);

    CHECK_THROWS_AS(adjoint_decomposition(hps_u3_parameter(+1)), input_error);
}

TEST_CASE("epsilon_psi keyed to the root numbers") {
    CHECK(epsilon_psi(sk_parameter(+1)).trivial());
    CHECK_FALSE(epsilon_psi(sk_parameter(-1)).trivial());

    CHECK(epsilon_psi(g2_parameter(ParameterFamily::G2_short, +1, -1)).trivial());
    CHECK_FALSE(epsilon_psi(g2_parameter(ParameterFamily::G2_short, -1, +1)).trivial());

    // the long-root family reads the Sym^3 sign, not eps(1/2, tau)
    CHECK(epsilon_psi(g2_parameter(ParameterFamily::G2_long, -1, +1)).trivial());
    CHECK_FALSE(epsilon_psi(g2_parameter(ParameterFamily::G2_long, +1, -1)).trivial());

    CHECK(epsilon_psi(hps_u3_parameter(+1)).trivial());
    CHECK_FALSE(epsilon_psi(hps_u3_parameter(-1)).trivial());

    AParameter tempered;
    tempered.family = ParameterFamily::tempered;
    CHECK(epsilon_psi(tempered).trivial());

    AParameter hps4;
    hps4.family = ParameterFamily::HPS_Sp4;
    hps4.ext = QuadExt(-1);
    CHECK(epsilon_psi(hps4).trivial());
}

TEST_CASE("multiplicity agrees with the brute-force character sum") {
    std::mt19937_64 rng(2026);
    for (size_t k = 0; k <= 6; ++k) {
        // exhaustive over all pairs of characters of (Z/2)^k
        std::vector<SignCharacter> chars;
        for (unsigned long bits = 0; bits < (1ul << k); ++bits) {
            SignCharacter c = SignCharacter::trivial(k);
            for (size_t i = 0; i < k; ++i)
                if (bits & (1ul << i)) c.on_generators[i] = -1;
            chars.push_back(c);
        }
        for (const SignCharacter& eta : chars)
            for (const SignCharacter& eps : chars)
                CHECK(multiplicity(eta, eps) == multiplicity_brute(eta, eps));
    }
    CHECK_THROWS_AS(
        multiplicity(SignCharacter::trivial(2), SignCharacter::trivial(3)),
        input_error);
}

TEST_CASE("SK packet counts") {
    // |S| = 3 discrete-series places, eps = -1: members with product -1
    AParameter psi = sk_parameter(-1);
    std::vector<Place> model = {Place::finite(2), Place::finite(3), Place::real(),
                                Place::finite(11)};
    PacketReport rep = enumerate_packet(psi, model);
    CHECK(rep.members.size() == 8);
    CHECK(rep.automorphic_count == 4);  // 2^(3-1)
    for (const PacketMember& m : rep.members) {
        int prod = 1;
        for (const auto& [v, s] : m.signs) prod *= s;
        CHECK((m.mult == 1) == (prod == -1));
    }

    // missing place in the model is an error
    CHECK_THROWS_AS(enumerate_packet(psi, {Place::finite(2)}), input_error);

    // |S| = 0: single member, multiplicity tracks epsilon triviality
    AParameter lone = sk_parameter(+1);
    lone.tau->S_ds.clear();
    PacketReport r0 = enumerate_packet(lone, {});
    CHECK(r0.members.size() == 1);
    CHECK(r0.automorphic_count == 1);
    AParameter lone_minus = sk_parameter(-1);
    lone_minus.tau->S_ds.clear();
    CHECK(enumerate_packet(lone_minus, {}).automorphic_count == 0);
}

TEST_CASE("packet count closed form 2^(k-1)") {
    for (size_t k = 1; k <= 10; ++k) {
        AParameter psi = sk_parameter(k % 2 == 0 ? +1 : -1);
        psi.tau->S_ds.clear();
        std::vector<Place> model;
        std::vector<unsigned long> ps = primes_upto(100);
        for (size_t i = 0; i < k; ++i) {
            psi.tau->S_ds.insert(Place::finite(ps[i]));
            model.push_back(Place::finite(ps[i]));
        }
        PacketReport rep = enumerate_packet(psi, model);
        CHECK(rep.automorphic_count == (1l << (k - 1)));
        CHECK(rep.members.size() == (1ul << k));
    }
}

TEST_CASE("HPS_U3 packet enumerates the non-split window and both labelings") {
    AParameter psi = hps_u3_parameter(-1);
    std::vector<Place> model = {Place::finite(3), Place::finite(5), Place::finite(7),
                                Place::real()};
    PacketReport rep = enumerate_packet(psi, model);
    // 5 splits in Q(i); 3, 7, infty are non-split
    CHECK(rep.sign_places.size() == 3);
    CHECK(rep.members.size() == 8);
    CHECK(rep.automorphic_count == 4);
    REQUIRE(rep.automorphic_count_swapped_labeling.has_value());
    // |S| odd: the swapped labeling selects the complementary members
    CHECK(*rep.automorphic_count_swapped_labeling == 4);
    CHECK_FALSE(rep.window_note.empty());
    CHECK_FALSE(rep.labeling_note.empty());
}

TEST_CASE("centralizer of a torus sample is the Cartan") {
    CentralizerResult res = centralizer_dimension(sp4_torus_sample(),
                                                  ClassicalGroup::sp4);
    CHECK(res.lie_dim == 2);
}

TEST_CASE("SK image has discrete centralizer") {
    CentralizerResult res = centralizer_dimension(sk_image_generators(),
                                                  ClassicalGroup::sp4);
    CHECK(res.lie_dim == 0);
}

TEST_CASE("gl3 centralizers are computed modulo the scalar line") {
    // a regular diagonal element of GL3: commutant = diagonal (dim 3),
    // so 2 modulo scalars
    CMatrix d(3, 3);
    d(0, 0) = Cyclotomic(2);
    d(1, 1) = Cyclotomic(3);
    d(2, 2) = Cyclotomic(5);
    CentralizerResult res = centralizer_dimension({d}, ClassicalGroup::gl3);
    CHECK(res.lie_dim == 2);

    // adding a permutation makes it irreducible: commutant = scalars only
    CMatrix perm(3, 3);
    perm(0, 1) = Cyclotomic(1);
    perm(1, 2) = Cyclotomic(1);
    perm(2, 0) = Cyclotomic(1);
    CentralizerResult res2 = centralizer_dimension({d, perm}, ClassicalGroup::gl3);
    CHECK(res2.lie_dim == 0);
}

TEST_CASE("centralizer rejects non-members") {
    CMatrix bad = CMatrix::identity(4);
    bad(0, 0) = Cyclotomic(2);  // not symplectic
    CHECK_THROWS_AS(centralizer_dimension({bad}, ClassicalGroup::sp4), input_error);
}

TEST_CASE("SK eta signs certified in the matrix model") {
    EtaCertification cert = certify_sk_eta_signs();
    CHECK(cert.centralizer_element_in_group);
    CHECK(cert.commutes_with_image);
    REQUIRE(cert.signs_on_pieces.size() == 3);
    CHECK(cert.signs_on_pieces[0] == +1);
    CHECK(cert.signs_on_pieces[1] == +1);
    CHECK(cert.signs_on_pieces[2] == -1);
}

TEST_CASE("HPS_Sp4 worked dataset") {
    HpsSp4Dataset data = hps_sp4_worked_example();
    CHECK(data.lie_dim == 0);  // discreteness certified
    // the exact sweep finds only the center
    REQUIRE(data.centralizer_elements.size() == 2);
    CHECK(data.centralizer_elements[0] == "I");
    CHECK(data.centralizer_elements[1] == "-I");
    CHECK_FALSE(data.epsilon_note.empty());
}

TEST_CASE("dihedral transfer produces a valid unitary parameter") {
    CuspDatum tau = sample_tau(-1);
    tau.dihedral = {QuadExt(-1), CharTag{"chi", 1}};
    AParameter psi = dihedral_transfer(tau);
    CHECK(psi.family == ParameterFamily::HPS_U3);
    CHECK(psi.chi->label == "chi");
    CHECK(psi.mu->label == "chi^-2");
    CHECK(psi.mu->restriction_parity == 0);  // chi^2 restricts trivially
    CHECK_FALSE(psi.provenance.empty());
    CHECK_NOTHROW(psi.check());

    CuspDatum plain = sample_tau();
    CHECK_THROWS_AS(dihedral_transfer(plain), input_error);
}

TEST_CASE("epsilon_psi requires its oracle inputs") {
    AParameter psi = hps_u3_parameter(+1);
    psi.eps_chi_mu.reset();
    CHECK_THROWS_AS(epsilon_psi(psi), input_error);
}

TEST_CASE("packet multiplicity sums follow character orthogonality") {
    // For |S| >= 1 the automorphic count is 2^(|S|-1) regardless of eps.
    for (int eps : {+1, -1})
        for (size_t k = 1; k <= 6; ++k) {
            AParameter psi = sk_parameter(eps);
            psi.tau->S_ds.clear();
            std::vector<Place> model;
            std::vector<unsigned long> ps = primes_upto(50);
            for (size_t i = 0; i < k; ++i) {
                psi.tau->S_ds.insert(Place::finite(ps[i]));
                model.push_back(Place::finite(ps[i]));
            }
            CHECK(enumerate_packet(psi, model).automorphic_count ==
                  (1l << (k - 1)));
        }
}
