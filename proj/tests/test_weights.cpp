#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "theta/weights.hpp"

using namespace theta;

TEST_CASE("g2 root data") {
    G2RootData rd = g2_root_data();
    CHECK(rd.roots.size() == 12);
    CHECK(rd.long_roots.size() == 6);
    CHECK(rd.short_roots.size() == 6);

    const Lattice& L = g2_lattice();
    CHECK(L.form(rd.orthogonal_pair.first, rd.orthogonal_pair.second) == 0);
    CHECK(L.form(rd.orthogonal_pair.first, rd.orthogonal_pair.first) == 6);
    CHECK(L.form(rd.orthogonal_pair.second, rd.orthogonal_pair.second) == 2);
}

TEST_CASE("long roots form an A2 angle pattern") {
    G2RootData rd = g2_root_data();
    const Lattice& L = g2_lattice();
    // normalized pairings between distinct long roots: cos in {1/2, -1/2, -1}
    std::multiset<long> pairings;
    for (const Weight& x : rd.long_roots)
        for (const Weight& y : rd.long_roots)
            if (x != y) pairings.insert(L.form(x, y));
    std::multiset<long> expected;
    // A2 with |root|^2 = 6: each root sees one opposite (-6), two at 120
    // degrees (-3) and two at 60 degrees (+3)
    for (int i = 0; i < 6; ++i) {
        expected.insert(-6);
        for (int k = 0; k < 2; ++k) expected.insert(-3);
        for (int k = 0; k < 2; ++k) expected.insert(+3);
    }
    CHECK(pairings == expected);
}

TEST_CASE("character operations on SL2 data") {
    FormalCharacter std2 = sl2sl2_std(0);
    CHECK(sym_power(std2, 2).dim() == 3);
    FormalCharacter sym2 = sym_power(std2, 2);
    CHECK(sym2.multiplicity({2, 0}) == 1);
    CHECK(sym2.multiplicity({0, 0}) == 1);
    CHECK(sym2.multiplicity({-2, 0}) == 1);

    FormalCharacter t = tensor(std2, std2);
    CHECK(t.dim() == 4);
    CHECK(t.multiplicity({0, 0}) == 2);
    CHECK(t.multiplicity({2, 0}) == 1);

    FormalCharacter sym3 = sym_power(std2, 3);
    CHECK(sym3.dim() == 4);
    CHECK(sym3.multiplicity({3, 0}) == 1);
    CHECK(sym3.multiplicity({1, 0}) == 1);

    for (long k = 0; k <= 6; ++k) CHECK(sym_power(std2, k).dim() == k + 1);
    CHECK_THROWS_AS(tensor(std2, a2_std3()), input_error);
}

TEST_CASE("tensor dimension is multiplicative") {
    std::mt19937_64 rng(1311);
    std::uniform_int_distribution<long> coord(-3, 3);
    std::uniform_int_distribution<long> mult(1, 3);
    for (int i = 0; i < 50; ++i) {
        FormalCharacter a("sl2sl2"), b("sl2sl2");
        for (int k = 0; k < 4; ++k) {
            a.add({coord(rng), coord(rng)}, mult(rng));
            b.add({coord(rng), coord(rng)}, mult(rng));
        }
        CHECK(tensor(a, b).dim() == a.dim() * b.dim());
    }
}

TEST_CASE("standard characters are Weyl invariant") {
    CHECK(weyl_invariant(g2_seven_dim()));
    CHECK(weyl_invariant(g2_adjoint()));
    CHECK(weyl_invariant(a2_std3()));
    CHECK(weyl_invariant(a2_adjoint()));
    CHECK(weyl_invariant(sp4_adjoint()));
    CHECK(weyl_invariant(tensor(sl2sl2_std(0), sl2sl2_std(1))));
    CHECK(weyl_invariant(sym_power(sl2sl2_std(1), 3)));
}

TEST_CASE("g2 branchings all verify") {
    BranchingReport rep = verify_g2_branchings();
    REQUIRE(rep.checks.size() == 4);
    for (const BranchingCheck& c : rep.checks) {
        INFO(c.name << ": " << c.mismatch);
        CHECK(c.ok);
    }
    CHECK(rep.all_ok);

    CHECK(rep.checks[0].dim_lhs == 7);
    CHECK(rep.checks[0].dim_rhs == 3 + 1 + 3);
    CHECK(rep.checks[3].dim_lhs == 14);
    CHECK(rep.checks[3].dim_rhs == 3 + 3 + 8);
}

TEST_CASE("tensor-factor convention is unique") {
    BranchingReport rep = verify_g2_branchings();
    CHECK_FALSE(rep.swapped_convention_passes);
    CHECK(rep.convention_note.find("unique") != std::string::npos);
}

TEST_CASE("adjoint zero-weight multiplicity equals the rank") {
    CHECK(g2_adjoint().multiplicity({0, 0}) == 2);
    CHECK(sp4_adjoint().multiplicity({0, 0}) == 2);
}

TEST_CASE("sp4 adjoint branches to sl2 + sl2 + std x std") {
    FormalCharacter lhs = restrict_along(sp4_adjoint(), kC2ToSl2Sl2, "sl2sl2");
    FormalCharacter rhs = direct_sum(
        direct_sum(sym_power(sl2sl2_std(0), 2), sym_power(sl2sl2_std(1), 2)),
        tensor(sl2sl2_std(0), sl2sl2_std(1)));
    CHECK(lhs == rhs);
    CHECK(rhs.dim() == 10);
}

TEST_CASE("satake of the HPS parameter") {
    LocalParameterPoint pt{ParameterFamily::HPS_U3, 5};
    pt.chi_frob = Phase::one();
    pt.mu_frob = Phase::one();
    SatakeClass s = satake_of_parameter(pt);
    std::multiset<std::string> expected = {"1/2", "0", "-1/2"};
    CHECK(s.exponent_multiset() == expected);
    CHECK_FALSE(is_tempered(s));

    pt.ramified = true;
    CHECK_THROWS_AS(satake_of_parameter(pt), input_error);
}

TEST_CASE("tempered parameters have exponent zero") {
    LocalParameterPoint pt{ParameterFamily::tempered, 7};
    pt.rank = 4;
    SatakeClass s = satake_of_parameter(pt);
    CHECK(s.eigenvalues.size() == 4);
    CHECK(is_tempered(s));
    CHECK(s.self_dual_closed());
}

TEST_CASE("trivial representation is not tempered") {
    SatakeClass s = trivial_representation_satake(3);
    std::multiset<std::string> expected = {"1", "0", "-1"};
    CHECK(s.exponent_multiset() == expected);
    CHECK_FALSE(is_tempered(s));
}

TEST_CASE("SK satake pairs the GL2 phases with exponents +-1/2") {
    LocalParameterPoint pt{ParameterFamily::SK, 3};
    SatakeClass s = satake_of_parameter(pt);
    REQUIRE(s.eigenvalues.size() == 4);
    int half = 0, minus_half = 0;
    for (const auto& [e, p] : s.eigenvalues) {
        if (e == Rational(1, 2)) ++half;
        if (e == Rational(-1, 2)) ++minus_half;
    }
    CHECK(half == 2);
    CHECK(minus_half == 2);
    CHECK_FALSE(is_tempered(s));
    CHECK(s.self_dual_closed());
}

TEST_CASE("self-duality closure for symplectic and orthogonal families") {
    for (ParameterFamily f : {ParameterFamily::SK, ParameterFamily::HPS_Sp4,
                              ParameterFamily::G2_short, ParameterFamily::G2_long}) {
        LocalParameterPoint pt{f, 5};
        SatakeClass s = satake_of_parameter(pt);
        INFO(to_string(f));
        CHECK(s.self_dual_closed());
    }
    // the unitary family is conjugate-self-dual; its exponent multiset is
    // still symmetric
    LocalParameterPoint u3{ParameterFamily::HPS_U3, 5};
    SatakeClass s = satake_of_parameter(u3);
    std::multiset<std::string> exps = s.exponent_multiset();
    std::multiset<std::string> negs;
    for (const auto& [e, p] : s.eigenvalues) {
        Rational m = -e;
        negs.insert(m.get_str());
    }
    CHECK(exps == negs);
}

TEST_CASE("G2 satake classes have seven eigenvalues") {
    for (ParameterFamily f : {ParameterFamily::G2_short, ParameterFamily::G2_long}) {
        LocalParameterPoint pt{f, 7};
        SatakeClass s = satake_of_parameter(pt);
        CHECK(s.eigenvalues.size() == 7);
        CHECK_FALSE(is_tempered(s));
    }
}
