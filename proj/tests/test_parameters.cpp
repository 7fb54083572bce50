#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "dualnorm/packets.hpp"
#include "dualnorm/parameters.hpp"
#include "support/data.hpp"

using namespace dualnorm;
using namespace dualnorm::param;

namespace {

CVec cv(QVec v) { return to_cvec(std::move(v)); }

}  // namespace

TEST_CASE("kappa membership", "[parameters]") {
    // Integral vectors always belong.
    REQUIRE(kappa_membership({Rat(1)}, testdata::frame_t1_split()));
    REQUIRE(kappa_membership({Rat(-3)}, testdata::frame_t1_split()));
    // Split circle: nothing fractional does.
    REQUIRE_FALSE(kappa_membership({Rat(1, 2)}, testdata::frame_t1_split()));
    // Compact circle: sigma = -1, the (-1)-eigenspace is everything.
    REQUIRE(kappa_membership({Rat(1, 2)}, testdata::frame_t1_compact()));
    REQUIRE(kappa_membership({Rat(7, 3)}, testdata::frame_a1()));
    // Swap torus: integral vectors plus the full anti-diagonal line, so any
    // rational anti-symmetric vector belongs.
    REQUIRE(kappa_membership({Rat(1, 2), Rat(-1, 2)}, testdata::frame_t2_swap()));
    REQUIRE(kappa_membership({Rat(1, 4), Rat(-1, 4)}, testdata::frame_t2_swap()));
    REQUIRE(kappa_membership({Rat(1, 2), Rat(1, 2)}, testdata::frame_t2_swap()));
    REQUIRE(kappa_membership({Rat(3, 2), Rat(1, 2)}, testdata::frame_t2_swap()));
    REQUIRE_FALSE(kappa_membership({Rat(1, 2), Rat(0)}, testdata::frame_t2_swap()));
    REQUIRE_FALSE(kappa_membership({Rat(1, 4), Rat(0)}, testdata::frame_t2_swap()));
}

TEST_CASE("anisotropic center detection", "[parameters]") {
    REQUIRE(anisotropic_center(testdata::frame_a1()));
    REQUIRE(anisotropic_center(testdata::frame_c2()));
    REQUIRE(anisotropic_center(testdata::frame_t1_compact()));
    REQUIRE_FALSE(anisotropic_center(testdata::frame_t1_split()));
    REQUIRE_FALSE(anisotropic_center(testdata::frame_t2_swap()));
}

TEST_CASE("a1 parameter validation", "[parameters]") {
    auto f = testdata::frame_a1();
    for (long long k : {1, 2, 5}) {
        DiscreteParameter p = validate_parameter(cv({Rat(k)}), {Rat(0)}, f);
        REQUIRE(p.bounded);
        REQUIRE(p.lam == QVec{Rat(0)});
    }
    // Not regular.
    REQUIRE_THROWS_AS(validate_parameter(cv({Rat(0)}), {Rat(0)}, f), domain_error);
    // Not integral (the anisotropic center forces mu - iota integral; the
    // root pairing is also fractional).
    REQUIRE_THROWS_AS(validate_parameter(cv({Rat(3, 2)}), {Rat(0)}, f), domain_error);
    // Not dominant.
    REQUIRE_THROWS_AS(validate_parameter(cv({Rat(-2)}), {Rat(0)}, f), domain_error);
    // sigma = -1 forces lam to be dropped to zero.
    DiscreteParameter q = validate_parameter(cv({Rat(2)}), {Rat(1, 2)}, f);
    REQUIRE(q.lam == QVec{Rat(0)});
}

TEST_CASE("c2 parameter validation", "[parameters]") {
    auto f = testdata::frame_c2();
    REQUIRE(f.iota() == QVec{Rat(3, 2), Rat(1, 2)});
    DiscreteParameter p = validate_parameter(cv({Rat(5, 2), Rat(3, 2)}), {Rat(0), Rat(0)}, f);
    REQUIRE(p.bounded);
    // Integer mu is rejected: mu - iota leaves the lattice coset.
    REQUIRE_THROWS_WITH(validate_parameter(cv({Rat(2), Rat(1)}), {Rat(0), Rat(0)}, f),
                        Catch::Matchers::ContainsSubstring("congruence"));
    // Wrong chamber.
    REQUIRE_THROWS_AS(validate_parameter(cv({Rat(3, 2), Rat(5, 2)}), {Rat(0), Rat(0)}, f),
                      domain_error);
    // Singular against the second simple root.
    REQUIRE_THROWS_AS(validate_parameter(cv({Rat(5, 2), Rat(0)}), {Rat(0), Rat(0)}, f),
                      domain_error);
}

TEST_CASE("split torus parameters and boundedness", "[parameters]") {
    auto f = testdata::frame_t1_split();
    DiscreteParameter p0 = validate_parameter(cv({Rat(0)}), {Rat(0)}, f);
    REQUIRE(p0.bounded);

    // Nonzero real mu on a split coordinate is unbounded but valid.
    DiscreteParameter p1 = validate_parameter(cv({Rat(1, 4)}), {Rat(0)}, f);
    REQUIRE_FALSE(p1.bounded);

    // Purely imaginary mu stays bounded.
    DiscreteParameter p2 =
        validate_parameter(make_cvec({Rat(0)}, {Rat(2)}), {Rat(0)}, f);
    REQUIRE(p2.bounded);

    // lam = 1/2 satisfies the congruence on the split circle; lam = 1/3 fails.
    REQUIRE_NOTHROW(validate_parameter(cv({Rat(0)}), {Rat(1, 2)}, f));
    REQUIRE_THROWS_WITH(validate_parameter(cv({Rat(0)}), {Rat(1, 3)}, f),
                        Catch::Matchers::ContainsSubstring("congruence"));
}

TEST_CASE("swap torus congruence couples mu and lam", "[parameters]") {
    auto f = testdata::frame_t2_swap();
    DiscreteParameter p = validate_parameter(cv({Rat(1), Rat(-1)}), {Rat(0), Rat(0)}, f);
    REQUIRE(p.bounded);

    // lam shifted inside kappa gives an equal parameter.
    DiscreteParameter q =
        validate_parameter(cv({Rat(1), Rat(-1)}), {Rat(1, 2), Rat(1, 2)}, f);
    REQUIRE(equal_parameters(p, q));
    DiscreteParameter r =
        validate_parameter(cv({Rat(1), Rat(-1)}), {Rat(1, 2), Rat(-1, 2)}, f);
    REQUIRE(equal_parameters(p, r));

    // A shift with (v + sigma v) not integral breaks the congruence outright.
    REQUIRE_THROWS_WITH(
        validate_parameter(cv({Rat(1), Rat(-1)}), {Rat(1, 2), Rat(0)}, f),
        Catch::Matchers::ContainsSubstring("congruence"));

    // Different mu: not equal.
    DiscreteParameter s = validate_parameter(cv({Rat(2), Rat(-2)}), {Rat(0), Rat(0)}, f);
    REQUIRE_FALSE(equal_parameters(p, s));
}

TEST_CASE("renormalization flips the chamber through -w0", "[parameters]") {
    // A1: -w0 = identity, so mu is unchanged.
    auto f1 = testdata::frame_a1();
    DiscreteParameter p1 = validate_parameter(cv({Rat(3)}), {Rat(0)}, f1);
    DiscreteParameter r1 = renormalize_parameter(p1);
    REQUIRE(r1.mu == p1.mu);
    REQUIRE(equal_parameters(p1, r1));

    // A2: -w0 is the diagram flip, (2,3) -> (3,2) in coroot coordinates.
    auto f2 = testdata::frame_a2();
    DiscreteParameter p2 = validate_parameter(cv({Rat(2), Rat(3)}), {Rat(0), Rat(0)}, f2);
    DiscreteParameter r2 = renormalize_parameter(p2);
    REQUIRE(r2.mu == cv({Rat(3), Rat(2)}));
    // Applying the renormalization twice returns the original parameter.
    REQUIRE(renormalize_parameter(r2).mu == p2.mu);

    // C2: -w0 = identity.
    auto fc = testdata::frame_c2();
    DiscreteParameter pc = validate_parameter(cv({Rat(5, 2), Rat(3, 2)}), {Rat(0), Rat(0)}, fc);
    REQUIRE(renormalize_parameter(pc).mu == pc.mu);
}

TEST_CASE("opposite representative negates data and orientation", "[parameters]") {
    auto f = testdata::frame_a2();
    DiscreteParameter p = validate_parameter(cv({Rat(2), Rat(3)}), {Rat(0), Rat(0)}, f);
    DiscreteParameter o = opposite_representative(p);
    REQUIRE(o.frame.orientation == Orientation::Opposite);
    REQUIRE(o.mu == neg(p.mu));
    // Round trip restores everything.
    DiscreteParameter back = opposite_representative(o);
    REQUIRE(back.frame.orientation == Orientation::Standard);
    REQUIRE(back.mu == p.mu);
    REQUIRE(equal_parameters(back, p));
}

TEST_CASE("packets enumerate left cosets with character data", "[packets]") {
    auto f = testdata::frame_a1();
    DiscreteParameter p = validate_parameter(cv({Rat(2)}), {Rat(0)}, f);

    // Trivial Omega_R: two singleton members.
    Packet pk = build_packet(p, {weyl_identity(1)});
    REQUIRE(pk.members.size() == 2);
    REQUIRE(pk.members[0].label == "pi[e]");
    REQUIRE(pk.members[1].label == "pi[0]");
    REQUIRE(pk.members[0].char_data.size() == 1);
    // Numerators mu and -mu shifted by iota = (1): nu = 1 and -3.
    REQUIRE(pk.members[0].char_data[0].nu == cv({Rat(1)}));
    REQUIRE(pk.members[1].char_data[0].nu == cv({Rat(-3)}));

    // Full Omega_R: a single member carrying both characters.
    Packet big = build_packet(p, weyl_group(f.levi_datum()));
    REQUIRE(big.members.size() == 1);
    REQUIRE(big.members[0].char_data.size() == 2);

    // D-packet: same cosets, negated data, flipped bookkeeping.
    Packet pkd = build_packet_D(p, {weyl_identity(1)});
    REQUIRE(pkd.flavor == Flavor::Renormalized);
    REQUIRE(pkd.members[0].label == "piD[e]");
    REQUIRE(pkd.members[0].orientation == Orientation::Opposite);
    std::vector<torus::CharacterData> neg_data = stable_character_data(pkd);
    std::vector<torus::CharacterData> pos_data = stable_character_data(pk);
    REQUIRE(neg_data.size() == pos_data.size());
    for (const auto& cd : pos_data) {
        torus::CharacterData want = torus::d_character(cd);
        REQUIRE(std::find(neg_data.begin(), neg_data.end(), want) != neg_data.end());
    }

    // Conjugating twice is rejected.
    REQUIRE_THROWS_WITH(conjugate_member(pkd.members[0]),
                        Catch::Matchers::ContainsSubstring("already renormalized"));
}

TEST_CASE("stable numerator data is orientation independent", "[packets]") {
    auto f = testdata::frame_a2();
    DiscreteParameter p = validate_parameter(cv({Rat(2), Rat(3)}), {Rat(0), Rat(0)}, f);
    std::vector<WeylElement> trivial{weyl_identity(2)};

    Packet classical = build_packet(p, trivial);
    Packet renorm_classical = build_packet(renormalize_parameter(p), trivial);
    Packet opposite = build_packet(opposite_representative(p), trivial);
    Packet packet_d = build_packet_D(p, trivial);

    auto nums_d = stable_numerator_data(packet_d);
    auto nums_ren = stable_numerator_data(renorm_classical);
    auto nums_opp = stable_numerator_data(opposite);
    REQUIRE(nums_d == nums_ren);
    REQUIRE(nums_d == nums_opp);

    // The classical packet itself has the *conjugate* numerators.
    auto nums = stable_numerator_data(classical);
    std::vector<torus::CharacterData> conj_nums;
    for (const auto& cd : nums) conj_nums.push_back(torus::d_character(cd));
    std::sort(conj_nums.begin(), conj_nums.end());
    REQUIRE(conj_nums == nums_d);
}

TEST_CASE("packet central values", "[packets]") {
    auto f = testdata::frame_a1();
    torus::TorusPoint z{{Rat(0)}, {Rat(1)}, {0}};

    DiscreteParameter even = validate_parameter(cv({Rat(2)}), {Rat(0)}, f);
    DiscreteParameter odd = validate_parameter(cv({Rat(3)}), {Rat(0)}, f);
    Packet pk_even = build_packet(even, {weyl_identity(1)});
    Packet pk_odd = build_packet(odd, {weyl_identity(1)});

    REQUIRE(to_string(packet_central_value(pk_even, z)) == "-1");
    REQUIRE(to_string(packet_central_value(pk_odd, z)) == "1");

    // The central value of the D-packet is the conjugate (here equal).
    REQUIRE(packet_central_value(build_packet_D(odd, {weyl_identity(1)}), z) ==
            packet_central_value(pk_odd, z).conj());

    Packet empty;
    REQUIRE_THROWS_WITH(packet_central_value(empty, z),
                        Catch::Matchers::ContainsSubstring("empty"));
}
