#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace spinstat;

TEST_CASE("cyclic group cohomology") {
    FiniteAbelianGroup z2 = FiniteAbelianGroup::cyclic(2);
    CHECK(cohomology_cyclic(1, 2, z2) == z2);
    CHECK(cohomology_cyclic(2, 2, z2) == z2);
    CHECK(cohomology_cyclic(0, 5, z2) == z2);
    CHECK(cohomology_cyclic(1, 3, z2).is_trivial());
    CHECK(cohomology_cyclic(2, 6, FiniteAbelianGroup::cyclic(4)) == FiniteAbelianGroup::cyclic(2));

    // periodicity H^{2j} = H^{2j+2} in range, across moduli and coefficients
    for (long n = 1; n <= 12; ++n)
        for (long m = 2; m <= 6; ++m)
            CHECK(cohomology_cyclic(2, n, FiniteAbelianGroup::cyclic(m)) ==
                  cohomology_cyclic(4, n, FiniteAbelianGroup::cyclic(m)));

    CHECK_THROWS_AS(cohomology_cyclic(5, 2, z2), out_of_range_error);
    CHECK_THROWS_AS(cohomology_cyclic(2, 13, z2), out_of_range_error);
}

TEST_CASE("K(Z/2,2) companion table") {
    FiniteAbelianGroup z2 = FiniteAbelianGroup::cyclic(2);
    CHECK(cohomology_b2_z2(0, z2) == z2);
    CHECK(cohomology_b2_z2(1, z2).is_trivial());  // simply connected
    CHECK(cohomology_b2_z2(2, z2) == z2);
    CHECK(cohomology_b2_z2(2, FiniteAbelianGroup::cyclic(3)).is_trivial());
    CHECK_THROWS_AS(cohomology_b2_z2(3, z2), out_of_range_error);
}

TEST_CASE("torsor class counts") {
    // the categorified Galois group of R gives the eight structures
    CHECK(count_torsor_classes(PicardTwoGroup::galois_r()) == 8);
    CHECK(count_torsor_classes({FiniteAbelianGroup::trivial(), FiniteAbelianGroup::trivial(), true}) == 1);

    // pi_0 trivial: the count is |H^2(B(Z/2); Z/2)| * |H^2(B^2(Z/2); Z/2)|;
    // the first factor is checked against brute-force cocycle enumeration
    CHECK(oracles::h2_z2_oracle(FiniteAbelianGroup::cyclic(2)) == 2);
    long expected = oracles::h2_z2_oracle(FiniteAbelianGroup::cyclic(2)) *
                    cohomology_b2_z2(2, FiniteAbelianGroup::cyclic(2)).order();
    CHECK(expected == 4);
    CHECK(count_torsor_classes({FiniteAbelianGroup::trivial(), FiniteAbelianGroup::cyclic(2), true}) ==
          expected);

    // the cocycle oracle also confirms the H^2 factor used for Gal(R)
    CHECK(cohomology_cyclic(2, 2, FiniteAbelianGroup::cyclic(2)).order() ==
          oracles::h2_z2_oracle(FiniteAbelianGroup::cyclic(2)));
    CHECK(cohomology_cyclic(2, 2, FiniteAbelianGroup::cyclic(3)).order() ==
          oracles::h2_z2_oracle(FiniteAbelianGroup::cyclic(3)));
    CHECK(cohomology_cyclic(2, 2, FiniteAbelianGroup::cyclic(4)).order() ==
          oracles::h2_z2_oracle(FiniteAbelianGroup::cyclic(4)));

    PicardTwoGroup nontrivial_k = PicardTwoGroup::galois_r();
    nontrivial_k.trivial_k_invariant = false;
    CHECK_THROWS_AS(count_torsor_classes(nontrivial_k), unsupported_two_group_error);
}

TEST_CASE("the eight structure classes") {
    std::vector<EtaleSpinClass> classes = enumerate_etale_spin_classes();
    REQUIRE(classes.size() == 8);
    CHECK(static_cast<long>(classes.size()) == count_torsor_classes(PicardTwoGroup::galois_r()));

    // all (Z/2)^3 coordinates appear exactly once
    std::set<std::tuple<int, int, int>> coords;
    std::set<std::string> names;
    std::set<TheoryKind> kinds;
    for (const auto& c : classes) {
        coords.insert({c.conj_equals_reversal, c.parity_equals_twist, c.mixing});
        names.insert(c.name);
        kinds.insert(c.kind);
    }
    CHECK(coords.size() == 8);
    CHECK(names.size() == 8);
    CHECK(kinds.size() == 8);  // bijective onto kind tags

    // the three kind tags outside the table are exactly the unextended
    // classes: unoriented, complex, hermitian
    CHECK_FALSE(kinds.count(TheoryKind::Unoriented));
    CHECK_FALSE(kinds.count(TheoryKind::Complex));
    CHECK_FALSE(kinds.count(TheoryKind::Hermitian));

    // pinned rows: the trivial class and the distinguished one
    for (const auto& c : classes) {
        if (c.conj_equals_reversal == 0 && c.parity_equals_twist == 0 && c.mixing == 0) {
            CHECK(c.name == "oriented-spin");
            CHECK_FALSE(c.distinguished);
        }
        if (c.conj_equals_reversal == 1 && c.parity_equals_twist == 1 && c.mixing == 0) {
            CHECK(c.name == "hermitian-spin-statistics");
            CHECK(c.distinguished);
            CHECK(c.kind == TheoryKind::HermitianSpinStatistics);
        }
    }
}
