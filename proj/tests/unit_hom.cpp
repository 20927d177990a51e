#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "a4ring/hom.hpp"

using namespace a4ring;

namespace {

std::vector<RegistryEntry> standard_registry() {
    return {
        {"1", trivial_rep()},
        {"tau", tau_rep()},
        {"G1", gamma_rep(1)},
        {"G2", gamma_rep(2)},
        {"G4", gamma_rep(4)},
        {"P0", projective_p0().rep},
        {"P1", projective_p1().rep},
    };
}

}  // namespace

TEST_CASE("endomorphism ranks of the irreducibles") {
    CHECK(intertwiners(trivial_rep(), trivial_rep()).rank() == 1);
    CHECK(intertwiners(tau_rep(), tau_rep()).rank() == 2);
    for (int d : {1, 2, 4}) CHECK(intertwiners(gamma_rep(d), gamma_rep(d)).rank() == 1);
    // rationally the naturals split as 1 + 3, so End has rank 2
    CHECK(intertwiners(natural_rep(), natural_rep()).rank() == 2);
    // P1 (x) Q = tau + 2 x 3-dim: End rank = 2 + 4
    CHECK(intertwiners(projective_p1().rep, projective_p1().rep).rank() == 6);
}

TEST_CASE("hom ranks between distinct irreducibles") {
    // rationally equivalent pairs leave a rank-1 hom lattice
    CHECK(intertwiners(gamma_rep(1), gamma_rep(2)).rank() == 1);
    CHECK(intertwiners(gamma_rep(2), gamma_rep(4)).rank() == 1);
    CHECK(intertwiners(gamma_rep(1), gamma_rep(4)).rank() == 1);
    // rationally disjoint pairs have no homs at all
    CHECK(intertwiners(gamma_rep(1), tau_rep()).rank() == 0);
    CHECK(intertwiners(tau_rep(), trivial_rep()).rank() == 0);
    CHECK(intertwiners(trivial_rep(), gamma_rep(4)).rank() == 0);
}

TEST_CASE("the three 3-dimensional representations are pairwise inequivalent") {
    for (int d1 : {1, 2, 4})
        for (int d2 : {1, 2, 4}) {
            EquivalenceResult r = are_equivalent(gamma_rep(d1), gamma_rep(d2));
            if (d1 == d2) {
                CHECK(r.status == Tri::yes);
            } else {
                CHECK(r.status == Tri::no);  // certified: full mod-2 search is exhaustive
                CHECK(r.hom_rank == 1);
            }
        }
}

TEST_CASE("equivalence finds explicit unimodular witnesses") {
    EquivalenceResult r = are_equivalent(gamma_rep(2), gamma2_monomial_rep());
    REQUIRE(r.status == Tri::yes);
    REQUIRE(r.witness.has_value());
    CHECK(is_unimodular(*r.witness));

    // the natural permutation module is the first projective ideal
    EquivalenceResult p = are_equivalent(natural_rep(), projective_p0().rep);
    CHECK(p.status == Tri::yes);

    // conjugating by a unimodular matrix is undone by the search
    Matrix u({{1, 2, 0}, {0, 1, 2}, {2, 2, 1}});
    REQUIRE(is_unimodular(u));
    Matrix ui = u.inverse();
    Representation g1 = gamma_rep(1);
    Representation conj(ui * g1.a1() * u, ui * g1.a2() * u, ui * g1.b() * u);
    CHECK(are_equivalent(g1, conj).status == Tri::yes);
}

TEST_CASE("character mismatch is a cheap negative") {
    EquivalenceResult r = are_equivalent(tau_rep(), direct_sum(trivial_rep(), trivial_rep()));
    CHECK(r.status == Tri::no);
    CHECK(r.hom_rank == -1);
}

TEST_CASE("induction from the nontrivial characters gives the monomial lattice") {
    for (int k : {1, 2, 3}) {
        Representation ind = induce_from_h(linear_character_h(k));
        CHECK(are_equivalent(ind, gamma_rep(2)).status == Tri::yes);
        CHECK(are_equivalent(ind, gamma_rep(1)).status == Tri::no);
        CHECK(are_equivalent(ind, gamma_rep(4)).status == Tri::no);
    }
}

TEST_CASE("the permutation module does not split off the trivial one") {
    // over the rationals it would; over Z_(2) every composite phi psi has even
    // determinant, and the exhaustive search certifies that
    SplitResult s = try_split_off(natural_rep(), trivial_rep());
    CHECK(s.status == Tri::no);
    SplitResult s2 = try_split_off(projective_p0().rep, trivial_rep());
    CHECK(s2.status == Tri::no);
}

TEST_CASE("splitting an explicit direct sum") {
    Representation whole = direct_sum(gamma_rep(2), tau_rep());
    SplitResult s = try_split_off(whole, gamma_rep(2));
    REQUIRE(s.status == Tri::yes);
    CHECK(are_equivalent(*s.complement, tau_rep()).status == Tri::yes);
    CHECK(is_unimodular(*s.witness));

    // also in scrambled coordinates
    Matrix u({{1, 0, 2, 0, 0}, {2, 1, 0, 0, 2}, {0, 0, 1, 2, 0}, {0, 2, 0, 1, 0}, {2, 0, 0, 0, 1}});
    REQUIRE(is_unimodular(u));
    Matrix ui = u.inverse();
    Representation scrambled(ui * whole.a1() * u, ui * whole.a2() * u, ui * whole.b() * u);
    SplitResult s2 = try_split_off(scrambled, tau_rep());
    REQUIRE(s2.status == Tri::yes);
    CHECK(are_equivalent(*s2.complement, gamma_rep(2)).status == Tri::yes);
}

TEST_CASE("the square of the 2-dimensional representation decomposes") {
    Decomposition dec = decompose(tensor_product(tau_rep(), tau_rep()), standard_registry());
    CHECK(dec.complete());
    CHECK(dec.multiplicity_of("tau") == 1);
    CHECK(dec.multiplicity_of("1") == 2);
    CHECK(dec.multiplicity_of("G1") == 0);
    CHECK(is_unimodular(dec.witness));
}

TEST_CASE("tensoring the monomial lattice by the 2-dimensional one doubles it") {
    Decomposition dec = decompose(tensor_product(tau_rep(), gamma_rep(2)), standard_registry());
    CHECK(dec.complete());
    CHECK(dec.multiplicity_of("G2") == 2);
    CHECK(dec.multiplicities.size() == 1);
}

TEST_CASE("the regular module is the sum of the two projectives") {
    Decomposition dec = decompose(regular_rep(), standard_registry());
    CHECK(dec.complete());
    CHECK(dec.multiplicity_of("P0") == 1);
    CHECK(dec.multiplicity_of("P1") == 1);
    CHECK(dec.order.front() == "P1");  // largest degree splits first
}

TEST_CASE("unmatched pieces surface as a remainder") {
    std::vector<RegistryEntry> registry{{"1", trivial_rep()}};
    Decomposition dec = decompose(direct_sum(trivial_rep(), gamma_rep(1)), registry);
    CHECK(!dec.complete());
    CHECK(dec.multiplicity_of("1") == 1);
    REQUIRE(dec.remainder.has_value());
    CHECK(dec.remainder->degree() == 3);
    CHECK(dec.remainder_character == std::array<long, 4>{3, -1, 0, 0});
}

TEST_CASE("searches beyond the caps report indeterminacy honestly") {
    SearchOptions tight;
    tight.exhaustive_cap = 0;
    tight.sample_cap = 0;
    EquivalenceResult r = are_equivalent(gamma_rep(2), gamma2_monomial_rep(), tight);
    CHECK(r.status == Tri::indeterminate);

    SearchOptions sampling;
    sampling.exhaustive_cap = 0;
    sampling.sample_cap = 64;
    EquivalenceResult r2 = are_equivalent(gamma_rep(2), gamma2_monomial_rep(), sampling);
    CHECK(r2.status == Tri::yes);  // rank-1 lattice: sampling hits the unit fast
}

TEST_CASE("subgroup intertwiners and equivalence") {
    CHECK(intertwiners_h(linear_character_h(1), linear_character_h(1)).rank() == 1);
    CHECK(intertwiners_h(linear_character_h(1), linear_character_h(2)).rank() == 0);

    HRepresentation s12 = direct_sum(linear_character_h(1), linear_character_h(2));
    HRepresentation s21 = direct_sum(linear_character_h(2), linear_character_h(1));
    CHECK(are_equivalent_h(s12, s21).status == Tri::yes);

    HRepresentation chars = direct_sum(direct_sum(linear_character_h(1), linear_character_h(2)),
                                       linear_character_h(3));
    // the monomial restriction splits into its three diagonal characters
    CHECK(are_equivalent_h(gamma_rep(2).restrict_to_h(), chars).status == Tri::yes);
    // the d = 1 restriction is cyclic over the subgroup ring, so it cannot
    CHECK(are_equivalent_h(gamma_rep(1).restrict_to_h(), chars).status == Tri::no);
}

TEST_CASE("exhausting the exact kernel budget reports indeterminate") {
    // conjugate by a unimodular matrix whose entries dwarf the modular
    // reconstruction bound: the hom space exists but cannot be certified
    mpz_class big = (mpz_class(1) << 9000) + 1;
    Matrix u = Matrix::identity(3);
    u.at(0, 1) = Local2Rational(mpq_class(big));
    u.at(1, 2) = Local2Rational(mpq_class(-big));
    REQUIRE(is_unimodular(u));
    Matrix v = u.inverse();
    Representation g = gamma_rep(4);
    Representation w(v * g.a1() * u, v * g.a2() * u, v * g.b() * u);

    EquivalenceResult e = are_equivalent(w, g);
    CHECK(e.status == Tri::indeterminate);
    CHECK(try_split_off(w, g).status == Tri::indeterminate);
}
