#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <stdexcept>

#include "a4ring/gmodules.hpp"
#include "a4ring/syzygy.hpp"

using namespace a4ring;

namespace {

const DeltaTowerG& tower9() {
    static DeltaTowerG t(9);
    return t;
}

}  // namespace

TEST_CASE("module class labels round-trip") {
    CHECK(ModuleClassLabel::delta(3).str() == "Delta(3)");
    CHECK(ModuleClassLabel::delta(-2).str() == "Delta(-2)");
    CHECK(ModuleClassLabel::tau().str() == "Tau");
    CHECK(ModuleClassLabel::ell().str() == "L");
    CHECK(ModuleClassLabel::gamma_reg().str() == "GammaReg");
    for (const char* s : {"Delta(0)", "Delta(-7)", "Tau", "L", "P0", "P1", "GammaReg"}) {
        auto l = ModuleClassLabel::parse(s);
        REQUIRE(l.has_value());
        CHECK(l->str() == s);
    }
    CHECK(!ModuleClassLabel::parse("Delta()").has_value());
    CHECK(!ModuleClassLabel::parse("Delta(x)").has_value());
    CHECK(!ModuleClassLabel::parse("Gamma").has_value());
    CHECK(ModuleClassLabel::parse("Delta(2)") == ModuleClassLabel::delta(2));
}

TEST_CASE("cover of the trivial lattice is the first projective") {
    CoverG c = projective_cover_g(trivial_rep());
    CHECK(c.s == 1);
    CHECK(c.t == 0);
    CHECK(c.rep.degree() == 4);
    CHECK(c.map.rows() == 1);
    CHECK(c.map.cols() == 4);
}

TEST_CASE("cover shapes follow the period-3 pattern") {
    // levels 3k, 3k+1, 3k+2 are covered by (k+1, k), (k, k+1), (k+1, k+1)
    const DeltaTowerG& t = tower9();
    std::array<std::pair<int, int>, 8> expect{
        {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}}};
    for (int n = 0; n < 8; ++n) {
        CHECK(t.cover(n).s == expect[n].first);
        CHECK(t.cover(n).t == expect[n].second);
        CHECK(t.cover(n).map.cols() == 4 * expect[n].first + 8 * expect[n].second);
    }
}

TEST_CASE("tower degrees and characters") {
    const DeltaTowerG& t = tower9();
    for (int n = -9; n <= 9; ++n) {
        const Representation& d = t.at(n);
        CHECK(d.degree() == 2 * (n < 0 ? -n : n) + 1);
        auto chi = d.character();
        CHECK(chi[2] == chi[3]);  // rational classes of the two 3-cycles agree
    }
    CHECK(t.at(2).character() == std::array<long, 4>{5, 1, -1, -1});
    CHECK(t.at(0).character() == std::array<long, 4>{1, 1, 1, 1});
    // duals preserve degree and this character table
    CHECK(t.at(-2).character() == std::array<long, 4>{5, 1, -1, -1});
    CHECK_THROWS_AS(t.at(10), std::invalid_argument);
    CHECK_THROWS_AS(t.cover(9), std::invalid_argument);
    CHECK_THROWS_AS(DeltaTowerG(-1), std::invalid_argument);
}

TEST_CASE("delta_g convenience matches the tower") {
    const DeltaTowerG& t = tower9();
    CHECK(delta_g(2) == t.at(2));
    CHECK(delta_g(-1) == t.at(-1));
    CHECK(delta_g(0).degree() == 1);
}

TEST_CASE("levels +1 and -1 are the two non-monomial irreducible lattices") {
    // computed attribution: level +1 pairs with the index-4 lattice, level -1
    // with the full quotient lattice
    const DeltaTowerG& t = tower9();
    EquivalenceResult plus = are_equivalent(t.at(1), gamma_rep(4));
    REQUIRE(plus.status == Tri::yes);
    EquivalenceResult minus = are_equivalent(t.at(-1), gamma_rep(1));
    REQUIRE(minus.status == Tri::yes);
    // certified inequivalence against the two other candidates
    CHECK(are_equivalent(t.at(1), gamma_rep(1)).status == Tri::no);
    CHECK(are_equivalent(t.at(1), gamma_rep(2)).status == Tri::no);
    CHECK(are_equivalent(t.at(-1), gamma_rep(4)).status == Tri::no);
    CHECK(are_equivalent(t.at(-1), gamma_rep(2)).status == Tri::no);
}

TEST_CASE("restriction to the subgroup hits the subgroup tower") {
    const DeltaTowerG& t = tower9();
    for (int n = 0; n <= 6; ++n)
        CHECK(are_equivalent_h(t.at(n).restrict_to_h(), delta_h(n)).status == Tri::yes);
    CHECK(are_equivalent_h(t.at(-2).restrict_to_h(), delta_h(-2)).status == Tri::yes);
    // distinct levels restrict to inequivalent modules (same-degree case)
    CHECK(are_equivalent_h(t.at(1).restrict_to_h(), delta_h(-1)).status == Tri::no);
}

TEST_CASE("lifting certificates") {
    const DeltaTowerG& t = tower9();
    for (int n = 0; n <= 2; ++n) {
        LiftingCertificate c = check_lifting(n, t);
        CHECK(c.restriction_matches);
        CHECK(c.induced_restriction_triple);
        CHECK(c.direct_summand == Tri::yes);
        CHECK(c.passed());
    }
}

TEST_CASE("shift certificates at level 0 with tensor witnesses") {
    const DeltaTowerG& t = tower9();
    ShiftCertificate c = verify_shift_level(0, t, true);
    CHECK(c.shapes_match);
    REQUIRE(c.tensors_run);
    CHECK(c.tensors_match);
    CHECK(c.passed());
    // branch 0: level0 (x) level1 ~ level1 alone
    CHECK(c.tensors[0].multiplicity_of("Delta(1)") == 1);
    CHECK(c.tensors[0].multiplicity_of("P0") == 0);
    // branch 1: level1 (x) level1 ~ level2 (+) P0
    CHECK(c.tensors[1].multiplicity_of("Delta(2)") == 1);
    CHECK(c.tensors[1].multiplicity_of("P0") == 1);
    CHECK(c.tensors[1].multiplicity_of("P1") == 0);
    // branch 2: level2 (x) level1 ~ level3 (+) P1
    CHECK(c.tensors[2].multiplicity_of("Delta(3)") == 1);
    CHECK(c.tensors[2].multiplicity_of("P0") == 0);
    CHECK(c.tensors[2].multiplicity_of("P1") == 1);
}

TEST_CASE("shift cover shapes hold through level 2") {
    const DeltaTowerG& t = tower9();
    for (int k = 0; k <= 2; ++k) {
        ShiftCertificate c = verify_shift_level(k, t, false);
        CHECK(c.shapes_match);
        CHECK(!c.tensors_run);
        CHECK(c.passed());
    }
    CHECK_THROWS_AS(verify_shift_level(3, t, false), std::invalid_argument);
}

TEST_CASE("tensoring with projectives lands in projectives") {
    const DeltaTowerG& t = tower9();
    // P0 (x) level1 is the regular module
    EquivalenceResult g = are_equivalent(tensor_product(projective_p0().rep, t.at(1)), regular_rep());
    REQUIRE(g.status == Tri::yes);
    // Tau (x) P0 is the other projective
    EquivalenceResult p = are_equivalent(tensor_product(tau_rep(), projective_p0().rep),
                                         projective_p1().rep);
    REQUIRE(p.status == Tri::yes);
}

TEST_CASE("projective multiplicity solve") {
    CHECK(projective_multiplicities(16, 1).s == 2);
    CHECK(projective_multiplicities(16, 1).t == 1);
    CHECK(projective_multiplicities(32, -1).s == 2);
    CHECK(projective_multiplicities(32, -1).t == 3);
    CHECK(projective_multiplicities(64, 1).s == 6);
    CHECK(projective_multiplicities(64, 1).t == 5);
    CHECK(projective_multiplicities(12, 0).s == 1);
    CHECK(projective_multiplicities(12, 0).t == 1);
    CHECK_THROWS_AS(projective_multiplicities(5, -1), std::domain_error);
    CHECK_THROWS_AS(projective_multiplicities(4, -2), std::domain_error);
    ProjectivePair pp = projective_multiplicities(tensor_product(projective_p0().rep, projective_p0().rep));
    CHECK(pp.s == 2);
    CHECK(pp.t == 1);
}

TEST_CASE("rational multiplicity solve") {
    CHECK(rational_multiplicities({1, 1, 1, 1}) == std::array<long, 3>{1, 0, 0});
    CHECK(rational_multiplicities({2, 2, -1, -1}) == std::array<long, 3>{0, 1, 0});
    CHECK(rational_multiplicities({3, -1, 0, 0}) == std::array<long, 3>{0, 0, 1});
    CHECK(rational_multiplicities({12, 0, 0, 0}) == std::array<long, 3>{1, 1, 3});
    CHECK(rational_multiplicities({5, 1, -1, -1}) == std::array<long, 3>{0, 1, 1});
    CHECK(!rational_multiplicities({1, 1, 1, 0}).has_value());   // 3-cycle classes differ
    CHECK(!rational_multiplicities({2, 1, 0, 0}).has_value());   // non-integral solve
    CHECK(!rational_multiplicities({1, 1, 2, 2}).has_value());   // negative multiplicity
}

TEST_CASE("witnessed decompositions of small tensor squares") {
    const DeltaTowerG& t = tower9();
    auto lib = standard_library(t, 2);

    DecompositionReport r1 = decompose_module(tensor_product(t.at(1), t.at(-1)), lib);
    REQUIRE(r1.verified());
    CHECK(r1.multiplicity_of("Delta(0)") == 1);
    CHECK(r1.multiplicity_of("P1") == 1);
    CHECK(r1.summands.size() == 2);

    DecompositionReport r2 = decompose_module(tensor_product(tau_rep(), tau_rep()), lib);
    REQUIRE(r2.verified());
    CHECK(r2.multiplicity_of("Delta(0)") == 2);
    CHECK(r2.multiplicity_of("Tau") == 1);

    DecompositionReport r3 = decompose_module(tensor_product(tau_rep(), gamma_rep(2)), lib);
    REQUIRE(r3.verified());
    CHECK(r3.multiplicity_of("L") == 2);
    CHECK(r3.summands.size() == 1);

    DecompositionReport r4 = decompose_module(tensor_product(gamma_rep(2), gamma_rep(2)), lib);
    REQUIRE(r4.verified());
    CHECK(r4.multiplicity_of("Delta(0)") == 1);
    CHECK(r4.multiplicity_of("Tau") == 1);
    CHECK(r4.multiplicity_of("L") == 2);
}

TEST_CASE("product table at range 1") {
    const DeltaTowerG& t = tower9();
    ProductTable tab = product_table(1, t);

    const DecompositionReport* r = tab.find("Delta(1)", "Delta(1)");
    REQUIRE(r != nullptr);
    CHECK(r->verified());
    CHECK(r->multiplicity_of("Delta(2)") == 1);
    CHECK(r->multiplicity_of("P0") == 1);

    r = tab.find("Delta(-1)", "Delta(1)");  // symmetric lookup
    REQUIRE(r != nullptr);
    CHECK(r->verified());
    CHECK(r->multiplicity_of("Delta(0)") == 1);
    CHECK(r->multiplicity_of("P1") == 1);

    r = tab.find("P0", "P0");
    REQUIRE(r != nullptr);
    CHECK(r->verified());
    CHECK(r->witness.has_value());
    CHECK(r->multiplicity_of("P0") == 2);
    CHECK(r->multiplicity_of("P1") == 1);

    r = tab.find("Tau", "L");
    REQUIRE(r != nullptr);
    CHECK(r->verified());
    CHECK(r->multiplicity_of("L") == 2);

    // Tau (x) Delta(1) is the first syzygy of Tau: a rank-6 indecomposable
    // outside the library; every candidate split is certified impossible
    r = tab.find("Tau", "Delta(1)");
    REQUIRE(r != nullptr);
    CHECK(!r->verified());
    CHECK(r->status == DecompositionReport::Status::unknown);
    CHECK(r->summands.empty());
    CHECK(r->remainder_degree == 6);

    r = tab.find("Delta(0)", "P1");
    REQUIRE(r != nullptr);
    CHECK(r->verified());
    CHECK(r->multiplicity_of("P1") == 1);

    // solve-based extension entry outside the factor range
    r = tab.find("Delta(2)", "P0");
    REQUIRE(r != nullptr);
    CHECK(r->verified());
    CHECK(!r->witness.has_value());
    CHECK(r->multiplicity_of("P0") == 1);
    CHECK(r->multiplicity_of("P1") == 2);

    // degree bookkeeping holds on every verified entry
    for (const auto& e : tab.entries) {
        if (!e.report.verified()) continue;
        int lhs = 0;
        for (const auto& le : tab.library)
            lhs += e.report.multiplicity_of(le.label) * le.rep.degree();
        int want = 0;
        for (const auto& f : {e.left, e.right}) {
            for (const auto& le : tab.library)
                if (le.label == f) want = want == 0 ? le.rep.degree() : want * le.rep.degree();
        }
        CHECK(lhs == want);
    }
    CHECK_THROWS_AS(product_table(5, t), std::invalid_argument);
}

TEST_CASE("library construction guards") {
    const DeltaTowerG& t = tower9();
    CHECK_THROWS_AS(standard_library(t, 10), std::invalid_argument);
    auto lib = standard_library(t, 1);
    CHECK(lib.size() == 7);  // Delta(0), Delta(+-1), Tau, L, P0, P1
    CHECK(lib.front().label == "Delta(0)");
}
