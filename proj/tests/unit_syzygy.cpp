#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "a4ring/exactkernel.hpp"
#include "a4ring/f2.hpp"
#include "a4ring/hom.hpp"
#include "a4ring/syzygy.hpp"

using namespace a4ring;

namespace {

GroupRingElementH random_element(std::mt19937_64& rng) {
    std::array<Local2Rational, 4> c;
    for (auto& x : c) {
        long num = static_cast<long>(rng() % 9) - 4;
        long den = 2 * static_cast<long>(rng() % 3) + 1;
        x = Local2Rational(num, den);
    }
    return GroupRingElementH(std::move(c));
}

Matrix block_diag(const Matrix& b, int n) {
    Matrix x = b;
    for (int i = 1; i < n; ++i) x = x.direct_sum(b);
    return x;
}

// exhaustive search of the mod-2 endomorphism algebra for an idempotent
// other than 0 and 1; a genuine direct-sum splitting would produce one
bool has_nontrivial_idempotent_mod2(const HRepresentation& m) {
    HomBasis end = intertwiners_h(m, m);
    REQUIRE(end.rank() <= 22);
    std::vector<F2Matrix> fb;
    fb.reserve(end.mats.size());
    for (const Matrix& x : end.mats) fb.push_back(F2Matrix::from_matrix(x));
    const F2Matrix zero(m.degree(), m.degree()), id = F2Matrix::identity(m.degree());
    F2Matrix cur = zero;
    uint64_t prev = 0;
    for (uint64_t g = 1; g < (1ull << end.rank()); ++g) {
        const uint64_t gray = g ^ (g >> 1);
        uint64_t d = prev ^ gray;
        int bit = 0;
        while (!(d & 1)) {
            d >>= 1;
            ++bit;
        }
        cur = cur + fb[static_cast<size_t>(bit)];
        prev = gray;
        if (!(cur == zero) && !(cur == id) && cur * cur == cur) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("group ring arithmetic over the Klein four-group") {
    for (int h = 0; h < 4; ++h)
        for (int k = 0; k < 4; ++k)
            CHECK(GroupRingElementH::unit(h) * GroupRingElementH::unit(k) ==
                  GroupRingElementH::unit(h ^ k));

    // involutions annihilate the opposite shift and square the same one
    CHECK((h_shift(1, -1) * h_shift(1, 1)).is_zero());
    CHECK((h_shift(2, 1) * h_shift(2, -1)).is_zero());
    CHECK(h_shift(2, 1) * h_shift(2, 1) == h_shift(2, 1) + h_shift(2, 1));

    CHECK(GroupRingElementH::unit(0).regular_matrix() == Matrix::identity(4));

    std::mt19937_64 rng(7);
    for (int it = 0; it < 100; ++it) {
        GroupRingElementH x = random_element(rng), y = random_element(rng);
        CHECK((x * y).augmentation() == x.augmentation() * y.augmentation());
        CHECK((x * y).regular_matrix() == x.regular_matrix() * y.regular_matrix());
        CHECK((x + y).regular_matrix() == x.regular_matrix() + y.regular_matrix());
        CHECK(x * y == y * x);
    }
}

TEST_CASE("syzygy matrices match the small displayed cases") {
    HMatrix f1 = f_matrix(1);
    REQUIRE(f1.rows() == 1);
    REQUIRE(f1.cols() == 2);
    CHECK(f1.at(0, 0) == h_shift(1, -1));
    CHECK(f1.at(0, 1) == h_shift(2, -1));

    HMatrix e4(4, 5);
    e4.at(0, 0) = h_shift(1, 1);
    e4.at(1, 1) = h_shift(2, 1);
    e4.at(2, 2) = -h_shift(1, -1);
    e4.at(3, 3) = -h_shift(2, -1);
    e4.at(3, 4) = h_shift(1, 1);
    e4.at(0, 2) = h_shift(2, -1);
    e4.at(1, 3) = h_shift(1, -1);
    e4.at(2, 4) = h_shift(2, 1);
    CHECK(f_matrix(4) == e4);

    HMatrix e5(5, 6);
    e5.at(0, 0) = h_shift(1, -1);
    e5.at(1, 1) = h_shift(2, -1);
    e5.at(2, 2) = -h_shift(1, 1);
    e5.at(3, 3) = -h_shift(2, 1);
    e5.at(4, 4) = h_shift(1, -1);
    e5.at(4, 5) = h_shift(2, -1);
    e5.at(0, 2) = h_shift(2, -1);
    e5.at(1, 3) = h_shift(1, -1);
    e5.at(2, 4) = h_shift(2, 1);
    e5.at(3, 5) = h_shift(1, 1);
    CHECK(f_matrix(5) == e5);

    CHECK_THROWS_AS(f_matrix(0), std::invalid_argument);
}

TEST_CASE("only the three upper diagonals are populated") {
    for (int n = 1; n <= 12; ++n) {
        HMatrix f = f_matrix(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= n; ++j) {
                if (j < i || j > i + 2) CHECK(f.at(i, j).is_zero());
                if (j == i + 1 && i != n - 1) CHECK(f.at(i, j).is_zero());
                if (j == i) CHECK(!f.at(i, j).is_zero());
            }
    }
}

TEST_CASE("consecutive syzygy matrices compose to zero") {
    for (int n = 2; n <= 30; ++n) CHECK((f_matrix(n - 1) * f_matrix(n)).is_zero());
}

TEST_CASE("expansion is a ring homomorphism") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 20; ++it) {
        HMatrix a(2, 3), b(3, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 3; ++j) a.at(i, j) = random_element(rng);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 2; ++j) b.at(i, j) = random_element(rng);
        CHECK(expand(a * b) == expand(a) * expand(b));
    }

    CHECK(expand(HMatrix(2, 2)).is_zero());

    HMatrix one(1, 1);
    one.at(0, 0) = h_shift(1, -1);
    Matrix x = expand(one);
    CHECK(4 - static_cast<int>(kernel_of(zmat_of(x)).rank) == 2);
}

TEST_CASE("distinguished generators of the column span") {
    Matrix v1 = vn_basis(1);
    REQUIRE(v1.rows() == 4);
    REQUIRE(v1.cols() == 3);
    Matrix e1 = Matrix::parse_text("4 3\n-1 -1 1\n1 0 -1\n0 1 -1\n0 0 1");
    CHECK(v1 == e1);

    CHECK(vn_basis(2).rows() == 8);
    CHECK(vn_basis(2).cols() == 5);

    for (int n = 1; n <= 30; ++n) {
        Matrix b = vn_basis(n);
        Lattice l(b.rows(), b);  // constructor validates saturation
        CHECK(l.rank() == 2 * n + 1);
    }
}

TEST_CASE("presented modules have the stated ranks") {
    CHECK(delta_h(0).degree() == 1);
    for (int n = -30; n <= 30; ++n) CHECK(delta_h(n).degree() == 2 * std::abs(n) + 1);
}

TEST_CASE("the involution a1 negates the product generator") {
    GroupRingElementH w = h_shift(1, -1) * h_shift(2, -1);
    CHECK(GroupRingElementH::unit(1) * w == -w);

    // the third basis vector of the n = 1 module is that product
    Matrix a1 = delta_h(1).a1();
    CHECK(a1.at(0, 2).is_zero());
    CHECK(a1.at(1, 2).is_zero());
    CHECK(a1.at(2, 2) == Local2Rational(-1));
}

TEST_CASE("the n = 1 module is the augmentation ideal") {
    Matrix basis = Matrix::parse_text("4 3\n-1 -1 -1\n1 0 0\n0 1 0\n0 0 1");
    Lattice l(4, basis);
    HRepresentation reg = regular_h_rep();
    HRepresentation aug(l.coordinates_all(reg.a1() * basis), l.coordinates_all(reg.a2() * basis));
    CHECK(are_equivalent_h(delta_h(1), aug).status == Tri::yes);
}

TEST_CASE("double duals are literal fixed points") {
    for (int n = 0; n <= 8; ++n) {
        HRepresentation d = delta_h(n);
        HRepresentation dd = dual(dual(d));
        CHECK(dd.a1() == d.a1());
        CHECK(dd.a2() == d.a2());
    }
    CHECK(are_equivalent_h(dual(dual(delta_h(3))), delta_h(3)).status == Tri::yes);
}

TEST_CASE("minimal covers and the loop operator step the chain") {
    for (int n = 0; n <= 8; ++n) CHECK(minimal_cover_h(delta_h(n)).rank == n + 1);
    for (int n = 0; n <= 8; ++n) {
        HRepresentation up = theta_h(delta_h(n));
        CHECK(up.degree() == 2 * n + 3);
        CHECK(are_equivalent_h(up, delta_h(n + 1)).status == Tri::yes);
    }
}

TEST_CASE("exactness certificates across the sweep") {
    for (int n = 2; n <= 30; ++n) {
        ComplexCertificate cert = verify_complex(n);
        CHECK(cert.passed());
        CHECK(cert.product_zero);
        CHECK(cert.kernel_rank == 2 * n + 1);
        CHECK(cert.image_rank == 2 * n + 1);
        CHECK(cert.saturated);
    }
    CHECK_THROWS_AS(verify_complex(1), std::invalid_argument);
}

TEST_CASE("the chain modules carry no free summand") {
    for (int n = -4; n <= 4; ++n) CHECK(has_free_summand_h(delta_h(n)) == Tri::no);
    CHECK(has_free_summand_h(regular_h_rep()) == Tri::yes);
    CHECK(has_free_summand_h(direct_sum(delta_h(1), regular_h_rep())) == Tri::yes);
}

TEST_CASE("a redundant cover generator adds exactly one free summand") {
    HRepresentation d1 = delta_h(1);
    FreeCoverH cover = minimal_cover_h(d1);
    REQUIRE(cover.rank == 2);

    // append a duplicate of the first generator: still a cover, not minimal
    Matrix bigger(d1.degree(), cover.map.cols() + 4);
    for (int i = 0; i < cover.map.rows(); ++i)
        for (int j = 0; j < cover.map.cols(); ++j) bigger.at(i, j) = cover.map.at(i, j);
    for (int h = 0; h < 4; ++h) {
        Matrix col = d1.at(h).column(cover.generators[0]);
        for (int i = 0; i < d1.degree(); ++i) bigger.at(i, cover.map.cols() + h) = col.at(i, 0);
    }

    Lattice k = kernel_lattice(bigger);
    REQUIRE(k.rank() == 9);
    HRepresentation reg = regular_h_rep();
    HRepresentation knl(k.coordinates_all(block_diag(reg.a1(), 3) * k.basis()),
                        k.coordinates_all(block_diag(reg.a2(), 3) * k.basis()));

    SplitResultH s = try_split_off_h(knl, reg);
    REQUIRE(s.status == Tri::yes);
    CHECK(are_equivalent_h(*s.complement, delta_h(2)).status == Tri::yes);
}

TEST_CASE("no nontrivial idempotents in the mod-2 endomorphism algebras") {
    for (int n = -4; n <= 4; ++n) CHECK(!has_nontrivial_idempotent_mod2(delta_h(n)));
    // sanity: a decomposable module does produce one
    CHECK(has_nontrivial_idempotent_mod2(direct_sum(delta_h(0), delta_h(1))));
}
