#include "a4ring/rep.hpp"

#include <stdexcept>

#include "a4ring/f2.hpp"
#include "a4ring/smith.hpp"

namespace a4ring {
namespace {

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

long trace_as_long(const Matrix& m) {
    Local2Rational t = m.trace();
    if (t.den() != 1) throw std::logic_error("character: non-integral trace");
    return t.num().get_si();
}

}  // namespace

HRepresentation::HRepresentation(Matrix a1, Matrix a2) : a1_(std::move(a1)), a2_(std::move(a2)) {
    const int d = a1_.rows();
    require(a1_.is_square() && a2_.is_square() && a2_.rows() == d, "H-representation: image shapes differ");
    const Matrix id = Matrix::identity(d);
    require(a1_ * a1_ == id, "H-representation: a1^2 != 1");
    require(a2_ * a2_ == id, "H-representation: a2^2 != 1");
    require(a1_ * a2_ == a2_ * a1_, "H-representation: generators do not commute");
}

Matrix HRepresentation::at(int h) const {
    switch (h) {
        case 0: return Matrix::identity(degree());
        case 1: return a1_;
        case 2: return a2_;
        case 3: return a1_ * a2_;
        default: throw std::invalid_argument("H-representation: bad element index");
    }
}

std::array<long, 4> HRepresentation::character() const {
    return {static_cast<long>(degree()), trace_as_long(a1_), trace_as_long(a2_), trace_as_long(a1_ * a2_)};
}

Representation::Representation(Matrix a1, Matrix a2, Matrix b)
    : a1_(std::move(a1)), a2_(std::move(a2)), b_(std::move(b)) {
    const int d = a1_.rows();
    require(a1_.is_square() && a2_.is_square() && b_.is_square() && a2_.rows() == d && b_.rows() == d,
            "representation: image shapes differ");
    const Matrix id = Matrix::identity(d);
    require(a1_ * a1_ == id, "representation: a1^2 != 1");
    require(a2_ * a2_ == id, "representation: a2^2 != 1");
    require(b_ * b_ * b_ == id, "representation: b^3 != 1");
    require(a1_ * a2_ == a2_ * a1_, "representation: a1 a2 != a2 a1");
    const Matrix b2 = b_ * b_;  // = b^{-1}
    require(b_ * a1_ * b2 == a2_, "representation: b a1 b^-1 != a2");
    require(b_ * a2_ * b2 == a1_ * a2_, "representation: b a2 b^-1 != a1 a2");
}

Matrix Representation::at(int g) const {
    auto [i, j] = A4::instance().factor(g);
    Matrix h = i == 0 ? Matrix::identity(degree()) : (i == 1 ? a1_ : (i == 2 ? a2_ : a1_ * a2_));
    return j == 0 ? h : h * b_.pow(static_cast<unsigned>(j));
}

HRepresentation Representation::restrict_to_h() const { return HRepresentation(a1_, a2_); }

std::array<long, 4> Representation::character() const {
    return {static_cast<long>(degree()), trace_as_long(a1_), trace_as_long(b_), trace_as_long(b_ * b_)};
}

Representation direct_sum(const Representation& r, const Representation& s) {
    return Representation(r.a1().direct_sum(s.a1()), r.a2().direct_sum(s.a2()), r.b().direct_sum(s.b()));
}

Representation tensor_product(const Representation& r, const Representation& s) {
    return Representation(r.a1().kronecker(s.a1()), r.a2().kronecker(s.a2()), r.b().kronecker(s.b()));
}

Representation dual(const Representation& r) {
    return Representation(r.a1().transpose(), r.a2().transpose(), (r.b() * r.b()).transpose());
}

HRepresentation direct_sum(const HRepresentation& r, const HRepresentation& s) {
    return HRepresentation(r.a1().direct_sum(s.a1()), r.a2().direct_sum(s.a2()));
}

HRepresentation tensor_product(const HRepresentation& r, const HRepresentation& s) {
    return HRepresentation(r.a1().kronecker(s.a1()), r.a2().kronecker(s.a2()));
}

HRepresentation dual(const HRepresentation& r) {
    return HRepresentation(r.a1().transpose(), r.a2().transpose());
}

Representation induce_from_h(const HRepresentation& s) {
    const A4& g4 = A4::instance();
    const int d = s.degree();
    auto induced = [&](int g) {
        Matrix m(3 * d, 3 * d);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                // block (i,j) is s(b^-i g b^j) when that element lies in H
                int x = g4.mul(g4.mul(g4.inv(4 * i), g), 4 * j);
                if (x >= 4) continue;
                Matrix blk = s.at(x);
                for (int r = 0; r < d; ++r)
                    for (int c = 0; c < d; ++c) m.at(i * d + r, j * d + c) = blk.at(r, c);
            }
        return m;
    };
    return Representation(induced(g4.idx_a1()), induced(g4.idx_a2()), induced(g4.idx_b()));
}

const std::array<std::array<long, 4>, 3>& rational_irreducible_characters() {
    static const std::array<std::array<long, 4>, 3> table{{
        {1, 1, 1, 1},
        {2, 2, -1, -1},
        {3, -1, 0, 0},
    }};
    return table;
}

bool is_irreducible(const Representation& r) {
    const auto chi = r.character();
    for (const auto& row : rational_irreducible_characters())
        if (chi == row) return true;
    return false;
}

HRepresentation linear_character_h(int k) {
    if (k < 0 || k > 3) throw std::invalid_argument("linear character index out of range");
    Matrix a1(1, 1), a2(1, 1);
    a1.at(0, 0) = Local2Rational((k & 1) ? -1 : 1);
    a2.at(0, 0) = Local2Rational((k >> 1) ? -1 : 1);
    return HRepresentation(a1, a2);
}

Representation trivial_rep() {
    return Representation(Matrix::identity(1), Matrix::identity(1), Matrix::identity(1));
}

Representation tau_rep() {
    return Representation(Matrix::identity(2), Matrix::identity(2), Matrix({{0, -1}, {1, -1}}));
}

Representation gamma_rep(int d) {
    if (d != 1 && d != 2 && d != 4) throw std::invalid_argument("gamma_rep: d must be 1, 2 or 4");
    const long q = 4 / d;
    return Representation(Matrix({{1, 0, -q}, {d, -1, -2}, {0, 0, -1}}),
                          Matrix({{-3, q, 0}, {-2 * d, 3, 0}, {-d, 2, -1}}),
                          Matrix({{1, 0, 0}, {d, 0, -1}, {0, 1, -1}}));
}

Representation gamma2_monomial_rep() {
    return Representation(Matrix({{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}}),
                          Matrix({{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}),
                          Matrix({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
}

namespace {

Matrix perm_matrix(const Perm4& p) {
    Matrix m(4, 4);
    for (int i = 0; i < 4; ++i) m.at(p.img[static_cast<size_t>(i)], i) = Local2Rational(1);
    return m;
}

Matrix regular_matrix(int g) {
    const A4& g4 = A4::instance();
    Matrix m(12, 12);
    for (int h = 0; h < 12; ++h) m.at(g4.mul(g, h), h) = Local2Rational(1);
    return m;
}

}  // namespace

Representation natural_rep() {
    return Representation(perm_matrix(perm_a1()), perm_matrix(perm_a2()), perm_matrix(perm_b()));
}

Representation regular_rep() {
    const A4& g4 = A4::instance();
    return Representation(regular_matrix(g4.idx_a1()), regular_matrix(g4.idx_a2()), regular_matrix(g4.idx_b()));
}

HRepresentation regular_h_rep() {
    // multiplication in H is XOR on the indices (e, a1, a2, a1 a2)
    auto reg = [](int h) {
        Matrix m(4, 4);
        for (int j = 0; j < 4; ++j) m.at(h ^ j, j) = Local2Rational(1);
        return m;
    };
    return HRepresentation(reg(1), reg(2));
}

AlgebraElement algebra_unit(int g) {
    AlgebraElement w(12);
    w[static_cast<size_t>(g)] = Local2Rational(1);
    return w;
}

AlgebraElement w0_idempotent() {
    const A4& g4 = A4::instance();
    AlgebraElement w(12);
    const Local2Rational third(1, 3);
    w[static_cast<size_t>(g4.idx_e())] = third;
    w[static_cast<size_t>(g4.idx_b())] = third;
    w[static_cast<size_t>(g4.idx_b2())] = third;
    return w;
}

AlgebraElement w1_idempotent() {
    AlgebraElement w = w0_idempotent();
    for (auto& c : w) c = -c;
    w[0] += Local2Rational(1);
    return w;
}

Matrix left_mult_matrix(const AlgebraElement& w) {
    if (w.size() != 12) throw std::invalid_argument("algebra element needs 12 coefficients");
    const A4& g4 = A4::instance();
    Matrix m(12, 12);
    for (int g = 0; g < 12; ++g) {
        if (w[static_cast<size_t>(g)].is_zero()) continue;
        for (int h = 0; h < 12; ++h) m.at(g4.mul(g, h), h) += w[static_cast<size_t>(g)];
    }
    return m;
}

Matrix right_mult_matrix(const AlgebraElement& w) {
    if (w.size() != 12) throw std::invalid_argument("algebra element needs 12 coefficients");
    const A4& g4 = A4::instance();
    Matrix m(12, 12);
    for (int g = 0; g < 12; ++g) {
        if (w[static_cast<size_t>(g)].is_zero()) continue;
        for (int h = 0; h < 12; ++h) m.at(g4.mul(h, g), h) += w[static_cast<size_t>(g)];
    }
    return m;
}

Matrix idempotent_image_basis(const Matrix& e) {
    if (!e.is_square() || !(e * e == e)) throw std::invalid_argument("idempotent_image_basis: not idempotent");
    F2Echelon ech(e.rows());
    std::vector<int> picked;
    for (int j = 0; j < e.cols(); ++j)
        if (ech.insert(f2_pack_column(e, j))) picked.push_back(j);
    Matrix basis(e.rows(), static_cast<int>(picked.size()));
    for (size_t k = 0; k < picked.size(); ++k)
        for (int i = 0; i < e.rows(); ++i) basis.at(i, static_cast<int>(k)) = e.at(i, picked[k]);
    return basis;
}

namespace {

ProjectiveIdeal make_projective(const AlgebraElement& w, bool quotient_basis) {
    const A4& g4 = A4::instance();
    Matrix basis;
    if (quotient_basis) {
        // basis {h w0 : h in H}: unit coefficients on disjoint cosets h<b>
        Matrix cols(12, 4);
        for (int i = 0; i < 4; ++i) {
            Matrix v = left_mult_matrix(algebra_unit(i)) * left_mult_matrix(w).column(g4.idx_e());
            for (int r = 0; r < 12; ++r) cols.at(r, i) = v.at(r, 0);
        }
        basis = cols;
    } else {
        basis = idempotent_image_basis(right_mult_matrix(w));
    }
    Lattice lat(12, basis);
    auto action = [&](int g) { return lat.coordinates_all(regular_matrix(g) * basis); };
    return ProjectiveIdeal{
        Representation(action(g4.idx_a1()), action(g4.idx_a2()), action(g4.idx_b())), basis};
}

}  // namespace

const ProjectiveIdeal& projective_p0() {
    static const ProjectiveIdeal p = make_projective(w0_idempotent(), true);
    return p;
}

const ProjectiveIdeal& projective_p1() {
    static const ProjectiveIdeal p = make_projective(w1_idempotent(), false);
    return p;
}

}  // namespace a4ring
