#include "a4ring/syzygy.hpp"

#include <stdexcept>

#include "a4ring/exactkernel.hpp"
#include "a4ring/f2.hpp"

namespace a4ring {

GroupRingElementH GroupRingElementH::unit(int h) {
    if (h < 0 || h > 3) throw std::invalid_argument("group ring: element index out of range");
    GroupRingElementH x;
    x.c_[static_cast<size_t>(h)] = Local2Rational(1);
    return x;
}

GroupRingElementH GroupRingElementH::operator+(const GroupRingElementH& o) const {
    GroupRingElementH x;
    for (size_t h = 0; h < 4; ++h) x.c_[h] = c_[h] + o.c_[h];
    return x;
}

GroupRingElementH GroupRingElementH::operator-(const GroupRingElementH& o) const {
    GroupRingElementH x;
    for (size_t h = 0; h < 4; ++h) x.c_[h] = c_[h] - o.c_[h];
    return x;
}

GroupRingElementH GroupRingElementH::operator-() const {
    GroupRingElementH x;
    for (size_t h = 0; h < 4; ++h) x.c_[h] = -c_[h];
    return x;
}

GroupRingElementH GroupRingElementH::operator*(const GroupRingElementH& o) const {
    GroupRingElementH x;
    for (size_t i = 0; i < 4; ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < 4; ++j) x.c_[i ^ j] += c_[i] * o.c_[j];
    }
    return x;
}

bool GroupRingElementH::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

Local2Rational GroupRingElementH::augmentation() const {
    Local2Rational s;
    for (const auto& c : c_) s += c;
    return s;
}

Matrix GroupRingElementH::regular_matrix() const {
    Matrix m(4, 4);
    for (int k = 0; k < 4; ++k)
        for (int j = 0; j < 4; ++j) m.at(k, j) = c_[static_cast<size_t>(k ^ j)];
    return m;
}

GroupRingElementH h_shift(int h, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("group ring: shift sign must be +-1");
    GroupRingElementH x = GroupRingElementH::unit(h);
    x.coeff(0) += Local2Rational(sign);
    return x;
}

HMatrix::HMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("group ring matrix: negative shape");
    e_.resize(static_cast<size_t>(rows) * static_cast<size_t>(cols));
}

GroupRingElementH& HMatrix::at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::invalid_argument("group ring matrix: index out of range");
    return e_[static_cast<size_t>(i) * cols_ + j];
}

const GroupRingElementH& HMatrix::at(int i, int j) const {
    return const_cast<HMatrix*>(this)->at(i, j);
}

HMatrix HMatrix::operator*(const HMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("group ring matrix: shape mismatch");
    HMatrix x(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const GroupRingElementH& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) x.at(i, j) = x.at(i, j) + a * o.at(k, j);
        }
    return x;
}

bool HMatrix::operator==(const HMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool HMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix expand(const HMatrix& m) {
    Matrix x(4 * m.rows(), 4 * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const GroupRingElementH& e = m.at(i, j);
            if (e.is_zero()) continue;
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) x.at(4 * i + k, 4 * j + l) = e.coeff(k ^ l);
        }
    return x;
}

Matrix expand_vectors(const HMatrix& m) {
    Matrix x(4 * m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            for (int k = 0; k < 4; ++k) x.at(4 * i + k, j) = m.at(i, j).coeff(k);
    return x;
}

HMatrix f_matrix(int n) {
    if (n < 1) throw std::invalid_argument("syzygy matrix: n must be positive");
    const std::array<GroupRingElementH, 4> main_odd{h_shift(1, -1), h_shift(2, -1),
                                                    -h_shift(1, 1), -h_shift(2, 1)};
    const std::array<GroupRingElementH, 4> main_even{h_shift(1, 1), h_shift(2, 1),
                                                     -h_shift(1, -1), -h_shift(2, -1)};
    const std::array<GroupRingElementH, 4> third{h_shift(2, -1), h_shift(1, -1), h_shift(2, 1),
                                                 h_shift(1, 1)};
    // last entry of the second diagonal, by n mod 4 = 1, 2, 3, 0
    const std::array<GroupRingElementH, 4> corner{h_shift(1, 1), h_shift(2, -1), -h_shift(1, -1),
                                                  h_shift(2, 1)};

    HMatrix f(n, n + 1);
    const auto& main = (n % 2 == 1) ? main_odd : main_even;
    for (int i = 0; i < n; ++i) f.at(i, i) = main[static_cast<size_t>(i % 4)];
    f.at(n - 1, n) = corner[static_cast<size_t>(n % 4)];
    for (int i = 0; i + 2 <= n; ++i) f.at(i, i + 2) = third[static_cast<size_t>(i % 4)];
    return f;
}

Matrix vn_basis(int n) {
    if (n < 1) throw std::invalid_argument("syzygy basis: n must be positive");
    const std::array<GroupRingElementH, 4> mult{h_shift(2, -1), h_shift(1, -1), h_shift(2, 1),
                                                h_shift(1, 1)};
    HMatrix f = f_matrix(n);
    HMatrix v(n, 2 * n + 1);
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i < n; ++i) v.at(i, j) = f.at(i, j);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            v.at(i, n + 1 + j) = f.at(i, j) * mult[static_cast<size_t>(j % 4)];
    return expand_vectors(v);
}

namespace {

// block-diagonal action of the group element h on the free module RH^n
Matrix free_action(int h, int n) {
    Matrix block = GroupRingElementH::unit(h).regular_matrix();
    Matrix x = block;
    for (int i = 1; i < n; ++i) x = x.direct_sum(block);
    return x;
}

}  // namespace

HRepresentation delta_h(int n) {
    if (n == 0) return HRepresentation(Matrix::identity(1), Matrix::identity(1));
    if (n < 0) return dual(delta_h(-n));
    Matrix b = vn_basis(n);
    Lattice l(b.rows(), b);  // throws if the generators fail to be saturated
    return HRepresentation(l.coordinates_all(free_action(1, n) * b),
                           l.coordinates_all(free_action(2, n) * b));
}

FreeCoverH minimal_cover_h(const HRepresentation& m) {
    const int deg = m.degree();
    // span of JM mod 2M: the columns of (a1 - 1) and (a2 - 1)
    F2Echelon ech(deg);
    const Matrix j1 = m.a1() - Matrix::identity(deg), j2 = m.a2() - Matrix::identity(deg);
    for (int j = 0; j < deg; ++j) ech.insert(f2_pack_column(j1, j));
    for (int j = 0; j < deg; ++j) ech.insert(f2_pack_column(j2, j));

    FreeCoverH cover;
    const Matrix id = Matrix::identity(deg);
    for (int i = 0; i < deg && ech.rank() < deg; ++i)
        if (ech.insert(f2_pack_column(id, i))) cover.generators.push_back(i);
    cover.rank = static_cast<int>(cover.generators.size());

    cover.map = Matrix(deg, 4 * cover.rank);
    for (int t = 0; t < cover.rank; ++t)
        for (int h = 0; h < 4; ++h) {
            Matrix col = m.at(h).column(cover.generators[static_cast<size_t>(t)]);
            for (int i = 0; i < deg; ++i) cover.map.at(i, 4 * t + h) = col.at(i, 0);
        }
    // Nakayama: full mod-2 column span certifies surjectivity over the local ring
    if (F2Matrix::from_matrix(cover.map).rank() != deg)
        throw std::logic_error("free cover: lifted generators do not cover the module");
    return cover;
}

HRepresentation theta_h(const HRepresentation& m) {
    FreeCoverH cover = minimal_cover_h(m);
    Lattice k = kernel_lattice(cover.map);
    if (k.rank() != 4 * cover.rank - m.degree())
        throw std::logic_error("loop operator: kernel rank off the exact-sequence count");

    // minimality: the kernel must sit inside J times the free module
    const int fr = 4 * cover.rank;
    F2Echelon rad(fr);
    const Matrix r1 = free_action(1, cover.rank) - Matrix::identity(fr);
    const Matrix r2 = free_action(2, cover.rank) - Matrix::identity(fr);
    for (int j = 0; j < fr; ++j) rad.insert(f2_pack_column(r1, j));
    for (int j = 0; j < fr; ++j) rad.insert(f2_pack_column(r2, j));
    for (int c = 0; c < k.rank(); ++c)
        if (!rad.reduces_to_zero(f2_pack_column(k.basis(), c)))
            throw std::logic_error("loop operator: cover is not minimal");

    return HRepresentation(k.coordinates_all(free_action(1, cover.rank) * k.basis()),
                           k.coordinates_all(free_action(2, cover.rank) * k.basis()));
}

ComplexCertificate verify_complex(int n) {
    if (n < 2) throw std::invalid_argument("complex certificate: n must be at least 2");
    ComplexCertificate cert;
    cert.n = n;
    cert.product_zero = (f_matrix(n - 1) * f_matrix(n)).is_zero();

    Matrix prev = expand(f_matrix(n - 1));
    KernelResult kr = kernel_of(zmat_of(prev));
    cert.kernel_rank = static_cast<int>(kr.basis.size());

    Matrix b = vn_basis(n);
    try {
        Lattice l(b.rows(), b);
        cert.saturated = true;
        cert.image_rank = l.rank();
    } catch (const std::domain_error&) {
        cert.saturated = false;
        cert.image_rank = -1;
        return cert;
    }
    // containment of the span in the kernel; with saturation and equal ranks
    // this upgrades to equality of lattices
    if (!(prev * b).is_zero()) cert.product_zero = false;
    return cert;
}

}  // namespace a4ring
