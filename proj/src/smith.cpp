#include "a4ring/smith.hpp"

#include <stdexcept>
#include <utility>

#include "a4ring/f2.hpp"

namespace a4ring {
namespace {

long qval2(const mpq_class& q) {
    return static_cast<long>(mpz_scan1(q.get_num().get_mpz_t(), 0)) -
           static_cast<long>(mpz_scan1(q.get_den().get_mpz_t(), 0));
}

Matrix matrix_of(const QMat& q) {
    Matrix m(q.rows, q.cols);
    for (int i = 0; i < q.rows; ++i)
        for (int j = 0; j < q.cols; ++j) m.at(i, j) = Local2Rational(q.at(i, j));
    return m;
}

}  // namespace

SmithDecomposition smith_normal_form(const Matrix& a) {
    const int n = a.rows(), m = a.cols();
    QMat cur(n, m), u(n, n), v(m, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) cur.at(i, j) = a.at(i, j).mpq();
    for (int i = 0; i < n; ++i) u.at(i, i) = 1;
    for (int j = 0; j < m; ++j) v.at(j, j) = 1;

    std::vector<long> exps;
    const int steps = std::min(n, m);
    for (int t = 0; t < steps; ++t) {
        int pi = -1, pj = -1;
        long pval = 0;
        for (int i = t; i < n; ++i)
            for (int j = t; j < m; ++j) {
                if (cur.at(i, j) == 0) continue;
                long val = qval2(cur.at(i, j));
                if (pi < 0 || val < pval) { pi = i; pj = j; pval = val; }
            }
        if (pi < 0) break;

        if (pi != t) {
            for (int j = 0; j < m; ++j) std::swap(cur.at(pi, j), cur.at(t, j));
            for (int j = 0; j < n; ++j) std::swap(u.at(pi, j), u.at(t, j));
        }
        if (pj != t) {
            for (int i = 0; i < n; ++i) std::swap(cur.at(i, pj), cur.at(i, t));
            for (int i = 0; i < m; ++i) std::swap(v.at(i, pj), v.at(i, t));
        }

        // normalize pivot to an exact power of 2
        mpq_class pow2 = pval >= 0 ? mpq_class(mpz_class(1) << pval)
                                   : mpq_class(1, mpz_class(1) << (-pval));
        mpq_class unit_inv = pow2 / cur.at(t, t);
        unit_inv.canonicalize();
        for (int j = t; j < m; ++j) {
            cur.at(t, j) *= unit_inv;
            cur.at(t, j).canonicalize();
        }
        for (int j = 0; j < n; ++j) {
            u.at(t, j) *= unit_inv;
            u.at(t, j).canonicalize();
        }

        for (int i = 0; i < n; ++i) {
            if (i == t || cur.at(i, t) == 0) continue;
            mpq_class f = cur.at(i, t) / pow2;
            f.canonicalize();
            for (int j = t; j < m; ++j) {
                cur.at(i, j) -= f * cur.at(t, j);
                cur.at(i, j).canonicalize();
            }
            for (int j = 0; j < n; ++j) {
                u.at(i, j) -= f * u.at(t, j);
                u.at(i, j).canonicalize();
            }
        }
        for (int j = 0; j < m; ++j) {
            if (j == t || cur.at(t, j) == 0) continue;
            mpq_class f = cur.at(t, j) / pow2;
            f.canonicalize();
            cur.at(t, j) = 0;  // only row t is affected: column t is zero elsewhere
            for (int i = 0; i < m; ++i) {
                v.at(i, j) -= f * v.at(i, t);
                v.at(i, j).canonicalize();
            }
        }
        exps.push_back(pval);
    }

    SmithDecomposition out{matrix_of(u), matrix_of(cur), matrix_of(v), std::move(exps)};
    return out;
}

Lattice::Lattice(int ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {
    if (basis_.rows() != ambient_) throw std::invalid_argument("lattice basis: ambient mismatch");
    if (basis_.cols() > 0) {
        F2Matrix red = F2Matrix::from_matrix(basis_);
        if (red.rank() != basis_.cols())
            throw std::domain_error("lattice basis not saturated: dependent mod 2");
    }
}

Lattice Lattice::from_span(int ambient, const std::vector<std::vector<mpq_class>>& cols) {
    for (const auto& c : cols)
        if (static_cast<int>(c.size()) != ambient)
            throw std::invalid_argument("lattice span: ambient mismatch");
    if (cols.empty()) return Lattice(ambient, Matrix(ambient, 0));
    auto sat = saturate_columns(cols, ambient);
    Matrix b(ambient, static_cast<int>(sat.size()));
    for (size_t j = 0; j < sat.size(); ++j)
        for (int i = 0; i < ambient; ++i) b.at(i, static_cast<int>(j)) = Local2Rational(sat[j][i]);
    return Lattice(ambient, std::move(b));
}

bool Lattice::contains(const std::vector<Local2Rational>& v) const {
    return coordinates(v).has_value();
}

std::optional<std::vector<Local2Rational>> Lattice::coordinates(const std::vector<Local2Rational>& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw std::invalid_argument("lattice membership: vector not in ambient space");
    if (basis_.cols() == 0) {
        for (const auto& x : v)
            if (!x.is_zero()) return std::nullopt;
        return std::vector<Local2Rational>{};
    }
    Matrix t(ambient_, 1);
    for (int i = 0; i < ambient_; ++i) t.at(i, 0) = v[static_cast<size_t>(i)];
    try {
        QMat x = solve_in_span(basis_, t);
        std::vector<Local2Rational> out;
        out.reserve(static_cast<size_t>(x.rows));
        // saturation makes rational coordinates 2-integral; canon() enforces it
        for (int i = 0; i < x.rows; ++i) out.emplace_back(x.at(i, 0));
        return out;
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

bool Lattice::contains_all(const Matrix& m) const {
    if (m.rows() != ambient_)
        throw std::invalid_argument("lattice membership: matrix not in ambient space");
    if (m.cols() == 0) return true;
    if (basis_.cols() == 0) return m.is_zero();
    KernelResult kr = kernel_of(zmat_of(basis_.hstack(m)));
    return kr.rank == basis_.cols();
}

Matrix Lattice::coordinates_all(const Matrix& m) const {
    if (m.rows() != ambient_)
        throw std::invalid_argument("lattice membership: matrix not in ambient space");
    QMat x = solve_in_span(basis_, m);
    return matrix_of(x);
}

Lattice kernel_lattice(const Matrix& a) {
    KernelResult kr = kernel_of(zmat_of(a));
    if (kr.basis.empty()) return Lattice(a.cols(), Matrix(a.cols(), 0));
    return Lattice::from_span(a.cols(), kr.basis);
}

}  // namespace a4ring
