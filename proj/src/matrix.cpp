#include "a4ring/matrix.hpp"

#include <sstream>

namespace a4ring {

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    e_.resize(static_cast<size_t>(rows_) * cols_);
    int i = 0;
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("Matrix: ragged initializer");
        int j = 0;
        for (long x : r) at(i, j++) = Local2Rational(x);
        ++i;
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Local2Rational(1);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix: product dimension mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Local2Rational& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Local2Rational& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: sum dimension mismatch");
    Matrix r = *this;
    for (size_t t = 0; t < e_.size(); ++t) r.e_[t] += o.e_[t];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: difference dimension mismatch");
    Matrix r = *this;
    for (size_t t = 0; t < e_.size(); ++t) r.e_[t] -= o.e_[t];
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
}

Matrix Matrix::scaled(const Local2Rational& c) const {
    Matrix r = *this;
    for (auto& x : r.e_) x *= c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::kronecker(const Matrix& o) const {
    Matrix r(rows_ * o.rows_, cols_ * o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero()) continue;
            for (int p = 0; p < o.rows_; ++p)
                for (int q = 0; q < o.cols_; ++q)
                    r.at(i * o.rows_ + p, j * o.cols_ + q) = at(i, j) * o.at(p, q);
        }
    return r;
}

Matrix Matrix::direct_sum(const Matrix& o) const {
    Matrix r(rows_ + o.rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) r.at(rows_ + i, cols_ + j) = o.at(i, j);
    return r;
}

Matrix Matrix::hstack(const Matrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("Matrix: hstack row mismatch");
    Matrix r(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("Matrix: vstack column mismatch");
    Matrix r(rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

Matrix Matrix::submatrix(int r0, int c0, int nrows, int ncols) const {
    if (r0 < 0 || c0 < 0 || r0 + nrows > rows_ || c0 + ncols > cols_)
        throw std::invalid_argument("Matrix: submatrix out of range");
    Matrix r(nrows, ncols);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

Matrix Matrix::pow(unsigned k) const {
    if (!is_square()) throw std::invalid_argument("Matrix: pow of non-square matrix");
    Matrix r = identity(rows_);
    for (unsigned t = 0; t < k; ++t) r = r * *this;
    return r;
}

Local2Rational Matrix::trace() const {
    if (!is_square()) throw std::invalid_argument("Matrix: trace of non-square matrix");
    Local2Rational t;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

mpq_class Matrix::det_mpq() const {
    if (!is_square()) throw std::invalid_argument("Matrix: determinant of non-square matrix");
    int n = rows_;
    std::vector<mpq_class> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = at(i, j).mpq();
    mpq_class det = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (a[static_cast<size_t>(i) * n + k] != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != k) {
            for (int j = k; j < n; ++j) std::swap(a[static_cast<size_t>(piv) * n + j], a[static_cast<size_t>(k) * n + j]);
            det = -det;
        }
        const mpq_class& p = a[static_cast<size_t>(k) * n + k];
        det *= p;
        for (int i = k + 1; i < n; ++i) {
            mpq_class f = a[static_cast<size_t>(i) * n + k] / p;
            if (f == 0) continue;
            for (int j = k; j < n; ++j) a[static_cast<size_t>(i) * n + j] -= f * a[static_cast<size_t>(k) * n + j];
        }
    }
    return det;
}

Matrix Matrix::inverse() const {
    if (!is_square()) throw std::invalid_argument("Matrix: inverse of non-square matrix");
    int n = rows_;
    // Gauss-Jordan on [A | I] over Q; the result is checked back into Z_(2)
    std::vector<mpq_class> a(static_cast<size_t>(n) * 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * 2 * n + j] = at(i, j).mpq();
        a[static_cast<size_t>(i) * 2 * n + n + i] = 1;
    }
    int w = 2 * n;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (a[static_cast<size_t>(i) * w + k] != 0) { piv = i; break; }
        if (piv < 0) throw std::domain_error("Matrix: inverse of singular matrix");
        if (piv != k)
            for (int j = 0; j < w; ++j) std::swap(a[static_cast<size_t>(piv) * w + j], a[static_cast<size_t>(k) * w + j]);
        mpq_class p = a[static_cast<size_t>(k) * w + k];
        for (int j = 0; j < w; ++j) a[static_cast<size_t>(k) * w + j] /= p;
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            mpq_class f = a[static_cast<size_t>(i) * w + k];
            if (f == 0) continue;
            for (int j = 0; j < w; ++j) a[static_cast<size_t>(i) * w + j] -= f * a[static_cast<size_t>(k) * w + j];
        }
    }
    Matrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = Local2Rational(a[static_cast<size_t>(i) * w + n + j]);
    return r;
}

std::string Matrix::to_text() const {
    std::ostringstream out;
    out << rows_ << " " << cols_ << "\n";
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) out << " ";
            out << at(i, j).str();
        }
        out << "\n";
    }
    return out.str();
}

Matrix Matrix::parse_text(std::istream& in) {
    int r, c;
    if (!(in >> r >> c)) throw std::invalid_argument("Matrix: bad text header");
    if (r < 0 || c < 0) throw std::invalid_argument("Matrix: negative dimension in text");
    Matrix m(r, c);
    std::string tok;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            if (!(in >> tok)) throw std::invalid_argument("Matrix: truncated text body");
            m.at(i, j) = Local2Rational::parse(tok);
        }
    return m;
}

Matrix Matrix::parse_text(const std::string& s) {
    std::istringstream in(s);
    return parse_text(in);
}

bool is_unimodular(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("is_unimodular: matrix must be square");
    mpq_class d = a.det_mpq();
    if (d == 0) return false;
    return val2_raw(d) == 0;
}

}  // namespace a4ring
