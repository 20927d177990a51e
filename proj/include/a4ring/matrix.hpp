#pragma once
// Dense matrices over Z_(2) with exact arithmetic.

#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "a4ring/local2.hpp"

namespace a4ring {

class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
    }
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Local2Rational& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Local2Rational& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
    Local2Rational& operator()(int i, int j) { return at(i, j); }
    const Local2Rational& operator()(int i, int j) const { return at(i, j); }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Local2Rational& c) const;
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    Matrix kronecker(const Matrix& o) const;      // left factor outer
    Matrix direct_sum(const Matrix& o) const;     // block diagonal
    Matrix hstack(const Matrix& o) const;
    Matrix vstack(const Matrix& o) const;
    Matrix submatrix(int r0, int c0, int nrows, int ncols) const;
    Matrix column(int j) const { return submatrix(0, j, rows_, 1); }
    Matrix pow(unsigned k) const;                 // square matrices, small k

    Local2Rational trace() const;
    bool is_zero() const;

    // exact rational determinant; pre: square
    mpq_class det_mpq() const;
    // inverse exists over Z_(2) iff det is odd; throws std::domain_error otherwise
    Matrix inverse() const;

    // "rows cols" header line, then one row per line, entries "p" or "p/q"
    std::string to_text() const;
    static Matrix parse_text(std::istream& in);
    static Matrix parse_text(const std::string& s);

  private:
    int rows_, cols_;
    std::vector<Local2Rational> e_;
};

// square and det odd
bool is_unimodular(const Matrix& a);

}  // namespace a4ring
