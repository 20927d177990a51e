#pragma once
// Bit-packed linear algebra over F2.  Mod-2 reductions drive saturation,
// unimodularity witnesses and the top-quotient computations.

#include <cstdint>
#include <vector>

#include "a4ring/matrix.hpp"

namespace a4ring {

class F2Matrix {
  public:
    F2Matrix() : rows_(0), cols_(0), wpr_(0) {}
    F2Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(static_cast<size_t>(rows) * wpr_, 0) {}

    static F2Matrix identity(int n);
    // entry parity; defined because denominators are odd
    static F2Matrix from_matrix(const Matrix& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int i, int j) const { return (w_[row_off(i) + j / 64] >> (j % 64)) & 1u; }
    void set(int i, int j, bool v) {
        uint64_t& w = w_[row_off(i) + j / 64];
        uint64_t m = 1ull << (j % 64);
        if (v) w |= m; else w &= ~m;
    }
    void xor_row(int dst, int src) {
        for (int k = 0; k < wpr_; ++k) w_[row_off(dst) + k] ^= w_[row_off(src) + k];
    }

    F2Matrix operator*(const F2Matrix& o) const;
    F2Matrix operator+(const F2Matrix& o) const;
    bool operator==(const F2Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && w_ == o.w_; }

    int rank() const;
    bool det() const;  // pre: square
    // reduced row echelon; returns pivot columns
    std::vector<int> rref();
    // basis of {x : Ax = 0}, one column per vector
    std::vector<std::vector<uint64_t>> nullspace() const;

  private:
    size_t row_off(int i) const { return static_cast<size_t>(i) * wpr_; }
    int rows_, cols_, wpr_;
    std::vector<uint64_t> w_;
};

// Incremental F2 echelon over fixed-length bit vectors; used to pick maximal
// independent subsets of columns in a deterministic first-fit order.
class F2Echelon {
  public:
    explicit F2Echelon(int dim) : dim_(dim), words_((dim + 63) / 64) {}

    int rank() const { return static_cast<int>(rows_.size()); }

    // true iff v was independent of the current span (and was added)
    bool insert(std::vector<uint64_t> v);
    // reduce v against the span; true iff the result is zero (v in span)
    bool reduces_to_zero(std::vector<uint64_t> v) const;
    // returns the F2 coordinates of v in terms of the inserted vectors, or empty if not in span
    std::vector<int> coords(std::vector<uint64_t> v) const;

  private:
    void reduce(std::vector<uint64_t>& v, std::vector<uint64_t>* comb) const;
    int pivot_of(const std::vector<uint64_t>& v) const;
    int dim_, words_;
    std::vector<std::vector<uint64_t>> rows_;   // echelonized vectors
    std::vector<std::vector<uint64_t>> combs_;  // combination masks over inserted order
    std::vector<int> pivots_;
};

std::vector<uint64_t> f2_pack_column(const Matrix& m, int j);

}  // namespace a4ring
