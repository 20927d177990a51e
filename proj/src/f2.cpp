#include "a4ring/f2.hpp"

#include <stdexcept>

namespace a4ring {

F2Matrix F2Matrix::identity(int n) {
    F2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

F2Matrix F2Matrix::from_matrix(const Matrix& src) {
    F2Matrix m(src.rows(), src.cols());
    for (int i = 0; i < src.rows(); ++i)
        for (int j = 0; j < src.cols(); ++j)
            if (src.at(i, j).parity()) m.set(i, j, true);
    return m;
}

F2Matrix F2Matrix::operator*(const F2Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("F2Matrix: product dimension mismatch");
    F2Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k)
            if (get(i, k))
                for (int w = 0; w < o.wpr_; ++w) r.w_[r.row_off(i) + w] ^= o.w_[o.row_off(k) + w];
    return r;
}

F2Matrix F2Matrix::operator+(const F2Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("F2Matrix: sum dimension mismatch");
    F2Matrix r = *this;
    for (size_t t = 0; t < w_.size(); ++t) r.w_[t] ^= o.w_[t];
    return r;
}

int F2Matrix::rank() const {
    F2Matrix t = *this;
    return static_cast<int>(t.rref().size());
}

bool F2Matrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("F2Matrix: determinant of non-square matrix");
    return rank() == rows_;
}

std::vector<int> F2Matrix::rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int piv = -1;
        for (int i = r; i < rows_; ++i)
            if (get(i, c)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int k = 0; k < wpr_; ++k) std::swap(w_[row_off(piv) + k], w_[row_off(r) + k]);
        for (int i = 0; i < rows_; ++i)
            if (i != r && get(i, c)) xor_row(i, r);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<uint64_t>> F2Matrix::nullspace() const {
    F2Matrix t = *this;
    std::vector<int> pivots = t.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<uint64_t>> out;
    int nwords = (cols_ + 63) / 64;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<uint64_t> v(nwords, 0);
        v[f / 64] |= 1ull << (f % 64);
        for (size_t i = 0; i < pivots.size(); ++i)
            if (t.get(static_cast<int>(i), f)) v[pivots[i] / 64] |= 1ull << (pivots[i] % 64);
        out.push_back(std::move(v));
    }
    return out;
}

bool F2Echelon::insert(std::vector<uint64_t> v) {
    if (static_cast<int>(v.size()) != words_) throw std::invalid_argument("F2Echelon: wrong vector length");
    std::vector<uint64_t> comb((rows_.size() + 64) / 64 + 1, 0);
    reduce(v, &comb);
    int p = pivot_of(v);
    if (p < 0) return false;
    comb.resize((rows_.size() + 1 + 63) / 64, 0);
    comb[rows_.size() / 64] |= 1ull << (rows_.size() % 64);
    rows_.push_back(std::move(v));
    combs_.push_back(std::move(comb));
    pivots_.push_back(p);
    return true;
}

bool F2Echelon::reduces_to_zero(std::vector<uint64_t> v) const {
    reduce(v, nullptr);
    return pivot_of(v) < 0;
}

std::vector<int> F2Echelon::coords(std::vector<uint64_t> v) const {
    std::vector<uint64_t> comb((rows_.size() + 63) / 64 + 1, 0);
    reduce(v, &comb);
    if (pivot_of(v) >= 0) return {};
    std::vector<int> out;
    for (size_t i = 0; i < rows_.size(); ++i)
        if ((comb[i / 64] >> (i % 64)) & 1u) out.push_back(static_cast<int>(i));
    return out;
}

void F2Echelon::reduce(std::vector<uint64_t>& v, std::vector<uint64_t>* comb) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        int p = pivots_[i];
        if ((v[p / 64] >> (p % 64)) & 1u) {
            for (int k = 0; k < words_; ++k) v[k] ^= rows_[i][k];
            if (comb)
                for (size_t k = 0; k < combs_[i].size() && k < comb->size(); ++k) (*comb)[k] ^= combs_[i][k];
        }
    }
}

int F2Echelon::pivot_of(const std::vector<uint64_t>& v) const {
    for (int k = 0; k < words_; ++k)
        if (v[k]) {
            for (int b = 0; b < 64; ++b)
                if ((v[k] >> b) & 1u) return k * 64 + b;
        }
    return -1;
}

std::vector<uint64_t> f2_pack_column(const Matrix& m, int j) {
    std::vector<uint64_t> v((m.rows() + 63) / 64, 0);
    for (int i = 0; i < m.rows(); ++i)
        if (m.at(i, j).parity()) v[i / 64] |= 1ull << (i % 64);
    return v;
}

}  // namespace a4ring
