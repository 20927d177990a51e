#pragma once
// Certified exact kernels and solves for integer matrices.
//
// Strategy: reduced row echelon form modulo 31-bit primes, CRT across primes,
// rational reconstruction, then exact verification.  A result is returned only
// when (a) every reconstructed kernel vector satisfies M*v = 0 in exact
// arithmetic and (b) the count of independent vectors matches cols - rank_p,
// which certifies the rank because rank_p never exceeds the rational rank.
// Bad primes therefore cost retries, never wrong answers.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "a4ring/matrix.hpp"

namespace a4ring {

struct ZMat {
    int rows = 0, cols = 0;
    std::vector<mpz_class> a;  // row-major

    mpz_class& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const mpz_class& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

struct QMat {
    int rows = 0, cols = 0;
    std::vector<mpq_class> a;  // row-major

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    mpq_class& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const mpq_class& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// clears denominators row by row (row scaling preserves kernels and solution sets)
ZMat zmat_of(const Matrix& m);
ZMat zmat_of(const QMat& m);

struct KernelResult {
    int rank = 0;                               // certified rank of the input
    std::vector<std::vector<mpq_class>> basis;  // kernel vectors, length = cols
};

// kernel of M over Q with certified rank; deterministic
KernelResult kernel_of(const ZMat& m);

// X with B*X = T; requires B of full column rank and every column of T in the
// column span; throws std::domain_error otherwise.  Exactly verified.
QMat solve_in_span(const Matrix& b, const Matrix& t);
QMat solve_in_span_q(const QMat& b, const QMat& t);

// 2-saturation of a Q-independent list of columns: repeatedly replaces a
// mod-2-dependent combination w by w/2 until reductions mod 2 are independent.
// Returns columns spanning the saturation of the input span in Z_(2)^n.
std::vector<std::vector<mpq_class>> saturate_columns(std::vector<std::vector<mpq_class>> cols, int ambient);

}  // namespace a4ring
