#pragma once
// Group-ring arithmetic over the Klein four-subgroup, the three-diagonal
// syzygy matrices F_n, the rank-(2n+1) modules they present, and the
// Heller/Green loop operator (kernel of the minimal free cover).
//
// The subgroup ring RH is local (R is the 2-local rationals, H a 2-group), so
// projective = free and minimal covers are governed by the mod-2 top M/JM.
// Modules are manipulated through expansion: every group-ring entry becomes
// its 4x4 regular-representation block, turning rank, kernel and saturation
// questions into certified linear algebra over R.

#include <array>
#include <vector>

#include "a4ring/matrix.hpp"
#include "a4ring/rep.hpp"
#include "a4ring/smith.hpp"

namespace a4ring {

// element of the group ring of H; coefficients indexed by (e, a1, a2, a1 a2),
// multiplication of indices is XOR
class GroupRingElementH {
   public:
    GroupRingElementH() = default;
    explicit GroupRingElementH(std::array<Local2Rational, 4> c) : c_(std::move(c)) {}

    static GroupRingElementH unit(int h);  // the group element h as a ring unit

    const Local2Rational& coeff(int h) const { return c_.at(static_cast<size_t>(h)); }
    Local2Rational& coeff(int h) { return c_.at(static_cast<size_t>(h)); }

    GroupRingElementH operator+(const GroupRingElementH& o) const;
    GroupRingElementH operator-(const GroupRingElementH& o) const;
    GroupRingElementH operator-() const;
    GroupRingElementH operator*(const GroupRingElementH& o) const;
    bool operator==(const GroupRingElementH& o) const { return c_ == o.c_; }
    bool is_zero() const;

    // image of the augmentation map (sum of the coefficients), a ring map to R
    Local2Rational augmentation() const;
    // 4x4 block of the regular representation; a ring homomorphism
    Matrix regular_matrix() const;

   private:
    std::array<Local2Rational, 4> c_{};
};

// h + sign, the building block of every nonzero syzygy-matrix entry
GroupRingElementH h_shift(int h, int sign);

// dense grid over the group ring
class HMatrix {
   public:
    HMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    GroupRingElementH& at(int i, int j);
    const GroupRingElementH& at(int i, int j) const;

    HMatrix operator*(const HMatrix& o) const;
    bool operator==(const HMatrix& o) const;
    bool is_zero() const;

   private:
    int rows_, cols_;
    std::vector<GroupRingElementH> e_;
};

// 4r x 4c matrix over R, replacing each entry by its regular-representation
// block; a ring homomorphism on grids
Matrix expand(const HMatrix& m);
// 4r x c matrix whose columns are the coefficient vectors of m's columns
// (the expansion of each column as an element of the free module RH^rows)
Matrix expand_vectors(const HMatrix& m);

// the three-diagonal syzygy matrix with n rows and n+1 columns: the main
// diagonal cycles a1-1, a2-1, -(a1+1), -(a2+1) for odd n and a1+1, a2+1,
// -(a1-1), -(a2-1) for even n; the second diagonal is zero except for its
// last entry, which is a2-1, -(a1-1), a2+1, a1+1 according to n = 1, 2, 3, 0
// mod 4; the third diagonal cycles a2-1, a1-1, a2+1, a1+1
HMatrix f_matrix(int n);

// the 2n+1 distinguished generators of the column span of f_matrix(n): its
// n+1 columns, then its first n columns multiplied by the cycled sequence
// a2-1, a1-1, a2+1, a1+1; returned expanded, as the columns of a
// 4n x (2n+1) matrix, which is a saturated lattice basis
Matrix vn_basis(int n);

// the modules presented by the syzygy matrices: delta_h(0) is trivial of
// rank 1, delta_h(n) for n > 0 acts on vn_basis(n), delta_h(-n) is the dual;
// rank is 2|n| + 1
HRepresentation delta_h(int n);

// minimal free cover of an H-module: rank = dim of M/JM over the field with
// two elements, generators lifted first-fit from the standard basis
struct FreeCoverH {
    int rank = 0;                 // number of free generators
    std::vector<int> generators;  // standard basis indices whose classes span M/JM
    Matrix map;                   // degree x 4*rank; column (t, h) is h * generator_t
};

FreeCoverH minimal_cover_h(const HRepresentation& m);

// kernel of the minimal free cover (the loop operator); the kernel lattice is
// verified to lie inside J times the free module, which certifies minimality
HRepresentation theta_h(const HRepresentation& m);

// exactness certificate at step n of the syzygy chain: the group-ring product
// f_matrix(n-1) * f_matrix(n) vanishes, and the distinguished generators span
// exactly the kernel of the expanded previous matrix (image = kernel; the
// span is contained in the kernel and is saturated of the same rank)
struct ComplexCertificate {
    int n = 0;
    bool product_zero = false;
    int kernel_rank = 0;  // rank of the kernel of expand(f_matrix(n-1))
    int image_rank = 0;   // rank of the lattice spanned by vn_basis(n)
    bool saturated = false;

    bool passed() const {
        return product_zero && saturated && kernel_rank == image_rank &&
               image_rank == 2 * n + 1;
    }
};

ComplexCertificate verify_complex(int n);

}  // namespace a4ring
