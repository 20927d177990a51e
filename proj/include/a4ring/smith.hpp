#pragma once
// Smith normal form over the 2-local integers and saturated lattices.
//
// Over this ring every nonzero element is a unit times a power of 2, so the
// invariant factors are powers of 2 and a matrix is equivalent to
// diag(2^e1, ..., 2^er) with e1 <= ... <= er.  A lattice (finitely generated
// submodule of R^n) is kept by a saturated basis: columns whose reductions
// mod 2 remain independent.  Saturation makes membership testable by rational
// solvability alone.

#include <optional>
#include <vector>

#include "a4ring/exactkernel.hpp"
#include "a4ring/matrix.hpp"

namespace a4ring {

struct SmithDecomposition {
    Matrix u;  // invertible rows x rows
    Matrix d;  // diagonal of powers of 2, divisibility chain
    Matrix v;  // invertible cols x cols
    std::vector<long> elementary_exponents;  // e1 <= ... <= er, length = rank
};

// u * a * v = d; pivot = entry of least 2-adic valuation, ties by least (row, col)
SmithDecomposition smith_normal_form(const Matrix& a);

class Lattice {
   public:
    // basis columns must be saturated (independent mod 2); throws otherwise
    Lattice(int ambient, Matrix basis);

    // saturates an arbitrary Q-independent spanning set first
    static Lattice from_span(int ambient, const std::vector<std::vector<mpq_class>>& cols);

    int ambient() const { return ambient_; }
    int rank() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }

    // membership; for wrong ambient dimension throws std::invalid_argument
    bool contains(const std::vector<Local2Rational>& v) const;
    // coordinates in the basis if the vector lies in the lattice
    std::optional<std::vector<Local2Rational>> coordinates(const std::vector<Local2Rational>& v) const;
    // batch form: true iff every column of m lies in the lattice
    bool contains_all(const Matrix& m) const;
    // coordinates of every column of m; throws std::domain_error if any is outside
    Matrix coordinates_all(const Matrix& m) const;

   private:
    int ambient_;
    Matrix basis_;
};

// saturation of the kernel of a (the full kernel submodule of R^cols)
Lattice kernel_lattice(const Matrix& a);

}  // namespace a4ring
