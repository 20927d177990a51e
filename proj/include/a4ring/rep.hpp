#pragma once
// Integral representations of the alternating group on 4 points over Z_(2),
// and of its Klein four-subgroup H.
//
// A representation is stored by the images of the generators a1, a2, b and is
// validated against the defining relations on construction.  The value at an
// arbitrary element falls out of the factorization g = h * b^j.

#include <array>
#include <vector>

#include "a4ring/matrix.hpp"
#include "a4ring/perm.hpp"

namespace a4ring {

class HRepresentation {
   public:
    HRepresentation(Matrix a1, Matrix a2);

    int degree() const { return a1_.rows(); }
    const Matrix& a1() const { return a1_; }
    const Matrix& a2() const { return a2_; }

    // h in {0 = e, 1 = a1, 2 = a2, 3 = a1 a2}
    Matrix at(int h) const;

    // traces at (e, a1, a2, a1 a2)
    std::array<long, 4> character() const;

   private:
    Matrix a1_, a2_;
};

class Representation {
   public:
    Representation(Matrix a1, Matrix a2, Matrix b);

    int degree() const { return a1_.rows(); }
    const Matrix& a1() const { return a1_; }
    const Matrix& a2() const { return a2_; }
    const Matrix& b() const { return b_; }

    // value at the group element with the given index
    Matrix at(int g) const;

    HRepresentation restrict_to_h() const;

    // traces at the class representatives (e, a1, b, b^2)
    std::array<long, 4> character() const;

    bool operator==(const Representation& o) const {
        return a1_ == o.a1_ && a2_ == o.a2_ && b_ == o.b_;
    }

   private:
    Matrix a1_, a2_, b_;
};

Representation direct_sum(const Representation& r, const Representation& s);
Representation tensor_product(const Representation& r, const Representation& s);
// g -> transpose of the value at g^{-1}
Representation dual(const Representation& r);
HRepresentation direct_sum(const HRepresentation& r, const HRepresentation& s);
HRepresentation tensor_product(const HRepresentation& r, const HRepresentation& s);
HRepresentation dual(const HRepresentation& r);
// induction along H < G with transversal (e, b, b^2); degree triples
Representation induce_from_h(const HRepresentation& s);

// characters of the rationally irreducible representations at (e, a1, b, b^2):
// trivial, the 2-dimensional one through G/H, and the 3-dimensional ones
const std::array<std::array<long, 4>, 3>& rational_irreducible_characters();
// irreducible = the rational span is irreducible; detected by character
bool is_irreducible(const Representation& r);

// the four linear characters of H as 1-dimensional representations;
// index k has a1 -> (-1)^(k&1), a2 -> (-1)^(k>>1)
HRepresentation linear_character_h(int k);

Representation trivial_rep();
// the 2-dimensional irreducible through the quotient by H
Representation tau_rep();
// left regular representation of H, 4 x 4, basis ordered (e, a1, a2, a1 a2)
HRepresentation regular_h_rep();
// the three 3-dimensional irreducibles, pairwise inequivalent over Z_(2); d in {1,2,4}
Representation gamma_rep(int d);
// monomial model of the d = 2 case (equivalent to gamma_rep(2))
Representation gamma2_monomial_rep();
// permutation representation on the 4 points
Representation natural_rep();
// left regular representation, 12 x 12
Representation regular_rep();

// elements of the group algebra as coefficient vectors over the element order
using AlgebraElement = std::vector<Local2Rational>;
AlgebraElement algebra_unit(int g);
// (1/3)(e + b + b^2), the idempotent averaging over <b>
AlgebraElement w0_idempotent();
// its complement e - w0
AlgebraElement w1_idempotent();
Matrix left_mult_matrix(const AlgebraElement& w);
Matrix right_mult_matrix(const AlgebraElement& w);

// the two projective indecomposables: the left ideals generated by w0 and w1,
// with the action written in a saturated lattice basis
struct ProjectiveIdeal {
    Representation rep;   // action in the chosen basis
    Matrix basis;         // 12 x degree, columns inside the regular module
};
const ProjectiveIdeal& projective_p0();
const ProjectiveIdeal& projective_p1();

// saturated basis of the image of an idempotent matrix over Z_(2), picked as
// the first column subset that stays independent mod 2 (valid because the
// image of an idempotent is a direct summand, hence saturated)
Matrix idempotent_image_basis(const Matrix& e);

}  // namespace a4ring
