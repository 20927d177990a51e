#pragma once
// Rational class combinations of lattice labels with multiplication driven by
// a computed product table, the three component idempotents derived from the
// projective subring, a presented Laurent-type algebra in generators x, y, z,
// exact evaluation onto four one-dimensional components, and a consistency
// audit tying the computed ring to the presented one.

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "a4ring/gmodules.hpp"

namespace a4ring {

// finite rational combination of class labels; canonical: no zero coefficients
struct ClassElement {
    std::map<std::string, mpq_class> coeff;

    static ClassElement of(const std::string& label, const mpq_class& c = 1);
    bool is_zero() const { return coeff.empty(); }
    std::string str() const;

    ClassElement& operator+=(const ClassElement& o);
    ClassElement& operator-=(const ClassElement& o);
    friend ClassElement operator+(ClassElement a, const ClassElement& b) { return a += b; }
    friend ClassElement operator-(ClassElement a, const ClassElement& b) { return a -= b; }
    friend ClassElement operator*(const mpq_class& c, const ClassElement& e);
    friend bool operator==(const ClassElement&, const ClassElement&) = default;
};

// a needed label pair has no verified entry in the product table
struct UnresolvedProduct : std::domain_error {
    UnresolvedProduct(const std::string& l, const std::string& r);
    std::string left, right;
};

// bilinear extension of the table product; throws UnresolvedProduct
ClassElement class_multiply(const ClassElement& a, const ClassElement& b,
                            const ProductTable& tab);
std::optional<ClassElement> try_class_multiply(const ClassElement& a, const ClassElement& b,
                                               const ProductTable& tab);

// pairwise orthogonal, sum to the unit class [Delta(0)]
struct IdempotentTriple {
    ClassElement f1, f2, f3;
    ClassElement unit;
};

// derives the triple from the table alone: checks the regular-class square
// ([P0]+[P1])^2 = 12([P0]+[P1]), solves for the unit of the projective ideal,
// splits it by factoring the minimal polynomial of [P0] over that ideal, and
// sets f3 = unit complement; verifies idempotency, orthogonality, the unit
// sum, and [P0] f3 = [P1] f3 = 0 (logic_error on any failure)
IdempotentTriple component_idempotents(const ProductTable& tab);

// e * f3; the annihilation of both projective classes is certified when the
// triple is built
ClassElement f3_project(const ClassElement& e, const IdempotentTriple& idem,
                        const ProductTable& tab);

// [Delta(n)][Delta(m)] f3 = [Delta(n+m)] f3, both sides canonical
struct TowerProductCertificate {
    int n = 0, m = 0;
    ClassElement lhs, rhs;
    bool equal = false;
};
TowerProductCertificate tower_product_identity(int n, int m, const IdempotentTriple& idem,
                                               const ProductTable& tab);

// --- presented algebra -------------------------------------------------
// generators x (invertible), y, z subject to y^2 = y + 2 and
// z^2 = 2z + y + 1; normal basis x^k y^e z^f with e, f in {0, 1}

struct RawTerm {
    long k = 0;
    int ypow = 0;  // arbitrary nonnegative powers before reduction
    int zpow = 0;
    mpq_class coeff = 1;
};
using RawElement = std::vector<RawTerm>;

class NormalFormElement {
  public:
    using Key = std::tuple<long, int, int>;  // (k, e, f), e and f in {0, 1}

    static NormalFormElement zero() { return {}; }
    static NormalFormElement constant(const mpq_class& c);
    static NormalFormElement x(long k);
    static NormalFormElement y();
    static NormalFormElement z();
    static NormalFormElement monomial(long k, int e, int f, const mpq_class& c = 1);

    const std::map<Key, mpq_class>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::string str() const;

    NormalFormElement& operator+=(const NormalFormElement& o);
    NormalFormElement& operator-=(const NormalFormElement& o);
    friend NormalFormElement operator+(NormalFormElement a, const NormalFormElement& b) {
        return a += b;
    }
    friend NormalFormElement operator-(NormalFormElement a, const NormalFormElement& b) {
        return a -= b;
    }
    friend NormalFormElement operator*(const NormalFormElement& a, const NormalFormElement& b);
    friend NormalFormElement operator*(const mpq_class& c, const NormalFormElement& e);
    friend bool operator==(const NormalFormElement&, const NormalFormElement&) = default;

  private:
    std::map<Key, mpq_class> c_;
    void prune();
    friend NormalFormElement normalize(const RawElement&);
};

// z-powers rewrite before y-powers; the overlap is confluent (see below)
NormalFormElement normalize(const RawElement& raw);

// reduces mixed powers y^a z^b for a, b <= 4 in both rule orders and compares
bool reduction_confluent();

// --- components ---------------------------------------------------------
// the four one-dimensional specializations of (y, z); each component is a
// Laurent polynomial in x

using LaurentPoly = std::map<long, mpq_class>;
std::string laurent_str(const LaurentPoly& p);
using ComponentTuple = std::array<LaurentPoly, 4>;

struct ComponentMaps {
    std::array<std::pair<mpq_class, mpq_class>, 4> points;  // (y, z) per component
    std::array<std::array<mpq_class, 4>, 4> eval_matrix;    // rows [1, y, z, yz]
    mpq_class det;                                          // exact
    bool relations_annihilated = false;  // both defining relations vanish at all points
};
ComponentMaps component_maps();
ComponentTuple evaluate_components(const NormalFormElement& e);

// --- audit ---------------------------------------------------------------

enum class AuditStatus { holds, fails, unknown, extra_relation };
std::string audit_status_str(AuditStatus s);

struct AuditLine {
    std::string relation;
    AuditStatus status = AuditStatus::unknown;
    std::string lhs_canonical;
    std::string rhs_canonical;
};

// substitutes x -> [Delta(1)] f3, y -> [Tau] f3, z -> [L] f3 and compares the
// computed ring against the presented one: the defining relations, every
// pairwise product among {x, y, z, x^-1}, linear relations among resolvable
// window monomials that the presented algebra cannot prove (extra relations),
// and the window injectivity rank of the four-component evaluation.
// Unresolved products downgrade their line to unknown, never to a failure.
// Requires a table of level >= 1; the standard run uses level >= 2.
std::vector<AuditLine> consistency_audit(const ProductTable& tab);

}  // namespace a4ring
