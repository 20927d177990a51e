#pragma once
// Lattices over the full group ring: minimal projective covers, the syzygy
// tower for the whole group, restriction and induction bridges down to the
// Klein four-subgroup tower, tensor shift identities and the pairwise
// product table of named module classes.
//
// The radical of the group ring is (2, a1-1, a2-1); the quotient by it is
// the group algebra of the 3-cycle over F2, which is semisimple with two
// simple modules: the trivial one (covered by P0) and the 2-dimensional one
// (covered by P1).  The top of a lattice splits accordingly into the fixed
// part (dimension s) and 2-dimensional pairs (t of them), and the minimal
// cover is P0^s (+) P1^t.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "a4ring/hom.hpp"
#include "a4ring/rep.hpp"
#include "a4ring/smith.hpp"

namespace a4ring {

struct ModuleClassLabel {
    enum class Kind { delta, tau, ell, p0, p1, gamma_reg, unknown };

    Kind kind = Kind::unknown;
    int n = 0;              // only meaningful for Kind::delta
    std::string signature;  // only meaningful for Kind::unknown

    static ModuleClassLabel delta(int n);
    static ModuleClassLabel tau();
    static ModuleClassLabel ell();
    static ModuleClassLabel p0();
    static ModuleClassLabel p1();
    static ModuleClassLabel gamma_reg();
    static ModuleClassLabel unknown(std::string signature);

    std::string str() const;
    // inverse of str() on the non-unknown kinds; nullopt otherwise
    static std::optional<ModuleClassLabel> parse(const std::string& s);
    bool operator==(const ModuleClassLabel& o) const;
};

struct CoverG {
    int s = 0, t = 0;    // multiplicities of P0 and P1
    Representation rep;  // P0^s (+) P1^t in that block order
    Matrix map;          // degree x (4s+8t); surjective, kernel inside the radical
};

// minimal projective cover of a lattice; throws std::domain_error if the top
// fails to split under the 3-cycle action (impossible for genuine lattices,
// kept as a guard) and std::logic_error if an internal certificate fails
CoverG projective_cover_g(const Representation& m);

// syzygy tower over the full group: level 0 is the trivial lattice, level
// n+1 is the kernel lattice of the minimal cover of level n, negative levels
// are duals of positive ones
class DeltaTowerG {
  public:
    explicit DeltaTowerG(int max_n);

    int max_n() const { return max_n_; }
    const Representation& at(int n) const;  // |n| <= max_n
    const CoverG& cover(int n) const;       // 0 <= n < max_n

  private:
    int max_n_;
    std::vector<Representation> pos_, neg_;
    std::vector<CoverG> covers_;
};

// convenience wrapper building a fresh tower of depth |n|
Representation delta_g(int n);

// rational multiplicities (trivial, 2-dimensional, 3-dimensional) solved
// from a character; nullopt when the character fits no lattice
std::optional<std::array<long, 3>> rational_multiplicities(const std::array<long, 4>& chi);

struct ProjectivePair {
    int s = 0, t = 0;
};

// solves 4s + 8t = degree, s - t = character value at the 3-cycle; throws
// std::domain_error when the solution is not a pair of nonnegative integers
ProjectivePair projective_multiplicities(int degree, long chi_b);
ProjectivePair projective_multiplicities(const Representation& r);

struct DecompositionReport {
    enum class Status { verified, unknown, indeterminate };

    std::string target;
    std::vector<std::pair<std::string, int>> summands;  // nonzero only, registry order
    Status status = Status::unknown;
    std::optional<Matrix> witness;  // unimodular conjugation onto the summand sum
    int remainder_degree = 0;                 // 0 when fully decomposed
    std::array<long, 4> remainder_character{};  // valid when remainder_degree > 0

    bool verified() const { return status == Status::verified; }
    int multiplicity_of(const std::string& label) const;
};

// greedy witnessed decomposition against the registry; candidates whose
// rational multiplicities exceed the remainder's are skipped outright, which
// keeps dead-end searches cheap without weakening the witness checks
DecompositionReport decompose_module(const Representation& whole,
                                     const std::vector<RegistryEntry>& registry,
                                     const SearchOptions& opts = {},
                                     const std::string& target_name = "");

// registry of resolvable classes: Delta(k) for |k| <= delta_range plus
// Tau, L, P0, P1; the tower must reach delta_range
std::vector<RegistryEntry> standard_library(const DeltaTowerG& tower, int delta_range);

struct LiftingCertificate {
    int n = 0;
    bool restriction_matches = false;        // level n restricts to the subgroup level n
    bool induced_restriction_triple = false; // restricting the induced module gives three copies
    Tri direct_summand = Tri::indeterminate; // level n splits off the induced module

    bool passed() const {
        return restriction_matches && induced_restriction_triple && direct_summand == Tri::yes;
    }
};

LiftingCertificate check_lifting(int n, const DeltaTowerG& tower, const SearchOptions& opts = {});

struct ShiftCertificate {
    int k = 0;
    // cover shapes (s, t) at levels 3k, 3k+1, 3k+2: expected
    // (k+1, k), (k, k+1), (k+1, k+1)
    bool shapes_match = false;
    std::array<ProjectivePair, 3> shapes{};
    // witnessed decompositions of level (x) level-1 tensors at the three
    // levels against {next level, projectives}; run only when requested
    bool tensors_run = false;
    bool tensors_match = false;
    std::array<DecompositionReport, 3> tensors{};

    bool passed() const;
};

// certifies the three cover shapes at tower levels 3k..3k+2 and, when
// with_tensors is set, the tensor-shift identities
// level(3k) (x) level(1)   ~ level(3k+1) (+) GammaReg^k
// level(3k+1) (x) level(1) ~ level(3k+2) (+) P0 (+) GammaReg^k
// level(3k+2) (x) level(1) ~ level(3k+3) (+) P1 (+) GammaReg^k
ShiftCertificate verify_shift_level(int k, const DeltaTowerG& tower, bool with_tensors,
                                    const SearchOptions& opts = {});

struct ProductEntry {
    std::string left, right;
    DecompositionReport report;
};

struct ProductTable {
    int max_n = 0;
    std::vector<RegistryEntry> library;
    std::vector<ProductEntry> entries;

    // symmetric lookup; nullptr when the pair is absent
    const DecompositionReport* find(const std::string& left, const std::string& right) const;
};

// pairwise tensor decompositions among {Delta(0), Tau, L, Delta(+-1..+-max_n),
// P0, P1}, resolved against the library Delta(|k| <= 2 max_n) + {Tau, L, P0,
// P1}; pairs with a projective factor are settled by the multiplicity solve
// (tensoring with a projective lands in projectives), witnessed when both
// factors are projective; the table is extended by (library label) x P_i
// entries so that products of recorded results stay resolvable
ProductTable product_table(int max_n, const DeltaTowerG& tower, const SearchOptions& opts = {});

}  // namespace a4ring
