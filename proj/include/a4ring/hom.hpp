#pragma once
// Intertwiner lattices, equivalence testing and direct-sum decomposition.
//
// Hom(R, S) over Z_(2) is computed as a saturated lattice of matrices.  For
// the full group the computation first averages over the 3-cycle (1/3 lies in
// the ring), cutting the ambient dimension to the b-equivariant part; the
// remaining condition is the a1-constraint alone, since a2 = b a1 b^{-1}.
//
// Equivalence is decided through determinant parity: a combination of hom
// basis elements is invertible iff its determinant is odd, and that depends
// only on the mod-2 coefficients.  Exhausting all mod-2 combinations is
// therefore a complete decision procedure whenever the rank is small enough
// to enumerate; beyond the cap the search falls back to seeded sampling and
// reports indeterminacy instead of guessing.  Indeterminate also covers the
// rare case where the exact kernel solver exhausts its modular budget (entry
// sizes past its reconstruction bound): the decision is left open rather
// than approximated.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "a4ring/rep.hpp"
#include "a4ring/smith.hpp"

namespace a4ring {

struct HomBasis {
    int target_degree = 0, source_degree = 0;
    std::vector<Matrix> mats;  // saturated basis of the lattice of intertwiners

    int rank() const { return static_cast<int>(mats.size()); }
};

// maps X with X * r(g) = s(g) * X, written target_degree x source_degree
HomBasis intertwiners(const Representation& r, const Representation& s);
HomBasis intertwiners_h(const HRepresentation& r, const HRepresentation& s);

struct SearchOptions {
    uint64_t seed = 1;
    int exhaustive_cap = 22;       // max total mod-2 rank enumerated exactly
    uint64_t sample_cap = 1 << 20; // random draws past the cap
};

enum class Tri { yes, no, indeterminate };

struct EquivalenceResult {
    Tri status = Tri::no;
    int hom_rank = -1;                // -1 when not computed (cheap negatives)
    std::optional<Matrix> witness;    // unimodular U with U r(g) = s(g) U
};

EquivalenceResult are_equivalent(const Representation& r, const Representation& s,
                                 const SearchOptions& opts = {});
EquivalenceResult are_equivalent_h(const HRepresentation& r, const HRepresentation& s,
                                   const SearchOptions& opts = {});

struct SplitResult {
    Tri status = Tri::no;
    // present when status == yes:
    std::optional<Representation> complement;
    std::optional<Matrix> witness;  // unimodular [psi | k]: t ~ piece (+) complement
};

// tries to split a summand equivalent to `piece` off `whole`
SplitResult try_split_off(const Representation& whole, const Representation& piece,
                          const SearchOptions& opts = {});

struct SplitResultH {
    Tri status = Tri::no;
    std::optional<HRepresentation> complement;
    std::optional<Matrix> witness;
};

SplitResultH try_split_off_h(const HRepresentation& whole, const HRepresentation& piece,
                             const SearchOptions& opts = {});

// whether m has a direct summand isomorphic to the subgroup's regular module
// (free modules over the local subgroup ring are exactly the projectives)
Tri has_free_summand_h(const HRepresentation& m, const SearchOptions& opts = {});

struct RegistryEntry {
    std::string label;
    Representation rep;
};

struct Decomposition {
    std::vector<std::pair<std::string, int>> multiplicities;  // nonzero only, registry order
    std::vector<std::string> order;                           // pieces in split order
    Matrix witness;                                           // whole ~ sum in split order (+) remainder
    std::optional<Representation> remainder;                  // present when incomplete
    std::array<long, 4> remainder_character{};                // valid when remainder is set
    bool indeterminate = false;  // a split search hit the sampling cap

    bool complete() const { return !remainder && !indeterminate; }
    int multiplicity_of(const std::string& label) const;
};

// greedy split-off against the registry, largest degree first, registry order
// breaking ties; pieces that match nothing are reported as a remainder
Decomposition decompose(const Representation& whole, const std::vector<RegistryEntry>& registry,
                        const SearchOptions& opts = {});

}  // namespace a4ring
