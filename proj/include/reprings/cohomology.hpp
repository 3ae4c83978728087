#pragma once

#include <optional>

#include "reprings/finite_group.hpp"
#include "reprings/matrix.hpp"

namespace reprings {

// Finite abelian module Z = (+) Z/d_j with a group action given by one integer
// matrix per group element (entry (i,j) maps component j into component i).
struct GModule {
    std::vector<i64> factors;   // d_1 | d_2 | ... , each >= 1
    std::vector<IntMat> action; // indexed by group element

    int rank() const { return int(factors.size()); }
    i64 exponent() const; // lcm of the factors
    i64 size() const;
    // v -> action[g] v, reduced per component
    std::vector<i64> apply(int g, const std::vector<i64>& v) const;
};

GModule trivial_module(const FiniteGroup& g, std::vector<i64> factors);
// action matrices given per element; validates compatibility with the table
GModule make_module(const FiniteGroup& g, std::vector<i64> factors,
                    std::vector<IntMat> action);
// module generated by a matrix per generator (other elements filled in by words)
GModule module_from_generators(const FiniteGroup& g, std::vector<i64> factors,
                               const std::vector<std::pair<int, IntMat>>& gen_action);

// H^i(Gamma, Z) via the normalized bar resolution, with explicit cocycle
// representatives and coordinate reduction for classes.
struct CohomologyResult {
    int degree = 0;
    std::vector<i64> invariant_factors; // entries > 1; empty means H = 0

    // internals for class arithmetic
    i64 m = 1;                            // exponent of Z (all cochain arithmetic mod m)
    std::vector<std::vector<int>> tuples; // degree-tuples of non-identity elements
    int module_rank = 0;
    IntMat kernel_gens;                   // cocycle generators as columns (t-coords)
    IntMat coord_transform;               // U with coords(c) = U c mod D
    IntMat coord_inverse;                 // inverse of coord_transform mod m
    std::vector<i64> full_diagonal;       // per-row orders (1 entries dropped above)
    std::vector<int> factor_rows;         // rows of U giving invariant_factors

    i64 order() const;
    // cocycle vector (length tuples*rank, mod m scaled per component) -> coords
    std::vector<i64> reduce_cocycle(const std::vector<i64>& t) const;
    // representative cocycle of a coordinate vector
    std::vector<i64> cocycle_of(const std::vector<i64>& coords) const;
    std::vector<std::vector<i64>> all_classes() const; // coordinate vectors
};

CohomologyResult cohomology_group(const FiniteGroup& g, const GModule& z, int degree);

// subgroup with its restricted module, plus index maps
struct Subgroup {
    FiniteGroup group;
    GModule module;
    std::vector<int> to_parent;   // subgroup element -> parent element
    std::vector<int> from_parent; // parent element -> subgroup element or -1
};
Subgroup make_subgroup(const FiniteGroup& g, const GModule& z, std::vector<int> elems);

// cocycle restriction, re-reduced in the subgroup's cohomology
std::vector<i64> restrict_class(const FiniteGroup& g, const CohomologyResult& hg,
                                const std::vector<i64>& coords, const Subgroup& s,
                                const CohomologyResult& hs);

// transfer/corestriction along the subgroup inclusion
std::vector<i64> corestrict_class(const FiniteGroup& g, const GModule& z,
                                  const CohomologyResult& hg, const Subgroup& s,
                                  const CohomologyResult& hs, const std::vector<i64>& coords);

// every u in H^1 whose restriction to each cyclic subgroup vanishes must be 0
struct VanishingCheck {
    bool ok = false;
    i64 classes_checked = 0;
    std::optional<std::vector<i64>> counterexample;
};
VanishingCheck cyclic_sylow_vanishing_check(const FiniteGroup& g, const GModule& z);

// restriction to a Sylow p-subgroup is injective with image the
// normalizer-stable classes (p-local module, cyclic Sylow)
struct StableElementsCheck {
    bool ok = false;
    i64 image_size = 0, stable_size = 0;
};
StableElementsCheck stable_elements_check(const FiniteGroup& g, const GModule& z, i64 p,
                                          int degree);

// automorphisms of the extension realized from a degree-2 class that induce the
// identity on Gamma and Z, modulo conjugation by Z; order must equal |H^1|
struct ExtensionAutomorphisms {
    i64 order = 0;
    i64 h1_order = 0;
    bool matches_h1 = false;
};
ExtensionAutomorphisms extension_automorphisms(const FiniteGroup& g, const GModule& z,
                                               const CohomologyResult& h2,
                                               const std::vector<i64>& coords);

} // namespace reprings
