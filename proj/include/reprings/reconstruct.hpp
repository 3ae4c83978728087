#pragma once

#include <string>

#include "reprings/twisted.hpp"

namespace reprings {

// Decomposition of a product / operation value into presentation labels.
// When the value involves labels outside the truncation bound the entry is
// flagged as escaped and carries no terms; escaped entries are recorded,
// never silently truncated.
struct DecompositionEntry {
    bool escaped = false;
    std::vector<std::pair<int, i64>> terms; // label index -> multiplicity, by index

    bool operator==(const DecompositionEntry& o) const = default;
};

// Truncated lambda-semiring of a group: irreducible labels up to a bound with
// their pairwise product table, exterior-square table, and Adams tables.
struct LambdaSemiringPresentation {
    std::string source;
    i64 bound = 0;
    std::vector<IrreducibleLabel> labels; // sorted by (dimension, orbit, chi)
    std::vector<i64> dims;
    int unit = 0;
    std::vector<std::vector<DecompositionEntry>> products; // symmetric matrix
    std::vector<DecompositionEntry> lambda2, psi2, psi3;
};

LambdaSemiringPresentation build_presentation(const RootDatum& datum, i64 bound);
// cyclic order-2 extensions (and trivial component groups) only
LambdaSemiringPresentation build_presentation(const DisconnectedGroup& g, i64 bound);

// Subsets of labels containing the unit and closed under product
// decomposition; subsets whose closure relies on an escaped product are kept
// but flagged provisional.
struct SubsemiringResult {
    std::vector<std::vector<int>> subsets; // label indices, ascending
    std::vector<bool> provisional;
};
SubsemiringResult normal_subsemirings(const LambdaSemiringPresentation& p);

// Dimension- and unit-preserving label bijections matching the product table
// (and the exterior-square table when require_lambda); escaped entries only
// match escaped entries. Returned as permutations in deterministic order.
std::vector<std::vector<int>> find_isomorphisms(const LambdaSemiringPresentation& a,
                                                const LambdaSemiringPresentation& b,
                                                bool require_lambda);

// A label map between two presentations of the functor data (restriction to a
// smaller subgroup, or conjugation by a component-group element).
struct FunctorMorphism {
    std::string name;
    int from = 0, to = 0; // presentation indices
    std::vector<std::vector<std::pair<int, i64>>> map; // per from-label
};

// Finite avatar of the open-subgroup functor: one presentation per subgroup
// of the component group, with restriction and conjugation maps.
struct OpenSubgroupFunctorData {
    FiniteGroup gamma;
    std::vector<std::string> subgroup_names;
    std::vector<LambdaSemiringPresentation> presentations;
    std::vector<FunctorMorphism> morphisms;
    // families induced by conjugation by each element of gamma (bijections)
    std::vector<std::vector<std::vector<int>>> inner_families;
};

OpenSubgroupFunctorData open_subgroup_functor(const DisconnectedGroup& g, i64 bound);
OpenSubgroupFunctorData open_subgroup_functor(const RootDatum& datum, i64 bound);

// Families of per-subgroup bijections commuting with every functor morphism
// and with the Adams tables; family classes are families modulo composition
// with conjugation-induced families on either side.
struct FunctorIsomorphisms {
    std::vector<std::vector<std::vector<int>>> families;
    std::vector<std::vector<std::vector<int>>> family_classes; // representatives
};
FunctorIsomorphisms functor_isomorphisms(const OpenSubgroupFunctorData& a,
                                         const OpenSubgroupFunctorData& b, bool require_lambda);

} // namespace reprings
