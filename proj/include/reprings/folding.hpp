#pragma once

#include <string>

#include "reprings/rootdatum.hpp"

namespace reprings {

// Folding data for a nontrivial pinned diagram automorphism: the fixed
// subalgebra type H^sigma, the dual folded type H_sigma, and the lattice
// identification of sigma-invariant weights with weights of H_sigma.
struct FoldedData {
    DiagramAutomorphism sigma;
    std::vector<std::vector<int>> orbits; // vertex orbits, ordered by smallest vertex
    std::vector<bool> exceptional;        // orbit contains an edge (A_2n middle orbit)

    std::string fixed_type_name; // H^sigma
    std::string dual_type_name;  // H_sigma
    RootDatum folded;            // root datum of H_sigma (rank-1 folds realized as A1)
    std::vector<int> orbit_of_folded_node; // folded Bourbaki node -> orbit index

    // sigma-invariant weight of the source -> weight of H_sigma
    Weight fold_weight(const Weight& w) const;
    // inverse of fold_weight, landing in the sigma-invariant lattice
    Weight unfold_weight(const Weight& fw) const;
};

FoldedData fold_diagram(const RootDatum& datum, const DiagramAutomorphism& sigma);

// vertex orbits of sigma, each sorted, ordered by smallest vertex
std::vector<std::vector<int>> vertex_orbits(const DiagramAutomorphism& sigma);

} // namespace reprings
