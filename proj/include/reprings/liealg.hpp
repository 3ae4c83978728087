#pragma once

#include "reprings/rootdatum.hpp"

namespace reprings {

// Sign of a pinned diagram automorphism on the root space of beta, in the
// Chevalley basis built from the standard asymmetry bicharacter of the root
// lattice. Requires a simply-laced datum and sigma-pinned generators
// (e_i -> e_{sigma(i)}). The sign is multiplicative along root addition.
i64 pinned_automorphism_sign(const RootDatum& datum, const DiagramAutomorphism& sigma,
                             const RootCoords& beta);

// Dimension of the fixed subalgebra of the pinned automorphism: orbit count on
// the Cartan plus eigenvalue-1 contributions of the signed root-space cycles.
i64 fixed_subalgebra_dimension(const RootDatum& datum, const DiagramAutomorphism& sigma);

} // namespace reprings
