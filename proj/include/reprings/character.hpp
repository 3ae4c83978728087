#pragma once

#include <map>
#include <utility>

#include "reprings/rootdatum.hpp"

namespace reprings {

// Sparse formal character: finite map weight -> integer multiplicity.
// Virtual characters (negative multiplicities) are allowed.
struct FormalCharacter {
    const RootDatum* datum = nullptr;
    std::map<Weight, i64> terms;

    i64 coeff(const Weight& w) const {
        auto it = terms.find(w);
        return it == terms.end() ? 0 : it->second;
    }
    i64 dimension() const; // sum of multiplicities
    bool is_zero() const { return terms.empty(); }
    bool is_effective() const; // all multiplicities >= 0

    void add_term(const Weight& w, i64 m);

    FormalCharacter& operator+=(const FormalCharacter& o);
    FormalCharacter& operator-=(const FormalCharacter& o);
    FormalCharacter operator+(const FormalCharacter& o) const;
    FormalCharacter operator-(const FormalCharacter& o) const;
    FormalCharacter operator*(const FormalCharacter& o) const; // convolution
    FormalCharacter scaled(i64 c) const;
    bool operator==(const FormalCharacter& o) const { return terms == o.terms; }
};

using IrreducibleDecomposition = std::vector<std::pair<Weight, i64>>;

FormalCharacter unit_character(const RootDatum& datum);

// weight multiplicities of the irreducible with highest weight omega
// (Freudenthal recursion, expanded over full Weyl orbits)
FormalCharacter irreducible_character(const RootDatum& datum, const Weight& omega);

i64 weyl_dimension(const RootDatum& datum, const Weight& omega);

bool is_weyl_invariant(const FormalCharacter& x);

// repeated subtraction of the lex-largest dominant term among those of maximal
// <.,2 rho-check>; entries ordered by that subtraction order
IrreducibleDecomposition decompose(const FormalCharacter& x);

FormalCharacter character_of_decomposition(const RootDatum& datum,
                                           const IrreducibleDecomposition& dec);

// (tensor multiplicity of V_{omega+omega2+eta} in V_omega (x) V_omega2,
//  monomial dimension of the eta-graded piece of U(n_-),
//  equality flag). eta must lie in the root lattice with coords <= 0.
struct PrvResult {
    i64 tensor_mult = 0;
    i64 pbw_dim = 0;
    bool equal = false;
    bool dominant_enough = false; // all simple-coroot pairings exceed height(-eta)
};
PrvResult prv_multiplicity_check(const RootDatum& datum, const Weight& omega,
                                 const Weight& omega2, const Weight& eta);

// Exact division of Laurent polynomials on the weight lattice by leading-term
// (lex-largest) elimination; the divisor's leading coefficient must be a unit.
// Throws if the division leaves a remainder.
std::map<Weight, i64> laurent_quotient(std::map<Weight, i64> num,
                                       const std::map<Weight, i64>& den);

// full Weyl orbit of a regular weight together with (-1)^{length} signs
std::vector<std::pair<Weight, int>> signed_weyl_orbit(const RootDatum& datum,
                                                      const Weight& regular);

// shared enumeration budget (REPRINGS_BUDGET env var, default 1000000)
i64 enumeration_budget();

} // namespace reprings
