#pragma once

#include <optional>
#include <set>
#include <vector>

#include "reprings/dynkin.hpp"

namespace reprings {

// Weights live in fundamental-weight coordinates, roots in simple-root
// coordinates; both follow the Bourbaki numbering of the diagram.
using Weight = std::vector<i64>;
using RootCoords = std::vector<i64>;

// permutation of diagram vertices preserving the Cartan matrix
struct DiagramAutomorphism {
    std::vector<int> perm;

    int order() const;
    bool is_identity() const;
    int apply(int v) const { return perm[v]; }
    Weight apply(const Weight& w) const;
    DiagramAutomorphism power(int k) const;
    DiagramAutomorphism compose(const DiagramAutomorphism& o) const; // this after o
};

DiagramAutomorphism identity_automorphism(int rank);
// validates sigma against the Cartan matrix
DiagramAutomorphism make_automorphism(const CartanMatrix& c, std::vector<int> perm);
// all Cartan-preserving vertex permutations
std::vector<DiagramAutomorphism> all_diagram_automorphisms(const CartanMatrix& c);

// {+-1}-valued torus element: a homomorphism from a lattice with a chosen basis
// to {+-1}, stored as exponents of -1 per basis vector
struct TorsionTorusElement {
    std::vector<i64> exponents; // mod 2

    bool is_trivial() const;
    // (-1)-exponent of the value on an integer combination of the basis
    i64 value_exponent(const std::vector<i64>& coords) const;
    TorsionTorusElement operator*(const TorsionTorusElement& o) const;
};

struct RootDatum {
    DynkinDiagram diagram;
    std::vector<RootCoords> positive_roots; // sorted by (height, coords)
    std::vector<i64> symmetrizer;           // d_i with d_i a_ij = d_j a_ji
    // P/Q data: with U * cartan * V = D in Smith form, the class of a weight w
    // in P/Q is (U w) reduced modulo the diagonal of D
    std::vector<i64> invariant_factors; // full diagonal of D (including 1s)
    IntMat snf_U;

    int rank() const { return diagram.rank(); }
    const IntMat& cartan() const { return diagram.cartan.entries; }

    Weight zero_weight() const { return Weight(rank(), 0); }
    Weight rho() const { return Weight(rank(), 1); }
    Weight fundamental_weight(int i) const;

    Weight root_to_weight(const RootCoords& c) const;
    // simple-root coordinates of a weight if it lies in the root lattice
    std::optional<RootCoords> root_coords_of(const Weight& w) const;

    bool is_dominant(const Weight& w) const;
    Weight reflect(const Weight& w, int i) const; // simple reflection s_i
    Weight act(const Weight& w, const std::vector<int>& word) const;

    // <w, beta-check> for a (positive) root beta in root coordinates
    i64 pairing_with_coroot(const Weight& w, const RootCoords& beta) const;
    // (w, beta) for beta in the root lattice, in the normalization where the
    // symmetrizer gives (alpha_i, alpha_i) = 2 d_i
    i64 form_with_root(const Weight& w, const RootCoords& beta) const;
    i64 height(const RootCoords& beta) const;

    // class of w in P/Q, coordinates modulo invariant_factors
    std::vector<i64> weight_class(const Weight& w) const;
    i64 fundamental_group_order() const;

    Weight dominant_representative(const Weight& w) const;
    std::set<Weight> weyl_orbit(const Weight& w) const;
    i64 weyl_order() const;
};

RootDatum build_root_datum(const CartanMatrix& cartan);
RootDatum build_root_datum(const std::string& type_string);

i64 classical_positive_root_count(SimpleType t, int rank);

// Lemma-level minuscule lift: the unique dominant weight pairing to {0,1} with
// every positive coroot whose class in P/Q is chi (given in the Smith basis of
// weight_class). Rejects chi not fixed by every element of stab.
Weight minuscule_lift(const RootDatum& datum, const std::vector<i64>& chi,
                      const std::vector<DiagramAutomorphism>& stab);

// prod_{j=0}^{2m-1} sigma^j(eps_i) with eps_i = omega-check_i(-1), as a
// homomorphism on the root lattice basis. Requires sigma of even order 2m with
// vertex i joined to sigma^m(i) by an edge.
TorsionTorusElement orbit_epsilon_product(const RootDatum& datum,
                                          const DiagramAutomorphism& sigma, int i);

} // namespace reprings
