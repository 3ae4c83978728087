#pragma once

#include <optional>

#include "reprings/character.hpp"
#include "reprings/finite_group.hpp"
#include "reprings/folding.hpp"

namespace reprings {

// A diagram automorphism together with the twisted-torus data it induces:
// functions on T_sigma = Coker(sigma - 1 : T -> T) are written in the weight
// coordinates of the folded group H_sigma (the identity automorphism
// degenerates to the ordinary torus of the source datum).
struct TwistedSetting {
    const RootDatum* datum = nullptr;
    DiagramAutomorphism sigma;
    std::optional<FoldedData> fold; // engaged iff sigma is nontrivial

    const RootDatum& torus_datum() const { return fold ? fold->folded : *datum; }
    int torus_rank() const { return torus_datum().rank(); }
    bool is_invariant(const Weight& w) const;
    // sigma-invariant source weight -> T_sigma coordinates
    Weight project(const Weight& w) const;
    Weight lift(const Weight& folded_w) const;
};

TwistedSetting make_twisted_setting(const RootDatum& datum, const DiagramAutomorphism& sigma);

// words in simple reflections generating W^sigma, one per vertex orbit
// (an orbit spanning an edge contributes the braid word [i, j, i])
std::vector<std::vector<int>> twisted_reflection_words(const TwistedSetting& s);

// Regular function on T_sigma / W^sigma with finite integer support.
struct TwistedClassFunction {
    std::map<Weight, i64> terms; // keys in torus_datum coordinates

    i64 coeff(const Weight& w) const;
    i64 dimension() const; // value at the identity point
    bool is_zero() const { return terms.empty(); }
    void add_term(const Weight& w, i64 m);

    TwistedClassFunction& operator+=(const TwistedClassFunction& o);
    TwistedClassFunction& operator-=(const TwistedClassFunction& o);
    TwistedClassFunction operator*(const TwistedClassFunction& o) const;
    TwistedClassFunction scaled(i64 c) const;
    bool operator==(const TwistedClassFunction& o) const { return terms == o.terms; }
};

// trace of sigma . t on the irreducible with sigma-invariant highest weight
// omega, normalized to fix the highest line; computed by the alternating sum
// over W^sigma divided by the twisted Weyl numerator of rho
TwistedClassFunction twining_character(const TwistedSetting& s, const Weight& omega);

// twining character == irreducible character of H_sigma at the folded weight
bool jantzen_check(const TwistedSetting& s, const Weight& omega);

// sum over the W^sigma-orbit of a folded-dominant weight, all coefficients 1
TwistedClassFunction twisted_orbit_sum(const TwistedSetting& s, const Weight& folded_dominant);
bool is_twisted_invariant(const TwistedSetting& s, const TwistedClassFunction& f);

// generators of the W^sigma-invariant functions (twining characters of the
// sigma-orbit sums of fundamental weights) plus the verification that every
// invariant of bounded support is an integer polynomial in them
struct MohrdieckResult {
    std::vector<Weight> generator_weights; // source coordinates
    std::vector<TwistedClassFunction> generators;
    bool ok = false;
    std::optional<TwistedClassFunction> witness; // invariant that failed to reduce
};
MohrdieckResult mohrdieck_invariants(const TwistedSetting& s, i64 degree_bound);

// every central element acting trivially on all invariant generators lies in
// the image of zeta -> sigma(zeta)/zeta on the center
bool no_kernel_check(const RootDatum& datum, const DiagramAutomorphism& sigma);

// Gamma |x G-connected with Gamma acting through diagram automorphisms.
struct DisconnectedGroup {
    const RootDatum* datum = nullptr;
    FiniteGroup gamma;
    std::vector<DiagramAutomorphism> action; // per element of gamma
};

// validates that the action is a homomorphism into the diagram automorphisms
DisconnectedGroup make_disconnected_group(const RootDatum& datum, FiniteGroup gamma,
                                          std::vector<DiagramAutomorphism> action);
// cyclic Gamma generated by sigma
DisconnectedGroup cyclic_extension(const RootDatum& datum, const DiagramAutomorphism& sigma);

// Irreducible of the semidirect product: either a stable dominant weight with a
// character of Gamma, or a free Gamma-orbit of dominant weights (induced).
struct IrreducibleLabel {
    std::vector<Weight> orbit; // sorted; size 1 for stable labels
    i64 chi = 0;               // Gamma-character index for stable labels

    bool induced() const { return orbit.size() > 1; }
    bool operator==(const IrreducibleLabel& o) const = default;
    bool operator<(const IrreducibleLabel& o) const {
        return std::tie(orbit, chi) < std::tie(o.orbit, o.chi);
    }
};

// Clifford-theory list for cyclic Gamma of order <= 6 acting faithfully with
// full or trivial stabilizers; highest-weight coordinates <= bound
std::vector<IrreducibleLabel> semidirect_irreducibles(const DisconnectedGroup& g, i64 bound);

// Characters of a virtual representation of a cyclic order-2 extension on its
// two components: the restriction to the identity component and the trace
// function on the sigma component.
struct ComponentPair {
    FormalCharacter identity_part;
    TwistedClassFunction sigma_part;
};
ComponentPair label_component_pair(const TwistedSetting& s, const IrreducibleLabel& l);
// decomposition of a pair of component characters into irreducible labels
std::vector<std::pair<IrreducibleLabel, i64>> decompose_component_pair(const TwistedSetting& s,
                                                                      ComponentPair p);

// sign of the central character of Sp(2n) at the folded weight of a
// sigma-invariant weight omega = sum k_i (omega_i + omega_{2n+1-i}) of A_{2n}
int phi_sign(int n, const Weight& invariant_omega);

enum class PhiVariant { standard, constant_sign, identity };

// the phi automorphism on irreducible labels of Z/2 |x SL(2n+1)
IrreducibleLabel phi_automorphism(int n, const IrreducibleLabel& label,
                                  PhiVariant variant = PhiVariant::standard);

struct PhiSemiringCheck {
    bool ok = false;
    i64 pairs_checked = 0;
    std::optional<std::pair<IrreducibleLabel, IrreducibleLabel>> witness; // first failing pair
};
// phi(decomposition of x*y) == decomposition of phi(x)*phi(y) over all
// unordered pairs of irreducibles with coordinates <= bound
PhiSemiringCheck check_phi_semiring(int n, i64 bound, PhiVariant variant = PhiVariant::standard,
                                    bool parallel = true);

struct PhiAdamsCheck {
    bool ok = false;
    std::vector<i64> norm_epsilon_exponents; // (-1)-exponents on simple roots
    bool norm_epsilon_nontrivial = false;
    std::optional<IrreducibleLabel> witness; // label with phi psi^2 != psi^2 phi
};
// phi does not commute with psi^2: the canonical witness is N(eps) != 1 for
// eps = pi(omega-check_n(-1)); a label-level witness is searched as well
PhiAdamsCheck check_phi_adams(int n, PhiVariant variant = PhiVariant::standard);

} // namespace reprings
