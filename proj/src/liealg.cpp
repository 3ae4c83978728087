#include "reprings/liealg.hpp"

#include <stdexcept>

#include "reprings/folding.hpp"

namespace reprings {

namespace {

void require_simply_laced(const RootDatum& datum) {
    for (auto& t : datum.diagram.type)
        if (t.type != SimpleType::A && t.type != SimpleType::D && t.type != SimpleType::E)
            throw std::invalid_argument("Chevalley sign machinery requires a simply-laced type");
}

// asymmetry bicharacter on the simple basis: eps_ii = -1, eps_ij = -1 for an
// edge with i < j, +1 otherwise; eps(a,b) eps(b,a) = (-1)^{(a,b)}
i64 eps_entry(const IntMat& a, int i, int j) {
    if (i == j) return -1;
    if (i < j && a.at(i, j) != 0) return -1;
    return 1;
}

} // namespace

i64 pinned_automorphism_sign(const RootDatum& datum, const DiagramAutomorphism& sigma,
                             const RootCoords& beta) {
    require_simply_laced(datum);
    const IntMat& a = datum.cartan();
    const int n = a.rows;
    // delta_ij = eps(sigma a_i, sigma a_j) eps(a_i, a_j) is symmetric since
    // sigma preserves the form; the sign function is its quadratic refinement
    // vanishing on simple roots
    i64 sign = 1;
    for (int i = 0; i < n; ++i) {
        if (beta[i] == 0) continue;
        i64 dii = eps_entry(a, sigma.apply(i), sigma.apply(i)) * eps_entry(a, i, i);
        if (dii < 0 && (beta[i] * (beta[i] - 1) / 2) % 2 != 0) sign = -sign;
        for (int j = i + 1; j < n; ++j) {
            if (beta[j] == 0) continue;
            i64 dij = eps_entry(a, sigma.apply(i), sigma.apply(j)) * eps_entry(a, i, j);
            if (dij < 0 && (beta[i] * beta[j]) % 2 != 0) sign = -sign;
        }
    }
    return sign;
}

i64 fixed_subalgebra_dimension(const RootDatum& datum, const DiagramAutomorphism& sigma) {
    require_simply_laced(datum);
    make_automorphism(datum.diagram.cartan, sigma.perm);
    i64 dim = i64(vertex_orbits(sigma).size()); // Cartan part

    auto apply_root = [&](const RootCoords& b) {
        RootCoords out(b.size());
        for (size_t i = 0; i < b.size(); ++i) out[sigma.apply(int(i))] = b[i];
        return out;
    };
    std::set<RootCoords> seen;
    for (auto& beta : datum.positive_roots) {
        if (seen.count(beta)) continue;
        i64 prod = 1;
        RootCoords cur = beta;
        do {
            seen.insert(cur);
            prod *= pinned_automorphism_sign(datum, sigma, cur);
            cur = apply_root(cur);
        } while (cur != beta);
        // a signed cyclic permutation has eigenvalue 1 iff the sign product is +1;
        // the negative root spaces contribute identically
        if (prod == 1) dim += 2;
    }
    return dim;
}

} // namespace reprings
