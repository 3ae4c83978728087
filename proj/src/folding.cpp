#include "reprings/folding.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace reprings {

std::vector<std::vector<int>> vertex_orbits(const DiagramAutomorphism& sigma) {
    const int n = int(sigma.perm.size());
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> orbits;
    for (int v = 0; v < n; ++v) {
        if (seen[v]) continue;
        std::vector<int> orbit;
        int u = v;
        do {
            seen[u] = true;
            orbit.push_back(u);
            u = sigma.apply(u);
        } while (u != v);
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

namespace {

std::string dual_name(const TypeComponent& t) {
    SimpleType d = t.type;
    if (t.type == SimpleType::B) d = SimpleType::C;
    if (t.type == SimpleType::C) d = SimpleType::B;
    return simple_type_name(d) + std::to_string(t.rank);
}

} // namespace

Weight FoldedData::fold_weight(const Weight& w) const {
    if (w != sigma.apply(w))
        throw std::invalid_argument("fold_weight requires a sigma-invariant weight");
    Weight fw(orbit_of_folded_node.size());
    for (size_t k = 0; k < orbit_of_folded_node.size(); ++k)
        fw[k] = w[orbits[orbit_of_folded_node[k]][0]];
    return fw;
}

Weight FoldedData::unfold_weight(const Weight& fw) const {
    if (fw.size() != orbit_of_folded_node.size())
        throw std::invalid_argument("unfold_weight: wrong rank");
    Weight w(sigma.perm.size(), 0);
    for (size_t k = 0; k < fw.size(); ++k)
        for (int v : orbits[orbit_of_folded_node[k]]) w[v] = fw[k];
    return w;
}

FoldedData fold_diagram(const RootDatum& datum, const DiagramAutomorphism& sigma) {
    const IntMat& a = datum.cartan();
    if (int(sigma.perm.size()) != a.rows)
        throw std::invalid_argument("automorphism rank mismatch");
    make_automorphism(datum.diagram.cartan, sigma.perm); // re-validate
    if (sigma.is_identity())
        throw std::invalid_argument("fold_diagram requires a nontrivial automorphism");
    if (datum.diagram.components.size() != 1)
        throw std::invalid_argument("fold_diagram requires a connected diagram");

    FoldedData fd;
    fd.sigma = sigma;
    fd.orbits = vertex_orbits(sigma);
    const int k = int(fd.orbits.size());

    std::vector<int> orbit_of(a.rows);
    for (int I = 0; I < k; ++I)
        for (int v : fd.orbits[I]) orbit_of[v] = I;

    // an orbit is exceptional when it contains an edge (only the middle orbit
    // of A_2n under the flip)
    fd.exceptional.assign(k, false);
    for (int I = 0; I < k; ++I)
        for (int u : fd.orbits[I])
            for (int v : fd.orbits[I])
                if (u != v && a.at(u, v) != 0) fd.exceptional[I] = true;

    // folded Cartan of the orbit algebra H_sigma: row I sums the columns of one
    // orbit member over orbit J; an exceptional orbit gets diagonal 2 and its
    // incoming off-diagonal entries doubled
    IntMat f(k, k);
    for (int I = 0; I < k; ++I) {
        int i = fd.orbits[I][0];
        for (int J = 0; J < k; ++J) {
            i64 s = 0;
            for (int j : fd.orbits[J]) s += a.at(i, j);
            f.at(I, J) = s;
        }
    }
    for (int E = 0; E < k; ++E) {
        if (!fd.exceptional[E]) continue;
        if (fd.orbits[E].size() != 2)
            throw std::invalid_argument("unsupported automorphism: exceptional orbit of size > 2");
        f.at(E, E) = 2;
        for (int I = 0; I < k; ++I)
            if (I != E) f.at(I, E) *= 2;
    }

    bool has_exceptional = std::find(fd.exceptional.begin(), fd.exceptional.end(), true) !=
                           fd.exceptional.end();
    if (has_exceptional) {
        // A_2n under the flip: orbits ordered by smallest vertex already form the
        // path O_1 .. O_n with the exceptional orbit last; the orbit algebra is
        // C_n (C_1 realized as A_1) with O_n the long node
        if (!fd.exceptional[k - 1] ||
            std::count(fd.exceptional.begin(), fd.exceptional.end(), true) != 1)
            throw std::invalid_argument("unsupported automorphism: unexpected exceptional orbit");
        CartanMatrix cn = k >= 2 ? cartan_of_type(SimpleType::C, k) : cartan_of_type(SimpleType::A, 1);
        if (!(f == cn.entries)) throw std::logic_error("A_2n orbit algebra is not C_n");
        fd.folded = build_root_datum(cn);
        fd.orbit_of_folded_node.resize(k);
        for (int I = 0; I < k; ++I) fd.orbit_of_folded_node[I] = I;
        fd.dual_type_name = "C" + std::to_string(k);
        fd.fixed_type_name = "B" + std::to_string(k);
        return fd;
    }

    DynkinDiagram folded_diag = diagram_from_cartan(CartanMatrix{f});
    if (folded_diag.components.size() != 1)
        throw std::invalid_argument("folded diagram is not connected");
    fd.folded = build_root_datum(folded_diag.cartan);
    fd.orbit_of_folded_node = folded_diag.bourbaki_order[0];

    TypeComponent ft = folded_diag.type[0];
    fd.dual_type_name = ft.name();
    fd.fixed_type_name = dual_name(ft);
    return fd;
}

} // namespace reprings
