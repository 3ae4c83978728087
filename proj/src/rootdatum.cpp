#include "reprings/rootdatum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace reprings {

int DiagramAutomorphism::order() const {
    DiagramAutomorphism p = *this;
    int k = 1;
    while (!p.is_identity()) {
        p = p.compose(*this);
        ++k;
        if (k > int(perm.size()) + 6) throw std::logic_error("automorphism order runaway");
    }
    return k;
}

bool DiagramAutomorphism::is_identity() const {
    for (int i = 0; i < int(perm.size()); ++i)
        if (perm[i] != i) return false;
    return true;
}

Weight DiagramAutomorphism::apply(const Weight& w) const {
    Weight r(w.size());
    for (size_t i = 0; i < w.size(); ++i) r[perm[i]] = w[i];
    return r;
}

DiagramAutomorphism DiagramAutomorphism::power(int k) const {
    DiagramAutomorphism r = identity_automorphism(int(perm.size()));
    int o = order();
    k %= o;
    if (k < 0) k += o;
    for (int j = 0; j < k; ++j) r = r.compose(*this);
    return r;
}

DiagramAutomorphism DiagramAutomorphism::compose(const DiagramAutomorphism& o) const {
    DiagramAutomorphism r;
    r.perm.resize(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) r.perm[i] = perm[o.perm[i]];
    return r;
}

DiagramAutomorphism identity_automorphism(int rank) {
    DiagramAutomorphism a;
    a.perm.resize(rank);
    std::iota(a.perm.begin(), a.perm.end(), 0);
    return a;
}

DiagramAutomorphism make_automorphism(const CartanMatrix& c, std::vector<int> perm) {
    const int n = c.rank();
    if (int(perm.size()) != n) throw std::invalid_argument("automorphism rank mismatch");
    std::vector<bool> seen(n, false);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("not a permutation");
        seen[v] = true;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (c.entries.at(perm[i], perm[j]) != c.entries.at(i, j))
                throw std::invalid_argument("permutation does not preserve the Cartan matrix");
    return DiagramAutomorphism{std::move(perm)};
}

std::vector<DiagramAutomorphism> all_diagram_automorphisms(const CartanMatrix& c) {
    const int n = c.rank();
    std::vector<DiagramAutomorphism> out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                if (c.entries.at(perm[i], perm[j]) != c.entries.at(i, j)) ok = false;
        if (ok) out.push_back(DiagramAutomorphism{perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

bool TorsionTorusElement::is_trivial() const {
    for (i64 e : exponents)
        if (e % 2 != 0) return false;
    return true;
}

i64 TorsionTorusElement::value_exponent(const std::vector<i64>& coords) const {
    i64 s = 0;
    for (size_t i = 0; i < exponents.size(); ++i) s += exponents[i] * coords[i];
    return mod_pos(s, 2);
}

TorsionTorusElement TorsionTorusElement::operator*(const TorsionTorusElement& o) const {
    TorsionTorusElement r;
    r.exponents.resize(exponents.size());
    for (size_t i = 0; i < exponents.size(); ++i)
        r.exponents[i] = mod_pos(exponents[i] + o.exponents[i], 2);
    return r;
}

Weight RootDatum::fundamental_weight(int i) const {
    Weight w(rank(), 0);
    w[i] = 1;
    return w;
}

Weight RootDatum::root_to_weight(const RootCoords& c) const {
    return cartan().apply(c);
}

std::optional<RootCoords> RootDatum::root_coords_of(const Weight& w) const {
    const int n = rank();
    if (n == 0) return RootCoords{};
    IntMat adj = adjugate(cartan());
    i64 det = determinant(cartan());
    RootCoords c(n);
    std::vector<i64> t = adj.apply(w);
    for (int i = 0; i < n; ++i) {
        if (t[i] % det != 0) return std::nullopt;
        c[i] = t[i] / det;
    }
    return c;
}

bool RootDatum::is_dominant(const Weight& w) const {
    for (i64 v : w)
        if (v < 0) return false;
    return true;
}

Weight RootDatum::reflect(const Weight& w, int i) const {
    Weight r = w;
    i64 p = w[i];
    if (p == 0) return r;
    for (int k = 0; k < rank(); ++k) r[k] -= p * cartan().at(k, i);
    return r;
}

Weight RootDatum::act(const Weight& w, const std::vector<int>& word) const {
    Weight r = w;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = reflect(r, *it);
    return r;
}

i64 RootDatum::height(const RootCoords& beta) const {
    i64 h = 0;
    for (i64 v : beta) h += v;
    return h;
}

i64 RootDatum::form_with_root(const Weight& w, const RootCoords& beta) const {
    i64 s = 0;
    for (int j = 0; j < rank(); ++j) s += checked_mul(beta[j] * symmetrizer[j], w[j]);
    return s;
}

i64 RootDatum::pairing_with_coroot(const Weight& w, const RootCoords& beta) const {
    i64 num = 2 * form_with_root(w, beta);
    i64 len = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j)
            len += beta[i] * symmetrizer[i] * cartan().at(i, j) * beta[j];
    if (len == 0) throw std::logic_error("zero-length root");
    if (num % len != 0) throw std::logic_error("non-integral coroot pairing");
    return num / len;
}

std::vector<i64> RootDatum::weight_class(const Weight& w) const {
    std::vector<i64> y = snf_U.apply(w);
    for (int i = 0; i < rank(); ++i) y[i] = mod_pos(y[i], invariant_factors[i]);
    return y;
}

i64 RootDatum::fundamental_group_order() const {
    i64 o = 1;
    for (i64 d : invariant_factors) o = checked_mul(o, d);
    return o;
}

Weight RootDatum::dominant_representative(const Weight& w) const {
    Weight r = w;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < rank(); ++i)
            if (r[i] < 0) {
                r = reflect(r, i);
                changed = true;
            }
    }
    return r;
}

std::set<Weight> RootDatum::weyl_orbit(const Weight& w) const {
    std::set<Weight> orbit{w};
    std::vector<Weight> queue{w};
    while (!queue.empty()) {
        Weight v = queue.back();
        queue.pop_back();
        for (int i = 0; i < rank(); ++i) {
            Weight r = reflect(v, i);
            if (orbit.insert(r).second) queue.push_back(r);
        }
    }
    return orbit;
}

i64 RootDatum::weyl_order() const {
    // orbit-stabilizer on rho, whose stabilizer is trivial
    return i64(weyl_orbit(rho()).size());
}

RootDatum build_root_datum(const CartanMatrix& cartan) {
    RootDatum d;
    d.diagram = diagram_from_cartan(cartan);
    const int n = cartan.rank();

    // symmetrizer (recomputed; diagram validation guarantees existence)
    {
        std::vector<Rat> sym(n, Rat(0));
        for (auto& comp : d.diagram.components) {
            sym[comp[0]] = Rat(1);
            std::vector<int> queue{comp[0]};
            for (size_t q = 0; q < queue.size(); ++q) {
                int i = queue[q];
                for (int j : comp)
                    if (i != j && cartan.entries.at(i, j) != 0 && sym[j].num == 0) {
                        sym[j] = sym[i] * Rat(cartan.entries.at(i, j), cartan.entries.at(j, i));
                        queue.push_back(j);
                    }
            }
        }
        i64 l = 1;
        for (auto& r : sym) l = std::lcm(l, r.den);
        d.symmetrizer.resize(n);
        for (int i = 0; i < n; ++i) d.symmetrizer[i] = sym[i].num * (l / sym[i].den);
        i64 g = 0;
        for (i64 v : d.symmetrizer) g = std::gcd(g, v);
        if (g > 1)
            for (auto& v : d.symmetrizer) v /= g;
    }

    // positive roots by closure along root strings
    std::set<RootCoords> roots;
    std::vector<RootCoords> frontier;
    for (int i = 0; i < n; ++i) {
        RootCoords a(n, 0);
        a[i] = 1;
        roots.insert(a);
        frontier.push_back(a);
    }
    while (!frontier.empty()) {
        std::vector<RootCoords> next;
        for (auto& beta : frontier) {
            std::vector<i64> pair = cartan.entries.apply(beta); // <beta, alpha-check_i>
            for (int i = 0; i < n; ++i) {
                // p = how far the string extends downward
                i64 p = 0;
                RootCoords down = beta;
                while (true) {
                    down[i] -= 1;
                    if (down[i] < 0 || !roots.count(down)) break;
                    ++p;
                }
                i64 q = p - pair[i];
                if (q > 0) {
                    RootCoords up = beta;
                    up[i] += 1;
                    if (roots.insert(up).second) next.push_back(up);
                }
            }
        }
        frontier = std::move(next);
    }
    d.positive_roots.assign(roots.begin(), roots.end());
    std::sort(d.positive_roots.begin(), d.positive_roots.end(),
              [&](const RootCoords& a, const RootCoords& b) {
                  i64 ha = 0, hb = 0;
                  for (i64 v : a) ha += v;
                  for (i64 v : b) hb += v;
                  return std::tie(ha, a) < std::tie(hb, b);
              });

    // P/Q via Smith normal form of the Cartan matrix
    SmithResult s = smith_normal_form(cartan.entries);
    d.snf_U = s.U;
    d.invariant_factors.resize(n);
    for (int i = 0; i < n; ++i) d.invariant_factors[i] = s.D.at(i, i);

    // sanity: |P/Q| = det(Cartan)
    i64 det = determinant(cartan.entries);
    if (d.fundamental_group_order() != det)
        throw std::logic_error("P/Q order does not match the Cartan determinant");
    return d;
}

RootDatum build_root_datum(const std::string& type_string) {
    return build_root_datum(cartan_of_type(parse_type_string(type_string)));
}

i64 classical_positive_root_count(SimpleType t, int n) {
    switch (t) {
        case SimpleType::A: return i64(n) * (n + 1) / 2;
        case SimpleType::B:
        case SimpleType::C: return i64(n) * n;
        case SimpleType::D: return i64(n) * (n - 1);
        case SimpleType::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
        case SimpleType::F: return 24;
        case SimpleType::G: return 6;
    }
    return -1;
}

Weight minuscule_lift(const RootDatum& datum, const std::vector<i64>& chi,
                      const std::vector<DiagramAutomorphism>& stab) {
    const int n = datum.rank();
    if (int(chi.size()) != n) throw std::invalid_argument("class vector rank mismatch");
    std::vector<i64> chi_red(n);
    for (int i = 0; i < n; ++i) chi_red[i] = mod_pos(chi[i], datum.invariant_factors[i]);

    // candidates: per component, zero or a minuscule fundamental weight
    std::vector<std::vector<Weight>> per_comp;
    for (auto& comp : datum.diagram.components) {
        std::vector<Weight> cands{datum.zero_weight()};
        for (int v : comp) {
            Weight w = datum.fundamental_weight(v);
            bool minuscule = true;
            for (auto& beta : datum.positive_roots)
                if (datum.pairing_with_coroot(w, beta) > 1) { minuscule = false; break; }
            if (minuscule) cands.push_back(w);
        }
        per_comp.push_back(std::move(cands));
    }
    std::vector<Weight> all{datum.zero_weight()};
    for (auto& cands : per_comp) {
        std::vector<Weight> next;
        for (auto& base : all)
            for (auto& c : cands) {
                Weight w = base;
                for (int i = 0; i < n; ++i) w[i] += c[i];
                next.push_back(w);
            }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        all = std::move(next);
    }

    for (auto& w : all) {
        if (datum.weight_class(w) != chi_red) continue;
        for (auto& s : stab)
            if (datum.weight_class(s.apply(w)) != chi_red)
                throw std::invalid_argument("class is not invariant under the given stabilizer");
        for (auto& s : stab)
            if (s.apply(w) != w)
                throw std::logic_error("minuscule representative is not stabilizer-invariant");
        return w;
    }
    throw std::logic_error("no minuscule representative found for the given class");
}

TorsionTorusElement orbit_epsilon_product(const RootDatum& datum,
                                          const DiagramAutomorphism& sigma, int i) {
    const int n = datum.rank();
    if (i < 0 || i >= n) throw std::invalid_argument("vertex index out of range");
    int ord = sigma.order();
    if (ord % 2 != 0)
        throw std::invalid_argument("automorphism order must be even for the orbit product");
    int m = ord / 2;
    int opposite = i;
    for (int j = 0; j < m; ++j) opposite = sigma.apply(opposite);
    if (datum.cartan().at(i, opposite) == 0)
        throw std::invalid_argument("vertex is not joined to its sigma^m image by an edge");

    // eps_i = omega-check_i(-1) evaluates on alpha_k as (-1)^{delta_ik};
    // the product over the sigma-orbit counts visits to each vertex
    TorsionTorusElement e;
    e.exponents.assign(n, 0);
    int v = i;
    for (int j = 0; j < 2 * m; ++j) {
        e.exponents[v] = mod_pos(e.exponents[v] + 1, 2);
        v = sigma.apply(v);
    }
    return e;
}

} // namespace reprings
