#include "reprings/reconstruct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "reprings/lambda.hpp"

namespace reprings {

namespace {

using LabelDec = std::vector<std::pair<IrreducibleLabel, i64>>;

std::vector<Weight> dominant_weights(const RootDatum& datum, i64 bound) {
    std::vector<Weight> out;
    Weight w(static_cast<size_t>(datum.rank()), 0);
    while (true) {
        out.push_back(w);
        int pos = datum.rank() - 1;
        while (pos >= 0 && w[size_t(pos)] == bound) w[size_t(pos--)] = 0;
        if (pos < 0) break;
        ++w[size_t(pos)];
    }
    return out;
}

void sort_labels(std::vector<IrreducibleLabel>& labels, const std::vector<i64>& dims,
                 std::vector<i64>& sorted_dims) {
    std::vector<size_t> order(labels.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return std::tie(dims[x], labels[x].orbit, labels[x].chi) <
               std::tie(dims[y], labels[y].orbit, labels[y].chi);
    });
    std::vector<IrreducibleLabel> l2;
    for (size_t i : order) {
        l2.push_back(labels[i]);
        sorted_dims.push_back(dims[i]);
    }
    labels = std::move(l2);
}

DecompositionEntry entry_from_labels(const std::map<IrreducibleLabel, int>& index,
                                     const LabelDec& dec) {
    DecompositionEntry e;
    std::map<int, i64> terms;
    for (const auto& [l, m] : dec) {
        auto it = index.find(l);
        if (it == index.end()) {
            e.escaped = true;
            e.terms.clear();
            return e;
        }
        if (m != 0) terms[it->second] += m;
    }
    e.terms.assign(terms.begin(), terms.end());
    return e;
}

// ---- component-pair arithmetic for order-2 extensions ----

ComponentPair pair_mul(const ComponentPair& a, const ComponentPair& b) {
    return {a.identity_part * b.identity_part, a.sigma_part * b.sigma_part};
}

ComponentPair pair_sub(ComponentPair a, const ComponentPair& b) {
    a.identity_part -= b.identity_part;
    a.sigma_part -= b.sigma_part;
    return a;
}

// (sigma t)^2 = sigma(t) t lies in the identity component, so the sigma-part
// of psi^2 is the identity-part character pushed along mu -> mu + sigma(mu)
ComponentPair pair_psi2(const TwistedSetting& s, const ComponentPair& p) {
    ComponentPair out;
    out.identity_part = adams(p.identity_part, 2);
    for (const auto& [mu, m] : p.identity_part.terms) {
        Weight nu = mu;
        Weight smu = s.sigma.apply(mu);
        for (size_t k = 0; k < nu.size(); ++k) nu[k] += smu[k];
        out.sigma_part.add_term(s.project(nu), m);
    }
    return out;
}

// (sigma t)^3 = sigma . (t sigma(t) t) whose class in the twisted torus is the
// cube, so the sigma-part of psi^3 scales folded weights by 3
ComponentPair pair_psi3(const TwistedSetting& s, const ComponentPair& p) {
    ComponentPair out;
    out.identity_part = adams(p.identity_part, 3);
    for (const auto& [w, m] : p.sigma_part.terms) {
        Weight tw = w;
        for (auto& c : tw) c *= 3;
        out.sigma_part.add_term(tw, m);
    }
    return out;
}

LabelDec halved(LabelDec dec) {
    for (auto& [l, m] : dec) {
        if (m % 2 != 0) throw std::logic_error("exterior square is not integral");
        m /= 2;
    }
    return dec;
}

} // namespace

LambdaSemiringPresentation build_presentation(const RootDatum& datum, i64 bound) {
    LambdaSemiringPresentation p;
    p.source = datum.diagram.type_name();
    p.bound = bound;
    std::vector<i64> dims;
    for (const Weight& w : dominant_weights(datum, bound)) {
        p.labels.push_back({{w}, 0});
        dims.push_back(weyl_dimension(datum, w));
    }
    sort_labels(p.labels, dims, p.dims);

    std::map<IrreducibleLabel, int> index;
    for (size_t i = 0; i < p.labels.size(); ++i) index[p.labels[i]] = int(i);
    p.unit = index.at({{datum.zero_weight()}, 0});

    auto entry_from_char = [&](const FormalCharacter& x) {
        LabelDec dec;
        for (const auto& [w, m] : decompose(x)) dec.push_back({{{w}, 0}, m});
        return entry_from_labels(index, dec);
    };

    std::vector<FormalCharacter> chars;
    for (const auto& l : p.labels) chars.push_back(irreducible_character(datum, l.orbit[0]));

    int n = int(p.labels.size());
    p.products.assign(size_t(n), std::vector<DecompositionEntry>(size_t(n)));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            DecompositionEntry e = entry_from_char(chars[size_t(i)] * chars[size_t(j)]);
            p.products[size_t(i)][size_t(j)] = e;
            p.products[size_t(j)][size_t(i)] = e;
        }
    for (int i = 0; i < n; ++i) {
        p.lambda2.push_back(entry_from_char(exterior_power(chars[size_t(i)], 2)));
        p.psi2.push_back(entry_from_char(adams(chars[size_t(i)], 2)));
        p.psi3.push_back(entry_from_char(adams(chars[size_t(i)], 3)));
    }
    return p;
}

LambdaSemiringPresentation build_presentation(const DisconnectedGroup& g, i64 bound) {
    if (g.gamma.n == 1) return build_presentation(*g.datum, bound);
    if (g.gamma.n != 2 || g.action[1].is_identity())
        throw std::invalid_argument(
            "unsupported configuration: presentations need a trivial or faithful order-2 "
            "component group");
    TwistedSetting s = make_twisted_setting(*g.datum, g.action[1]);

    LambdaSemiringPresentation p;
    p.source = g.datum->diagram.type_name() + " order-2 extension";
    p.bound = bound;
    std::vector<IrreducibleLabel> raw = semidirect_irreducibles(g, bound);
    std::vector<i64> dims;
    std::vector<ComponentPair> raw_pairs;
    for (const auto& l : raw) {
        raw_pairs.push_back(label_component_pair(s, l));
        dims.push_back(raw_pairs.back().identity_part.dimension());
    }
    p.labels = raw;
    sort_labels(p.labels, dims, p.dims);

    std::map<IrreducibleLabel, int> index;
    for (size_t i = 0; i < p.labels.size(); ++i) index[p.labels[i]] = int(i);
    p.unit = index.at({{g.datum->zero_weight()}, 0});

    std::vector<ComponentPair> pairs;
    for (const auto& l : p.labels) pairs.push_back(label_component_pair(s, l));

    int n = int(p.labels.size());
    p.products.assign(size_t(n), std::vector<DecompositionEntry>(size_t(n)));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            DecompositionEntry e = entry_from_labels(
                index, decompose_component_pair(s, pair_mul(pairs[size_t(i)], pairs[size_t(j)])));
            p.products[size_t(i)][size_t(j)] = e;
            p.products[size_t(j)][size_t(i)] = e;
        }
    for (int i = 0; i < n; ++i) {
        ComponentPair psi2 = pair_psi2(s, pairs[size_t(i)]);
        ComponentPair psi3 = pair_psi3(s, pairs[size_t(i)]);
        ComponentPair sq = pair_mul(pairs[size_t(i)], pairs[size_t(i)]);
        p.lambda2.push_back(
            entry_from_labels(index, halved(decompose_component_pair(s, pair_sub(sq, psi2)))));
        p.psi2.push_back(entry_from_labels(index, decompose_component_pair(s, psi2)));
        p.psi3.push_back(entry_from_labels(index, decompose_component_pair(s, psi3)));
    }
    return p;
}

SubsemiringResult normal_subsemirings(const LambdaSemiringPresentation& p) {
    int n = int(p.labels.size());
    if (n > 20 || (i64(1) << n) > enumeration_budget())
        throw std::runtime_error("subsemiring enumeration budget exceeded");
    SubsemiringResult out;
    for (i64 mask = 0; mask < (i64(1) << n); ++mask) {
        if (!(mask >> p.unit & 1)) continue;
        bool closed = true, provisional = false;
        for (int i = 0; i < n && closed; ++i) {
            if (!(mask >> i & 1)) continue;
            for (int j = i; j < n && closed; ++j) {
                if (!(mask >> j & 1)) continue;
                const DecompositionEntry& e = p.products[size_t(i)][size_t(j)];
                if (e.escaped) {
                    provisional = true;
                    continue;
                }
                for (const auto& [l, m] : e.terms)
                    if (m != 0 && !(mask >> l & 1)) closed = false;
            }
        }
        if (!closed) continue;
        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) subset.push_back(i);
        out.subsets.push_back(std::move(subset));
        out.provisional.push_back(provisional);
    }
    return out;
}

namespace {

std::vector<std::pair<int, i64>> map_terms(const std::vector<std::pair<int, i64>>& terms,
                                           const std::vector<int>& perm) {
    std::map<int, i64> out;
    for (const auto& [l, m] : terms) out[perm[size_t(l)]] += m;
    return {out.begin(), out.end()};
}

bool entries_match(const DecompositionEntry& a, const DecompositionEntry& b,
                   const std::vector<int>& perm) {
    if (a.escaped != b.escaped) return false;
    if (a.escaped) return true;
    return map_terms(a.terms, perm) == b.terms;
}

bool verify_bijection(const LambdaSemiringPresentation& a, const LambdaSemiringPresentation& b,
                      const std::vector<int>& perm, bool use_lambda, bool use_psi) {
    int n = int(a.labels.size());
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (!entries_match(a.products[size_t(i)][size_t(j)],
                               b.products[size_t(perm[size_t(i)])][size_t(perm[size_t(j)])], perm))
                return false;
    for (int i = 0; i < n; ++i) {
        int fi = perm[size_t(i)];
        if (use_lambda && !entries_match(a.lambda2[size_t(i)], b.lambda2[size_t(fi)], perm))
            return false;
        if (use_psi && (!entries_match(a.psi2[size_t(i)], b.psi2[size_t(fi)], perm) ||
                        !entries_match(a.psi3[size_t(i)], b.psi3[size_t(fi)], perm)))
            return false;
    }
    return true;
}

std::vector<std::vector<int>> search_isomorphisms(const LambdaSemiringPresentation& a,
                                                  const LambdaSemiringPresentation& b,
                                                  bool use_lambda, bool use_psi) {
    std::vector<std::vector<int>> found;
    if (a.bound != b.bound || a.labels.size() != b.labels.size()) return found;
    int n = int(a.labels.size());
    std::vector<int> perm(size_t(n), -1);
    std::vector<bool> used(size_t(n), false);

    auto compatible = [&](int i, int j) {
        if (a.dims[size_t(i)] != b.dims[size_t(j)]) return false;
        if ((i == a.unit) != (j == b.unit)) return false;
        // cheap pruning on escape flags against already-assigned positions
        if (a.lambda2[size_t(i)].escaped != b.lambda2[size_t(j)].escaped && use_lambda)
            return false;
        for (int k = 0; k < n; ++k) {
            if (perm[size_t(k)] < 0) continue;
            if (a.products[size_t(k)][size_t(i)].escaped !=
                b.products[size_t(perm[size_t(k)])][size_t(j)].escaped)
                return false;
        }
        return true;
    };


    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            if (verify_bijection(a, b, perm, use_lambda, use_psi)) found.push_back(perm);
            return;
        }
        for (int j = 0; j < n; ++j) {
            if (used[size_t(j)] || !compatible(i, j)) continue;
            perm[size_t(i)] = j;
            used[size_t(j)] = true;
            self(self, i + 1);
            used[size_t(j)] = false;
            perm[size_t(i)] = -1;
        }
    };
    rec(rec, 0);
    return found;
}

} // namespace

std::vector<std::vector<int>> find_isomorphisms(const LambdaSemiringPresentation& a,
                                                const LambdaSemiringPresentation& b,
                                                bool require_lambda) {
    return search_isomorphisms(a, b, require_lambda, false);
}

OpenSubgroupFunctorData open_subgroup_functor(const RootDatum& datum, i64 bound) {
    OpenSubgroupFunctorData f;
    f.gamma = cyclic_group(1);
    f.subgroup_names = {"trivial"};
    f.presentations.push_back(build_presentation(datum, bound));
    f.inner_families.push_back(
        {std::vector<int>(f.presentations[0].labels.size())});
    std::iota(f.inner_families[0][0].begin(), f.inner_families[0][0].end(), 0);
    return f;
}

OpenSubgroupFunctorData open_subgroup_functor(const DisconnectedGroup& g, i64 bound) {
    if (g.gamma.n == 1) return open_subgroup_functor(*g.datum, bound);
    if (g.gamma.n != 2)
        throw std::invalid_argument(
            "unsupported configuration: functor data needs a component group of order 1 or 2");
    OpenSubgroupFunctorData f;
    f.gamma = g.gamma;
    f.subgroup_names = {"trivial", "full"};
    f.presentations.push_back(build_presentation(*g.datum, bound));
    f.presentations.push_back(build_presentation(g, bound));
    const LambdaSemiringPresentation& pe = f.presentations[0];
    const LambdaSemiringPresentation& pg = f.presentations[1];

    std::map<IrreducibleLabel, int> eidx;
    for (size_t i = 0; i < pe.labels.size(); ++i) eidx[pe.labels[i]] = int(i);

    FunctorMorphism res{"restrict:full->trivial", 1, 0, {}};
    for (const auto& l : pg.labels) {
        std::map<int, i64> terms;
        for (const Weight& w : l.orbit) terms[eidx.at({{w}, 0})] += 1;
        res.map.push_back({terms.begin(), terms.end()});
    }
    f.morphisms.push_back(std::move(res));

    const DiagramAutomorphism& sigma = g.action[1];
    FunctorMorphism conj_triv{"conj:sigma@trivial", 0, 0, {}};
    std::vector<int> conj_perm;
    for (const auto& l : pe.labels) {
        int image = eidx.at({{sigma.apply(l.orbit[0])}, 0});
        conj_triv.map.push_back({{image, 1}});
        conj_perm.push_back(image);
    }
    f.morphisms.push_back(std::move(conj_triv));

    FunctorMorphism conj_full{"conj:sigma@full", 1, 1, {}};
    std::vector<int> full_id(pg.labels.size());
    std::iota(full_id.begin(), full_id.end(), 0);
    for (int i : full_id) conj_full.map.push_back({{i, 1}});
    f.morphisms.push_back(std::move(conj_full));

    std::vector<int> triv_id(pe.labels.size());
    std::iota(triv_id.begin(), triv_id.end(), 0);
    f.inner_families.push_back({triv_id, full_id});  // identity element
    f.inner_families.push_back({conj_perm, full_id}); // conjugation by sigma
    return f;
}

namespace {

using Family = std::vector<std::vector<int>>;

std::vector<std::pair<int, i64>> push_map(const std::vector<std::pair<int, i64>>& terms,
                                          const std::vector<std::vector<std::pair<int, i64>>>& m) {
    std::map<int, i64> out;
    for (const auto& [l, c] : terms)
        for (const auto& [t, c2] : m[size_t(l)]) out[t] += c * c2;
    return {out.begin(), out.end()};
}

Family compose_left(const Family& inner, const Family& f) {
    Family out = f;
    for (size_t u = 0; u < f.size(); ++u)
        for (size_t x = 0; x < f[u].size(); ++x) out[u][x] = inner[u][size_t(f[u][x])];
    return out;
}

Family compose_right(const Family& f, const Family& inner) {
    Family out = f;
    for (size_t u = 0; u < f.size(); ++u)
        for (size_t x = 0; x < f[u].size(); ++x) out[u][x] = f[u][size_t(inner[u][x])];
    return out;
}

} // namespace

FunctorIsomorphisms functor_isomorphisms(const OpenSubgroupFunctorData& a,
                                         const OpenSubgroupFunctorData& b, bool require_lambda) {
    FunctorIsomorphisms out;
    if (a.gamma.n != b.gamma.n || a.subgroup_names != b.subgroup_names ||
        a.morphisms.size() != b.morphisms.size())
        return out;
    for (size_t m = 0; m < a.morphisms.size(); ++m)
        if (a.morphisms[m].name != b.morphisms[m].name ||
            a.morphisms[m].from != b.morphisms[m].from || a.morphisms[m].to != b.morphisms[m].to)
            return out;

    size_t nu = a.presentations.size();
    std::vector<std::vector<std::vector<int>>> per_subgroup;
    for (size_t u = 0; u < nu; ++u) {
        per_subgroup.push_back(
            search_isomorphisms(a.presentations[u], b.presentations[u], require_lambda, true));
        if (per_subgroup.back().empty()) return out;
    }

    // cartesian product over subgroups, filtered by morphism commutation
    std::vector<size_t> pick(nu, 0);
    while (true) {
        Family fam;
        for (size_t u = 0; u < nu; ++u) fam.push_back(per_subgroup[u][pick[u]]);
        bool ok = true;
        for (size_t m = 0; m < a.morphisms.size() && ok; ++m) {
            const FunctorMorphism& ma = a.morphisms[m];
            const FunctorMorphism& mb = b.morphisms[m];
            const std::vector<int>& ffrom = fam[size_t(ma.from)];
            const std::vector<int>& fto = fam[size_t(ma.to)];
            for (size_t x = 0; x < ma.map.size() && ok; ++x) {
                std::map<int, i64> lhs;
                for (const auto& [t, c] : ma.map[x]) lhs[fto[size_t(t)]] += c;
                std::vector<std::pair<int, i64>> lv{lhs.begin(), lhs.end()};
                if (lv != mb.map[size_t(ffrom[x])]) ok = false;
            }
        }
        if (ok) out.families.push_back(fam);
        size_t u = 0;
        while (u < nu && ++pick[u] == per_subgroup[u].size()) pick[u++] = 0;
        if (u == nu) break;
    }

    // classes modulo conjugation-induced families on either side
    std::vector<Family> seen;
    for (const Family& fam : out.families) {
        bool dup = false;
        for (const Family& ca : a.inner_families) {
            for (const Family& cb : b.inner_families) {
                Family g = compose_left(cb, compose_right(fam, ca));
                for (const Family& s : seen)
                    if (s == g) dup = true;
            }
        }
        if (!dup) {
            seen.push_back(fam);
            out.family_classes.push_back(fam);
        }
    }
    return out;
}

} // namespace reprings
