#include "reprings/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "reprings/character.hpp" // enumeration_budget

namespace reprings {

i64 GModule::exponent() const {
    i64 m = 1;
    for (i64 d : factors) m = std::lcm(m, d);
    return m;
}

i64 GModule::size() const {
    i64 s = 1;
    for (i64 d : factors) s = checked_mul(s, d);
    return s;
}

std::vector<i64> GModule::apply(int g, const std::vector<i64>& v) const {
    std::vector<i64> out = action[size_t(g)].apply(v);
    for (int i = 0; i < rank(); ++i) out[size_t(i)] = mod_pos(out[size_t(i)], factors[size_t(i)]);
    return out;
}

GModule trivial_module(const FiniteGroup& g, std::vector<i64> factors) {
    GModule z;
    z.factors = std::move(factors);
    z.action.assign(size_t(g.n), IntMat::identity(z.rank()));
    return z;
}

GModule make_module(const FiniteGroup& g, std::vector<i64> factors,
                    std::vector<IntMat> action) {
    GModule z;
    z.factors = std::move(factors);
    z.action = std::move(action);
    for (i64 d : z.factors)
        if (d < 1) throw std::invalid_argument("module factors must be >= 1");
    if (int(z.action.size()) != g.n)
        throw std::invalid_argument("one action matrix per group element required");
    const int r = z.rank();
    auto congruent = [&](const IntMat& a, const IntMat& b) {
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (mod_pos(a.at(i, j) - b.at(i, j), z.factors[size_t(i)]) != 0) return false;
        return true;
    };
    for (int e = 0; e < g.n; ++e) {
        const IntMat& M = z.action[size_t(e)];
        if (M.rows != r || M.cols != r) throw std::invalid_argument("action matrix size mismatch");
        // well-defined on (+) Z/d_i: M_ij d_j = 0 mod d_i
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (mod_pos(checked_mul(M.at(i, j), z.factors[size_t(j)]), z.factors[size_t(i)]) != 0)
                    throw std::invalid_argument("action matrix not well-defined on the module");
    }
    if (!congruent(z.action[size_t(g.id)], IntMat::identity(r)))
        throw std::invalid_argument("identity must act trivially");
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            if (!congruent(z.action[size_t(a)] * z.action[size_t(b)], z.action[size_t(g.mul(a, b))]))
                throw std::invalid_argument("action does not respect the multiplication table");
    return z;
}

GModule module_from_generators(const FiniteGroup& g, std::vector<i64> factors,
                               const std::vector<std::pair<int, IntMat>>& gen_action) {
    const int r = int(factors.size());
    std::vector<IntMat> action(size_t(g.n));
    std::vector<bool> have(size_t(g.n), false);
    action[size_t(g.id)] = IntMat::identity(r);
    have[size_t(g.id)] = true;
    std::vector<int> queue{g.id};
    for (size_t q = 0; q < queue.size(); ++q)
        for (auto& [e, M] : gen_action) {
            int x = g.mul(queue[q], e);
            if (have[size_t(x)]) continue;
            IntMat prod = action[size_t(queue[q])] * M; // x = prev * e
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    prod.at(i, j) = mod_pos(prod.at(i, j), factors[size_t(i)]);
            action[size_t(x)] = std::move(prod);
            have[size_t(x)] = true;
            queue.push_back(x);
        }
    if (std::find(have.begin(), have.end(), false) != have.end())
        throw std::invalid_argument("generators do not generate the group");
    return make_module(g, std::move(factors), std::move(action));
}

namespace {

std::vector<std::vector<int>> bar_tuples(const FiniteGroup& g, int len) {
    std::vector<int> nonid;
    for (int e = 0; e < g.n; ++e)
        if (e != g.id) nonid.push_back(e);
    std::vector<std::vector<int>> out{{}};
    for (int t = 0; t < len; ++t) {
        std::vector<std::vector<int>> next;
        for (auto& tup : out)
            for (int e : nonid) {
                auto v = tup;
                v.push_back(e);
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

int tuple_index(const std::vector<std::vector<int>>& tuples, const std::vector<int>& t) {
    auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
    if (it == tuples.end() || *it != t) return -1;
    return int(it - tuples.begin());
}

// differential C^len -> C^{len+1} in cochain coordinates (per-component moduli)
IntMat bar_differential(const FiniteGroup& g, const GModule& z, int len,
                        const std::vector<std::vector<int>>& src,
                        const std::vector<std::vector<int>>& dst) {
    const int r = z.rank();
    IntMat d(int(dst.size()) * r, int(src.size()) * r);
    for (size_t ti = 0; ti < dst.size(); ++ti) {
        const auto& tau = dst[ti];
        // rho(g1) phi(g2..)
        {
            std::vector<int> tail(tau.begin() + 1, tau.end());
            int col = tuple_index(src, tail);
            const IntMat& M = z.action[size_t(tau[0])];
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b)
                    d.at(int(ti) * r + a, col * r + b) += M.at(a, b);
        }
        // (-1)^j phi(.., g_j g_{j+1}, ..)
        for (int j = 0; j + 1 <= len; ++j) {
            int prod = g.mul(tau[size_t(j)], tau[size_t(j) + 1]);
            if (prod == g.id) continue; // normalized cochains vanish there
            std::vector<int> merged;
            for (int k = 0; k < int(tau.size()); ++k) {
                if (k == j) { merged.push_back(prod); ++k; continue; }
                merged.push_back(tau[size_t(k)]);
            }
            int col = tuple_index(src, merged);
            i64 sign = (j % 2 == 0) ? -1 : 1; // (-1)^{j+1} with 1-based j
            for (int a = 0; a < r; ++a) d.at(int(ti) * r + a, col * r + a) += sign;
        }
        // (-1)^{len+1} phi(g1..g_len)
        {
            std::vector<int> init(tau.begin(), tau.end() - 1);
            int col = tuple_index(src, init);
            i64 sign = (len % 2 == 0) ? -1 : 1;
            for (int a = 0; a < r; ++a) d.at(int(ti) * r + a, col * r + a) += sign;
        }
    }
    return d;
}

} // namespace

i64 CohomologyResult::order() const {
    i64 o = 1;
    for (i64 f : invariant_factors) o = checked_mul(o, f);
    return o;
}

std::vector<i64> CohomologyResult::reduce_cocycle(const std::vector<i64>& t) const {
    if (invariant_factors.empty()) return {};
    std::vector<i64> c;
    if (!solve_mod(kernel_gens, t, m, c))
        throw std::invalid_argument("vector is not a cocycle");
    std::vector<i64> full = coord_transform.apply(c);
    std::vector<i64> out;
    for (size_t i = 0; i < factor_rows.size(); ++i)
        out.push_back(mod_pos(full[size_t(factor_rows[i])], invariant_factors[i]));
    return out;
}

std::vector<i64> CohomologyResult::cocycle_of(const std::vector<i64>& coords) const {
    std::vector<i64> c_full(size_t(coord_transform.rows), 0);
    for (size_t i = 0; i < factor_rows.size(); ++i)
        c_full[size_t(factor_rows[i])] = coords[i];
    std::vector<i64> c = coord_inverse.apply(c_full);
    std::vector<i64> t = kernel_gens.apply(c);
    for (auto& v : t) v = mod_pos(v, m);
    return t;
}

std::vector<std::vector<i64>> CohomologyResult::all_classes() const {
    std::vector<std::vector<i64>> out;
    std::vector<i64> c(invariant_factors.size(), 0);
    while (true) {
        out.push_back(c);
        size_t i = 0;
        while (i < c.size() && c[i] == invariant_factors[i] - 1) c[i++] = 0;
        if (i == c.size()) break;
        ++c[i];
    }
    return out;
}

CohomologyResult cohomology_group(const FiniteGroup& g, const GModule& z, int degree) {
    if (degree < 1 || degree > 3)
        throw std::invalid_argument("cohomology_group supports degrees 1..3");
    make_module(g, z.factors, z.action); // validate
    CohomologyResult res;
    res.degree = degree;
    res.m = z.exponent();
    res.module_rank = z.rank();
    res.tuples = bar_tuples(g, degree);
    if (res.m == 1) return res; // trivial module

    const int r = z.rank();
    auto below = bar_tuples(g, degree - 1);
    auto above = bar_tuples(g, degree + 1);
    i64 entries = i64(above.size()) * r * i64(res.tuples.size()) * r;
    if (entries > enumeration_budget())
        throw std::runtime_error("cohomology budget exceeded: bar matrices too large");

    IntMat d_up = bar_differential(g, z, degree, res.tuples, above);
    IntMat d_down = bar_differential(g, z, degree - 1, below, res.tuples);

    // uniformize row moduli: row for component a is a condition mod d_a
    for (int row = 0; row < d_up.rows; ++row) {
        i64 scale = res.m / z.factors[size_t(row % r)];
        for (int col = 0; col < d_up.cols; ++col)
            d_up.at(row, col) = mod_pos(checked_mul(d_up.at(row, col), scale), res.m);
    }

    auto kgens = kernel_mod(d_up, res.m);
    const int N = d_up.cols;
    const int k = int(kgens.size());
    res.kernel_gens = IntMat(N, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < N; ++i) res.kernel_gens.at(i, j) = kgens[size_t(j)][size_t(i)];
    if (k == 0) return res;

    // boundary columns plus the per-coordinate modulus relations
    std::vector<std::vector<i64>> bcols;
    for (int j = 0; j < d_down.cols; ++j) {
        std::vector<i64> col(static_cast<size_t>(N));
        for (int i = 0; i < N; ++i) col[size_t(i)] = mod_pos(d_down.at(i, j), res.m);
        bcols.push_back(std::move(col));
    }
    for (int i = 0; i < N; ++i) {
        i64 d = z.factors[size_t(i % r)];
        if (d == res.m) continue;
        std::vector<i64> col(size_t(N), 0);
        col[size_t(i)] = d;
        bcols.push_back(std::move(col));
    }

    // express boundaries in kernel coordinates: K X = B (mod m)
    IntMat M(k, int(bcols.size()) + k);
    for (size_t j = 0; j < bcols.size(); ++j) {
        std::vector<i64> x;
        if (!solve_mod(res.kernel_gens, bcols[j], res.m, x))
            throw std::logic_error("coboundary is not a cocycle");
        for (int i = 0; i < k; ++i) M.at(i, int(j)) = x[size_t(i)];
    }
    // plus the kernel of c -> K c (coordinate redundancy)
    auto ygens = kernel_mod(res.kernel_gens, res.m);
    for (auto& y : ygens) {
        IntMat wide(k, M.cols + 1);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < M.cols; ++j) wide.at(i, j) = M.at(i, j);
        for (int i = 0; i < k; ++i) wide.at(i, M.cols) = y[size_t(i)];
        M = std::move(wide);
    }

    SmithResult s = smith_normal_form(M, res.m);
    res.coord_transform = s.U;
    res.full_diagonal.assign(size_t(k), 0);
    for (int i = 0; i < k; ++i) {
        i64 d = i < std::min(M.rows, M.cols) ? mod_pos(s.D.at(i, i), res.m) : 0;
        i64 ord = d == 0 ? res.m : std::gcd(d, res.m);
        res.full_diagonal[size_t(i)] = ord;
        if (ord > 1) {
            res.invariant_factors.push_back(ord);
            res.factor_rows.push_back(i);
        }
    }
    // inverse of U mod m
    res.coord_inverse = IntMat(k, k);
    for (int j = 0; j < k; ++j) {
        std::vector<i64> e(size_t(k), 0), x;
        e[size_t(j)] = 1;
        if (!solve_mod(s.U, e, res.m, x)) throw std::logic_error("coordinate transform not invertible");
        for (int i = 0; i < k; ++i) res.coord_inverse.at(i, j) = x[size_t(i)];
    }
    return res;
}

Subgroup make_subgroup(const FiniteGroup& g, const GModule& z, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    if (!g.is_subgroup(elems)) throw std::invalid_argument("element set is not a subgroup");
    Subgroup s;
    s.to_parent = elems;
    s.from_parent.assign(size_t(g.n), -1);
    for (size_t i = 0; i < elems.size(); ++i) s.from_parent[size_t(elems[i])] = int(i);
    const int n = int(elems.size());
    std::vector<int> table(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[size_t(a) * n + b] = s.from_parent[size_t(g.mul(elems[size_t(a)], elems[size_t(b)]))];
    s.group = group_from_table(std::move(table), g.name + "-sub");
    s.module.factors = z.factors;
    for (int a = 0; a < n; ++a) s.module.action.push_back(z.action[size_t(elems[size_t(a)])]);
    return s;
}

std::vector<i64> restrict_class(const FiniteGroup& g, const CohomologyResult& hg,
                                const std::vector<i64>& coords, const Subgroup& s,
                                const CohomologyResult& hs) {
    std::vector<i64> t = hg.invariant_factors.empty()
                             ? std::vector<i64>(hg.tuples.size() * size_t(hg.module_rank), 0)
                             : hg.cocycle_of(coords);
    const int r = hg.module_rank;
    std::vector<i64> sub(hs.tuples.size() * size_t(r), 0);
    for (size_t ti = 0; ti < hs.tuples.size(); ++ti) {
        std::vector<int> parent_tuple;
        for (int e : hs.tuples[ti]) parent_tuple.push_back(s.to_parent[size_t(e)]);
        int pi = tuple_index(hg.tuples, parent_tuple);
        if (pi < 0) throw std::logic_error("tuple lookup failed");
        for (int a = 0; a < r; ++a) sub[ti * size_t(r) + size_t(a)] = t[size_t(pi) * size_t(r) + size_t(a)];
    }
    return hs.reduce_cocycle(sub);
}

std::vector<i64> corestrict_class(const FiniteGroup& g, const GModule& z,
                                  const CohomologyResult& hg, const Subgroup& s,
                                  const CohomologyResult& hs, const std::vector<i64>& coords) {
    const int r = z.rank();
    std::vector<i64> f = hs.invariant_factors.empty()
                             ? std::vector<i64>(hs.tuples.size() * size_t(r), 0)
                             : hs.cocycle_of(coords);
    // left transversal: g = union of t S
    std::vector<int> reps;
    std::vector<bool> covered(size_t(g.n), false);
    for (int e = 0; e < g.n; ++e) {
        if (covered[size_t(e)]) continue;
        reps.push_back(e);
        for (int h : s.to_parent) covered[size_t(g.mul(e, h))] = true;
    }
    auto decomp = [&](int x) { // x = t h
        for (int t : reps) {
            int h = g.mul(g.inverse(t), x);
            if (s.from_parent[size_t(h)] >= 0) return std::pair<int, int>(t, s.from_parent[size_t(h)]);
        }
        throw std::logic_error("transversal decomposition failed");
    };

    std::vector<i64> out(hg.tuples.size() * size_t(r), 0);
    for (size_t ti = 0; ti < hg.tuples.size(); ++ti) {
        const auto& tau = hg.tuples[ti];
        for (int t0 : reps) {
            // iterate from the right: g_i t_i = t_{i-1} h_i
            int cur = t0;
            std::vector<int> hs_elems(tau.size());
            bool vanish = false;
            for (int i = int(tau.size()) - 1; i >= 0; --i) {
                auto [tprev, h] = decomp(g.mul(tau[size_t(i)], cur));
                hs_elems[size_t(i)] = h;
                cur = tprev;
                if (h == s.group.id) vanish = true; // normalized cochain
            }
            std::vector<i64> val(size_t(r), 0);
            if (!vanish) {
                std::vector<int> stuple;
                for (int h : hs_elems) stuple.push_back(h);
                int si = tuple_index(hs.tuples, stuple);
                if (si < 0) throw std::logic_error("subgroup tuple lookup failed");
                for (int a = 0; a < r; ++a) val[size_t(a)] = f[size_t(si) * size_t(r) + size_t(a)];
            }
            std::vector<i64> moved = z.apply(cur, val); // rho(t_0-left) value
            for (int a = 0; a < r; ++a)
                out[ti * size_t(r) + size_t(a)] =
                    mod_pos(out[ti * size_t(r) + size_t(a)] + moved[size_t(a)], hg.m);
        }
    }
    return hg.reduce_cocycle(out);
}

namespace {

FiniteGroup action_image_group(const FiniteGroup& g, const GModule& z) {
    // distinct action matrices (entries reduced per row modulus) with induced product
    auto key = [&](int e) {
        std::vector<i64> k;
        const IntMat& M = z.action[size_t(e)];
        for (int i = 0; i < M.rows; ++i)
            for (int j = 0; j < M.cols; ++j) k.push_back(mod_pos(M.at(i, j), z.factors[size_t(i)]));
        return k;
    };
    std::map<std::vector<i64>, int> index;
    std::vector<int> rep;
    for (int e = 0; e < g.n; ++e) {
        auto k = key(e);
        if (!index.count(k)) {
            index[k] = int(rep.size());
            rep.push_back(e);
        }
    }
    const int n = int(rep.size());
    std::vector<int> table(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[size_t(a) * n + b] = index.at(key(g.mul(rep[size_t(a)], rep[size_t(b)])));
    return group_from_table(std::move(table), "action-image");
}

} // namespace

VanishingCheck cyclic_sylow_vanishing_check(const FiniteGroup& g, const GModule& z) {
    if (!sylow_cyclic_check(action_image_group(g, z)))
        throw std::invalid_argument("image of the action must have cyclic Sylow subgroups");
    VanishingCheck res;
    CohomologyResult h1 = cohomology_group(g, z, 1);
    // distinct cyclic subgroups with their cohomology
    std::set<std::vector<int>> seen;
    std::vector<std::pair<Subgroup, CohomologyResult>> cyclics;
    for (int e = 0; e < g.n; ++e) {
        auto elems = g.generated_subgroup({e});
        if (!seen.insert(elems).second) continue;
        Subgroup s = make_subgroup(g, z, elems);
        CohomologyResult hs = cohomology_group(s.group, s.module, 1);
        cyclics.emplace_back(std::move(s), std::move(hs));
    }
    res.ok = true;
    for (auto& coords : h1.all_classes()) {
        ++res.classes_checked;
        bool zero = std::all_of(coords.begin(), coords.end(), [](i64 v) { return v == 0; });
        if (zero) continue;
        bool all_restrictions_vanish = true;
        for (auto& [s, hs] : cyclics) {
            auto rc = restrict_class(g, h1, coords, s, hs);
            if (!std::all_of(rc.begin(), rc.end(), [](i64 v) { return v == 0; })) {
                all_restrictions_vanish = false;
                break;
            }
        }
        if (all_restrictions_vanish) {
            res.ok = false;
            res.counterexample = coords;
            return res;
        }
    }
    return res;
}

StableElementsCheck stable_elements_check(const FiniteGroup& g, const GModule& z, i64 p,
                                          int degree) {
    for (i64 d : z.factors) {
        i64 v = d;
        while (v % p == 0) v /= p;
        if (v != 1) throw std::invalid_argument("module must be p-local");
    }
    StableElementsCheck res;
    auto syl = g.sylow_subgroup(p);
    Subgroup s = make_subgroup(g, z, syl);
    if (!s.group.is_abelian() || !sylow_cyclic_check(s.group))
        throw std::invalid_argument("Sylow p-subgroup must be cyclic");
    CohomologyResult hg = cohomology_group(g, z, degree);
    CohomologyResult hs = cohomology_group(s.group, s.module, degree);

    // image of restriction; injectivity
    std::set<std::vector<i64>> image;
    bool injective = true;
    for (auto& coords : hg.all_classes()) {
        auto rc = restrict_class(g, hg, coords, s, hs);
        bool czero = std::all_of(coords.begin(), coords.end(), [](i64 v) { return v == 0; });
        bool rzero = std::all_of(rc.begin(), rc.end(), [](i64 v) { return v == 0; });
        if (rzero && !czero) injective = false;
        image.insert(rc);
    }

    // normalizer-stable classes of H^i(S)
    const int r = z.rank();
    auto conj_class = [&](int n_elt, const std::vector<i64>& coords) {
        std::vector<i64> f = hs.invariant_factors.empty()
                                 ? std::vector<i64>(hs.tuples.size() * size_t(r), 0)
                                 : hs.cocycle_of(coords);
        int ninv = g.inverse(n_elt);
        std::vector<i64> out(hs.tuples.size() * size_t(r), 0);
        for (size_t ti = 0; ti < hs.tuples.size(); ++ti) {
            std::vector<int> conj_tuple;
            bool vanish = false;
            for (int e : hs.tuples[ti]) {
                int pe = g.conjugate(ninv, s.to_parent[size_t(e)]); // n^-1 x n
                int se = s.from_parent[size_t(pe)];
                if (se < 0) throw std::logic_error("normalizer conjugation left the subgroup");
                if (se == s.group.id) vanish = true;
                conj_tuple.push_back(se);
            }
            std::vector<i64> val(size_t(r), 0);
            if (!vanish) {
                int si = tuple_index(hs.tuples, conj_tuple);
                for (int a = 0; a < r; ++a) val[size_t(a)] = f[size_t(si) * size_t(r) + size_t(a)];
            }
            std::vector<i64> moved = z.apply(n_elt, val);
            for (int a = 0; a < r; ++a) out[ti * size_t(r) + size_t(a)] = moved[size_t(a)];
        }
        return hs.reduce_cocycle(out);
    };
    std::set<std::vector<i64>> stable;
    auto normalizer = g.normalizer(s.to_parent);
    for (auto& coords : hs.all_classes()) {
        bool fixed = true;
        for (int n_elt : normalizer)
            if (conj_class(n_elt, coords) != coords) { fixed = false; break; }
        if (fixed) stable.insert(coords);
    }
    res.image_size = i64(image.size());
    res.stable_size = i64(stable.size());
    res.ok = injective && image == stable;
    return res;
}

ExtensionAutomorphisms extension_automorphisms(const FiniteGroup& g, const GModule& z,
                                               const CohomologyResult& h2,
                                               const std::vector<i64>& coords) {
    if (h2.degree != 2) throw std::invalid_argument("a degree-2 class is required");
    const int r = z.rank();
    std::vector<i64> f = h2.invariant_factors.empty()
                             ? std::vector<i64>(h2.tuples.size() * size_t(r), 0)
                             : h2.cocycle_of(coords);
    auto cocycle_val = [&](int a, int b) {
        std::vector<i64> v(size_t(r), 0);
        if (a == g.id || b == g.id) return v; // normalized
        int ti = tuple_index(h2.tuples, {a, b});
        for (int i = 0; i < r; ++i) v[size_t(i)] = mod_pos(f[size_t(ti) * size_t(r) + size_t(i)], z.factors[size_t(i)]);
        return v;
    };
    auto add = [&](std::vector<i64> a, const std::vector<i64>& b) {
        for (int i = 0; i < r; ++i) a[size_t(i)] = mod_pos(a[size_t(i)] + b[size_t(i)], z.factors[size_t(i)]);
        return a;
    };

    // candidate maps c: Gamma -> Z with c(id) = 0; automorphism condition on the
    // realized extension: c(ab) = c(a) + rho(a) c(b) + (f(a,b) - f(a,b)) = crossed hom
    i64 candidates = 1;
    for (int e = 0; e < g.n - 1; ++e) {
        candidates = checked_mul(candidates, z.size());
        if (candidates > enumeration_budget())
            throw std::runtime_error("extension automorphism enumeration budget exceeded");
    }
    std::vector<int> nonid;
    for (int e = 0; e < g.n; ++e)
        if (e != g.id) nonid.push_back(e);

    std::vector<std::vector<std::vector<i64>>> crossed; // c per non-id element
    std::vector<std::vector<i64>> c(size_t(g.n), std::vector<i64>(size_t(r), 0));
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == nonid.size()) {
            // check the map (z, a) -> (z + c(a), a) preserves the realized product
            for (int a = 0; a < g.n; ++a)
                for (int b = 0; b < g.n; ++b) {
                    // products (0,a)(0,b) = (f(a,b), ab); images must agree
                    auto lhs = add(cocycle_val(a, b), c[size_t(g.mul(a, b))]);
                    auto rhs = add(add(c[size_t(a)], z.apply(a, c[size_t(b)])), cocycle_val(a, b));
                    if (lhs != rhs) return;
                }
            std::vector<std::vector<i64>> copy;
            for (int e : nonid) copy.push_back(c[size_t(e)]);
            crossed.push_back(std::move(copy));
            return;
        }
        std::vector<i64> v(size_t(r), 0);
        while (true) {
            c[size_t(nonid[idx])] = v;
            rec(idx + 1);
            int i = 0;
            while (i < r && v[size_t(i)] == z.factors[size_t(i)] - 1) v[size_t(i++)] = 0;
            if (i == r) break;
            ++v[size_t(i)];
        }
    };
    rec(0);

    // principal maps: c(a) = z0 - rho(a) z0
    std::set<std::vector<std::vector<i64>>> principal;
    std::vector<i64> z0(size_t(r), 0);
    while (true) {
        std::vector<std::vector<i64>> pc;
        for (int e : nonid) {
            std::vector<i64> v = z.apply(e, z0);
            for (int i = 0; i < r; ++i) v[size_t(i)] = mod_pos(z0[size_t(i)] - v[size_t(i)], z.factors[size_t(i)]);
            pc.push_back(std::move(v));
        }
        principal.insert(std::move(pc));
        int i = 0;
        while (i < r && z0[size_t(i)] == z.factors[size_t(i)] - 1) z0[size_t(i++)] = 0;
        if (i == r) break;
        ++z0[size_t(i)];
    }

    ExtensionAutomorphisms res;
    res.order = i64(crossed.size()) / i64(principal.size());
    CohomologyResult h1 = cohomology_group(g, z, 1);
    res.h1_order = h1.order();
    res.matches_h1 = res.order == res.h1_order;
    return res;
}

} // namespace reprings
