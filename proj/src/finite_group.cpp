#include "reprings/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace reprings {

int FiniteGroup::inverse(int a) const {
    for (int b = 0; b < n; ++b)
        if (mul(a, b) == id) return b;
    throw std::logic_error("element without inverse");
}

i64 FiniteGroup::element_order(int a) const {
    i64 k = 1;
    int x = a;
    while (x != id) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<int> FiniteGroup::generated_subgroup(const std::vector<int>& gens) const {
    std::set<int> s{id};
    std::vector<int> queue{id};
    for (size_t q = 0; q < queue.size(); ++q)
        for (int g : gens) {
            int x = mul(queue[q], g);
            if (s.insert(x).second) queue.push_back(x);
        }
    return std::vector<int>(s.begin(), s.end());
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elems) const {
    std::set<int> s(elems.begin(), elems.end());
    if (!s.count(id)) return false;
    for (int a : elems)
        for (int b : elems)
            if (!s.count(mul(a, b))) return false;
    return true;
}

bool FiniteGroup::is_normal(const std::vector<int>& elems) const {
    std::set<int> s(elems.begin(), elems.end());
    for (int g = 0; g < n; ++g)
        for (int a : elems)
            if (!s.count(conjugate(g, a))) return false;
    return true;
}

std::vector<int> FiniteGroup::normalizer(const std::vector<int>& elems) const {
    std::set<int> s(elems.begin(), elems.end());
    std::vector<int> out;
    for (int g = 0; g < n; ++g) {
        bool ok = true;
        for (int a : elems)
            if (!s.count(conjugate(g, a))) { ok = false; break; }
        if (ok) out.push_back(g);
    }
    return out;
}

std::vector<i64> FiniteGroup::prime_factors() const {
    std::vector<i64> out;
    i64 m = n;
    for (i64 p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    if (m > 1) out.push_back(m);
    return out;
}

std::vector<int> FiniteGroup::sylow_subgroup(i64 p) const {
    i64 pk = 1;
    i64 m = n;
    while (m % p == 0) { m /= p; pk *= p; }
    std::vector<int> s{id};
    while (i64(s.size()) < pk) {
        std::vector<int> ns = normalizer(s);
        std::set<int> have(s.begin(), s.end());
        bool grew = false;
        for (int x : ns) {
            if (have.count(x)) continue;
            i64 ord = element_order(x);
            bool ppow = true;
            while (ord > 1) {
                if (ord % p != 0) { ppow = false; break; }
                ord /= p;
            }
            if (!ppow) continue;
            std::vector<int> gens = s;
            gens.push_back(x);
            std::vector<int> t = generated_subgroup(gens);
            i64 sz = i64(t.size());
            bool tp = true;
            while (sz > 1) {
                if (sz % p != 0) { tp = false; break; }
                sz /= p;
            }
            if (!tp) continue;
            s = std::move(t);
            grew = true;
            break;
        }
        if (!grew) throw std::logic_error("Sylow subgroup search stalled");
    }
    return s;
}

FiniteGroup group_from_table(std::vector<int> table, std::string name) {
    int n = 0;
    while (i64(n) * n < i64(table.size())) ++n;
    if (i64(n) * n != i64(table.size()) || n == 0)
        throw std::invalid_argument("multiplication table must be square and nonempty");
    FiniteGroup g;
    g.n = n;
    g.table = std::move(table);
    g.name = std::move(name);
    for (int v : g.table)
        if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
    // identity
    g.id = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            if (g.mul(e, a) != a || g.mul(a, e) != a) ok = false;
        if (ok) { g.id = e; break; }
    }
    if (g.id < 0) throw std::invalid_argument("table has no identity");
    // inverses: each row and column is a permutation
    for (int a = 0; a < n; ++a) {
        std::vector<bool> row(n, false), col(n, false);
        for (int b = 0; b < n; ++b) {
            row[g.mul(a, b)] = true;
            col[g.mul(b, a)] = true;
        }
        if (std::count(row.begin(), row.end(), true) != n ||
            std::count(col.begin(), col.end(), true) != n)
            throw std::invalid_argument("table rows/columns are not permutations");
    }
    // associativity
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw std::invalid_argument("table is not associative");
    return g;
}

FiniteGroup group_from_permutations(int points, const std::vector<std::vector<int>>& gens,
                                    std::string name) {
    for (auto& p : gens) {
        if (int(p.size()) != points) throw std::invalid_argument("permutation size mismatch");
        std::vector<bool> seen(points, false);
        for (int v : p) {
            if (v < 0 || v >= points || seen[v]) throw std::invalid_argument("not a permutation");
            seen[v] = true;
        }
    }
    std::vector<int> identity(points);
    std::iota(identity.begin(), identity.end(), 0);
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems{identity};
    index[identity] = 0;
    for (size_t q = 0; q < elems.size(); ++q)
        for (auto& g : gens) {
            std::vector<int> prod(points);
            for (int i = 0; i < points; ++i) prod[i] = elems[q][g[i]]; // elems[q] after g
            if (!index.count(prod)) {
                index[prod] = int(elems.size());
                elems.push_back(prod);
            }
        }
    const int n = int(elems.size());
    std::vector<int> table(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> prod(points);
            for (int i = 0; i < points; ++i) prod[i] = elems[a][elems[b][i]];
            table[size_t(a) * n + b] = index.at(prod);
        }
    return group_from_table(std::move(table), std::move(name));
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic_group requires n >= 1");
    std::vector<int> table(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[size_t(a) * n + b] = (a + b) % n;
    return group_from_table(std::move(table), "C" + std::to_string(n));
}

FiniteGroup dihedral_group(int n) {
    if (n < 2) throw std::invalid_argument("dihedral_group requires n >= 2");
    // elements (i, s): rotation r^i times reflection^s
    const int m = 2 * n;
    auto enc = [&](int i, int s) { return s * n + i; };
    std::vector<int> table(size_t(m) * m);
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < 2; ++s)
            for (int j = 0; j < n; ++j)
                for (int t = 0; t < 2; ++t) {
                    // (r^i f^s)(r^j f^t) = r^{i + j or i - j} f^{s^t}
                    int rot = s == 0 ? (i + j) % n : ((i - j) % n + n) % n;
                    table[size_t(enc(i, s)) * m + enc(j, t)] = enc(rot, s ^ t);
                }
    return group_from_table(std::move(table), "D" + std::to_string(n));
}

FiniteGroup symmetric_group(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("symmetric_group supports n <= 4");
    if (n == 1) return cyclic_group(1);
    std::vector<int> cycle(n), swap01(n);
    std::iota(cycle.begin(), cycle.end(), 0);
    std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    return group_from_permutations(n, {cycle, swap01}, "S" + std::to_string(n));
}

FiniteGroup alternating_group_4() {
    return group_from_permutations(4, {{1, 0, 3, 2}, {1, 2, 0, 3}}, "A4");
}

FiniteGroup quaternion_group_8() {
    // regular representation of Q8 = <i, j> on its 8 elements {±1, ±i, ±j, ±k}
    // encode 1,-1,i,-i,j,-j,k,-k as 0..7
    auto neg = [](int x) { return x ^ 1; };
    std::vector<int> table(64);
    auto setmul = [&](int a, int b, int c) { table[size_t(a) * 8 + b] = c; };
    // base products on {1,i,j,k} with signs
    int I = 2, J = 4, K = 6, ONE = 0;
    auto base = [&](int a, int b) -> std::pair<int, bool> { // (unit, negate?)
        if (a == ONE) return {b, false};
        if (b == ONE) return {a, false};
        if (a == b) return {ONE, true}; // i^2 = j^2 = k^2 = -1
        if (a == I && b == J) return {K, false};
        if (a == J && b == K) return {I, false};
        if (a == K && b == I) return {J, false};
        if (a == J && b == I) return {K, true};
        if (a == K && b == J) return {I, true};
        if (a == I && b == K) return {J, true};
        throw std::logic_error("bad unit");
    };
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            auto [u, ng] = base(a & ~1, b & ~1);
            bool s = ((a & 1) != 0) ^ ((b & 1) != 0) ^ ng;
            setmul(a, b, s ? neg(u) : u);
        }
    return group_from_table(std::move(table), "Q8");
}

FiniteGroup semidirect_cyclic(int p, int q, int k) {
    if (p < 1 || q < 1) throw std::invalid_argument("semidirect_cyclic requires p, q >= 1");
    i64 kq = 1;
    for (int t = 0; t < q; ++t) kq = (kq * k) % p;
    if (kq % p != 1 % p) throw std::invalid_argument("action exponent must satisfy k^q = 1 mod p");
    const int m = p * q;
    auto enc = [&](int x, int y) { return y * p + x; }; // a^x b^y
    // powers of k
    std::vector<i64> kp(static_cast<size_t>(q));
    kp[0] = 1 % p;
    for (int y = 1; y < q; ++y) kp[size_t(y)] = (kp[size_t(y - 1)] * k) % p;
    std::vector<int> table(size_t(m) * m);
    for (int x1 = 0; x1 < p; ++x1)
        for (int y1 = 0; y1 < q; ++y1)
            for (int x2 = 0; x2 < p; ++x2)
                for (int y2 = 0; y2 < q; ++y2) {
                    // (a^x1 b^y1)(a^x2 b^y2) = a^{x1 + x2 k^{y1}} b^{y1+y2}
                    int x = int((x1 + x2 * kp[size_t(y1)]) % p);
                    int y = (y1 + y2) % q;
                    table[size_t(enc(x1, y1)) * m + enc(x2, y2)] = enc(x, y);
                }
    return group_from_table(std::move(table), "C" + std::to_string(p) + ":C" + std::to_string(q));
}

std::vector<FiniteGroup> group_catalog() {
    std::vector<FiniteGroup> out;
    for (int n = 1; n <= 63; ++n) out.push_back(cyclic_group(n));
    for (int n = 2; n <= 31; ++n) out.push_back(dihedral_group(n));
    out.push_back(symmetric_group(3));
    out.push_back(symmetric_group(4));
    out.push_back(alternating_group_4());
    out.push_back(quaternion_group_8());
    // nonabelian Z/p x| Z/q with faithful action, pq <= 63
    struct { int p, q, k; } sd[] = {{5, 4, 2}, {7, 3, 2}, {7, 6, 3},  {3, 4, 2},
                                    {11, 5, 3}, {13, 3, 3}, {13, 4, 5}, {19, 3, 7},
                                    {9, 3, 4}, {5, 8, 2}};
    for (auto& s : sd)
        if (s.p * s.q <= 63) out.push_back(semidirect_cyclic(s.p, s.q, s.k));
    return out;
}

bool sylow_cyclic_check(const FiniteGroup& g) {
    for (i64 p : g.prime_factors()) {
        i64 pk = 1, m = g.n;
        while (m % p == 0) { m /= p; pk *= p; }
        bool found = false;
        for (int a = 0; a < g.n && !found; ++a)
            if (g.element_order(a) == pk) found = true;
        if (!found) return false;
    }
    return true;
}

ZassenhausResult zassenhaus_decompose(const FiniteGroup& g) {
    ZassenhausResult res;
    // candidate Hall orders: coprime factorizations n = a * b, preferring the
    // largest prime-set for A, then the larger Hall order, then the smallest
    // generator index
    std::vector<i64> primes = g.prime_factors();
    const int np = int(primes.size());
    struct Cand { int nset; i64 a; };
    std::vector<Cand> cands;
    for (int mask = (1 << np) - 1; mask >= 0; --mask) {
        i64 a = 1, m = g.n;
        for (int t = 0; t < np; ++t)
            if (mask & (1 << t)) {
                i64 p = primes[size_t(t)];
                while (m % p == 0) { m /= p; a *= p; }
            }
        if (np > 1 && (mask == 0 || mask == (1 << np) - 1)) continue; // proper split
        cands.push_back({__builtin_popcount(unsigned(mask)), a});
    }
    if (cands.empty()) cands.push_back({np, g.n}); // trivial or prime-power group
    std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
        return x.nset != y.nset ? x.nset > y.nset : x.a > y.a;
    });
    for (auto& c : cands) {
        i64 a = c.a, b = g.n / c.a;
        for (int x = 0; x < g.n; ++x) {
            if (g.element_order(x) != a) continue;
            std::vector<int> sub = g.generated_subgroup({x});
            if (!g.is_normal(sub)) continue;
            for (int y = 0; y < g.n; ++y) {
                if (g.element_order(y) != b) continue;
                // coprime orders force trivial intersection, so A<y> = G
                res.ok = true;
                res.a_subgroup = sub;
                res.b_subgroup = g.generated_subgroup({y});
                res.a_generator = x;
                res.b_generator = y;
                return res;
            }
            break; // smallest generator index for A is fixed; B search failed
        }
    }
    return res;
}

} // namespace reprings
