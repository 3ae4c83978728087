#include "reprings/character.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace reprings {

i64 FormalCharacter::dimension() const {
    i64 d = 0;
    for (auto& [w, m] : terms) d += m;
    return d;
}

bool FormalCharacter::is_effective() const {
    for (auto& [w, m] : terms)
        if (m < 0) return false;
    return true;
}

void FormalCharacter::add_term(const Weight& w, i64 m) {
    if (m == 0) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, m);
    } else {
        it->second += m;
        if (it->second == 0) terms.erase(it);
    }
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& o) {
    for (auto& [w, m] : o.terms) add_term(w, m);
    return *this;
}

FormalCharacter& FormalCharacter::operator-=(const FormalCharacter& o) {
    for (auto& [w, m] : o.terms) add_term(w, -m);
    return *this;
}

FormalCharacter FormalCharacter::operator+(const FormalCharacter& o) const {
    FormalCharacter r = *this;
    r += o;
    return r;
}

FormalCharacter FormalCharacter::operator-(const FormalCharacter& o) const {
    FormalCharacter r = *this;
    r -= o;
    return r;
}

FormalCharacter FormalCharacter::operator*(const FormalCharacter& o) const {
    if (datum != o.datum && datum && o.datum && datum->cartan() != o.datum->cartan())
        throw std::invalid_argument("character product across different root data");
    FormalCharacter r;
    r.datum = datum ? datum : o.datum;
    for (auto& [w1, m1] : terms)
        for (auto& [w2, m2] : o.terms) {
            Weight w = w1;
            for (size_t i = 0; i < w.size(); ++i) w[i] += w2[i];
            r.add_term(w, checked_mul(m1, m2));
        }
    return r;
}

FormalCharacter FormalCharacter::scaled(i64 c) const {
    FormalCharacter r;
    r.datum = datum;
    if (c != 0)
        for (auto& [w, m] : terms) r.terms[w] = checked_mul(m, c);
    return r;
}

FormalCharacter unit_character(const RootDatum& datum) {
    FormalCharacter r;
    r.datum = &datum;
    r.terms[datum.zero_weight()] = 1;
    return r;
}

FormalCharacter irreducible_character(const RootDatum& datum, const Weight& omega) {
    if (int(omega.size()) != datum.rank())
        throw std::invalid_argument("highest weight has wrong rank");
    if (!datum.is_dominant(omega))
        throw std::invalid_argument("highest weight must be dominant");
    FormalCharacter r;
    r.datum = &datum;
    const int n = datum.rank();
    if (n == 0) {
        r.terms[omega] = 1;
        return r;
    }

    // lowest weight w_0(omega); the support box is omega - w_0(omega) in Q
    Weight neg(n);
    for (int i = 0; i < n; ++i) neg[i] = -omega[i];
    Weight lowest = datum.dominant_representative(neg);
    Weight span(n);
    for (int i = 0; i < n; ++i) span[i] = omega[i] + lowest[i];
    auto box = datum.root_coords_of(span);
    if (!box) throw std::logic_error("omega - w0(omega) not in the root lattice");

    // all dominant mu = omega - sum c_i alpha_i with 0 <= c <= box
    struct Cand { RootCoords c; Weight mu; };
    std::vector<Cand> cands;
    RootCoords c(n, 0);
    while (true) {
        Weight mu = omega;
        Weight shift = datum.root_to_weight(c);
        for (int i = 0; i < n; ++i) mu[i] -= shift[i];
        if (datum.is_dominant(mu)) cands.push_back({c, mu});
        int i = 0;
        while (i < n && c[i] == (*box)[i]) c[i++] = 0;
        if (i == n) break;
        ++c[i];
    }
    std::sort(cands.begin(), cands.end(), [&](const Cand& x, const Cand& y) {
        i64 hx = std::accumulate(x.c.begin(), x.c.end(), i64(0));
        i64 hy = std::accumulate(y.c.begin(), y.c.end(), i64(0));
        return hx != hy ? hx < hy : x.c < y.c;
    });

    Weight two_rho(n, 2);
    std::map<Weight, i64> mult; // keyed by dominant weight
    for (auto& cand : cands) {
        if (cand.mu == omega) {
            mult[omega] = 1;
            continue;
        }
        // Freudenthal: ((omega+rho)^2 - (mu+rho)^2) m_mu
        //            = 2 sum_{beta>0} sum_{k>=1} m_{mu+k beta} (mu+k beta, beta)
        i64 num = 0;
        for (auto& beta : datum.positive_roots) {
            for (i64 k = 1;; ++k) {
                RootCoords cc = cand.c;
                bool inside = true;
                for (int i = 0; i < n; ++i) {
                    cc[i] -= k * beta[i];
                    if (cc[i] < 0) inside = false;
                }
                if (!inside) break;
                Weight nu = omega;
                Weight shift = datum.root_to_weight(cc);
                for (int i = 0; i < n; ++i) nu[i] -= shift[i];
                auto it = mult.find(datum.dominant_representative(nu));
                if (it == mult.end() || it->second == 0) continue;
                num += 2 * it->second * datum.form_with_root(nu, beta);
            }
        }
        // denominator (omega+mu+2rho, omega-mu)
        Weight s = omega;
        for (int i = 0; i < n; ++i) s[i] += cand.mu[i] + two_rho[i];
        i64 den = datum.form_with_root(s, cand.c);
        if (den <= 0 || num % den != 0)
            throw std::logic_error("Freudenthal recursion produced a non-integer multiplicity");
        mult[cand.mu] = num / den;
    }

    for (auto& [mu, m] : mult) {
        if (m == 0) continue;
        for (auto& w : datum.weyl_orbit(mu)) r.terms[w] = m;
    }
    return r;
}

i64 weyl_dimension(const RootDatum& datum, const Weight& omega) {
    if (!datum.is_dominant(omega))
        throw std::invalid_argument("weyl_dimension requires a dominant weight");
    Weight top = omega;
    for (auto& v : top) ++v; // omega + rho
    Weight rho = datum.rho();
    auto gcd128 = [](i128 a, i128 b) {
        if (a < 0) a = -a;
        while (b) { i128 t = a % b; a = b; b = t; }
        return a;
    };
    i128 num = 1, den = 1;
    for (auto& beta : datum.positive_roots) {
        // lengths cancel in the ratio, so the symmetrized form works as well
        // as coroot pairings; reduce as we go to stay in range
        num *= datum.form_with_root(top, beta);
        den *= datum.form_with_root(rho, beta);
        i128 g = gcd128(num, den);
        if (g > 1) { num /= g; den /= g; }
    }
    if (den != 1) throw std::logic_error("Weyl dimension is not an integer");
    return i64(num);
}

bool is_weyl_invariant(const FormalCharacter& x) {
    if (!x.datum) return x.terms.empty();
    std::set<Weight> checked;
    for (auto& [w, m] : x.terms) {
        Weight dom = x.datum->dominant_representative(w);
        if (checked.count(dom)) continue;
        checked.insert(dom);
        i64 md = x.coeff(dom);
        for (auto& v : x.datum->weyl_orbit(dom))
            if (x.coeff(v) != md) return false;
    }
    return true;
}

namespace {

i64 pairing_2rho_check(const RootDatum& d, const Weight& w) {
    i64 s = 0;
    for (auto& beta : d.positive_roots) s += d.pairing_with_coroot(w, beta);
    return s;
}

} // namespace

IrreducibleDecomposition decompose(const FormalCharacter& x) {
    if (!is_weyl_invariant(x))
        throw std::invalid_argument("decompose requires a Weyl-invariant character");
    IrreducibleDecomposition out;
    if (!x.datum || x.terms.empty()) return out;
    const RootDatum& d = *x.datum;
    FormalCharacter rest = x;
    while (!rest.terms.empty()) {
        bool found = false;
        Weight best;
        i64 best_key = 0;
        for (auto& [w, m] : rest.terms) {
            if (!d.is_dominant(w)) continue;
            i64 key = pairing_2rho_check(d, w);
            if (!found || key > best_key || (key == best_key && w > best)) {
                found = true;
                best = w;
                best_key = key;
            }
        }
        if (!found) throw std::logic_error("Weyl-invariant character with no dominant term");
        i64 m = rest.coeff(best);
        out.emplace_back(best, m);
        rest -= irreducible_character(d, best).scaled(m);
    }
    return out;
}

FormalCharacter character_of_decomposition(const RootDatum& datum,
                                           const IrreducibleDecomposition& dec) {
    FormalCharacter r;
    r.datum = &datum;
    for (auto& [w, m] : dec) r += irreducible_character(datum, w).scaled(m);
    return r;
}

PrvResult prv_multiplicity_check(const RootDatum& datum, const Weight& omega,
                                 const Weight& omega2, const Weight& eta) {
    if (!datum.is_dominant(omega) || !datum.is_dominant(omega2))
        throw std::invalid_argument("prv_multiplicity_check requires dominant weights");
    auto etac = datum.root_coords_of(eta);
    if (!etac) throw std::invalid_argument("eta must lie in the root lattice");
    for (i64 v : *etac)
        if (v > 0) throw std::invalid_argument("eta must have non-positive root coordinates");
    const int n = datum.rank();
    RootCoords depth(n); // -eta
    for (int i = 0; i < n; ++i) depth[i] = -(*etac)[i];
    i64 ht = std::accumulate(depth.begin(), depth.end(), i64(0));

    PrvResult res;
    res.dominant_enough = true;
    for (int i = 0; i < n; ++i)
        if (omega[i] <= ht || omega2[i] <= ht) res.dominant_enough = false;

    // tensor multiplicity
    Weight target(n);
    for (int i = 0; i < n; ++i) target[i] = omega[i] + omega2[i] + eta[i];
    if (datum.is_dominant(target)) {
        auto dec = decompose(irreducible_character(datum, omega) *
                             irreducible_character(datum, omega2));
        for (auto& [w, m] : dec)
            if (w == target) res.tensor_mult = m;
    }

    // monomials in negative-root vectors of weight eta, with PBW multiplicities
    const i64 budget = enumeration_budget();
    i64 visited = 0;
    std::function<void(size_t, RootCoords&)> rec = [&](size_t idx, RootCoords& rem) {
        if (++visited > budget)
            throw std::runtime_error("bound exceeded: PBW enumeration budget");
        bool done = std::all_of(rem.begin(), rem.end(), [](i64 v) { return v == 0; });
        if (done) { ++res.pbw_dim; return; }
        if (idx == datum.positive_roots.size()) return;
        const RootCoords& beta = datum.positive_roots[idx];
        for (i64 k = 0;; ++k) {
            RootCoords next = rem;
            bool ok = true;
            for (int i = 0; i < n; ++i) {
                next[i] -= k * beta[i];
                if (next[i] < 0) ok = false;
            }
            if (!ok) break;
            rec(idx + 1, next);
        }
    };
    rec(0, depth);

    res.equal = res.tensor_mult == res.pbw_dim;
    return res;
}

std::map<Weight, i64> laurent_quotient(std::map<Weight, i64> num,
                                       const std::map<Weight, i64>& den) {
    if (den.empty()) throw std::invalid_argument("division by zero Laurent polynomial");
    auto lead = std::prev(den.end());
    if (lead->second != 1 && lead->second != -1)
        throw std::invalid_argument("divisor leading coefficient must be a unit");
    std::map<Weight, i64> q;
    // inexact Laurent division descends forever; cap the step count
    i64 steps = 0;
    const i64 max_steps = enumeration_budget();
    while (!num.empty()) {
        if (++steps > max_steps)
            throw std::invalid_argument("laurent_quotient: division has a remainder");
        auto nl = std::prev(num.end());
        i64 f = nl->second / lead->second;
        Weight shift = nl->first;
        for (size_t i = 0; i < shift.size(); ++i) shift[i] -= lead->first[i];
        q[shift] += f;
        for (auto& [w, m] : den) {
            Weight t = w;
            for (size_t i = 0; i < t.size(); ++i) t[i] += shift[i];
            auto it = num.find(t);
            i64 v = (it == num.end() ? 0 : it->second) - f * m;
            if (v == 0) {
                if (it != num.end()) num.erase(it);
            } else {
                num[t] = v;
            }
        }
    }
    for (auto it = q.begin(); it != q.end();)
        it = it->second == 0 ? q.erase(it) : std::next(it);
    return q;
}

std::vector<std::pair<Weight, int>> signed_weyl_orbit(const RootDatum& datum,
                                                      const Weight& regular) {
    std::map<Weight, int> sign{{regular, 1}};
    std::vector<Weight> queue{regular};
    for (size_t q = 0; q < queue.size(); ++q) {
        Weight w = queue[q];
        int s = sign[w];
        for (int i = 0; i < datum.rank(); ++i) {
            Weight v = datum.reflect(w, i);
            if (v == w) throw std::invalid_argument("signed_weyl_orbit requires a regular weight");
            auto [it, inserted] = sign.emplace(v, -s);
            if (inserted) queue.push_back(v);
        }
    }
    std::vector<std::pair<Weight, int>> out(sign.begin(), sign.end());
    return out;
}

i64 enumeration_budget() {
    if (const char* s = std::getenv("REPRINGS_BUDGET")) {
        i64 v = std::atoll(s);
        if (v > 0) return v;
    }
    return 1000000;
}

} // namespace reprings
