#include "reprings/dynkin.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace reprings {

std::string simple_type_name(SimpleType t) {
    switch (t) {
        case SimpleType::A: return "A";
        case SimpleType::B: return "B";
        case SimpleType::C: return "C";
        case SimpleType::D: return "D";
        case SimpleType::E: return "E";
        case SimpleType::F: return "F";
        case SimpleType::G: return "G";
    }
    return "?";
}

CartanMatrix cartan_of_type(SimpleType t, int n) {
    auto chain = [](int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) {
            m.at(i, i) = 2;
            if (i + 1 < n) { m.at(i, i + 1) = -1; m.at(i + 1, i) = -1; }
        }
        return m;
    };
    IntMat m;
    switch (t) {
        case SimpleType::A:
            if (n < 1) throw std::invalid_argument("A_n requires n >= 1");
            m = chain(n);
            break;
        case SimpleType::B:
            if (n < 2) throw std::invalid_argument("B_n requires n >= 2");
            m = chain(n);
            m.at(n - 1, n - 2) = -2; // alpha_n short
            break;
        case SimpleType::C:
            if (n < 2) throw std::invalid_argument("C_n requires n >= 2");
            m = chain(n);
            m.at(n - 2, n - 1) = -2; // alpha_n long
            break;
        case SimpleType::D:
            if (n < 4) throw std::invalid_argument("D_n requires n >= 4");
            m = chain(n - 1);
            {
                IntMat d(n, n);
                for (int i = 0; i < n - 1; ++i)
                    for (int j = 0; j < n - 1; ++j) d.at(i, j) = m.at(i, j);
                d.at(n - 1, n - 1) = 2;
                d.at(n - 2, n - 3) = -1; // undo nothing; attach both ends to n-2
                d.at(n - 2, n - 1) = 0;
                d.at(n - 1, n - 2) = 0;
                d.at(n - 3, n - 1) = -1;
                d.at(n - 1, n - 3) = -1;
                m = d;
            }
            break;
        case SimpleType::E: {
            if (n < 6 || n > 8) throw std::invalid_argument("E_n requires 6 <= n <= 8");
            // Bourbaki: chain 1-3-4-5-...-n, node 2 attached to node 4
            IntMat d(n, n);
            for (int i = 0; i < n; ++i) d.at(i, i) = 2;
            auto link = [&](int a, int b) { d.at(a - 1, b - 1) = -1; d.at(b - 1, a - 1) = -1; };
            link(1, 3); link(3, 4); link(2, 4);
            for (int v = 4; v < n; ++v) link(v, v + 1);
            m = d;
            break;
        }
        case SimpleType::F:
            if (n != 4) throw std::invalid_argument("F requires rank 4");
            m = chain(4);
            m.at(2, 1) = -2; // alpha_3, alpha_4 short
            break;
        case SimpleType::G:
            if (n != 2) throw std::invalid_argument("G requires rank 2");
            m = IntMat(2, 2);
            m.at(0, 0) = 2; m.at(0, 1) = -3; // alpha_1 short
            m.at(1, 0) = -1; m.at(1, 1) = 2;
            break;
    }
    return CartanMatrix{m};
}

CartanMatrix cartan_of_type(const std::vector<TypeComponent>& comps) {
    int n = 0;
    for (auto& c : comps) n += c.rank;
    IntMat m(n, n);
    int off = 0;
    for (auto& c : comps) {
        CartanMatrix block = cartan_of_type(c.type, c.rank);
        for (int i = 0; i < c.rank; ++i)
            for (int j = 0; j < c.rank; ++j)
                m.at(off + i, off + j) = block.entries.at(i, j);
        off += c.rank;
    }
    return CartanMatrix{m};
}

std::vector<TypeComponent> parse_type_string(const std::string& s) {
    std::vector<TypeComponent> out;
    size_t pos = 0;
    while (pos < s.size()) {
        char letter = char(std::toupper(s[pos]));
        SimpleType t;
        switch (letter) {
            case 'A': t = SimpleType::A; break;
            case 'B': t = SimpleType::B; break;
            case 'C': t = SimpleType::C; break;
            case 'D': t = SimpleType::D; break;
            case 'E': t = SimpleType::E; break;
            case 'F': t = SimpleType::F; break;
            case 'G': t = SimpleType::G; break;
            default:
                throw std::invalid_argument("unknown simple type letter '" + std::string(1, s[pos]) +
                                            "' in \"" + s + "\"");
        }
        ++pos;
        size_t start = pos;
        while (pos < s.size() && std::isdigit(s[pos])) ++pos;
        if (start == pos) throw std::invalid_argument("missing rank in type string \"" + s + "\"");
        int rank = std::stoi(s.substr(start, pos - start));
        out.push_back({t, rank});
        if (pos < s.size()) {
            if (s[pos] != 'x' && s[pos] != 'X')
                throw std::invalid_argument("expected 'x' separator in type string \"" + s + "\"");
            ++pos;
        }
    }
    if (out.empty()) throw std::invalid_argument("empty type string");
    return out;
}

namespace {

// integer symmetrizer d_i > 0 with d_i a_ij = d_j a_ji, per connected component
std::vector<i64> symmetrizer(const IntMat& a, const std::vector<std::vector<int>>& comps) {
    const int n = a.rows;
    std::vector<Rat> d(n, Rat(0));
    for (auto& comp : comps) {
        d[comp[0]] = Rat(1);
        // BFS
        std::vector<int> queue{comp[0]};
        for (size_t q = 0; q < queue.size(); ++q) {
            int i = queue[q];
            for (int j : comp) {
                if (a.at(i, j) == 0 || i == j) continue;
                Rat want = d[i] * Rat(a.at(i, j), a.at(j, i));
                if (d[j].num == 0) { d[j] = want; queue.push_back(j); }
                else if (d[j] != want)
                    throw std::invalid_argument("Cartan matrix is not symmetrizable");
            }
        }
    }
    i64 lcm_den = 1;
    for (auto& r : d) lcm_den = std::lcm(lcm_den, r.den);
    std::vector<i64> out(n);
    for (int i = 0; i < n; ++i) out[i] = d[i].num * (lcm_den / d[i].den);
    i64 g = 0;
    for (i64 v : out) g = std::gcd(g, v);
    if (g > 1) for (auto& v : out) v /= g;
    return out;
}

std::vector<std::vector<int>> connected_components(const IntMat& a) {
    const int n = a.rows;
    std::vector<int> comp_of(n, -1);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (comp_of[s] >= 0) continue;
        std::vector<int> comp{s};
        comp_of[s] = int(comps.size());
        for (size_t q = 0; q < comp.size(); ++q)
            for (int j = 0; j < n; ++j)
                if (comp_of[j] < 0 && a.at(comp[q], j) != 0) {
                    comp_of[j] = int(comps.size());
                    comp.push_back(j);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// find a vertex bijection sending the model Cartan matrix onto the component
bool match_component(const IntMat& model, const IntMat& a, const std::vector<int>& comp,
                     std::vector<int>& order) {
    const int k = model.rows;
    if (int(comp.size()) != k) return false;
    std::vector<int> assign(k, -1);
    std::vector<bool> used(k, false);
    std::function<bool(int)> rec = [&](int v) {
        if (v == k) return true;
        for (int c = 0; c < k; ++c) {
            if (used[c]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                if (a.at(comp[assign[u]], comp[c]) != model.at(u, v)) ok = false;
                if (ok && a.at(comp[c], comp[assign[u]]) != model.at(v, u)) ok = false;
            }
            if (!ok) continue;
            assign[v] = c;
            used[c] = true;
            if (rec(v + 1)) return true;
            used[c] = false;
        }
        return false;
    };
    if (!rec(0)) return false;
    order.resize(k);
    for (int v = 0; v < k; ++v) order[v] = comp[assign[v]];
    return true;
}

TypeComponent recognize(const IntMat& a, const std::vector<int>& comp, std::vector<int>& order) {
    const int k = int(comp.size());
    std::vector<TypeComponent> candidates;
    candidates.push_back({SimpleType::A, k});
    if (k >= 2) { candidates.push_back({SimpleType::B, k}); candidates.push_back({SimpleType::C, k}); }
    if (k >= 4) candidates.push_back({SimpleType::D, k});
    if (k >= 6 && k <= 8) candidates.push_back({SimpleType::E, k});
    if (k == 4) candidates.push_back({SimpleType::F, 4});
    if (k == 2) candidates.push_back({SimpleType::G, 2});
    // prefer a candidate matching in the given vertex order (B2 and C2 are the
    // same matrix up to relabeling; keep the labeling the caller wrote down)
    bool have_fallback = false;
    TypeComponent fallback{};
    std::vector<int> fallback_order;
    for (auto& cand : candidates) {
        IntMat model = cartan_of_type(cand.type, cand.rank).entries;
        if (!match_component(model, a, comp, order)) continue;
        if (order == comp) return cand;
        if (!have_fallback) { have_fallback = true; fallback = cand; fallback_order = order; }
    }
    if (have_fallback) { order = fallback_order; return fallback; }
    throw std::invalid_argument("Cartan matrix component is not of recognized finite type");
}

} // namespace

void CartanMatrix::validate() const {
    const IntMat& a = entries;
    if (a.rows != a.cols) throw std::invalid_argument("Cartan matrix must be square");
    const int n = a.rows;
    for (int i = 0; i < n; ++i) {
        if (a.at(i, i) != 2)
            throw std::invalid_argument("Cartan matrix diagonal entry a_" + std::to_string(i + 1) +
                                        std::to_string(i + 1) + " must be 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a.at(i, j) > 0)
                throw std::invalid_argument("off-diagonal Cartan entries must be <= 0");
            if ((a.at(i, j) == 0) != (a.at(j, i) == 0))
                throw std::invalid_argument("Cartan zero pattern must be symmetric");
        }
    }
    auto comps = connected_components(a);
    std::vector<i64> d = symmetrizer(a, comps);
    // positive definiteness of the symmetrization via leading principal minors
    for (int k = 1; k <= n; ++k) {
        IntMat s(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) s.at(i, j) = d[i] * a.at(i, j);
        if (determinant(s) <= 0)
            throw std::invalid_argument("Cartan matrix is not finite type: leading principal minor " +
                                        std::to_string(k) + " of the symmetrization is not positive");
    }
}

DynkinDiagram diagram_from_cartan(const CartanMatrix& c) {
    c.validate();
    DynkinDiagram d;
    d.cartan = c;
    const IntMat& a = c.entries;
    for (int i = 0; i < a.rows; ++i)
        for (int j = i + 1; j < a.cols; ++j)
            if (a.at(i, j) != 0)
                d.edges.push_back({i, j, int(a.at(i, j) * a.at(j, i))});
    d.components = connected_components(a);
    for (auto& comp : d.components) {
        std::vector<int> order;
        d.type.push_back(recognize(a, comp, order));
        d.bourbaki_order.push_back(order);
    }
    return d;
}

DynkinDiagram diagram_of_type(const std::string& type_string) {
    return diagram_from_cartan(cartan_of_type(parse_type_string(type_string)));
}

std::string DynkinDiagram::type_name() const {
    if (type.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < type.size(); ++i) {
        if (i) s += "x";
        s += type[i].name();
    }
    return s;
}

} // namespace reprings
