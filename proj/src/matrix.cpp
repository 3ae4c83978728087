#include "reprings/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace reprings {

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix dimension mismatch");
    IntMat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            i64 v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols; ++j)
                r.at(i, j) += checked_mul(v, o.at(k, j));
        }
    return r;
}

std::vector<i64> IntMat::apply(const std::vector<i64>& x) const {
    if (int(x.size()) != cols) throw std::invalid_argument("vector dimension mismatch");
    std::vector<i64> r(rows, 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            r[i] += checked_mul(at(i, j), x[j]);
    return r;
}

IntMat IntMat::transposed() const {
    IntMat r(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

namespace {

// symmetric residue in (-m/2, m/2]
i64 symm_mod(i64 a, i64 m) {
    i64 r = mod_pos(a, m);
    if (2 * r > m) r -= m;
    return r;
}

void reduce_all(IntMat& M, i64 mod) {
    if (mod <= 0) return;
    for (auto& v : M.a) v = symm_mod(v, mod);
}

void swap_rows(IntMat& M, int i, int j) {
    for (int c = 0; c < M.cols; ++c) std::swap(M.at(i, c), M.at(j, c));
}
void swap_cols(IntMat& M, int i, int j) {
    for (int r = 0; r < M.rows; ++r) std::swap(M.at(r, i), M.at(r, j));
}
// row_i += q * row_j
void add_row(IntMat& M, int i, int j, i64 q, i64 mod) {
    for (int c = 0; c < M.cols; ++c) {
        M.at(i, c) += checked_mul(q, M.at(j, c));
        if (mod > 0) M.at(i, c) = symm_mod(M.at(i, c), mod);
    }
}
void add_col(IntMat& M, int i, int j, i64 q, i64 mod) {
    for (int r = 0; r < M.rows; ++r) {
        M.at(r, i) += checked_mul(q, M.at(r, j));
        if (mod > 0) M.at(r, i) = symm_mod(M.at(r, i), mod);
    }
}
void negate_row(IntMat& M, int i) {
    for (int c = 0; c < M.cols; ++c) M.at(i, c) = -M.at(i, c);
}

} // namespace

SmithResult smith_normal_form(IntMat A, i64 mod) {
    SmithResult res;
    const int n = A.rows, m = A.cols;
    IntMat U = IntMat::identity(n), V = IntMat::identity(m);
    reduce_all(A, mod);

    int t = 0;
    const int lim = std::min(n, m);
    while (t < lim) {
        // smallest nonzero pivot in the trailing submatrix
        int pi = -1, pj = -1;
        i64 best = 0;
        for (int i = t; i < n; ++i)
            for (int j = t; j < m; ++j) {
                i64 v = std::abs(A.at(i, j));
                if (v != 0 && (pi < 0 || v < best)) { best = v; pi = i; pj = j; }
            }
        if (pi < 0) break;
        if (pi != t) { swap_rows(A, t, pi); swap_rows(U, t, pi); }
        if (pj != t) { swap_cols(A, t, pj); swap_cols(V, t, pj); }

        bool clean = true;
        for (int i = t + 1; i < n; ++i) {
            if (A.at(i, t) == 0) continue;
            i64 q = A.at(i, t) / A.at(t, t);
            if (q != 0) { add_row(A, i, t, -q, mod); add_row(U, i, t, -q, mod); }
            if (A.at(i, t) != 0) clean = false;
        }
        for (int j = t + 1; j < m; ++j) {
            if (A.at(t, j) == 0) continue;
            i64 q = A.at(t, j) / A.at(t, t);
            if (q != 0) { add_col(A, j, t, -q, mod); add_col(V, j, t, -q, mod); }
            if (A.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;

        // enforce divisibility of the remaining block by the pivot
        i64 p = A.at(t, t);
        bool divides = true;
        for (int i = t + 1; i < n && divides; ++i)
            for (int j = t + 1; j < m && divides; ++j)
                if (A.at(i, j) % p != 0) {
                    add_row(A, t, i, 1, mod);
                    add_row(U, t, i, 1, mod);
                    divides = false;
                }
        if (!divides) continue;

        if (A.at(t, t) < 0) { negate_row(A, t); negate_row(U, t); }
        ++t;
    }

    res.D = std::move(A);
    res.U = std::move(U);
    res.V = std::move(V);
    res.rank = 0;
    for (int i = 0; i < lim; ++i) {
        i64 d = res.D.at(i, i);
        if (mod > 0) d = mod_pos(d, mod);
        if (d != 0) ++res.rank;
    }
    return res;
}

i64 determinant(const IntMat& A) {
    if (A.rows != A.cols) throw std::invalid_argument("determinant of non-square matrix");
    const int n = A.rows;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    std::vector<std::vector<i128>> M(n, std::vector<i128>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M[i][j] = A.at(i, j);
    i128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M[k][k] == 0) {
            int s = -1;
            for (int i = k + 1; i < n; ++i)
                if (M[i][k] != 0) { s = i; break; }
            if (s < 0) return 0;
            std::swap(M[k], M[s]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
        prev = M[k][k];
    }
    i128 d = M[n - 1][n - 1] * sign;
    if (d > i128(INT64_MAX) || d < i128(INT64_MIN))
        throw std::overflow_error("determinant overflow");
    return i64(d);
}

IntMat adjugate(const IntMat& A) {
    const int n = A.rows;
    IntMat adj(n, n);
    if (n == 0) return adj;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntMat minor(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(rr, cc++) = A.at(r, c);
                }
                ++rr;
            }
            i64 cof = determinant(minor);
            adj.at(i, j) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    return adj;
}

std::vector<std::vector<i64>> kernel_mod(const IntMat& A, i64 m) {
    if (m <= 0) throw std::invalid_argument("kernel_mod requires positive modulus");
    SmithResult s = smith_normal_form(A, m);
    const int diag = std::min(A.rows, A.cols);
    std::vector<std::vector<i64>> gens;
    for (int i = 0; i < A.cols; ++i) {
        i64 coeff;
        if (i < diag) {
            i64 g = std::gcd(mod_pos(s.D.at(i, i), m), m);
            if (g == 0) g = m;
            if (g == 1) continue; // only the trivial solution in this coordinate
            coeff = m / g;
        } else {
            coeff = 1; // free column
        }
        std::vector<i64> gen(A.cols);
        bool nonzero = false;
        for (int r = 0; r < A.cols; ++r) {
            gen[r] = mod_pos(checked_mul(coeff, s.V.at(r, i)), m);
            if (gen[r] != 0) nonzero = true;
        }
        if (nonzero) gens.push_back(std::move(gen));
    }
    return gens;
}

bool solve_mod(const IntMat& A, const std::vector<i64>& b, i64 m, std::vector<i64>& x) {
    SmithResult s = smith_normal_form(A, m);
    std::vector<i64> c = s.U.apply(b);
    for (auto& v : c) v = mod_pos(v, m);
    const int diag = std::min(A.rows, A.cols);
    std::vector<i64> y(A.cols, 0);
    for (int i = 0; i < A.rows; ++i) {
        i64 d = i < diag ? mod_pos(s.D.at(i, i), m) : 0;
        if (d == 0) {
            if (c[i] % m != 0) return false;
            continue;
        }
        i64 g = std::gcd(d, m);
        if (c[i] % g != 0) return false;
        i64 mm = m / g;
        i64 inv_x, inv_y;
        gcd_ext((d / g) % mm, mm, inv_x, inv_y);
        y[i] = mod_pos(checked_mul(mod_pos(inv_x, mm), (c[i] / g) % mm), mm);
    }
    x.assign(A.cols, 0);
    for (int r = 0; r < A.cols; ++r) {
        i64 v = 0;
        for (int j = 0; j < A.cols; ++j) v += checked_mul(s.V.at(r, j), y[j]);
        x[r] = mod_pos(v, m);
    }
    return true;
}

std::vector<std::vector<i64>> kernel_integer(const IntMat& A) {
    SmithResult s = smith_normal_form(A);
    std::vector<std::vector<i64>> gens;
    const int diag = std::min(A.rows, A.cols);
    for (int i = 0; i < A.cols; ++i) {
        bool zero_col = i >= diag || s.D.at(i, i) == 0;
        if (!zero_col) continue;
        std::vector<i64> gen(A.cols);
        for (int r = 0; r < A.cols; ++r) gen[r] = s.V.at(r, i);
        gens.push_back(std::move(gen));
    }
    return gens;
}

std::vector<i64> quotient_invariant_factors(const IntMat& A, i64 m) {
    SmithResult s = smith_normal_form(A, m);
    const int diag = std::min(A.rows, A.cols);
    // each ambient coordinate contributes (Z/m) / (d_i) = Z/gcd(d_i, m)
    std::vector<i64> factors;
    for (int i = 0; i < A.rows; ++i) {
        i64 d = i < diag ? mod_pos(s.D.at(i, i), m) : 0;
        i64 g = d == 0 ? m : std::gcd(d, m);
        if (g > 1) factors.push_back(g);
    }
    // renormalize to a divisibility chain via prime-power merge
    std::map<i64, std::vector<int>> primes; // p -> exponents, descending later
    for (i64 f : factors) {
        for (i64 p = 2; p * p <= f; ++p) {
            if (f % p) continue;
            int e = 0;
            while (f % p == 0) { f /= p; ++e; }
            primes[p].push_back(e);
        }
        if (f > 1) primes[f].push_back(1);
    }
    size_t len = 0;
    for (auto& [p, es] : primes) {
        std::sort(es.begin(), es.end(), std::greater<int>());
        len = std::max(len, es.size());
    }
    std::vector<i64> chain(len, 1);
    for (auto& [p, es] : primes)
        for (size_t i = 0; i < es.size(); ++i) {
            i64 pe = 1;
            for (int k = 0; k < es[i]; ++k) pe *= p;
            chain[i] = checked_mul(chain[i], pe);
        }
    std::sort(chain.begin(), chain.end()); // ascending: d_1 | d_2 | ...
    return chain;
}

} // namespace reprings
