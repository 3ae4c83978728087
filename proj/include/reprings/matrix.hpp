#pragma once

#include <vector>

#include "reprings/ints.hpp"

namespace reprings {

// Dense integer matrix, row-major.
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<i64> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    i64& at(int i, int j) { return a[size_t(i) * cols + j]; }
    i64 at(int i, int j) const { return a[size_t(i) * cols + j]; }

    IntMat operator*(const IntMat& o) const;
    std::vector<i64> apply(const std::vector<i64>& x) const;
    IntMat transposed() const;
    bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// U * A * V = D with U, V unimodular and D diagonal with d_i | d_{i+1}, all d_i >= 0.
// When mod > 0 the identity holds modulo `mod` and all entries are kept reduced;
// the transforms are then only meaningful modulo `mod`.
struct SmithResult {
    IntMat D, U, V;
    int rank = 0; // number of nonzero diagonal entries (nonzero mod `mod` if modular)
};

SmithResult smith_normal_form(IntMat A, i64 mod = 0);

// determinant of a square matrix, exact
i64 determinant(const IntMat& A);

// adjugate matrix: A * adj(A) = det(A) * I
IntMat adjugate(const IntMat& A);

// Generators of { x : A x == 0 (mod m) }, as columns. Every solution mod m is a
// Z-combination of the generators (mod m).
std::vector<std::vector<i64>> kernel_mod(const IntMat& A, i64 m);

// Solve A x == b (mod m); returns false if inconsistent.
bool solve_mod(const IntMat& A, const std::vector<i64>& b, i64 m, std::vector<i64>& x);

// Kernel lattice basis of A over Z (columns x with A x = 0), exact.
std::vector<std::vector<i64>> kernel_integer(const IntMat& A);

// Invariant factors (> 1) of the finite abelian group (Z/m)^n / <columns of A>,
// returned as a divisibility chain d_1 | d_2 | ...
std::vector<i64> quotient_invariant_factors(const IntMat& A, i64 m);

} // namespace reprings
