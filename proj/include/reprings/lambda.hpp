#pragma once

#include <string>

#include "reprings/character.hpp"

namespace reprings {

// Adams operation psi^n: scales every weight by n.
FormalCharacter adams(const FormalCharacter& x, i64 n);

// Exterior power via Newton's identity k lambda^k = sum (-1)^{i-1} psi^i lambda^{k-i},
// computed over rationals with a final integrality check.
FormalCharacter exterior_power(const FormalCharacter& x, i64 k);

struct LambdaTableEntry {
    std::string op; // "lambda" or "psi"
    i64 k = 0;
    Weight input;
    IrreducibleDecomposition decomposition;
};

// lambda^k (k <= k_max) and psi^n (n <= n_max) decompositions for every
// irreducible with coordinates <= bound; deterministic order. `parallel`
// evaluates entries concurrently with bitwise-identical results.
std::vector<LambdaTableEntry> lambda_table(const RootDatum& datum, i64 bound, i64 k_max,
                                           i64 n_max, bool parallel = true);

} // namespace reprings
