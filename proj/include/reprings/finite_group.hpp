#pragma once

#include <string>
#include <vector>

#include "reprings/ints.hpp"

namespace reprings {

// Finite group on elements 0..n-1 given by its multiplication table.
struct FiniteGroup {
    int n = 1;
    std::vector<int> table; // table[a*n+b] = a*b
    int id = 0;
    std::string name;

    int mul(int a, int b) const { return table[size_t(a) * n + b]; }
    int inverse(int a) const;
    int conjugate(int g, int a) const { return mul(mul(g, a), inverse(g)); } // g a g^-1
    i64 element_order(int a) const;
    bool is_abelian() const;

    // closure of a subset (always contains the identity); sorted
    std::vector<int> generated_subgroup(const std::vector<int>& gens) const;
    bool is_subgroup(const std::vector<int>& elems) const; // elems sorted
    bool is_normal(const std::vector<int>& elems) const;
    std::vector<int> normalizer(const std::vector<int>& elems) const;
    // some Sylow p-subgroup, as a sorted element list
    std::vector<int> sylow_subgroup(i64 p) const;

    std::vector<i64> prime_factors() const; // distinct primes of n
};

// throws std::invalid_argument if the table is not a group
FiniteGroup group_from_table(std::vector<int> table, std::string name = "");
FiniteGroup group_from_permutations(int points, const std::vector<std::vector<int>>& gens,
                                    std::string name = "");

FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n); // order 2n, n >= 2
FiniteGroup symmetric_group(int n); // n <= 4
FiniteGroup alternating_group_4();
FiniteGroup quaternion_group_8();
// Z/p x| Z/q, generator of Z/q acting by x -> x^k (k^q = 1 mod p)
FiniteGroup semidirect_cyclic(int p, int q, int k);

// bundled test/catalog groups of order <= 63
std::vector<FiniteGroup> group_catalog();

// true iff every Sylow subgroup is cyclic (equivalently: for each prime p,
// some element realizes the full p-part of |Gamma|)
bool sylow_cyclic_check(const FiniteGroup& g);

// normal cyclic Hall subgroup A with cyclic complement B of coprime order.
struct ZassenhausResult {
    bool ok = false;
    std::vector<int> a_subgroup, b_subgroup; // sorted element lists
    int a_generator = -1, b_generator = -1;
};
ZassenhausResult zassenhaus_decompose(const FiniteGroup& g);

} // namespace reprings
