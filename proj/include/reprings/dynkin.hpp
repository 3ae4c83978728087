#pragma once

#include <array>
#include <string>
#include <vector>

#include "reprings/matrix.hpp"

namespace reprings {

enum class SimpleType { A, B, C, D, E, F, G };

std::string simple_type_name(SimpleType t);

struct TypeComponent {
    SimpleType type;
    int rank;
    bool operator==(const TypeComponent&) const = default;
    std::string name() const { return simple_type_name(type) + std::to_string(rank); }
};

// Cartan matrix a_ij = <alpha_j, alpha-check_i>; Bourbaki vertex numbering.
struct CartanMatrix {
    IntMat entries;

    int rank() const { return entries.rows; }
    // throws std::invalid_argument naming the failing condition / principal minor
    void validate() const;
};

CartanMatrix cartan_of_type(SimpleType t, int rank);
CartanMatrix cartan_of_type(const std::vector<TypeComponent>& comps);

// "A2", "A3xA1", "D4" ...
std::vector<TypeComponent> parse_type_string(const std::string& s);

struct DynkinDiagram {
    CartanMatrix cartan;
    // (i, j, bond multiplicity a_ij * a_ji) for i < j with an edge
    std::vector<std::array<int, 3>> edges;
    std::vector<std::vector<int>> components;   // vertex sets of connected components
    std::vector<TypeComponent> type;            // recognized type per component
    // vertex order inside each component follows Bourbaki numbering of its type,
    // as indices into the ambient Cartan matrix
    std::vector<std::vector<int>> bourbaki_order;

    int rank() const { return cartan.rank(); }
    std::string type_name() const;
};

DynkinDiagram diagram_from_cartan(const CartanMatrix& c);
DynkinDiagram diagram_of_type(const std::string& type_string);

} // namespace reprings
