#pragma once

#include <optional>
#include <string>

#include "reprings/rootdatum.hpp"

namespace reprings {

// Explicit integer-matrix model of the standard representation of a simply
// connected group of type A_n (n <= 4) or C_2, carrying Chevalley lifts
// s~_i = exp(e_i) exp(-f_i) exp(e_i) of the simple reflections.
struct MatrixGroupModel {
    RootDatum datum;
    std::string name;
    int dim = 0;
    std::vector<IntMat> raising;    // e_i in the standard representation
    std::vector<IntMat> lowering;   // f_i (transposes of the e_i)
    std::vector<Weight> basis_weights;
    std::optional<IntMat> symplectic_form; // preserved form, C types only

    IntMat reflection_lift(int i) const;
    IntMat lift_word(const std::vector<int>& word) const;
    bool in_group(const IntMat& g) const; // det 1 and form preservation
};

MatrixGroupModel standard_matrix_model(const std::string& type);

// reduced word for the longest Weyl element, obtained by repeatedly reflecting
// rho at its lowest (or highest) positive coordinate; length = #positive roots
std::vector<int> longest_element_word(const RootDatum& datum, bool prefer_low);

struct W0SquareCheck {
    bool ok = false;
    bool words_agree = false;   // the two reduced-word lifts coincide
    bool square_matches = false; // lift squared equals the order-2 torus element
    std::vector<int> word_low, word_high;
    std::vector<i64> exponents; // <mu_k, 2 rho-check> per basis vector
};
// verifies that the lifted longest element squares to the image of -1 under
// the sum-of-positive-coroots cocharacter, independently of the reduced word
W0SquareCheck w0_square_check(const MatrixGroupModel& model);

} // namespace reprings
