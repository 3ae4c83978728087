#include "reprings/matmodel.hpp"

#include <algorithm>
#include <stdexcept>

namespace reprings {

namespace {

IntMat elementary(int n, int i, int j, i64 v) {
    IntMat m(n, n);
    m.at(i, j) = v;
    return m;
}

IntMat add(const IntMat& a, const IntMat& b) {
    IntMat c = a;
    for (size_t i = 0; i < c.a.size(); ++i) c.a[i] += b.a[i];
    return c;
}

// validates that e_i raises basis weights by the i-th simple root and that
// [e_i, f_i] is the diagonal of simple-coroot pairings
void validate_model(const MatrixGroupModel& m) {
    int r = m.datum.rank();
    for (int i = 0; i < r; ++i) {
        const IntMat& e = m.raising[size_t(i)];
        for (int k = 0; k < m.dim; ++k)
            for (int l = 0; l < m.dim; ++l) {
                if (e.at(k, l) == 0) continue;
                for (int t = 0; t < r; ++t)
                    if (m.basis_weights[size_t(k)][size_t(t)] -
                            m.basis_weights[size_t(l)][size_t(t)] !=
                        m.datum.cartan().at(t, i))
                        throw std::logic_error("raising operator does not shift by a simple root");
            }
        IntMat ef = e * m.lowering[size_t(i)];
        IntMat fe = m.lowering[size_t(i)] * e;
        for (int k = 0; k < m.dim; ++k)
            for (int l = 0; l < m.dim; ++l) {
                i64 expected = 0;
                if (k == l) expected = m.basis_weights[size_t(k)][size_t(i)];
                if (ef.at(k, l) - fe.at(k, l) != expected)
                    throw std::logic_error("Chevalley commutation relation fails in the model");
            }
    }
}

} // namespace

IntMat MatrixGroupModel::reflection_lift(int i) const {
    IntMat id = IntMat::identity(dim);
    IntMat a = add(id, raising[size_t(i)]);
    IntMat neg = lowering[size_t(i)];
    for (auto& v : neg.a) v = -v;
    IntMat b = add(id, neg);
    return a * b * a;
}

IntMat MatrixGroupModel::lift_word(const std::vector<int>& word) const {
    IntMat out = IntMat::identity(dim);
    for (int i : word) out = out * reflection_lift(i);
    return out;
}

bool MatrixGroupModel::in_group(const IntMat& g) const {
    if (determinant(g) != 1) return false;
    if (symplectic_form)
        return g.transposed() * *symplectic_form * g == *symplectic_form;
    return true;
}

MatrixGroupModel standard_matrix_model(const std::string& type) {
    MatrixGroupModel m;
    m.name = type;
    m.datum = build_root_datum(type);
    int r = m.datum.rank();
    if (type.size() == 2 && type[0] == 'A' && r >= 1 && r <= 4) {
        m.dim = r + 1;
        for (int i = 0; i < r; ++i) {
            m.raising.push_back(elementary(m.dim, i, i + 1, 1));
            m.lowering.push_back(elementary(m.dim, i + 1, i, 1));
        }
        for (int j = 0; j <= r; ++j) {
            Weight w(size_t(r), 0);
            if (j < r) w[size_t(j)] += 1;
            if (j >= 1) w[size_t(j - 1)] -= 1;
            m.basis_weights.push_back(std::move(w));
        }
    } else if (type == "C2") {
        m.dim = 4;
        // basis vectors carry the weights eps1, eps2, -eps2, -eps1
        m.raising.push_back(add(elementary(4, 0, 1, 1), elementary(4, 2, 3, -1)));
        m.raising.push_back(elementary(4, 1, 2, 1));
        for (const IntMat& e : m.raising) m.lowering.push_back(e.transposed());
        m.basis_weights = {{1, 0}, {-1, 1}, {1, -1}, {-1, 0}};
        IntMat j(4, 4);
        j.at(0, 3) = 1;
        j.at(1, 2) = 1;
        j.at(2, 1) = -1;
        j.at(3, 0) = -1;
        m.symplectic_form = j;
    } else {
        throw std::invalid_argument("unsupported matrix model type: " + type);
    }
    validate_model(m);
    return m;
}

std::vector<int> longest_element_word(const RootDatum& datum, bool prefer_low) {
    Weight lambda = datum.rho();
    std::vector<int> word;
    size_t target = datum.positive_roots.size();
    while (word.size() <= target) {
        int pick = -1;
        for (int i = 0; i < datum.rank(); ++i) {
            if (lambda[size_t(i)] <= 0) continue;
            pick = i;
            if (prefer_low) break;
        }
        if (pick < 0) break;
        lambda = datum.reflect(lambda, pick);
        word.push_back(pick);
    }
    if (word.size() != target)
        throw std::logic_error("longest-element word has wrong length");
    return word;
}

W0SquareCheck w0_square_check(const MatrixGroupModel& model) {
    W0SquareCheck out;
    out.word_low = longest_element_word(model.datum, true);
    out.word_high = longest_element_word(model.datum, false);
    IntMat a = model.lift_word(out.word_low);
    IntMat b = model.lift_word(out.word_high);
    out.words_agree = a == b;

    for (const Weight& mu : model.basis_weights) {
        i64 s = 0;
        for (const RootCoords& beta : model.datum.positive_roots)
            s += model.datum.pairing_with_coroot(mu, beta);
        out.exponents.push_back(s);
    }
    IntMat expected(model.dim, model.dim);
    for (int k = 0; k < model.dim; ++k)
        expected.at(k, k) = out.exponents[size_t(k)] % 2 == 0 ? 1 : -1;
    out.square_matches = a * a == expected;
    out.ok = out.words_agree && out.square_matches && model.in_group(a);
    return out;
}

} // namespace reprings
