#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "reprings/lambda.hpp"

using namespace reprings;

namespace {

// brute-force oracle: lambda^k as k-element multisets of weight-vector slots
FormalCharacter exterior_power_multiset(const FormalCharacter& x, i64 k) {
    std::vector<Weight> slots;
    for (auto& [w, m] : x.terms) {
        REQUIRE(m >= 0);
        for (i64 i = 0; i < m; ++i) slots.push_back(w);
    }
    FormalCharacter r;
    r.datum = x.datum;
    std::vector<size_t> idx;
    std::function<void(size_t)> rec = [&](size_t start) {
        if (i64(idx.size()) == k) {
            Weight sum(x.datum ? x.datum->rank() : 0, 0);
            for (size_t i : idx)
                for (size_t j = 0; j < sum.size(); ++j) sum[j] += slots[i][j];
            r.add_term(sum, 1);
            return;
        }
        for (size_t i = start; i < slots.size(); ++i) {
            idx.push_back(i);
            rec(i + 1);
            idx.pop_back();
        }
    };
    rec(0);
    return r;
}

FormalCharacter random_effective(const RootDatum& d, std::mt19937& rng, i64 max_dim) {
    FormalCharacter x;
    x.datum = &d;
    while (true) {
        Weight w(d.rank());
        for (auto& v : w) v = i64(rng() % 3);
        FormalCharacter c = irreducible_character(d, w);
        if (x.dimension() + c.dimension() > max_dim) break;
        x += c;
    }
    return x;
}

} // namespace

TEST_CASE("adams operations") {
    RootDatum a1 = build_root_datum("A1");
    FormalCharacter v1 = irreducible_character(a1, {1});
    FormalCharacter psi2 = adams(v1, 2);
    CHECK(psi2.terms == std::map<Weight, i64>{{{2}, 1}, {{-2}, 1}});
    CHECK(decompose(psi2) == IrreducibleDecomposition{{{2}, 1}, {{0}, -1}});
    CHECK(adams(v1, 1) == v1);
    CHECK(adams(unit_character(a1), 7) == unit_character(a1));
    CHECK_THROWS_AS(adams(v1, 0), std::invalid_argument);

    // psi^n psi^m = psi^{nm}; psi^n is a ring endomorphism
    std::mt19937 rng(99);
    RootDatum a2 = build_root_datum("A2");
    for (int trial = 0; trial < 4; ++trial) {
        FormalCharacter x = random_effective(a2, rng, 40);
        FormalCharacter y = random_effective(a2, rng, 40);
        CHECK(adams(adams(x, 2), 3) == adams(x, 6));
        CHECK(adams(adams(x, 3), 2) == adams(x, 6));
        CHECK(adams(x * y, 3) == adams(x, 3) * adams(y, 3));
        CHECK(adams(x + y, 4) == adams(x, 4) + adams(y, 4));
    }
}

TEST_CASE("exterior powers: anchors") {
    RootDatum a3 = build_root_datum("A3");
    FormalCharacter std4 = irreducible_character(a3, {1, 0, 0});
    CHECK(exterior_power(std4, 2) == irreducible_character(a3, {0, 1, 0}));
    CHECK(exterior_power(std4, 0) == unit_character(a3));
    CHECK(exterior_power(std4, 4) == unit_character(a3)); // SL(4) determinant
    CHECK(exterior_power(std4, 5).is_zero());

    RootDatum a1 = build_root_datum("A1");
    FormalCharacter v1 = irreducible_character(a1, {1});
    CHECK(exterior_power(v1, 2) == unit_character(a1));
    // sl2 adjoint: lambda^2(V_2) = V_2
    CHECK(exterior_power(irreducible_character(a1, {2}), 2) ==
          irreducible_character(a1, {2}));
}

TEST_CASE("exterior powers match the multiset oracle, dim <= 10") {
    std::mt19937 rng(2024);
    for (auto* s : {"A1", "A2", "B2"}) {
        RootDatum d = build_root_datum(s);
        for (int trial = 0; trial < 4; ++trial) {
            FormalCharacter x = random_effective(d, rng, 10);
            for (i64 k = 0; k <= x.dimension() + 1; ++k)
                CHECK(exterior_power(x, k) == exterior_power_multiset(x, k));
        }
    }
}

TEST_CASE("newton series regenerates adams from exterior powers") {
    // psi^n = lambda^1 psi^{n-1} - 2 lambda^2 psi^{n-2} + ... (Newton, rearranged):
    // n lambda^n = sum_{i=1}^{n} (-1)^{i-1} psi^i lambda^{n-i}  =>
    // psi^n = (-1)^{n-1} (n lambda^n - sum_{i=1}^{n-1} (-1)^{i-1} psi^i lambda^{n-i})
    std::mt19937 rng(7);
    RootDatum d = build_root_datum("A2");
    for (int trial = 0; trial < 3; ++trial) {
        FormalCharacter x = random_effective(d, rng, 15);
        std::vector<FormalCharacter> lam, psi;
        for (i64 k = 0; k <= 4; ++k) lam.push_back(exterior_power(x, k));
        psi.push_back(unit_character(d)); // unused slot 0
        for (i64 nn = 1; nn <= 4; ++nn) {
            FormalCharacter acc = lam[size_t(nn)].scaled(nn);
            for (i64 i = 1; i < nn; ++i) {
                FormalCharacter t = psi[size_t(i)] * lam[size_t(nn - i)];
                if (i % 2 == 1) acc -= t;
                else acc += t;
            }
            psi.push_back(nn % 2 == 1 ? acc : acc.scaled(-1));
            CHECK(psi.back() == adams(x, nn));
        }
    }
}

TEST_CASE("lambda table") {
    RootDatum a1 = build_root_datum("A1");
    auto table = lambda_table(a1, 2, 2, 2, false);
    bool found_adjoint = false, found_psi = false;
    for (auto& e : table) {
        if (e.op == "lambda" && e.k == 2 && e.input == Weight{2}) {
            CHECK(e.decomposition == IrreducibleDecomposition{{{2}, 1}});
            found_adjoint = true;
        }
        if (e.op == "psi" && e.k == 2 && e.input == Weight{1}) {
            CHECK(e.decomposition == IrreducibleDecomposition{{{2}, 1}, {{0}, -1}});
            found_psi = true;
        }
    }
    CHECK(found_adjoint);
    CHECK(found_psi);

    RootDatum a2 = build_root_datum("A2");
    auto t2 = lambda_table(a2, 1, 1, 2, false);
    bool found = false;
    for (auto& e : t2)
        if (e.op == "psi" && e.k == 2 && e.input == Weight{1, 0}) {
            CHECK(e.decomposition == IrreducibleDecomposition{{{2, 0}, 1}, {{0, 1}, -1}});
            found = true;
        }
    CHECK(found);

    // bound 0: table over the unit only
    auto t0 = lambda_table(a2, 0, 1, 1, false);
    for (auto& e : t0) CHECK(e.input == Weight{0, 0});

    // parallel evaluation is bitwise identical
    auto tp = lambda_table(a2, 1, 2, 2, true);
    auto ts = lambda_table(a2, 1, 2, 2, false);
    REQUIRE(tp.size() == ts.size());
    for (size_t i = 0; i < tp.size(); ++i) {
        CHECK(tp[i].op == ts[i].op);
        CHECK(tp[i].k == ts[i].k);
        CHECK(tp[i].input == ts[i].input);
        CHECK(tp[i].decomposition == ts[i].decomposition);
    }
}

TEST_CASE("lambda table budget") {
    RootDatum a2 = build_root_datum("A2");
    setenv("REPRINGS_BUDGET", "5", 1);
    CHECK_THROWS_WITH_AS(lambda_table(a2, 1, 1, 1, false),
                         doctest::Contains("enumeration budget exceeded"),
                         std::runtime_error);
    unsetenv("REPRINGS_BUDGET");
    // 4 inputs x (lambda^0, lambda^1, psi^1)
    CHECK(lambda_table(a2, 1, 1, 1, false).size() == 12);
}
