#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reprings/folding.hpp"
#include "reprings/liealg.hpp"
#include "reprings/rootdatum.hpp"

using namespace reprings;

TEST_CASE("cartan matrices and type round trip") {
    const char* names[] = {"A1", "A2", "A5", "B2", "B4", "C3", "D4", "D5",
                           "E6", "E7", "E8", "F4", "G2", "A2xA1", "A1xA1xB3"};
    for (auto* s : names) {
        DynkinDiagram d = diagram_of_type(s);
        CHECK(d.type_name() == s);
        // recognizer must return the identity ordering on our own models
        for (size_t c = 0; c < d.components.size(); ++c)
            CHECK(d.bourbaki_order[c] == d.components[c]);
    }
}

TEST_CASE("cartan validation rejects junk") {
    IntMat m(2, 2);
    m.at(0, 0) = 2; m.at(1, 1) = 2; m.at(0, 1) = -1; m.at(1, 0) = 0;
    CHECK_THROWS_AS(CartanMatrix{m}.validate(), std::invalid_argument);
    m.at(1, 0) = -4; // affine A1, det 0
    CHECK_THROWS_AS(CartanMatrix{m}.validate(), std::invalid_argument);
    m.at(0, 1) = 1;
    CHECK_THROWS_AS(CartanMatrix{m}.validate(), std::invalid_argument);
}

TEST_CASE("positive root counts") {
    struct { const char* type; i64 count; } cases[] = {
        {"A1", 1}, {"A2", 3}, {"A3", 6}, {"A4", 10},
        {"B2", 4}, {"B3", 9}, {"B4", 16},
        {"C3", 9}, {"C4", 16},
        {"D4", 12}, {"D5", 20},
        {"G2", 6}, {"F4", 24}, {"E6", 36},
        {"A2xA1", 4},
    };
    for (auto& c : cases) {
        RootDatum d = build_root_datum(c.type);
        CHECK_MESSAGE(i64(d.positive_roots.size()) == c.count, c.type);
        // highest root pairs nonnegatively with all simple coroots
        for (auto& beta : d.positive_roots)
            CHECK(d.height(beta) >= 1);
    }
}

TEST_CASE("classical positive root count formulas match enumeration") {
    for (int n = 1; n <= 5; ++n)
        CHECK(classical_positive_root_count(SimpleType::A, n) ==
              i64(build_root_datum("A" + std::to_string(n)).positive_roots.size()));
    for (int n = 2; n <= 4; ++n) {
        CHECK(classical_positive_root_count(SimpleType::B, n) ==
              i64(build_root_datum("B" + std::to_string(n)).positive_roots.size()));
        CHECK(classical_positive_root_count(SimpleType::C, n) ==
              i64(build_root_datum("C" + std::to_string(n)).positive_roots.size()));
    }
    for (int n = 4; n <= 5; ++n)
        CHECK(classical_positive_root_count(SimpleType::D, n) ==
              i64(build_root_datum("D" + std::to_string(n)).positive_roots.size()));
}

TEST_CASE("fundamental group P/Q") {
    CHECK(build_root_datum("A1").fundamental_group_order() == 2);
    CHECK(build_root_datum("A2").fundamental_group_order() == 3);
    CHECK(build_root_datum("A4").fundamental_group_order() == 5);
    CHECK(build_root_datum("B3").fundamental_group_order() == 2);
    CHECK(build_root_datum("C4").fundamental_group_order() == 2);
    CHECK(build_root_datum("D4").fundamental_group_order() == 4);
    CHECK(build_root_datum("D5").fundamental_group_order() == 4);
    CHECK(build_root_datum("E6").fundamental_group_order() == 3);
    CHECK(build_root_datum("E7").fundamental_group_order() == 2);
    CHECK(build_root_datum("E8").fundamental_group_order() == 1);
    CHECK(build_root_datum("F4").fundamental_group_order() == 1);
    CHECK(build_root_datum("G2").fundamental_group_order() == 1);

    RootDatum a1 = build_root_datum("A1");
    CHECK(a1.weight_class({1}) != a1.weight_class({0}));
    CHECK(a1.weight_class({2}) == a1.weight_class({0}));
    RootDatum a2 = build_root_datum("A2");
    CHECK(a2.weight_class({1, 1}) == a2.weight_class({0, 0})); // rho in Q for A2
    CHECK(a2.weight_class({1, 0}) != a2.weight_class({0, 1}));
}

TEST_CASE("weyl group orders via orbit of rho") {
    CHECK(build_root_datum("A1").weyl_order() == 2);
    CHECK(build_root_datum("A2").weyl_order() == 6);
    CHECK(build_root_datum("A3").weyl_order() == 24);
    CHECK(build_root_datum("B2").weyl_order() == 8);
    CHECK(build_root_datum("B3").weyl_order() == 48);
    CHECK(build_root_datum("D4").weyl_order() == 192);
    CHECK(build_root_datum("G2").weyl_order() == 12);
    CHECK(build_root_datum("A2xA1").weyl_order() == 12);
}

TEST_CASE("dominant representative and orbits") {
    RootDatum d = build_root_datum("A2");
    Weight w{-1, 3};
    Weight dom = d.dominant_representative(w);
    CHECK(d.is_dominant(dom));
    CHECK(d.weyl_orbit(w) == d.weyl_orbit(dom));
    CHECK(d.weyl_orbit({1, 0}).size() == 3);
    CHECK(d.weyl_orbit({1, 1}).size() == 6);
    CHECK(d.weyl_orbit({0, 0}).size() == 1);
}

TEST_CASE("root coords and pairings") {
    RootDatum d = build_root_datum("A2");
    // alpha_1 = 2 w_1 - w_2
    CHECK(d.root_to_weight({1, 0}) == Weight{2, -1});
    auto rc = d.root_coords_of({2, -1});
    REQUIRE(rc.has_value());
    CHECK(*rc == RootCoords{1, 0});
    CHECK(!d.root_coords_of({1, 0}).has_value()); // w_1 not in Q for A2
    // highest root of A2 is alpha_1 + alpha_2 = rho
    CHECK(d.root_to_weight({1, 1}) == Weight{1, 1});
    CHECK(d.pairing_with_coroot({1, 1}, {1, 1}) == 2);
    CHECK(d.height({1, 1}) == 2);

    RootDatum g2 = build_root_datum("G2");
    // G2 symmetrizer: alpha_1 short
    CHECK(g2.symmetrizer == std::vector<i64>{1, 3});
    // highest root 3 alpha_1 + 2 alpha_2
    RootCoords hi{3, 2};
    CHECK(std::find(g2.positive_roots.begin(), g2.positive_roots.end(), hi) !=
          g2.positive_roots.end());
}

TEST_CASE("diagram automorphisms") {
    CHECK(all_diagram_automorphisms(cartan_of_type(SimpleType::A, 1)).size() == 1);
    CHECK(all_diagram_automorphisms(cartan_of_type(SimpleType::A, 3)).size() == 2);
    CHECK(all_diagram_automorphisms(cartan_of_type(SimpleType::B, 3)).size() == 1);
    CHECK(all_diagram_automorphisms(cartan_of_type(SimpleType::D, 4)).size() == 6);
    CHECK(all_diagram_automorphisms(cartan_of_type(SimpleType::D, 5)).size() == 2);
    CHECK(all_diagram_automorphisms(cartan_of_type(SimpleType::E, 6)).size() == 2);

    auto flip = make_automorphism(cartan_of_type(SimpleType::A, 2), {1, 0});
    CHECK(flip.order() == 2);
    CHECK(!flip.is_identity());
    CHECK_THROWS_AS(make_automorphism(cartan_of_type(SimpleType::B, 2), {1, 0}),
                    std::invalid_argument);
}

TEST_CASE("folding: types and orbit maps") {
    {
        RootDatum a2 = build_root_datum("A2");
        auto fd = fold_diagram(a2, make_automorphism(a2.diagram.cartan, {1, 0}));
        CHECK(fd.fixed_type_name == "B1");
        CHECK(fd.dual_type_name == "C1");
        CHECK(fd.folded.rank() == 1);
        CHECK(fd.fold_weight({2, 2}) == Weight{2});
        CHECK(fd.unfold_weight({3}) == Weight{3, 3});
        CHECK_THROWS_AS(fd.fold_weight({1, 2}), std::invalid_argument);
    }
    {
        RootDatum a3 = build_root_datum("A3");
        auto fd = fold_diagram(a3, make_automorphism(a3.diagram.cartan, {2, 1, 0}));
        CHECK(fd.fixed_type_name == "C2");
        CHECK(fd.dual_type_name == "B2");
        CHECK(fd.folded.diagram.type_name() == "B2");
        // orbit {0,2} is folded node 1, fixed node {1} is folded node 2
        CHECK(fd.fold_weight({1, 2, 1}) == Weight{1, 2});
    }
    {
        RootDatum a4 = build_root_datum("A4");
        auto fd = fold_diagram(a4, make_automorphism(a4.diagram.cartan, {3, 2, 1, 0}));
        CHECK(fd.fixed_type_name == "B2");
        CHECK(fd.dual_type_name == "C2");
        CHECK(fd.folded.diagram.type_name() == "C2");
        CHECK(fd.fold_weight({1, 0, 0, 1}) == Weight{1, 0});
        CHECK(fd.fold_weight({0, 1, 1, 0}) == Weight{0, 1});
    }
    {
        RootDatum d4 = build_root_datum("D4");
        // swap the two fork tips 3,4 (0-indexed 2,3)
        auto fd = fold_diagram(d4, make_automorphism(d4.diagram.cartan, {0, 1, 3, 2}));
        CHECK(fd.fixed_type_name == "B3");
        CHECK(fd.dual_type_name == "C3");
        // triality: rotate 1 -> 3 -> 4 -> 1
        auto ft = fold_diagram(d4, make_automorphism(d4.diagram.cartan, {2, 1, 3, 0}));
        CHECK(ft.fixed_type_name == "G2");
        CHECK(ft.dual_type_name == "G2");
        // short node of the orbit algebra G2 is the fixed central vertex
        CHECK(ft.orbits[ft.orbit_of_folded_node[0]] == std::vector<int>{1});
        CHECK(ft.fold_weight({2, 5, 2, 2}) == Weight{5, 2});
    }
    {
        RootDatum d5 = build_root_datum("D5");
        auto fd = fold_diagram(d5, make_automorphism(d5.diagram.cartan, {0, 1, 2, 4, 3}));
        CHECK(fd.fixed_type_name == "B4");
        CHECK(fd.dual_type_name == "C4");
    }
    {
        RootDatum e6 = build_root_datum("E6");
        auto fd = fold_diagram(e6, make_automorphism(e6.diagram.cartan, {5, 1, 4, 3, 2, 0}));
        CHECK(fd.fixed_type_name == "F4");
        CHECK(fd.dual_type_name == "F4");
    }
    {
        RootDatum a5 = build_root_datum("A5");
        auto fd = fold_diagram(a5, make_automorphism(a5.diagram.cartan, {4, 3, 2, 1, 0}));
        CHECK(fd.fixed_type_name == "C3");
        CHECK(fd.dual_type_name == "B3");
    }
    RootDatum a2 = build_root_datum("A2");
    CHECK_THROWS_AS(fold_diagram(a2, identity_automorphism(2)), std::invalid_argument);
}

TEST_CASE("fixed subalgebra dimension matches the fixed type of the fold") {
    auto dim_of = [](const std::string& name) -> i64 {
        // dim of the simple algebra named by the fold (B1/C1 are A1)
        if (name == "B1" || name == "C1") return 3;
        auto comps = parse_type_string(name);
        RootDatum d = build_root_datum(cartan_of_type(comps));
        return 2 * i64(d.positive_roots.size()) + d.rank();
    };
    struct { const char* type; std::vector<int> perm; } cases[] = {
        {"A2", {1, 0}},          {"A3", {2, 1, 0}},
        {"A4", {3, 2, 1, 0}},    {"A5", {4, 3, 2, 1, 0}},
        {"D4", {0, 1, 3, 2}},    {"D4", {2, 1, 3, 0}},
        {"D5", {0, 1, 2, 4, 3}}, {"E6", {5, 1, 4, 3, 2, 0}},
    };
    for (auto& c : cases) {
        RootDatum d = build_root_datum(c.type);
        auto sigma = make_automorphism(d.diagram.cartan, c.perm);
        auto fd = fold_diagram(d, sigma);
        CHECK_MESSAGE(fixed_subalgebra_dimension(d, sigma) == dim_of(fd.fixed_type_name),
                      c.type << " -> " << fd.fixed_type_name);
    }
    // identity automorphism fixes everything
    RootDatum a3 = build_root_datum("A3");
    CHECK(fixed_subalgebra_dimension(a3, identity_automorphism(3)) == 15);
    // non-simply-laced rejected
    RootDatum b2 = build_root_datum("B2");
    CHECK_THROWS_AS(fixed_subalgebra_dimension(b2, identity_automorphism(2)),
                    std::invalid_argument);
}

TEST_CASE("pinned automorphism signs") {
    RootDatum a2 = build_root_datum("A2");
    auto flip = make_automorphism(a2.diagram.cartan, {1, 0});
    CHECK(pinned_automorphism_sign(a2, flip, {1, 0}) == 1);
    CHECK(pinned_automorphism_sign(a2, flip, {1, 1}) == -1); // highest root flips sign

    RootDatum a3 = build_root_datum("A3");
    auto f3 = make_automorphism(a3.diagram.cartan, {2, 1, 0});
    CHECK(pinned_automorphism_sign(a3, f3, {1, 1, 1}) == 1);
    CHECK(pinned_automorphism_sign(a3, f3, {1, 1, 0}) == -1);
}

TEST_CASE("minuscule lifts") {
    {
        RootDatum a1 = build_root_datum("A1");
        // nontrivial class -> w_1
        std::vector<i64> chi = a1.weight_class({1});
        CHECK(minuscule_lift(a1, chi, {}) == Weight{1});
        CHECK(minuscule_lift(a1, a1.weight_class({0}), {}) == Weight{0});
    }
    {
        RootDatum a3 = build_root_datum("A3");
        std::vector<i64> chi = a3.weight_class({0, 1, 0}); // class of w_2, order 2
        auto flip = make_automorphism(a3.diagram.cartan, {2, 1, 0});
        CHECK(minuscule_lift(a3, chi, {flip}) == Weight{0, 1, 0});
        // class of w_1 has order 4 and is not flip-stable
        CHECK_THROWS_AS(minuscule_lift(a3, a3.weight_class({1, 0, 0}), {flip}),
                        std::invalid_argument);
        CHECK(minuscule_lift(a3, a3.weight_class({1, 0, 0}), {}) == Weight{1, 0, 0});
    }
    {
        RootDatum d4 = build_root_datum("D4");
        // all three nontrivial classes have minuscule lifts w_1, w_3, w_4
        std::set<Weight> lifts;
        for (int i : {0, 2, 3})
            lifts.insert(minuscule_lift(d4, d4.weight_class(d4.fundamental_weight(i)), {}));
        CHECK(lifts == std::set<Weight>{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    }
    {
        // E8: only the trivial class
        RootDatum e8 = build_root_datum("E8");
        CHECK(minuscule_lift(e8, e8.weight_class(e8.zero_weight()), {}) == e8.zero_weight());
    }
}

TEST_CASE("minuscule lift pairs to {0,1} with every positive coroot") {
    for (auto* s : {"A4", "B3", "C3", "D5", "E6"}) {
        RootDatum d = build_root_datum(s);
        // enumerate all classes via fundamental weights (they generate P/Q)
        std::set<std::vector<i64>> classes{d.weight_class(d.zero_weight())};
        for (int i = 0; i < d.rank(); ++i) classes.insert(d.weight_class(d.fundamental_weight(i)));
        for (auto& chi : classes) {
            Weight mu = minuscule_lift(d, chi, {});
            CHECK(d.weight_class(mu) == chi);
            CHECK(d.is_dominant(mu));
            for (auto& beta : d.positive_roots) {
                i64 p = d.pairing_with_coroot(mu, beta);
                CHECK(p >= 0);
                CHECK(p <= 1);
            }
        }
    }
}

TEST_CASE("orbit epsilon product") {
    {
        // A2 flip: order 2, vertex 0 adjacent to sigma(0)=1
        RootDatum a2 = build_root_datum("A2");
        auto sigma = make_automorphism(a2.diagram.cartan, {1, 0});
        TorsionTorusElement t = orbit_epsilon_product(a2, sigma, 0);
        // eps_1 eps_2 evaluates to (-1)^{<.,w-check_1 + w-check_2>}: nontrivial
        CHECK(!t.is_trivial());
        // value on alpha_1: <alpha_1, w-check_1 + w-check_2> = coefficient sum = 1+0...
        // alpha_1 = 2w_1 - w_2, value exponent = 2 - 1 = 1
        CHECK(t.value_exponent({1, 0}) % 2 != 0);
        CHECK(t.value_exponent({1, 1}) % 2 == 0); // alpha_1 + alpha_2
    }
    {
        // A4 flip: vertex 1 (0-indexed) adjacent to sigma(1)=2
        RootDatum a4 = build_root_datum("A4");
        auto sigma = make_automorphism(a4.diagram.cartan, {3, 2, 1, 0});
        TorsionTorusElement t = orbit_epsilon_product(a4, sigma, 1);
        CHECK(!t.is_trivial());
        // vertex 0 is not adjacent to sigma(0)=3
        CHECK_THROWS_AS(orbit_epsilon_product(a4, sigma, 0), std::invalid_argument);
    }
    {
        // odd order: rejected
        RootDatum d4 = build_root_datum("D4");
        auto tri = make_automorphism(d4.diagram.cartan, {2, 1, 3, 0});
        CHECK_THROWS_AS(orbit_epsilon_product(d4, tri, 0), std::invalid_argument);
    }
}
