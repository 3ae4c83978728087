#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>

#include "reprings/cohomology.hpp"

using namespace reprings;

namespace {

GModule scalar_module(const FiniteGroup& g, i64 d, const std::function<i64(int)>& scalar) {
    std::vector<IntMat> action;
    for (int e = 0; e < g.n; ++e) {
        IntMat m(1, 1);
        m.at(0, 0) = scalar(e);
        action.push_back(m);
    }
    return make_module(g, {d}, std::move(action));
}

bool is_zero(const std::vector<i64>& v) {
    return std::all_of(v.begin(), v.end(), [](i64 x) { return x == 0; });
}

// image of e1, e2 in the quotient of the mod-2 permutation module by the diagonal
GModule s3_quotient_permutation_module(const FiniteGroup& s3) {
    int swap_elt = -1, cycle_elt = -1;
    for (int e = 0; e < s3.n; ++e) {
        if (s3.element_order(e) == 2 && swap_elt < 0) swap_elt = e;
        if (s3.element_order(e) == 3 && cycle_elt < 0) cycle_elt = e;
    }
    IntMat swap_mat(2, 2), cycle_mat(2, 2);
    swap_mat.at(0, 1) = swap_mat.at(1, 0) = 1;           // e1 <-> e2
    cycle_mat.at(1, 0) = 1;                              // e1 -> e2
    cycle_mat.at(0, 1) = cycle_mat.at(1, 1) = 1;         // e2 -> e3 = e1 + e2
    return module_from_generators(s3, {2, 2}, {{swap_elt, swap_mat}, {cycle_elt, cycle_mat}});
}

std::vector<int> whole_group(const FiniteGroup& g) {
    std::vector<int> all(size_t(g.n));
    std::iota(all.begin(), all.end(), 0);
    return all;
}

// distinct cyclic subgroups, one per element-generated subgroup
std::vector<std::vector<int>> cyclic_subgroups(const FiniteGroup& g) {
    std::set<std::vector<int>> seen;
    for (int e = 0; e < g.n; ++e) seen.insert(g.generated_subgroup({e}));
    return {seen.begin(), seen.end()};
}

void check_transfer_identity(const FiniteGroup& g, const GModule& z, int degree) {
    CAPTURE(g.name);
    CAPTURE(degree);
    CohomologyResult hg = cohomology_group(g, z, degree);
    for (auto& elems : cyclic_subgroups(g)) {
        Subgroup s = make_subgroup(g, z, elems);
        CohomologyResult hs = cohomology_group(s.group, s.module, degree);
        i64 index = g.n / s.group.n;
        for (auto& u : hg.all_classes()) {
            auto res = restrict_class(g, hg, u, s, hs);
            auto back = corestrict_class(g, z, hg, s, hs, res);
            std::vector<i64> expect(u.size());
            for (size_t i = 0; i < u.size(); ++i)
                expect[i] = mod_pos(u[i] * index, hg.invariant_factors[i]);
            CHECK(back == expect);
        }
    }
}

GModule primary_part(const GModule& z, i64 p) {
    GModule zp = z;
    for (auto& d : zp.factors) {
        i64 part = 1;
        while (d % p == 0) {
            d /= p;
            part *= p;
        }
        d = part;
    }
    return zp;
}

void check_sylow_injectivity(const FiniteGroup& g, const GModule& z, int degree) {
    CAPTURE(g.name);
    CAPTURE(degree);
    CohomologyResult hg = cohomology_group(g, z, degree);
    std::vector<std::pair<Subgroup, CohomologyResult>> locals;
    for (i64 p : g.prime_factors()) {
        Subgroup s = make_subgroup(g, primary_part(z, p), g.sylow_subgroup(p));
        CohomologyResult hs = cohomology_group(s.group, s.module, degree);
        locals.emplace_back(std::move(s), std::move(hs));
    }
    for (auto& u : hg.all_classes()) {
        if (is_zero(u)) continue;
        bool detected = false;
        for (auto& [s, hs] : locals)
            if (!is_zero(restrict_class(g, hg, u, s, hs))) {
                detected = true;
                break;
            }
        CHECK(detected);
    }
}

} // namespace

TEST_CASE("finite group catalog and sylow structure") {
    CHECK(sylow_cyclic_check(cyclic_group(1)));
    CHECK(sylow_cyclic_check(symmetric_group(3)));
    CHECK(sylow_cyclic_check(cyclic_group(63)));
    CHECK(sylow_cyclic_check(dihedral_group(15)));
    CHECK_FALSE(sylow_cyclic_check(quaternion_group_8()));
    CHECK_FALSE(sylow_cyclic_check(alternating_group_4()));
    CHECK_FALSE(sylow_cyclic_check(symmetric_group(4)));
    CHECK_FALSE(sylow_cyclic_check(dihedral_group(4)));

    FiniteGroup s3 = symmetric_group(3);
    CHECK(s3.n == 6);
    CHECK(s3.sylow_subgroup(3).size() == 3);
    CHECK(s3.sylow_subgroup(2).size() == 2);
    CHECK(cyclic_group(6).element_order(1) == 6);
}

TEST_CASE("zassenhaus decomposition anchors and catalog equivalence") {
    {
        auto r = zassenhaus_decompose(symmetric_group(3));
        REQUIRE(r.ok);
        CHECK(r.a_subgroup.size() == 3);
        CHECK(r.b_subgroup.size() == 2);
        CHECK(symmetric_group(3).is_normal(r.a_subgroup));
    }
    {
        auto r = zassenhaus_decompose(cyclic_group(12));
        REQUIRE(r.ok);
        CHECK(r.a_subgroup.size() == 4);
        CHECK(r.b_subgroup.size() == 3);
    }
    CHECK_FALSE(zassenhaus_decompose(alternating_group_4()).ok);
    CHECK_FALSE(zassenhaus_decompose(quaternion_group_8()).ok);
    {
        auto r = zassenhaus_decompose(cyclic_group(8));
        REQUIRE(r.ok);
        CHECK(r.a_subgroup.size() == 8);
        CHECK(r.b_subgroup.size() == 1);
    }

    for (const auto& g : group_catalog()) {
        CAPTURE(g.name);
        auto r = zassenhaus_decompose(g);
        CHECK(r.ok == sylow_cyclic_check(g));
        if (!r.ok) continue;
        i64 na = i64(r.a_subgroup.size()), nb = i64(r.b_subgroup.size());
        CHECK(na * nb == g.n);
        CHECK(std::gcd(na, nb) == 1);
        CHECK(g.element_order(r.a_generator) == na);
        CHECK(g.element_order(r.b_generator) == nb);
        CHECK(g.generated_subgroup({r.a_generator}) == r.a_subgroup);
        CHECK(g.generated_subgroup({r.b_generator}) == r.b_subgroup);
        CHECK(g.is_normal(r.a_subgroup));
        std::vector<int> meet;
        std::set_intersection(r.a_subgroup.begin(), r.a_subgroup.end(), r.b_subgroup.begin(),
                              r.b_subgroup.end(), std::back_inserter(meet));
        CHECK(meet == std::vector<int>{g.id});
    }
}

TEST_CASE("cohomology of cyclic groups with trivial coefficients") {
    for (auto [n, m] : std::vector<std::pair<int, i64>>{{2, 2}, {3, 3}, {4, 2}, {6, 4}, {4, 6}, {5, 3}}) {
        CAPTURE(n);
        CAPTURE(m);
        FiniteGroup g = cyclic_group(n);
        GModule z = trivial_module(g, {m});
        std::vector<i64> expect;
        if (std::gcd(i64(n), m) > 1) expect.push_back(std::gcd(i64(n), m));
        CHECK(cohomology_group(g, z, 1).invariant_factors == expect);
        CHECK(cohomology_group(g, z, 2).invariant_factors == expect);
    }
    // odd degree is again Z/gcd
    CHECK(cohomology_group(cyclic_group(2), trivial_module(cyclic_group(2), {2}), 3)
              .invariant_factors == std::vector<i64>{2});
    CHECK(cohomology_group(cyclic_group(4), trivial_module(cyclic_group(4), {2}), 3)
              .invariant_factors == std::vector<i64>{2});
    CHECK(cohomology_group(cyclic_group(3), trivial_module(cyclic_group(3), {3}), 3)
              .invariant_factors == std::vector<i64>{3});
}

TEST_CASE("cohomology with nontrivial action") {
    // order-2 group inverting Z/3: fixed points and norm both vanish
    FiniteGroup c2 = cyclic_group(2);
    GModule inv3 = scalar_module(c2, 3, [](int e) { return e == 0 ? 1 : -1; });
    CHECK(cohomology_group(c2, inv3, 1).invariant_factors.empty());
    CHECK(cohomology_group(c2, inv3, 2).invariant_factors.empty());

    // order-4 group acting on Z/5 by multiplication by 2
    FiniteGroup c4 = cyclic_group(4);
    std::vector<i64> pow2{1, 2, 4, 3};
    GModule m5 = scalar_module(c4, 5, [&](int e) { return pow2[size_t(e)]; });
    CHECK(cohomology_group(c4, m5, 1).invariant_factors.empty());
    CHECK(cohomology_group(c4, m5, 2).invariant_factors.empty());

    GModule bad = inv3;
    bad.action[1].at(0, 0) = 0; // not invertible, so no longer an action
    CHECK_THROWS_AS(cohomology_group(c2, bad, 1), std::invalid_argument);
}

TEST_CASE("permutation quotient module of the symmetric group on three letters") {
    FiniteGroup s3 = symmetric_group(3);
    GModule z = s3_quotient_permutation_module(s3);
    CHECK(cohomology_group(s3, z, 1).invariant_factors.empty());
    CHECK(cohomology_group(s3, z, 2).invariant_factors.empty());

    auto v = cyclic_sylow_vanishing_check(s3, z);
    CHECK(v.ok);
    CHECK(v.classes_checked == 1); // only the zero class
}

TEST_CASE("class coordinates round-trip and restriction basics") {
    FiniteGroup g = cyclic_group(6);
    GModule z = trivial_module(g, {6});
    CohomologyResult h1 = cohomology_group(g, z, 1);
    CHECK(h1.invariant_factors == std::vector<i64>{6});
    auto classes = h1.all_classes();
    CHECK(classes.size() == 6);
    for (auto& c : classes) CHECK(h1.reduce_cocycle(h1.cocycle_of(c)) == c);

    Subgroup triv = make_subgroup(g, z, {g.id});
    CohomologyResult htriv = cohomology_group(triv.group, triv.module, 1);
    Subgroup full = make_subgroup(g, z, whole_group(g));
    CohomologyResult hfull = cohomology_group(full.group, full.module, 1);
    for (auto& c : classes) {
        CHECK(is_zero(restrict_class(g, h1, c, triv, htriv)));
        CHECK(restrict_class(g, h1, c, full, hfull) == c);
    }

    CHECK_THROWS_AS(make_subgroup(g, z, {0, 1}), std::invalid_argument);
}

TEST_CASE("restriction of the order-8 extension class to the order-2 subgroup") {
    // the nontrivial class of H^2(Z/4, Z/2) is the mod-4 carry cocycle; its
    // pullback to the index-2 subgroup is the nonsplit extension Z/4 of Z/2,
    // so the restriction is the generator (not zero)
    FiniteGroup c4 = cyclic_group(4);
    GModule z = trivial_module(c4, {2});
    CohomologyResult h2 = cohomology_group(c4, z, 2);
    REQUIRE(h2.invariant_factors == std::vector<i64>{2});
    Subgroup s = make_subgroup(c4, z, {0, 2});
    CohomologyResult hs = cohomology_group(s.group, s.module, 2);
    REQUIRE(hs.invariant_factors == std::vector<i64>{2});
    CHECK(restrict_class(c4, h2, {1}, s, hs) == std::vector<i64>{1});
    // in degree 1 every homomorphism kills the squares, so restriction vanishes
    CohomologyResult g1 = cohomology_group(c4, z, 1);
    CohomologyResult s1 = cohomology_group(s.group, s.module, 1);
    CHECK(is_zero(restrict_class(c4, g1, {1}, s, s1)));
}

TEST_CASE("composing restriction with corestriction multiplies by the index") {
    FiniteGroup s3 = symmetric_group(3);
    GModule z6 = trivial_module(s3, {6});
    check_transfer_identity(s3, z6, 1);
    check_transfer_identity(s3, z6, 2);

    FiniteGroup c12 = cyclic_group(12);
    check_transfer_identity(c12, trivial_module(c12, {4}), 1);
    check_transfer_identity(c12, trivial_module(c12, {4}), 2);

    FiniteGroup d4 = dihedral_group(4);
    check_transfer_identity(d4, trivial_module(d4, {2}), 1);
    check_transfer_identity(d4, trivial_module(d4, {2}), 2);

    FiniteGroup c6 = cyclic_group(6);
    GModule z9 = scalar_module(c6, 9, [](int e) { return e % 2 ? -1 : 1; });
    check_transfer_identity(c6, z9, 1);
    check_transfer_identity(c6, z9, 2);

    FiniteGroup a4 = alternating_group_4();
    check_transfer_identity(a4, trivial_module(a4, {3}), 1);
    check_transfer_identity(a4, trivial_module(a4, {3}), 2);

    FiniteGroup s4 = symmetric_group(4);
    check_transfer_identity(s4, trivial_module(s4, {2}), 1);
}

TEST_CASE("restriction to sylow subgroups is jointly injective") {
    FiniteGroup s3 = symmetric_group(3);
    check_sylow_injectivity(s3, trivial_module(s3, {6}), 1);
    check_sylow_injectivity(s3, trivial_module(s3, {6}), 2);

    FiniteGroup c12 = cyclic_group(12);
    check_sylow_injectivity(c12, trivial_module(c12, {12}), 2);

    FiniteGroup c6 = cyclic_group(6);
    check_sylow_injectivity(c6, scalar_module(c6, 9, [](int e) { return e % 2 ? -1 : 1; }), 2);

    FiniteGroup d4 = dihedral_group(4);
    check_sylow_injectivity(d4, trivial_module(d4, {2}), 2);
}

TEST_CASE("vanishing detected on cyclic subgroups when the action image has cyclic sylows") {
    FiniteGroup s3 = symmetric_group(3);
    auto sign = [&](int e) { return s3.element_order(e) == 2 ? -1 : 1; };
    CHECK(cyclic_sylow_vanishing_check(s3, scalar_module(s3, 7, sign)).ok);
    CHECK(cyclic_sylow_vanishing_check(s3, trivial_module(s3, {6})).ok);

    FiniteGroup c2 = cyclic_group(2);
    CHECK(cyclic_sylow_vanishing_check(c2, trivial_module(c2, {4})).ok);

    FiniteGroup c6 = cyclic_group(6);
    CHECK(cyclic_sylow_vanishing_check(c6, scalar_module(c6, 9, [](int e) { return e % 2 ? -1 : 1; })).ok);

    FiniteGroup c4 = cyclic_group(4);
    std::vector<i64> pow2{1, 2, 4, 3};
    CHECK(cyclic_sylow_vanishing_check(c4, scalar_module(c4, 5, [&](int e) { return pow2[size_t(e)]; })).ok);

    FiniteGroup q8 = quaternion_group_8();
    CHECK(cyclic_sylow_vanishing_check(q8, trivial_module(q8, {5})).ok);

    FiniteGroup c15 = cyclic_group(15);
    auto v = cyclic_sylow_vanishing_check(c15, trivial_module(c15, {15}));
    CHECK(v.ok);
    CHECK(v.classes_checked == 15);

    FiniteGroup c4b = cyclic_group(4);
    CHECK(cyclic_sylow_vanishing_check(c4b, trivial_module(c4b, {4})).ok);

    FiniteGroup d5 = dihedral_group(5);
    CHECK(cyclic_sylow_vanishing_check(d5, trivial_module(d5, {10})).ok);

    CHECK(cyclic_sylow_vanishing_check(s3, s3_quotient_permutation_module(s3)).ok);

    // precondition: a faithful Klein four-group action is rejected
    FiniteGroup v4 = group_from_permutations(4, {{1, 0, 2, 3}, {0, 1, 3, 2}}, "V4");
    REQUIRE(v4.n == 4);
    std::vector<int> invs;
    for (int e = 0; e < 4; ++e)
        if (e != v4.id) invs.push_back(e);
    IntMat m1 = IntMat::identity(2), m2 = IntMat::identity(2), m3 = IntMat::identity(2);
    m1.at(0, 0) = -1;
    m2.at(1, 1) = -1;
    m3.at(0, 0) = m3.at(1, 1) = -1;
    std::vector<IntMat> act(4, IntMat::identity(2));
    act[size_t(invs[0])] = m1;
    act[size_t(invs[1])] = m2;
    act[size_t(invs[2])] = m3;
    GModule zv = make_module(v4, {3, 3}, act);
    CHECK_THROWS_AS(cyclic_sylow_vanishing_check(v4, zv), std::invalid_argument);
}

TEST_CASE("stable elements under the sylow normalizer") {
    FiniteGroup s3 = symmetric_group(3);
    auto sign = [&](int e) { return s3.element_order(e) == 2 ? -1 : 1; };
    auto r1 = stable_elements_check(s3, scalar_module(s3, 3, sign), 3, 2);
    CHECK(r1.ok);

    FiniteGroup c4 = cyclic_group(4); // its own Sylow subgroup
    auto r2 = stable_elements_check(c4, trivial_module(c4, {4}), 2, 2);
    CHECK(r2.ok);
    CHECK(r2.image_size == r2.stable_size);

    FiniteGroup c6 = cyclic_group(6);
    auto r3 = stable_elements_check(c6, trivial_module(c6, {3}), 3, 1);
    CHECK(r3.ok);
    CHECK(r3.image_size == 3);

    auto r4 = stable_elements_check(s3, trivial_module(s3, {2}), 2, 2);
    CHECK(r4.ok);

    CHECK_THROWS_AS(stable_elements_check(s3, trivial_module(s3, {6}), 2, 1), std::invalid_argument);
}

TEST_CASE("extension automorphisms match degree-one cohomology") {
    {
        FiniteGroup c2 = cyclic_group(2);
        GModule z = trivial_module(c2, {2});
        CohomologyResult h2 = cohomology_group(c2, z, 2);
        REQUIRE(h2.invariant_factors == std::vector<i64>{2});
        auto r = extension_automorphisms(c2, z, h2, {1}); // the order-4 extension
        CHECK(r.order == 2);
        CHECK(r.matches_h1);
    }
    {
        FiniteGroup c1 = cyclic_group(1);
        GModule z = trivial_module(c1, {4});
        CohomologyResult h2 = cohomology_group(c1, z, 2);
        CHECK(h2.invariant_factors.empty());
        auto r = extension_automorphisms(c1, z, h2, {});
        CHECK(r.order == 1);
        CHECK(r.matches_h1);
    }
    {
        FiniteGroup c3 = cyclic_group(3);
        GModule z = trivial_module(c3, {3});
        CohomologyResult h2 = cohomology_group(c3, z, 2);
        auto zero = std::vector<i64>(h2.invariant_factors.size(), 0);
        auto r = extension_automorphisms(c3, z, h2, zero);
        CHECK(r.order == 3);
        CHECK(r.matches_h1);
    }
    {
        FiniteGroup c4 = cyclic_group(4);
        GModule z = trivial_module(c4, {2});
        CohomologyResult h2 = cohomology_group(c4, z, 2);
        for (auto& c : h2.all_classes()) {
            auto r = extension_automorphisms(c4, z, h2, c);
            CHECK(r.matches_h1);
            CHECK(r.order == 2);
        }
    }
}

TEST_CASE("bar resolution size budget") {
    setenv("REPRINGS_BUDGET", "10", 1);
    FiniteGroup c4 = cyclic_group(4);
    GModule z = trivial_module(c4, {2});
    CHECK_THROWS_WITH_AS(cohomology_group(c4, z, 2),
                         "cohomology budget exceeded: bar matrices too large", std::runtime_error);
    unsetenv("REPRINGS_BUDGET");
    CHECK(cohomology_group(c4, z, 2).invariant_factors == std::vector<i64>{2});
}
