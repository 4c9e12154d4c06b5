#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "paract/fixtures.hpp"
#include "paract/partial_action.hpp"

using namespace paract;
using namespace testing_support;

TEST_CASE("validate_group accepts Z/2") {
    FiniteGroup g = validate_group({{0, 1}, {1, 0}});
    CHECK(g.order == 2);
    CHECK(g.inv(1) == 1);
}

TEST_CASE("validate_group rejects a repeated row entry") {
    try {
        validate_group({{0, 1}, {1, 1}});
        FAIL("expected NotLatinSquare");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_latin_square);
    }
}

TEST_CASE("validate_group on cyclic Z/4") {
    FiniteGroup g = cyclic_group(4);
    CHECK(g.order == 4);
    CHECK(g.inv(1) == 3);
    CHECK(g.op(3, 2) == 1);
}

TEST_CASE("validate_group names the right axiom") {
    // identity is element 0 by convention
    try {
        validate_group({{1, 0}, {0, 1}});
        FAIL("expected NoIdentityAtZero");
    } catch (const error& e) {
        CHECK(e.code() == errc::no_identity_at_zero);
    }
}

TEST_CASE("built-in groups pass their own validation") {
    CHECK(symmetric3().order == 6);
    CHECK(dihedral_group(4).order == 8);
    CHECK(klein_four().order == 4);
}

TEST_CASE("fixture F1 is a valid partial action") {
    PartialAction f1 = fixture_f1();
    ValidationReport r = validate_partial_action(f1);
    CHECK(r.valid());
    CHECK(f1.domain(1).empty()); // X_a is empty
}

TEST_CASE("a one-sided graph entry violates PA1") {
    // needs a group where the element and its inverse differ
    PartialAction pa = trivial_fixture(cyclic_group(4), 2);
    pa.graphs[1].push_back({0, 0}); // graphs[3] stays empty
    ValidationReport r = validate_partial_action(pa);
    CHECK(!r.valid());
    bool pa1_hit = false;
    for (const auto& v : r.function_axioms)
        pa1_hit = pa1_hit || v.clause == Clause::PA1;
    CHECK(pa1_hit);
    CHECK(!r.family_valid()); // both axiomatizations must reject it
}

TEST_CASE("fixture F3 is valid under both axiomatizations") {
    ValidationReport r = validate_partial_action(fixture_f3());
    CHECK(r.function_valid());
    CHECK(r.family_valid());
}

TEST_CASE("act on F3") {
    // F3 labels: point 0 is the group element 0, point 1 is element 2
    PartialAction f3 = fixture_f3();
    CHECK(f3.act(2, 0) == 1); // translation by 2 sends 0 to 2
    CHECK(!f3.act(1, 0));     // D_1 is empty
    for (int x = 0; x < f3.space_size; ++x)
        CHECK(f3.act(0, x) == x);
}

TEST_CASE("saturate on fixtures") {
    PartialAction f3 = fixture_f3();
    CHECK(saturate(f3, {0}) == std::vector<int>{0, 1});
    CHECK(saturate(f3, {}).empty());
    PartialAction f2 = fixture_f2();
    // point 0 of F2 is the configuration (1,0), which no shift moves
    CHECK(saturate(f2, {0}) == std::vector<int>{0});
}

TEST_CASE("is_invariant on F3") {
    PartialAction f3 = fixture_f3();
    CHECK(is_invariant(f3, {0, 1}));
    CHECK(!is_invariant(f3, {0}));
    CHECK(is_invariant(f3, f3.all_points()));
}

TEST_CASE("restrict_to_subgroup of F3") {
    PartialAction f3 = fixture_f3();
    PartialAction r = restrict_to_subgroup(f3, {0, 2});
    CHECK(r.group.order == 2);
    CHECK(r.graphs[0] == f3.graphs[0]);
    CHECK(r.graphs[1] == f3.graphs[2]);
    CHECK(validate_partial_action(r).valid());

    PartialAction t = restrict_to_subgroup(f3, {0});
    CHECK(t.group.order == 1);
    CHECK(t.graphs[0] == f3.graphs[0]);

    try {
        restrict_to_subgroup(f3, {0, 1});
        FAIL("expected NotASubgroup");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_a_subgroup);
    }
}

TEST_CASE("induce_from_global reproduces the fixtures") {
    // Bernoulli shift of Z/2 on the cylinder gives F2
    InducedAction b = bernoulli_fixture(cyclic_group(2));
    CHECK(b.pa.space_size == 2);
    CHECK(b.pa.graphs[1] == Graph{{1, 1}}); // only (1,1) survives the shift
    CHECK(validate_partial_action(b.pa).valid());

    // translation of Z/4 restricted to {0,2} gives F3
    InducedAction f3 = subgroup_restriction_fixture(cyclic_group(4), {0, 2});
    CHECK(f3.points == std::vector<int>{0, 2});
    CHECK(f3.pa.graphs[2] == Graph{{0, 1}, {1, 0}});
    CHECK(f3.pa.graphs[1].empty());

    // the whole space induces the global action itself
    GlobalAction u = regular_action(cyclic_group(3));
    InducedAction whole = induce_from_global(u, {0, 1, 2});
    CHECK(whole.pa.graphs == as_partial_action(u).graphs);

    try {
        induce_from_global(u, {});
        FAIL("expected EmptySubset");
    } catch (const error& e) {
        CHECK(e.code() == errc::empty_subset);
    }
}

TEST_CASE("hat_action formula and structure") {
    PartialAction f1 = fixture_f1();
    PartialAction hat1 = hat_action(f1);
    CHECK(hat1.space_size == 4);
    CHECK(hat1.domain(1).empty()); // (G x X)_a = G x empty

    PartialAction f3 = fixture_f3();
    PartialAction hat3 = hat_action(f3);
    CHECK(hat3.space_size == 8);
    // hat_2(1, x0) = (1 - 2 mod 4, eta_2(x0)) = (3, x1)
    CHECK(hat3.act(2, hat_pair_encode(f3, 1, 0)) == hat_pair_encode(f3, 3, 1));
    for (int p = 0; p < hat3.space_size; ++p)
        CHECK(hat3.act(0, p) == p);
    CHECK(validate_partial_action(hat3).valid());
}

TEST_CASE("is_free on fixtures") {
    CHECK(is_free(fixture_f3()));
    CHECK(!is_free(fixture_f2())); // the shift fixes (1,1)
    CHECK(is_free(trivial_fixture(cyclic_group(1), 3)));
    CHECK(is_free(fixture_f1()));
}

TEST_CASE("axiomatization equivalence on random instances") {
    std::mt19937 rng(7);
    for (int i = 0; i < 60; ++i) {
        PartialAction pa = random_partial_action(rng, false);
        ValidationReport r = validate_partial_action(pa);
        CHECK(r.function_valid());
        CHECK(r.family_valid());
        PartialAction bad = mutate_invalid(pa, rng);
        ValidationReport rb = validate_partial_action(bad);
        CHECK(rb.function_valid() == rb.family_valid());
    }
}

TEST_CASE("saturation is a closure operator and yields invariant splits") {
    std::mt19937 rng(11);
    for (int i = 0; i < 60; ++i) {
        PartialAction pa = random_partial_action(rng, false);
        std::vector<int> u = random_subset(pa, rng);
        std::vector<int> a = saturate(pa, u);
        CHECK(is_subset(sorted_set(u), a)); // extensive
        CHECK(saturate(pa, a) == a);        // idempotent
        CHECK(is_invariant(pa, a));
        CHECK(is_invariant(pa, complement(pa, a)));
        std::vector<int> bigger = u;
        if (!a.empty())
            bigger.push_back(a[0]);
        CHECK(is_subset(a, saturate(pa, bigger))); // monotone
    }
}

TEST_CASE("hat action preserves validity and freeness") {
    std::mt19937 rng(13);
    for (int i = 0; i < 30; ++i) {
        PartialAction pa = random_partial_action(rng, i % 2 == 0);
        PartialAction hat = hat_action(pa);
        CHECK(validate_partial_action(hat).valid());
        // a fixed point of hat_g forces h g^-1 = h, so g = 1: the hat
        // action is free no matter what the base action does
        CHECK(is_free(hat));
        // eta_{g^-1} is the inverse graph of eta_g
        for (int g = 0; g < pa.group.order; ++g) {
            Graph flipped;
            for (auto [x, y] : pa.graphs[g])
                flipped.push_back({y, x});
            std::sort(flipped.begin(), flipped.end());
            Graph inv_graph = pa.graphs[pa.group.inv(g)];
            std::sort(inv_graph.begin(), inv_graph.end());
            CHECK(flipped == inv_graph);
        }
    }
}
