#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "paract/fixtures.hpp"
#include "paract/tower.hpp"

using namespace paract;
using namespace testing_support;

TEST_CASE("build_chain follows the subgroup lattice") {
    NormalChain c4 = build_chain(cyclic_group(4));
    CHECK(c4.chain == std::vector<std::vector<int>>{{0, 1, 2, 3}, {0, 2}, {0}});

    NormalChain c2 = build_chain(cyclic_group(2));
    CHECK(c2.chain == std::vector<std::vector<int>>{{0, 1}, {0}});

    // the alternating subgroup is the unique proper normal subgroup of S3
    NormalChain s3 = build_chain(symmetric3());
    CHECK(s3.chain == std::vector<std::vector<int>>{{0, 1, 2, 3, 4, 5}, {0, 3, 4}, {0}});

    NormalChain t = build_chain(cyclic_group(1));
    CHECK(t.chain == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("validate_chain rejects malformed chains") {
    FiniteGroup g = cyclic_group(4);
    CHECK_THROWS_AS(validate_chain(g, {{0, 2}, {0}}), error);       // must start at G
    CHECK_THROWS_AS(validate_chain(g, {{0, 1, 2, 3}, {0, 2}}), error); // must end at {1}
    CHECK_THROWS_AS(validate_chain(g, {{0, 1, 2, 3}, {0, 1, 2, 3}, {0}}), error); // strict
    validate_chain(g, {{0, 1, 2, 3}, {0, 2}, {0}});
    validate_chain(g, {{0, 1, 2, 3}, {0}}); // skipping a level is fine
}

TEST_CASE("inverse limit of tower quotients") {
    PartialAction f3 = fixture_f3();
    TowerQuotients tq = make_tower(f3, build_chain(f3.group));
    CHECK(inverse_limit_check(tq));

    NormalChain short_chain{f3.group, {{0, 1, 2, 3}, {0}}};
    CHECK(inverse_limit_check(make_tower(f3, short_chain)));

    // bonds compose correctly across levels
    for (size_t i = 0; i + 1 < tq.levels.size(); ++i)
        for (int c = 0; c < tq.levels[i + 1].count(); ++c) {
            int x = tq.levels[i + 1].classes[c][0];
            CHECK(tq.bonds[i][c] == tq.levels[i].class_of[x]);
        }
}

TEST_CASE("tower_section on F3") {
    PartialAction f3 = fixture_f3();
    NormalChain chain = build_chain(f3.group);
    Section s = tower_section(f3, chain);
    CHECK(verify_section(f3, s));
    int rep = s.chosen_point(0);
    CHECK((rep == 0 || rep == 1));
    CHECK(rep == 0); // least-representative determinization

    try {
        tower_section(fixture_f2(), build_chain(cyclic_group(2)));
        FAIL("expected NotFree");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_free);
    }
}

TEST_CASE("tower_section degenerate and global cases") {
    PartialAction t = trivial_fixture(cyclic_group(1), 3);
    Section st = tower_section(t, build_chain(t.group));
    CHECK(verify_section(t, st));
    CHECK(st.from.count() == 3);

    // free global Z/2 action with two 2-orbits
    GlobalAction u;
    u.group = cyclic_group(2);
    u.space_size = 4;
    u.perm = {{0, 1, 2, 3}, {1, 0, 3, 2}};
    validate_global_action(u);
    PartialAction pa = as_partial_action(u);
    Section s = tower_section(pa, build_chain(pa.group));
    CHECK(verify_section(pa, s));
    CHECK(s.from.count() == 2);
    Section direct = section_finite(pa);
    CHECK(s.from.count() == direct.from.count());
    CHECK(verify_section(pa, direct));
}

TEST_CASE("descent trace is totally ordered") {
    PartialAction f3 = fixture_f3();
    NormalChain chain = build_chain(f3.group);
    auto steps = tower_section_trace(f3, chain);
    REQUIRE(steps.size() == chain.chain.size());
    for (size_t i = 0; i < steps.size(); ++i)
        for (size_t j = i; j < steps.size(); ++j)
            CHECK(compatibility_check(f3, steps[i].subgroup, steps[i].section,
                                      steps[j].subgroup, steps[j].section));

    // a section that disagrees after projection fails the order relation
    GlobalAction u;
    u.group = cyclic_group(2);
    u.space_size = 4;
    u.perm = {{0, 1, 2, 3}, {1, 0, 3, 2}};
    PartialAction pa = as_partial_action(u);
    OrbitQuotient qg = full_orbit_quotient(pa);
    Section r = section_finite(pa); // picks least points 0 and 2
    Section other = r;
    other.choice[0] = other.to.class_of[1]; // pick 1 instead of 0
    REQUIRE(verify_section(pa, other));
    CHECK(compatibility_check(pa, {0}, r, {0}, r)); // N = N', r = r'
    // `other` is still below the identity section of pi_G ...
    CHECK(compatibility_check(pa, pa.group.elements(), identity_section(qg), {0}, other));
    // ... but r and other disagree as sections of the same pi_{1,G}
    CHECK(!compatibility_check(pa, {0}, r, {0}, other));
}

TEST_CASE("tower sections verify on random free instances") {
    std::mt19937 rng(43);
    for (int i = 0; i < 30; ++i) {
        PartialAction pa = random_partial_action(rng, true);
        NormalChain chain = build_chain(pa.group);
        Section s = tower_section(pa, chain);
        CHECK(verify_section(pa, s));
        Section direct = section_finite(pa);
        CHECK(s.from.count() == direct.from.count());
        CHECK(inverse_limit_check(make_tower(pa, chain)));
    }
}
