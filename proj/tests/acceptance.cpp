// Acceptance suite: one test case per release criterion, each printing a
// single pass/fail line. Randomized suites run 200 instances at desk
// scale (|G| <= 8, |X| <= 16) from fixed seeds.

#include <cstdio>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "paract/algebra.hpp"
#include "paract/fixtures.hpp"
#include "paract/globalization.hpp"
#include "paract/orbits.hpp"
#include "paract/tower.hpp"

using namespace paract;
using namespace testing_support;

namespace {

constexpr int kInstances = 200;

void report(int criterion, const char* label, bool ok) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, label);
    CHECK(ok);
}

// Independent freeness oracle: exhaustive scan of the defined pairs.
bool free_by_scan(const PartialAction& pa) {
    for (int g = 0; g < pa.group.order; ++g)
        for (int x = 0; x < pa.space_size; ++x) {
            auto y = pa.act(g, x);
            if (y && *y == x && g != 0)
                return false;
        }
    return true;
}

} // namespace

TEST_CASE("criterion 1: axiomatization equivalence") {
    std::mt19937 rng(1001);
    bool ok = true;
    for (int i = 0; i < kInstances; ++i) {
        PartialAction pa = random_partial_action(rng, i % 3 == 0);
        ValidationReport r = validate_partial_action(pa);
        ok = ok && r.function_valid() && r.family_valid();
        ValidationReport rb = validate_partial_action(mutate_invalid(pa, rng));
        ok = ok && (rb.function_valid() == rb.family_valid()) && !rb.valid();
    }
    report(1, "PA1-PA3 verdict equals bijection-family verdict on all instances", ok);
}

TEST_CASE("criterion 2: saturation invariance and idempotence") {
    std::mt19937 rng(1002);
    bool ok = true;
    for (int i = 0; i < kInstances; ++i) {
        PartialAction pa = random_partial_action(rng, false);
        std::vector<int> u = random_subset(pa, rng);
        std::vector<int> a = saturate(pa, u);
        ok = ok && is_invariant(pa, a);
        ok = ok && is_invariant(pa, complement(pa, a));
        ok = ok && saturate(pa, a) == a;
    }
    report(2, "saturations and their complements invariant; saturate idempotent", ok);
}

TEST_CASE("criterion 3: globalization suite") {
    std::mt19937 rng(1003);
    bool ok = true;
    for (int i = 0; i < kInstances; ++i) {
        PartialAction pa = random_partial_action(rng, i % 2 == 0);
        try {
            EnvelopingSpace env = envelope(pa); // verifies R and mu
            std::vector<int> seen(env.size(), 0);
            for (int c : env.iota)
                ok = ok && ++seen[c] == 1; // iota injective
            ok = ok && envelope_restricts_to_source(pa, env);
            ok = ok && envelope_matches_hat_orbits(pa, env);
        } catch (const error&) {
            ok = false;
        }
    }
    {
        EnvelopingSpace env3 = envelope(fixture_f3());
        ok = ok && env3.size() == 4 && is_isomorphic_to_regular(env3.mu);
        ok = ok && envelope(fixture_f2()).size() == 3;
    }
    report(3, "R equivalence, mu global, iota injective, restriction = eta, hat orbits match", ok);
}

TEST_CASE("criterion 4: invariant separation") {
    std::mt19937 rng(1004);
    bool ok = true;
    for (int i = 0; i < kInstances; ++i) {
        PartialAction pa = random_partial_action(rng, false);
        OrbitQuotient q = full_orbit_quotient(pa);
        for (int x = 0; x < pa.space_size; ++x)
            for (int y = 0; y < pa.space_size; ++y) {
                auto a = invariant_separator(pa, x, y);
                if (q.class_of[x] == q.class_of[y]) {
                    ok = ok && !a;
                    continue;
                }
                if (!a) {
                    ok = false;
                    continue;
                }
                ok = ok && contains(*a, x) && !contains(*a, y);
                ok = ok && is_invariant(pa, *a) && is_invariant(pa, complement(pa, *a));
                for (int z : *a) // saturated: preimage of image is itself
                    for (int w : q.classes[q.class_of[z]])
                        ok = ok && contains(*a, w);
            }
    }
    report(4, "separator contains x, misses y, invariant on both sides, saturated", ok);
}

TEST_CASE("criterion 5: finite sections exactly on free instances") {
    std::mt19937 rng(1005);
    bool ok = true;
    for (int i = 0; i < kInstances; ++i) {
        PartialAction pa = random_partial_action(rng, i % 2 == 0);
        bool free = free_by_scan(pa);
        try {
            Section s = section_finite(pa);
            ok = ok && free && verify_section(pa, s);
        } catch (const error& e) {
            ok = ok && !free && e.code() == errc::not_free;
        }
    }
    report(5, "section_finite verifies on free instances and refuses non-free ones", ok);
}

TEST_CASE("criterion 6: quotient-group actions and the homeomorphism identity") {
    std::mt19937 rng(1006);
    bool ok = true;
    for (int i = 0; i < kInstances; ++i) {
        PartialAction pa = random_partial_action(rng, true);
        OrbitQuotient qg = full_orbit_quotient(pa);
        for (const auto& h : normal_subgroups(pa.group)) {
            try {
                QuotientGroupAction qga = quotient_group_action(pa, h);
                ok = ok && validate_partial_action(qga.action).valid();
                ok = ok && is_free(qga.action);
                for (int x = 0; x < pa.space_size; ++x) {
                    int z = qga.action_orbits.class_of[qga.base_mod_H.class_of[x]];
                    ok = ok && qga.psi[z] == qg.class_of[x];
                }
            } catch (const error&) {
                ok = false;
            }
        }
    }
    report(6, "eta_{G/H} free, psi bijective, psi(pi_{G/H}(pi_H(x))) = pi_G(x)", ok);
}

TEST_CASE("criterion 7: tower descent") {
    std::mt19937 rng(1007);
    bool ok = true;
    for (int i = 0; i < kInstances; ++i) {
        PartialAction pa = random_partial_action(rng, true);
        NormalChain chain = build_chain(pa.group);
        try {
            auto steps = tower_section_trace(pa, chain);
            ok = ok && verify_section(pa, steps.back().section);
            for (size_t a = 0; a < steps.size(); ++a)
                for (size_t b = a; b < steps.size(); ++b)
                    ok = ok && compatibility_check(pa, steps[a].subgroup, steps[a].section,
                                                   steps[b].subgroup, steps[b].section);
        } catch (const error&) {
            ok = false;
        }
    }
    {
        PartialAction f3 = fixture_f3();
        Section s = tower_section(f3, build_chain(f3.group));
        int rep = s.chosen_point(0);
        ok = ok && verify_section(f3, s) && (rep == 0 || rep == 1);
    }
    report(7, "tower_section verifies; trace totally ordered; F3 picks a point of {0,2}", ok);
}

TEST_CASE("criterion 8: envelope section transfers") {
    std::mt19937 rng(1008);
    bool ok = true;
    for (int i = 0; i < kInstances; ++i) {
        PartialAction pa = random_partial_action(rng, true);
        try {
            EnvelopingSpace env = envelope(pa);
            PartialAction env_pa = as_partial_action(env.mu);
            Section q = section_finite(pa);
            Section s = section_to_envelope(pa, env, q);
            ok = ok && verify_section(env_pa, s);
            Section r = section_from_envelope(pa, env, s);
            ok = ok && verify_section(pa, r);
            Section p = section_from_two(pa, env, s, least_pair_splitting(env));
            ok = ok && verify_section(pa, p);
        } catch (const error&) {
            ok = false;
        }
    }
    report(8, "section_to_envelope, round trip, and section_from_two all verify", ok);
}

TEST_CASE("criterion 9: Birget-Rhodes expansion") {
    bool ok = true;
    std::vector<FiniteGroup> groups{cyclic_group(1), cyclic_group(2), cyclic_group(3),
                                    cyclic_group(4), cyclic_group(5), cyclic_group(6),
                                    klein_four(),    symmetric3()};
    for (const auto& g : groups) {
        ok = ok && (long long)br_enumerate(g).size() == br_count_formula(g.order);
        ok = ok && br_verify_inverse_monoid(g).pass();
    }
    ok = ok && br_enumerate(cyclic_group(2)).size() == 3;
    report(9, "expansion count matches the closed form; inverse-monoid axioms pass", ok);
}

TEST_CASE("criterion 10: action groupoid") {
    std::mt19937 rng(1010);
    bool ok = true;
    for (int i = 0; i < kInstances; ++i) {
        PartialAction pa = random_partial_action(rng, i % 2 == 0);
        ActionGroupoid gpd = groupoid_build(pa);
        GroupoidReport r = groupoid_verify(gpd);
        ok = ok && r.pass();
        ok = ok && r.component_count == full_orbit_quotient(pa).count();
        ok = ok && r.trivial_isotropy == free_by_scan(pa);
    }
    {
        GroupoidReport r3 = groupoid_verify(groupoid_build(fixture_f3()));
        ok = ok && r3.arrow_count == 4 && r3.component_count == 1;
    }
    report(10, "groupoid axioms pass; components = orbits; trivial isotropy iff free", ok);
}
