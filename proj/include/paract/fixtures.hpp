#pragma once

#include <random>
#include <string>
#include <vector>

#include "paract/partial_action.hpp"

namespace paract {

// ---- deterministic fixtures ---------------------------------------------

/// The Bernoulli shift of G on {0,1}^G. Points are bitmasks over a
/// fixed enumeration of G (identity first): bit h of omega is omega(h).
/// The shift is (g.omega)(h) = omega(g^-1 h).
inline GlobalAction bernoulli_shift(const FiniteGroup& g) {
    if (g.order > 20)
        throw error(errc::bad_input, "Bernoulli space would be too large");
    GlobalAction u;
    u.group = g;
    u.space_size = 1 << g.order;
    u.perm.assign(g.order, std::vector<int>(u.space_size, 0));
    for (int a = 0; a < g.order; ++a)
        for (int w = 0; w < u.space_size; ++w) {
            int out = 0;
            for (int h = 0; h < g.order; ++h)
                if (w & (1 << g.op(g.inv(a), h)))
                    out |= 1 << h;
            u.perm[a][w] = out;
        }
    return u;
}

/// The partial Bernoulli action: the shift restricted to the cylinder
/// of configurations with a 1 at the identity.
inline InducedAction bernoulli_fixture(const FiniteGroup& g) {
    GlobalAction u = bernoulli_shift(g);
    std::vector<int> omega1;
    for (int w = 0; w < u.space_size; ++w)
        if (w & 1)
            omega1.push_back(w);
    return induce_from_global(u, omega1);
}

inline GlobalAction regular_action(const FiniteGroup& g) {
    GlobalAction u;
    u.group = g;
    u.space_size = g.order;
    u.perm.assign(g.order, std::vector<int>(g.order));
    for (int a = 0; a < g.order; ++a)
        for (int x = 0; x < g.order; ++x)
            u.perm[a][x] = g.op(a, x);
    return u;
}

/// Left translation restricted to a subset U of G: domains D_g = U ∩ gU.
inline InducedAction subgroup_restriction_fixture(const FiniteGroup& g,
                                                  const std::vector<int>& u) {
    return induce_from_global(regular_action(g), u);
}

/// Identity-only partial action on m points.
inline PartialAction trivial_fixture(const FiniteGroup& g, int m) {
    PartialAction pa;
    pa.group = g;
    pa.space_size = m;
    pa.graphs.resize(g.order);
    for (int x = 0; x < m; ++x)
        pa.graphs[0].push_back({x, x});
    return pa;
}

// Canonical small fixtures used throughout the tests: F1 is Z/2 acting
// only through the identity on two points, F2 the partial Bernoulli
// action of Z/2, F3 left translation of Z/4 restricted to {0, 2}.
inline PartialAction fixture_f1() {
    PartialAction pa = trivial_fixture(cyclic_group(2), 2);
    return pa;
}

inline PartialAction fixture_f2() { return bernoulli_fixture(cyclic_group(2)).pa; }

inline PartialAction fixture_f3() {
    return subgroup_restriction_fixture(cyclic_group(4), {0, 2}).pa;
}

// ---- random instances ------------------------------------------------

/// A pool of small groups for randomized suites (|G| <= 8).
inline std::vector<FiniteGroup> group_pool() {
    return {cyclic_group(2), cyclic_group(3), cyclic_group(4),  cyclic_group(6),
            cyclic_group(8), klein_four(),    symmetric3(),     dihedral_group(4)};
}

/// A random global action: a disjoint union of coset actions G/H (all
/// regular copies when `free_only`, so every point has trivial stabilizer).
inline GlobalAction random_global_action(const FiniteGroup& g, std::mt19937& rng,
                                         bool free_only, int max_points = 16) {
    std::vector<std::vector<int>> subs = all_subgroups(g);
    GlobalAction u;
    u.group = g;
    u.space_size = 0;
    u.perm.assign(g.order, {});
    int guard = 0;
    while (u.space_size == 0 || (u.space_size + 1 <= max_points && (rng() & 1) && guard < 8)) {
        ++guard;
        std::vector<int> h{0};
        if (!free_only) {
            h = subs[std::uniform_int_distribution<int>(0, (int)subs.size() - 1)(rng)];
        }
        // cosets of H, acted on by left translation
        std::vector<int> coset_of(g.order, -1);
        std::vector<int> reps;
        for (int a = 0; a < g.order; ++a) {
            if (coset_of[a] >= 0)
                continue;
            for (int x : h)
                coset_of[g.op(a, x)] = static_cast<int>(reps.size());
            reps.push_back(a);
        }
        int k = static_cast<int>(reps.size());
        if (u.space_size + k > max_points)
            break;
        int base = u.space_size;
        u.space_size += k;
        for (int a = 0; a < g.order; ++a) {
            u.perm[a].resize(u.space_size);
            for (int c = 0; c < k; ++c)
                u.perm[a][base + c] = base + coset_of[g.op(a, reps[c])];
        }
    }
    return u;
}

/// A random valid partial action, obtained by inducing a random global
/// action on a random nonempty subset. Valid by construction.
inline PartialAction random_partial_action(std::mt19937& rng, bool free_only,
                                           int max_points = 16) {
    auto pool = group_pool();
    const FiniteGroup& g = pool[std::uniform_int_distribution<int>(0, (int)pool.size() - 1)(rng)];
    GlobalAction u = random_global_action(g, rng, free_only, max_points);
    std::vector<int> subset;
    while (subset.empty())
        for (int x = 0; x < u.space_size; ++x)
            if (rng() & 1)
                subset.push_back(x);
    return induce_from_global(u, subset).pa;
}

/// Random subset of the space of pa.
inline std::vector<int> random_subset(const PartialAction& pa, std::mt19937& rng) {
    std::vector<int> out;
    for (int x = 0; x < pa.space_size; ++x)
        if (rng() & 1)
            out.push_back(x);
    return out;
}

/// Perturbs one graph entry of a valid action; retries mutations until
/// the result actually fails validation.
inline PartialAction mutate_invalid(const PartialAction& valid, std::mt19937& rng) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        PartialAction pa = valid;
        int kind = std::uniform_int_distribution<int>(0, 2)(rng);
        int g = std::uniform_int_distribution<int>(0, pa.group.order - 1)(rng);
        if (kind == 0 && !pa.graphs[g].empty()) {
            // retarget one pair
            auto& graph = pa.graphs[g];
            int i = std::uniform_int_distribution<int>(0, (int)graph.size() - 1)(rng);
            graph[i].second = (graph[i].second + 1 + (int)(rng() % (pa.space_size))) % pa.space_size;
        } else if (kind == 1 && !pa.graphs[g].empty()) {
            // drop one pair (breaks PA3 or PA1/totality of the family)
            auto& graph = pa.graphs[g];
            int i = std::uniform_int_distribution<int>(0, (int)graph.size() - 1)(rng);
            graph.erase(graph.begin() + i);
        } else {
            // insert a spurious pair
            int x = std::uniform_int_distribution<int>(0, pa.space_size - 1)(rng);
            int y = std::uniform_int_distribution<int>(0, pa.space_size - 1)(rng);
            pa.graphs[g].push_back({x, y});
        }
        if (!validate_partial_action(pa).valid())
            return pa;
    }
    throw error(errc::bad_input, "could not produce an invalid mutation");
}

} // namespace paract
