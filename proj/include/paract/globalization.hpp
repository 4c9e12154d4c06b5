#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "paract/orbits.hpp"
#include "paract/partial_action.hpp"

namespace paract {

/// The enveloping (globalization) space of a partial action: classes of
/// G x X under the gluing relation, the global action mu on them, and
/// the embedding iota. Classes are labeled by their least (g, x) pair.
struct EnvelopingSpace {
    PartialAction source;
    std::vector<std::vector<std::pair<int, int>>> classes; // sorted pairs
    std::vector<std::vector<int>> class_of;                // [g][x] -> class
    GlobalAction mu;                                       // G acting on classes
    std::vector<int> iota;                                 // x -> class of (1, x)
    std::vector<int> iota_inverse;                         // class -> x or -1

    int size() const { return static_cast<int>(classes.size()); }
};

namespace detail {

// (g,x) ~ (h,y) iff x lies in X_{g^-1 h} and eta_{h^-1 g}(x) = y.
inline bool envelope_related(const PartialAction& pa, int g, int x, int h, int y) {
    auto img = pa.act(pa.group.op(pa.group.inv(h), g), x);
    return img && *img == y;
}

} // namespace detail

/// Builds the enveloping space. The gluing relation is verified to be
/// an equivalence first; failure means an invalid action slipped in.
inline EnvelopingSpace envelope(const PartialAction& pa) {
    const auto& G = pa.group;
    const int n = G.order, m = pa.space_size;
    auto rel = [&](int g, int x, int h, int y) {
        return detail::envelope_related(pa, g, x, h, y);
    };
    // Adjacency of the relation on the n*m pairs, for the equivalence check.
    auto enc = [&](int g, int x) { return g * m + x; };
    std::vector<std::vector<int>> adj(n * m);
    for (int g = 0; g < n; ++g)
        for (int x = 0; x < m; ++x)
            for (int h = 0; h < n; ++h)
                for (int y = 0; y < m; ++y)
                    if (rel(g, x, h, y))
                        adj[enc(g, x)].push_back(enc(h, y));
    for (int g = 0; g < n; ++g)
        for (int x = 0; x < m; ++x) {
            int a = enc(g, x);
            if (!std::count(adj[a].begin(), adj[a].end(), a))
                throw error(errc::r_not_equivalence, "relation not reflexive");
            for (int b : adj[a]) {
                if (!std::count(adj[b].begin(), adj[b].end(), a))
                    throw error(errc::r_not_equivalence, "relation not symmetric");
                for (int c : adj[b])
                    if (!std::count(adj[a].begin(), adj[a].end(), c))
                        throw error(errc::r_not_equivalence, "relation not transitive");
            }
        }

    detail::DisjointSet ds(n * m);
    for (int a = 0; a < n * m; ++a)
        for (int b : adj[a])
            ds.unite(a, b);

    EnvelopingSpace env;
    env.source = pa;
    for (auto& cls : ds.classes()) {
        std::vector<std::pair<int, int>> pairs;
        for (int e : cls)
            pairs.push_back({e / m, e % m});
        env.classes.push_back(std::move(pairs)); // least pair first by encoding order
    }
    env.class_of.assign(n, std::vector<int>(m, -1));
    for (int c = 0; c < env.size(); ++c)
        for (auto [g, x] : env.classes[c])
            env.class_of[g][x] = c;

    env.mu.group = G;
    env.mu.space_size = env.size();
    env.mu.perm.assign(n, std::vector<int>(env.size(), -1));
    for (int g = 0; g < n; ++g)
        for (int c = 0; c < env.size(); ++c) {
            auto [h, x] = env.classes[c][0];
            env.mu.perm[g][c] = env.class_of[G.op(g, h)][x];
        }
    validate_global_action(env.mu); // mu must be a genuine action

    env.iota.resize(m);
    env.iota_inverse.assign(env.size(), -1);
    for (int x = 0; x < m; ++x) {
        env.iota[x] = env.class_of[0][x];
        env.iota_inverse[env.iota[x]] = x;
    }
    return env;
}

/// Cross-check of the hat construction: envelope classes must be
/// exactly the orbit classes of the companion action on G x X.
inline bool envelope_matches_hat_orbits(const PartialAction& pa, const EnvelopingSpace& env) {
    PartialAction hat = hat_action(pa);
    OrbitQuotient hq = full_orbit_quotient(hat);
    if (hq.count() != env.size())
        return false;
    std::vector<std::vector<int>> env_as_points;
    for (const auto& cls : env.classes) {
        std::vector<int> pts;
        for (auto [g, x] : cls)
            pts.push_back(hat_pair_encode(pa, g, x));
        env_as_points.push_back(sorted_set(std::move(pts)));
    }
    return env_as_points == hq.classes;
}

/// The partial action induced by mu on iota(X) must be eta itself,
/// transported through iota.
inline bool envelope_restricts_to_source(const PartialAction& pa, const EnvelopingSpace& env) {
    for (int g = 0; g < pa.group.order; ++g)
        for (int x = 0; x < pa.space_size; ++x) {
            int image = env.mu.apply(g, env.iota[x]);
            auto y = pa.act(g, x);
            if (y) {
                if (image != env.iota[*y])
                    return false;
            } else if (env.iota_inverse[image] >= 0) {
                return false; // mu lands back in iota(X) where eta is undefined
            }
        }
    return true;
}

inline bool global_action_is_free(const GlobalAction& u) {
    for (int g = 1; g < u.group.order; ++g)
        for (int x = 0; x < u.space_size; ++x)
            if (u.perm[g][x] == x)
                return false;
    return true;
}

/// True when u is isomorphic to the left regular action of its group.
inline bool is_isomorphic_to_regular(const GlobalAction& u) {
    const auto& G = u.group;
    if (u.space_size != G.order || !global_action_is_free(u))
        return false;
    // Freeness on a set of size |G| forces transitivity on each orbit of
    // size |G|; check the single orbit and the equivariant bijection.
    std::vector<int> label(u.space_size, -1);
    label[0] = 0;
    for (int g = 0; g < G.order; ++g) {
        int y = u.perm[g][0];
        if (label[y] >= 0 && label[y] != g)
            return false;
        label[y] = g;
    }
    if (std::count(label.begin(), label.end(), -1) > 0)
        return false;
    for (int g = 0; g < G.order; ++g)
        for (int x = 0; x < u.space_size; ++x)
            if (label[u.perm[g][x]] != G.op(g, label[x]))
                return false;
    return true;
}

// ---- quotient-group partial actions -----------------------------------

/// The derived partial action of G/H on X/~H for a free action and a
/// normal H, with the embedding phi into X_G/~H and the bijection psi
/// identifying (X/~H)/~_{G/H} with X/~G.
struct QuotientGroupAction {
    PartialAction base;
    std::vector<int> H;
    QuotientGroup quotient;     // G/H with coset labels
    EnvelopingSpace env;        // enveloping space of base
    OrbitQuotient base_mod_H;   // X/~H
    OrbitQuotient env_mod_H;    // X_G/~H (orbits of mu under H)
    GlobalAction tau;           // G/H acting on X_G/~H
    PartialAction action;       // G/H acting partially on X/~H
    std::vector<int> phi;       // X/~H class -> X_G/~H class
    OrbitQuotient action_orbits; // (X/~H)/~_{G/H}
    std::vector<int> psi;       // action_orbits class -> X/~G class
};

inline QuotientGroupAction quotient_group_action(const PartialAction& pa,
                                                 const std::vector<int>& h_in) {
    std::vector<int> h = sorted_set(h_in);
    if (!is_normal(pa.group, h))
        throw error(errc::not_normal, "quotient-group action needs a normal subgroup");
    if (!is_free(pa))
        throw error(errc::not_free, "quotient-group action needs a free partial action");

    QuotientGroupAction out;
    out.base = pa;
    out.H = h;
    out.quotient = make_quotient(pa.group, h);
    out.env = envelope(pa);

    // X_G/~H: H-orbits of mu.
    detail::DisjointSet ds(out.env.size());
    for (int g : h)
        for (int c = 0; c < out.env.size(); ++c)
            ds.unite(c, out.env.mu.perm[g][c]);
    out.env_mod_H.space_size = out.env.size();
    out.env_mod_H.subgroup = h;
    out.env_mod_H.classes = ds.classes();
    out.env_mod_H.class_of.assign(out.env.size(), -1);
    for (int c = 0; c < out.env_mod_H.count(); ++c)
        for (int x : out.env_mod_H.classes[c])
            out.env_mod_H.class_of[x] = c;

    // tau_{gH}: the action mu pushed down to H-orbits; well-definedness
    // rests on normality and is verified below.
    const int k = out.quotient.group.order;
    out.tau.group = out.quotient.group;
    out.tau.space_size = out.env_mod_H.count();
    out.tau.perm.assign(k, std::vector<int>(out.env_mod_H.count(), -1));
    for (int q = 0; q < k; ++q) {
        int rep = out.quotient.coset_rep[q];
        for (int o = 0; o < out.env_mod_H.count(); ++o) {
            int image = -1;
            for (int c : out.env_mod_H.classes[o]) {
                int t = out.env_mod_H.class_of[out.env.mu.perm[rep][c]];
                if (image < 0)
                    image = t;
                else if (image != t)
                    throw error(errc::not_normal, "tau is not well defined");
            }
            out.tau.perm[q][o] = image;
        }
    }
    validate_global_action(out.tau);

    // phi: X/~H -> X_G/~H through iota; injective by the embedding lemma.
    out.base_mod_H = orbit_quotient(pa, h);
    out.phi.assign(out.base_mod_H.count(), -1);
    for (int t = 0; t < out.base_mod_H.count(); ++t) {
        for (int x : out.base_mod_H.classes[t]) {
            int o = out.env_mod_H.class_of[out.env.iota[x]];
            if (out.phi[t] < 0)
                out.phi[t] = o;
            else if (out.phi[t] != o)
                throw error(errc::r_not_equivalence, "phi is not well defined");
        }
    }
    {
        std::vector<int> seen(out.env_mod_H.count(), 0);
        for (int o : out.phi)
            if (++seen[o] > 1)
                throw error(errc::r_not_equivalence, "phi is not injective");
    }

    // Restrict tau to Im(phi) and pull back through phi: the induced
    // partial action of G/H on T = X/~H.
    std::vector<int> phi_inverse(out.env_mod_H.count(), -1);
    for (int t = 0; t < out.base_mod_H.count(); ++t)
        phi_inverse[out.phi[t]] = t;
    out.action.group = out.quotient.group;
    out.action.space_size = out.base_mod_H.count();
    out.action.graphs.resize(k);
    for (int q = 0; q < k; ++q)
        for (int t = 0; t < out.base_mod_H.count(); ++t) {
            int image = out.tau.perm[q][out.phi[t]];
            if (phi_inverse[image] >= 0)
                out.action.graphs[q].push_back({t, phi_inverse[image]});
        }

    // psi: (X/~H)/~_{G/H} -> X/~G, via any representative point.
    out.action_orbits = full_orbit_quotient(out.action);
    OrbitQuotient qg = full_orbit_quotient(pa);
    out.psi.assign(out.action_orbits.count(), -1);
    for (int z = 0; z < out.action_orbits.count(); ++z) {
        for (int t : out.action_orbits.classes[z])
            for (int x : out.base_mod_H.classes[t]) {
                int target = qg.class_of[x];
                if (out.psi[z] < 0)
                    out.psi[z] = target;
                else if (out.psi[z] != target)
                    throw error(errc::r_not_equivalence, "psi is not well defined");
            }
    }
    {
        std::vector<int> seen(qg.count(), 0);
        for (int c : out.psi)
            if (c < 0 || ++seen[c] > 1)
                throw error(errc::r_not_equivalence, "psi is not a bijection");
        if (out.action_orbits.count() != qg.count())
            throw error(errc::r_not_equivalence, "psi is not a bijection");
    }
    return out;
}

// ---- section transfers -------------------------------------------------

/// Lifts a section of pi_{N,G} to one of pi_{M,G} for nested normal
/// subgroups M <= N: the finite quotient N/M acts partially on X/~M,
/// the finite-group algorithm supplies a section there, and psi glues.
inline Section lift_section_through(const PartialAction& pa, const std::vector<int>& n_in,
                                    const std::vector<int>& m_in, const Section& t) {
    std::vector<int> n = sorted_set(n_in), m = sorted_set(m_in);
    if (!is_normal(pa.group, n) || !is_normal(pa.group, m))
        throw error(errc::not_normal, "lift needs normal subgroups");
    if (!is_subset(m, n))
        throw error(errc::not_nested, "lift needs M contained in N");
    OrbitQuotient qg = full_orbit_quotient(pa);
    OrbitQuotient qn = orbit_quotient(pa, n);
    if (!verify_section(pa, t) || !same_partition(t.from, qg) || !same_partition(t.to, qn))
        throw error(errc::not_a_section, "t is not a section of pi_{N,G}");
    if (m == n)
        return t;

    // Work inside N: restrict, then form the N/M quotient action on X/~M.
    SubgroupEmbedding sub = make_subgroup(pa.group, n);
    PartialAction pa_n = restrict_to_subgroup(pa, n);
    std::vector<int> m_in_n;
    for (int g : m)
        m_in_n.push_back(sub.from_ambient[g]);
    QuotientGroupAction qga = quotient_group_action(pa_n, m_in_n);

    Section lambda = section_finite(qga.action); // section of pi_{N/M} on T = X/~M

    // psi maps (T/~_{N/M})-classes to X/~N-classes; orbit class labels of
    // pa_n under all of N coincide with qn's labels (same partition, same
    // least-element order), so psi composes directly with t.
    std::vector<int> psi_inverse(qn.count(), -1);
    for (int z = 0; z < static_cast<int>(qga.psi.size()); ++z)
        psi_inverse[qga.psi[z]] = z;

    OrbitQuotient qm = orbit_quotient(pa, m);
    Section out;
    out.from = qg;
    out.to = qm;
    out.choice.resize(qg.count());
    for (int z = 0; z < qg.count(); ++z) {
        int w = t.choice[z];            // X/~N class
        int v = psi_inverse[w];         // (T/~_{N/M}) class
        out.choice[z] = lambda.chosen_point(v); // T point = X/~M class
    }
    return out;
}

/// Transfers a section of pi_G to one of Pi_G (the orbit map of the
/// enveloping action) by composing with iota.
inline Section section_to_envelope(const PartialAction& pa, const EnvelopingSpace& env,
                                   const Section& q) {
    OrbitQuotient qg = full_orbit_quotient(pa);
    if (!verify_section(pa, q) || !same_partition(q.from, qg) ||
        !same_partition(q.to, singleton_quotient(pa)))
        throw error(errc::not_a_section, "q is not a section of pi_G");
    PartialAction env_pa = as_partial_action(env.mu);
    OrbitQuotient big = full_orbit_quotient(env_pa);
    OrbitQuotient big1 = singleton_quotient(env_pa);
    Section s;
    s.choice.assign(big.count(), -1);
    for (int x = 0; x < pa.space_size; ++x) {
        int orbit = big.class_of[env.iota[x]];
        int y = q.chosen_point(qg.class_of[x]);
        int target = big1.class_of[env.iota[y]];
        if (s.choice[orbit] >= 0 && s.choice[orbit] != target)
            throw error(errc::not_a_section, "transfer is not well defined");
        s.choice[orbit] = target;
    }
    // G.iota(X) = X_G, so every mu-orbit meets iota(X) and is covered.
    for (int c : s.choice)
        if (c < 0)
            throw error(errc::not_a_section, "a mu-orbit misses iota(X)");
    s.from = std::move(big);
    s.to = std::move(big1);
    return s;
}

/// Pulls a section of Pi_G whose image lies in iota(X) back to a
/// section of pi_G.
inline Section section_from_envelope(const PartialAction& pa, const EnvelopingSpace& env,
                                     const Section& q) {
    PartialAction env_pa = as_partial_action(env.mu);
    OrbitQuotient big = full_orbit_quotient(env_pa);
    if (!verify_section(env_pa, q) || !same_partition(q.from, big) ||
        !same_partition(q.to, singleton_quotient(env_pa)))
        throw error(errc::not_a_section, "q is not a section of Pi_G");
    OrbitQuotient qg = full_orbit_quotient(pa);
    OrbitQuotient q1 = singleton_quotient(pa);
    Section r;
    r.from = qg;
    r.choice.assign(qg.count(), -1);
    for (int z = 0; z < qg.count(); ++z) {
        int x = qg.classes[z][0];
        int orbit = big.class_of[env.iota[x]];
        int chosen_class = q.chosen_point(orbit);
        int back = env.iota_inverse[chosen_class];
        if (back < 0)
            throw error(errc::image_not_in_iota, "chosen class lies outside iota(X)");
        r.choice[z] = q1.class_of[back];
    }
    r.to = std::move(q1);
    return r;
}

/// Combines a section of Pi_G with a splitting of the class projection
/// G x X -> X_G into a section of pi_G.
inline Section section_from_two(const PartialAction& pa, const EnvelopingSpace& env,
                                const Section& q,
                                const std::vector<std::pair<int, int>>& splitting) {
    PartialAction env_pa = as_partial_action(env.mu);
    OrbitQuotient big = full_orbit_quotient(env_pa);
    if (!verify_section(env_pa, q) || !same_partition(q.from, big) ||
        !same_partition(q.to, singleton_quotient(env_pa)))
        throw error(errc::not_a_section, "q is not a section of Pi_G");
    if (static_cast<int>(splitting.size()) != env.size())
        throw error(errc::not_a_section, "splitting size mismatch");
    for (int c = 0; c < env.size(); ++c) {
        auto [g, x] = splitting[c];
        if (g < 0 || g >= pa.group.order || x < 0 || x >= pa.space_size ||
            env.class_of[g][x] != c)
            throw error(errc::not_a_section, "splitting does not split the class projection");
    }
    OrbitQuotient qg = full_orbit_quotient(pa);
    OrbitQuotient q1 = singleton_quotient(pa);
    Section p;
    p.from = qg;
    p.choice.resize(qg.count());
    for (int z = 0; z < qg.count(); ++z) {
        int x = qg.classes[z][0];
        int orbit = big.class_of[env.iota[x]];
        auto [g, y] = splitting[q.chosen_point(orbit)];
        p.choice[z] = q1.class_of[y];
    }
    p.to = std::move(q1);
    return p;
}

/// The canonical splitting of G x X -> X_G: the least pair of each class.
inline std::vector<std::pair<int, int>> least_pair_splitting(const EnvelopingSpace& env) {
    std::vector<std::pair<int, int>> out;
    for (const auto& cls : env.classes)
        out.push_back(cls[0]);
    return out;
}

} // namespace paract
