#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "paract/group.hpp"

namespace paract {

using Graph = std::vector<std::pair<int, int>>; // pairs (x, eta_g(x))

/// A partial action of a finite group on points 0..space_size-1,
/// stored as one graph per group element so that malformed data is
/// representable and validation has something to check.
struct PartialAction {
    FiniteGroup group;
    int space_size = 0;
    std::vector<Graph> graphs; // indexed by group element

    /// eta_g(x), or nullopt when g.x is undefined. Uses the first
    /// matching pair, so it is meaningful even on malformed graphs.
    std::optional<int> act(int g, int x) const {
        for (const auto& [a, b] : graphs[g])
            if (a == x)
                return b;
        return std::nullopt;
    }

    bool defined(int g, int x) const { return act(g, x).has_value(); }

    /// X_{g^-1}: the set of x with g.x defined.
    std::vector<int> domain(int g) const {
        std::vector<int> v;
        for (const auto& [a, b] : graphs[g])
            v.push_back(a);
        return sorted_set(std::move(v));
    }

    /// X_g: the set of values of eta_g.
    std::vector<int> range(int g) const {
        std::vector<int> v;
        for (const auto& [a, b] : graphs[g])
            v.push_back(b);
        return sorted_set(std::move(v));
    }

    /// G^x: group elements defined at x.
    std::vector<int> defined_at(int x) const {
        std::vector<int> v;
        for (int g = 0; g < group.order; ++g)
            if (defined(g, x))
                v.push_back(g);
        return v;
    }

    std::vector<int> all_points() const {
        std::vector<int> v(space_size);
        std::iota(v.begin(), v.end(), 0);
        return v;
    }
};

/// A genuine (everywhere-defined) action, one permutation per element.
struct GlobalAction {
    FiniteGroup group;
    int space_size = 0;
    std::vector<std::vector<int>> perm; // perm[g][x]

    int apply(int g, int x) const { return perm[g][x]; }
};

inline void validate_global_action(const GlobalAction& u) {
    if (static_cast<int>(u.perm.size()) != u.group.order)
        throw error(errc::bad_input, "permutation count does not match group order");
    for (int g = 0; g < u.group.order; ++g) {
        std::vector<bool> seen(u.space_size, false);
        if (static_cast<int>(u.perm[g].size()) != u.space_size)
            throw error(errc::bad_input, "permutation length mismatch");
        for (int x : u.perm[g]) {
            if (x < 0 || x >= u.space_size || seen[x])
                throw error(errc::bad_input, "perm[" + std::to_string(g) + "] is not a permutation");
            seen[x] = true;
        }
    }
    for (int x = 0; x < u.space_size; ++x)
        if (u.perm[0][x] != x)
            throw error(errc::bad_input, "perm of identity is not the identity map");
    for (int g = 0; g < u.group.order; ++g)
        for (int h = 0; h < u.group.order; ++h)
            for (int x = 0; x < u.space_size; ++x)
                if (u.perm[g][u.perm[h][x]] != u.perm[u.group.op(g, h)][x])
                    throw error(errc::bad_input, "perm is not a homomorphism");
}

// ---- validation ------------------------------------------------------

enum class Clause {
    // per-graph well-formedness shared by both axiomatizations
    NotFunctional,
    NotInjective,
    // partially-defined-function axioms
    PA1,
    PA2,
    PA3,
    // bijection-family axioms
    FamIdentity,     // X_1 = X and eta_1 = id
    FamDomainImage,  // eta_g(X_{g^-1} ∩ X_h) = X_g ∩ X_{gh}
    FamComposition,  // eta_g eta_h = eta_{gh} on X_{h^-1} ∩ X_{h^-1 g^-1}
    OutOfRange,
};

inline const char* clause_name(Clause c) {
    switch (c) {
    case Clause::NotFunctional: return "NotFunctional";
    case Clause::NotInjective: return "NotInjective";
    case Clause::PA1: return "PA1";
    case Clause::PA2: return "PA2";
    case Clause::PA3: return "PA3";
    case Clause::FamIdentity: return "FamIdentity";
    case Clause::FamDomainImage: return "FamDomainImage";
    case Clause::FamComposition: return "FamComposition";
    case Clause::OutOfRange: return "OutOfRange";
    }
    return "Unknown";
}

struct Violation {
    Clause clause;
    int g = -1;
    int h = -1;
    int x = -1;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> function_axioms; // PA1-PA3 route
    std::vector<Violation> family_axioms;   // bijection-family route

    bool function_valid() const { return function_axioms.empty(); }
    bool family_valid() const { return family_axioms.empty(); }
    bool valid() const { return function_valid() && family_valid(); }
};

namespace detail {

inline bool graphs_in_range(const PartialAction& pa, std::vector<Violation>& out) {
    bool ok = true;
    if (static_cast<int>(pa.graphs.size()) != pa.group.order) {
        out.push_back({Clause::OutOfRange, -1, -1, -1, "graph count != group order"});
        return false;
    }
    for (int g = 0; g < pa.group.order; ++g)
        for (const auto& [x, y] : pa.graphs[g])
            if (x < 0 || x >= pa.space_size || y < 0 || y >= pa.space_size) {
                out.push_back({Clause::OutOfRange, g, -1, x, "point index out of range"});
                ok = false;
            }
    return ok;
}

inline void check_functional(const PartialAction& pa, std::vector<Violation>& out) {
    for (int g = 0; g < pa.group.order; ++g) {
        std::set<int> xs, ys;
        for (const auto& [x, y] : pa.graphs[g]) {
            if (!xs.insert(x).second)
                out.push_back({Clause::NotFunctional, g, -1, x, "two images for the same point"});
            ys.insert(y);
        }
    }
}

inline void check_injective(const PartialAction& pa, std::vector<Violation>& out) {
    for (int g = 0; g < pa.group.order; ++g) {
        std::set<int> ys;
        for (const auto& [x, y] : pa.graphs[g])
            if (!ys.insert(y).second)
                out.push_back({Clause::NotInjective, g, -1, x, "two points share an image"});
    }
}

} // namespace detail

/// Checks the partially-defined-function axioms PA1-PA3 (plus graph
/// functionality, needed for the graphs to define such a function).
inline std::vector<Violation> check_function_axioms(const PartialAction& pa) {
    std::vector<Violation> out;
    if (!detail::graphs_in_range(pa, out))
        return out;
    detail::check_functional(pa, out);
    const auto& G = pa.group;
    // PA3: 1.x defined and equal to x, for every x
    {
        std::set<std::pair<int, int>> id_graph(pa.graphs[0].begin(), pa.graphs[0].end());
        for (int x = 0; x < pa.space_size; ++x)
            if (!id_graph.count({x, x}))
                out.push_back({Clause::PA3, 0, -1, x, "1.x missing or not x"});
        for (const auto& [x, y] : pa.graphs[0])
            if (x != y)
                out.push_back({Clause::PA3, 0, -1, x, "1.x != x"});
    }
    // PA1: g.x = y forces g^-1.y = x
    for (int g = 0; g < G.order; ++g)
        for (const auto& [x, y] : pa.graphs[g]) {
            auto back = pa.act(G.inv(g), y);
            if (!back || *back != x)
                out.push_back({Clause::PA1, g, -1, x, "inverse step missing or wrong"});
        }
    // PA2: g.(h.x) defined forces (gh).x defined and equal
    for (int h = 0; h < G.order; ++h)
        for (const auto& [x, y] : pa.graphs[h])
            for (int g = 0; g < G.order; ++g) {
                auto z = pa.act(g, y);
                if (!z)
                    continue;
                auto w = pa.act(G.op(g, h), x);
                if (!w || *w != *z)
                    out.push_back({Clause::PA2, g, h, x, "(gh).x missing or != g.(h.x)"});
            }
    return out;
}

/// Checks the bijection-family axioms: each eta_g a bijection
/// X_{g^-1} -> X_g, identity at 1, the domain-image identity, and the
/// composition rule on the stated intersections.
inline std::vector<Violation> check_family_axioms(const PartialAction& pa) {
    std::vector<Violation> out;
    if (!detail::graphs_in_range(pa, out))
        return out;
    detail::check_functional(pa, out);
    detail::check_injective(pa, out);
    if (!out.empty())
        return out; // later clauses presuppose bijections
    const auto& G = pa.group;
    const int m = pa.space_size;
    // (i) X_1 = X, eta_1 = id
    for (int x = 0; x < m; ++x) {
        auto y = pa.act(0, x);
        if (!y || *y != x)
            out.push_back({Clause::FamIdentity, 0, -1, x, "eta_1 not the identity on all of X"});
    }
    // Precompute membership of X_g and domains.
    std::vector<std::vector<bool>> in_range(G.order, std::vector<bool>(m, false));
    std::vector<std::vector<bool>> in_dom(G.order, std::vector<bool>(m, false));
    for (int g = 0; g < G.order; ++g)
        for (const auto& [x, y] : pa.graphs[g]) {
            in_dom[g][x] = true;  // x in X_{g^-1}
            in_range[g][y] = true; // y in X_g
        }
    // (ii) eta_g(X_{g^-1} ∩ X_h) = X_g ∩ X_{gh}
    for (int g = 0; g < G.order; ++g)
        for (int h = 0; h < G.order; ++h) {
            const int gh = G.op(g, h);
            std::set<int> lhs, rhs;
            for (const auto& [x, y] : pa.graphs[g])
                if (in_range[h][x])
                    lhs.insert(y);
            for (int y = 0; y < m; ++y)
                if (in_range[g][y] && in_range[gh][y])
                    rhs.insert(y);
            if (lhs != rhs)
                out.push_back({Clause::FamDomainImage, g, h, -1, "eta_g(X_{g^-1} ∩ X_h) != X_g ∩ X_{gh}"});
        }
    // (iii) eta_g eta_h = eta_{gh} on X_{h^-1} ∩ X_{h^-1 g^-1}
    for (int g = 0; g < G.order; ++g)
        for (int h = 0; h < G.order; ++h) {
            const int gh = G.op(g, h);
            for (int x = 0; x < m; ++x) {
                if (!(in_dom[h][x] && in_dom[gh][x]))
                    continue;
                auto y = pa.act(h, x);
                std::optional<int> z = y ? pa.act(g, *y) : std::optional<int>{};
                auto w = pa.act(gh, x);
                if (!z || !w || *z != *w)
                    out.push_back({Clause::FamComposition, g, h, x, "eta_g(eta_h(x)) != eta_{gh}(x)"});
            }
        }
    return out;
}

/// Runs both axiomatizations and reports every violated clause of each.
inline ValidationReport validate_partial_action(const PartialAction& pa) {
    ValidationReport r;
    r.function_axioms = check_function_axioms(pa);
    r.family_axioms = check_family_axioms(pa);
    return r;
}

// ---- basic operations ------------------------------------------------

/// G^U.U: everything reachable from U in one defined step. The identity
/// step makes this extensive; it is also idempotent and monotone.
inline std::vector<int> saturate(const PartialAction& pa, const std::vector<int>& u) {
    std::vector<bool> in_u(pa.space_size, false);
    for (int x : u)
        in_u[x] = true;
    std::vector<int> out;
    for (int g = 0; g < pa.group.order; ++g)
        for (const auto& [x, y] : pa.graphs[g])
            if (in_u[x])
                out.push_back(y);
    return sorted_set(std::move(out));
}

inline bool is_invariant(const PartialAction& pa, const std::vector<int>& u) {
    return is_subset(saturate(pa, u), sorted_set(u));
}

/// Restriction to a subgroup H; the result is a partial action of H
/// (as a group in its own right) on the same space.
inline PartialAction restrict_to_subgroup(const PartialAction& pa, const std::vector<int>& h) {
    SubgroupEmbedding e = make_subgroup(pa.group, h);
    PartialAction r;
    r.group = e.group;
    r.space_size = pa.space_size;
    r.graphs.resize(e.group.order);
    for (int i = 0; i < e.group.order; ++i)
        r.graphs[i] = pa.graphs[e.to_ambient[i]];
    return r;
}

/// A partial action induced from a global one by a subset, together
/// with the point relabeling (subset points sorted, then renumbered).
struct InducedAction {
    PartialAction pa;
    std::vector<int> points; // new label -> original point
};

inline InducedAction induce_from_global(const GlobalAction& u, const std::vector<int>& subset) {
    std::vector<int> s = sorted_set(subset);
    if (s.empty())
        throw error(errc::empty_subset, "induced subset must be nonempty");
    for (int x : s)
        if (x < 0 || x >= u.space_size)
            throw error(errc::bad_input, "subset point out of range");
    std::vector<int> label(u.space_size, -1);
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
        label[s[i]] = i;
    InducedAction out;
    out.points = s;
    out.pa.group = u.group;
    out.pa.space_size = static_cast<int>(s.size());
    out.pa.graphs.resize(u.group.order);
    for (int g = 0; g < u.group.order; ++g)
        for (int x : s) {
            int y = u.apply(g, x);
            if (label[y] >= 0)
                out.pa.graphs[g].push_back({label[x], label[y]});
        }
    return out;
}

inline PartialAction as_partial_action(const GlobalAction& u) {
    PartialAction pa;
    pa.group = u.group;
    pa.space_size = u.space_size;
    pa.graphs.resize(u.group.order);
    for (int g = 0; g < u.group.order; ++g)
        for (int x = 0; x < u.space_size; ++x)
            pa.graphs[g].push_back({x, u.perm[g][x]});
    return pa;
}

/// The companion action on G x X: (h, x) -> (h g^-1, eta_g(x)), with
/// domain G x X_{g^-1}. Pairs are encoded as h * space_size + x.
inline PartialAction hat_action(const PartialAction& pa) {
    const auto& G = pa.group;
    const int m = pa.space_size;
    PartialAction out;
    out.group = G;
    out.space_size = G.order * m;
    out.graphs.resize(G.order);
    for (int g = 0; g < G.order; ++g)
        for (int h = 0; h < G.order; ++h)
            for (const auto& [x, y] : pa.graphs[g])
                out.graphs[g].push_back({h * m + x, G.op(h, G.inv(g)) * m + y});
    return out;
}

inline int hat_pair_encode(const PartialAction& pa, int g, int x) { return g * pa.space_size + x; }
inline std::pair<int, int> hat_pair_decode(const PartialAction& pa, int p) {
    return {p / pa.space_size, p % pa.space_size};
}

/// Free: only the identity fixes a point it is defined at.
inline bool is_free(const PartialAction& pa) {
    for (int g = 1; g < pa.group.order; ++g)
        for (const auto& [x, y] : pa.graphs[g])
            if (x == y)
                return false;
    return true;
}

} // namespace paract
