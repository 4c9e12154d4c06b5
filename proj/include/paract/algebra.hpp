#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paract/orbits.hpp"
#include "paract/partial_action.hpp"

namespace paract {

// ---- Birget-Rhodes expansion ------------------------------------------

/// An element (A, g) of the expansion monoid: a subset A of G (bitmask)
/// containing both the identity and g.
struct BRElement {
    std::uint32_t subset = 1; // bit i set iff element i is in A
    int g = 0;

    bool operator==(const BRElement& o) const { return subset == o.subset && g == o.g; }
    bool operator<(const BRElement& o) const {
        return g != o.g ? g < o.g : subset < o.subset;
    }
};

inline bool br_valid(const FiniteGroup& G, const BRElement& e) {
    if (e.g < 0 || e.g >= G.order)
        return false;
    if (e.subset >= (1u << G.order))
        return false;
    return (e.subset & 1u) && (e.subset & (1u << e.g));
}

inline std::uint32_t translate_subset(const FiniteGroup& G, int g, std::uint32_t a) {
    std::uint32_t out = 0;
    for (int i = 0; i < G.order; ++i)
        if (a & (1u << i))
            out |= 1u << G.op(g, i);
    return out;
}

/// (A, g)(B, h) = (A ∪ gB, gh).
inline BRElement br_mul(const FiniteGroup& G, const BRElement& a, const BRElement& b) {
    if (!br_valid(G, a) || !br_valid(G, b))
        throw error(errc::group_mismatch, "operands do not belong to the expansion of this group");
    return {a.subset | translate_subset(G, a.g, b.subset), G.op(a.g, b.g)};
}

inline BRElement br_identity() { return {1u, 0}; }

/// The generalized inverse (g^-1 A, g^-1).
inline BRElement br_star(const FiniteGroup& G, const BRElement& a) {
    return {translate_subset(G, G.inv(a.g), a.subset), G.inv(a.g)};
}

inline std::vector<BRElement> br_enumerate(const FiniteGroup& G) {
    std::vector<BRElement> out;
    for (int g = 0; g < G.order; ++g) {
        std::uint32_t required = 1u | (1u << g);
        for (std::uint32_t a = 0; a < (1u << G.order); ++a)
            if ((a & required) == required)
                out.push_back({a, g});
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Closed-form count of the expansion: 2^{n-1} + (n-1) 2^{n-2}.
inline long long br_count_formula(int n) {
    return (1ll << (n - 1)) + (n == 1 ? 0 : static_cast<long long>(n - 1) * (1ll << (n - 2)));
}

struct BRReport {
    long long element_count = 0;
    long long idempotent_count = 0;
    bool count_matches_formula = false;
    bool associative = false;
    bool identity_ok = false;
    bool inverses_unique = false;
    bool idempotents_commute = false;
    std::vector<std::string> violations;

    bool pass() const {
        return count_matches_formula && associative && identity_ok && inverses_unique &&
               idempotents_commute;
    }
};

/// Exhaustive inverse-monoid verification; meant for small groups
/// (the element count grows like n 2^n).
inline BRReport br_verify_inverse_monoid(const FiniteGroup& G) {
    BRReport r;
    std::vector<BRElement> all = br_enumerate(G);
    r.element_count = static_cast<long long>(all.size());
    r.count_matches_formula = r.element_count == br_count_formula(G.order);
    if (!r.count_matches_formula)
        r.violations.push_back("element count disagrees with the closed form");

    r.associative = true;
    for (const auto& a : all)
        for (const auto& b : all)
            for (const auto& c : all)
                if (!(br_mul(G, br_mul(G, a, b), c) == br_mul(G, a, br_mul(G, b, c)))) {
                    r.associative = false;
                    r.violations.push_back("associativity fails");
                    goto assoc_done;
                }
assoc_done:
    r.identity_ok = true;
    for (const auto& a : all)
        if (!(br_mul(G, br_identity(), a) == a) || !(br_mul(G, a, br_identity()) == a)) {
            r.identity_ok = false;
            r.violations.push_back("({1},1) is not a two-sided identity");
            break;
        }

    // a* = (g^-1 A, g^-1) must be the unique generalized inverse.
    r.inverses_unique = true;
    for (const auto& a : all) {
        BRElement star = br_star(G, a);
        if (!(br_mul(G, br_mul(G, a, star), a) == a) ||
            !(br_mul(G, br_mul(G, star, a), star) == star)) {
            r.inverses_unique = false;
            r.violations.push_back("the star formula is not a generalized inverse");
            break;
        }
        for (const auto& b : all)
            if (!(b == star) && br_mul(G, br_mul(G, a, b), a) == a &&
                br_mul(G, br_mul(G, b, a), b) == b) {
                r.inverses_unique = false;
                r.violations.push_back("generalized inverse is not unique");
                break;
            }
        if (!r.inverses_unique)
            break;
    }

    r.idempotents_commute = true;
    std::vector<BRElement> idem;
    for (const auto& a : all)
        if (br_mul(G, a, a) == a)
            idem.push_back(a);
    r.idempotent_count = static_cast<long long>(idem.size());
    for (const auto& a : idem)
        for (const auto& b : idem)
            if (!(br_mul(G, a, b) == br_mul(G, b, a))) {
                r.idempotents_commute = false;
                r.violations.push_back("idempotents do not commute");
                goto idem_done;
            }
idem_done:
    return r;
}

// ---- action groupoid ----------------------------------------------------

/// Arrows are the pairs (g, x) with g.x defined; an arrow points from x
/// to g.x and composes with arrows landing at its source.
struct ActionGroupoid {
    PartialAction pa;
    std::vector<std::pair<int, int>> arrows; // sorted (g, x)

    int source(int i) const { return arrows[i].second; }
    int target(int i) const { return *pa.act(arrows[i].first, arrows[i].second); }
    bool is_unit(int i) const { return arrows[i].first == 0; }

    std::optional<int> index_of(int g, int x) const {
        auto it = std::lower_bound(arrows.begin(), arrows.end(), std::pair<int, int>{g, x});
        if (it == arrows.end() || *it != std::pair<int, int>{g, x})
            return std::nullopt;
        return static_cast<int>(it - arrows.begin());
    }

    /// The inverse arrow (g^-1, g.x).
    int inverse(int i) const {
        auto [g, x] = arrows[i];
        return *index_of(pa.group.inv(g), target(i));
    }
};

inline ActionGroupoid groupoid_build(const PartialAction& pa) {
    ActionGroupoid gpd;
    gpd.pa = pa;
    for (int g = 0; g < pa.group.order; ++g)
        for (const auto& [x, y] : pa.graphs[g])
            gpd.arrows.push_back({g, x});
    std::sort(gpd.arrows.begin(), gpd.arrows.end());
    return gpd;
}

/// (g,x) * (h,y) = (gh, y) when x = h.y; nullopt otherwise.
inline std::optional<int> groupoid_compose(const ActionGroupoid& gpd, int f, int h) {
    if (gpd.source(f) != gpd.target(h))
        return std::nullopt;
    int g = gpd.pa.group.op(gpd.arrows[f].first, gpd.arrows[h].first);
    return gpd.index_of(g, gpd.arrows[h].second); // defined by PA2
}

struct GroupoidReport {
    bool involution_ok = false;
    bool units_ok = false;         // f * f^-1 and f^-1 * f are units
    bool associativity_ok = false; // wherever both sides are defined
    bool components_match_orbits = false;
    bool trivial_isotropy = false; // equivalent to freeness of the action
    int arrow_count = 0;
    int component_count = 0;
    std::vector<std::string> violations;

    bool pass() const {
        return involution_ok && units_ok && associativity_ok && components_match_orbits;
    }
};

inline GroupoidReport groupoid_verify(const ActionGroupoid& gpd) {
    GroupoidReport r;
    const int k = static_cast<int>(gpd.arrows.size());
    r.arrow_count = k;

    r.involution_ok = true;
    for (int i = 0; i < k; ++i)
        if (gpd.inverse(gpd.inverse(i)) != i) {
            r.involution_ok = false;
            r.violations.push_back("inversion is not an involution");
            break;
        }

    r.units_ok = true;
    for (int i = 0; i < k; ++i) {
        int inv = gpd.inverse(i);
        auto left = groupoid_compose(gpd, i, inv);   // unit at target(i)
        auto right = groupoid_compose(gpd, inv, i);  // unit at source(i)
        auto unit_at = [&](int x) { return gpd.index_of(0, x); };
        if (!left || *left != *unit_at(gpd.target(i)) || !right ||
            *right != *unit_at(gpd.source(i))) {
            r.units_ok = false;
            r.violations.push_back("f * f^-1 is not the expected unit");
            break;
        }
    }

    r.associativity_ok = true;
    for (int a = 0; a < k && r.associativity_ok; ++a)
        for (int b = 0; b < k && r.associativity_ok; ++b) {
            auto ab = groupoid_compose(gpd, a, b);
            for (int c = 0; c < k; ++c) {
                auto bc = groupoid_compose(gpd, b, c);
                std::optional<int> lhs = ab ? groupoid_compose(gpd, *ab, c) : std::nullopt;
                std::optional<int> rhs = bc ? groupoid_compose(gpd, a, *bc) : std::nullopt;
                if (lhs && rhs && *lhs != *rhs) {
                    r.associativity_ok = false;
                    r.violations.push_back("associativity fails");
                    break;
                }
            }
        }

    // Connected components of the source/target graph vs. orbits.
    detail::DisjointSet ds(gpd.pa.space_size);
    for (int i = 0; i < k; ++i)
        ds.unite(gpd.source(i), gpd.target(i));
    auto components = ds.classes();
    r.component_count = static_cast<int>(components.size());
    OrbitQuotient orbits = full_orbit_quotient(gpd.pa);
    r.components_match_orbits = components == orbits.classes;
    if (!r.components_match_orbits)
        r.violations.push_back("components disagree with orbit classes");

    r.trivial_isotropy = true;
    for (int i = 0; i < k; ++i)
        if (gpd.source(i) == gpd.target(i) && !gpd.is_unit(i)) {
            r.trivial_isotropy = false;
            break;
        }
    return r;
}

} // namespace paract
