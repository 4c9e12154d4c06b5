#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "paract/partial_action.hpp"

namespace paract {

namespace detail {

// Small union-find with least-element representatives on finalize.
class DisjointSet {
public:
    explicit DisjointSet(int n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b); // keep least as root
    }

    /// Classes sorted by least element, each sorted internally.
    std::vector<std::vector<int>> classes() {
        const int n = static_cast<int>(parent_.size());
        std::vector<std::vector<int>> by_root(n);
        for (int i = 0; i < n; ++i)
            by_root[find(i)].push_back(i);
        std::vector<std::vector<int>> out;
        for (auto& c : by_root)
            if (!c.empty())
                out.push_back(std::move(c));
        return out;
    }

private:
    std::vector<int> parent_;
};

} // namespace detail

/// The orbit partition of X under the elements of a subgroup H, with
/// the quotient map realized as class_of. Classes are ordered by their
/// least point.
struct OrbitQuotient {
    int space_size = 0;
    std::vector<int> subgroup; // H, in ambient group labels
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;

    int count() const { return static_cast<int>(classes.size()); }
};

inline OrbitQuotient orbit_quotient(const PartialAction& pa, const std::vector<int>& h_in) {
    std::vector<int> h = sorted_set(h_in);
    if (!is_subgroup(pa.group, h))
        throw error(errc::not_a_subgroup, "orbit relation needs a subgroup");
    detail::DisjointSet ds(pa.space_size);
    for (int g : h)
        for (const auto& [x, y] : pa.graphs[g])
            ds.unite(x, y);
    OrbitQuotient q;
    q.space_size = pa.space_size;
    q.subgroup = std::move(h);
    q.classes = ds.classes();
    q.class_of.assign(pa.space_size, -1);
    for (int c = 0; c < q.count(); ++c)
        for (int x : q.classes[c])
            q.class_of[x] = c;
    return q;
}

inline OrbitQuotient full_orbit_quotient(const PartialAction& pa) {
    return orbit_quotient(pa, pa.group.elements());
}

inline OrbitQuotient singleton_quotient(const PartialAction& pa) {
    return orbit_quotient(pa, {0});
}

inline bool same_partition(const OrbitQuotient& a, const OrbitQuotient& b) {
    return a.space_size == b.space_size && a.classes == b.classes;
}

/// The connecting map X/~H1 -> X/~H2 for nested subgroups H1 <= H2;
/// the unique map with pi_{H2} = pi_{H1,H2} ∘ pi_{H1}.
inline std::vector<int> connecting_map(const OrbitQuotient& fine, const OrbitQuotient& coarse) {
    if (fine.space_size != coarse.space_size)
        throw error(errc::not_nested, "quotients live on different spaces");
    if (!is_subset(fine.subgroup, coarse.subgroup))
        throw error(errc::not_nested, "connecting map needs nested subgroups");
    std::vector<int> out(fine.count(), -1);
    for (int c = 0; c < fine.count(); ++c) {
        for (int x : fine.classes[c]) {
            int target = coarse.class_of[x];
            if (out[c] < 0)
                out[c] = target;
            else if (out[c] != target)
                throw error(errc::not_nested, "fine classes are not refined by coarse ones");
        }
    }
    return out;
}

inline std::vector<int> connecting_map(const PartialAction& pa, const std::vector<int>& h1,
                                       const std::vector<int>& h2) {
    if (!is_subset(sorted_set(h1), sorted_set(h2)))
        throw error(errc::not_nested, "H1 must be contained in H2");
    return connecting_map(orbit_quotient(pa, h1), orbit_quotient(pa, h2));
}

/// An invariant clopen separator of two non-equivalent points: the
/// saturation of {x}, which contains x, misses y, and is invariant
/// along with its complement. nullopt when x ~ y.
inline std::optional<std::vector<int>> invariant_separator(const PartialAction& pa, int x, int y) {
    std::vector<int> a = saturate(pa, {x});
    if (std::binary_search(a.begin(), a.end(), y))
        return std::nullopt;
    return a;
}

/// A section of the connecting map between two quotients: picks, for
/// each class of the coarse quotient, a class of the fine one inside it.
struct Section {
    OrbitQuotient from; // quotient by the larger subgroup H2
    OrbitQuotient to;   // quotient by the smaller subgroup H1
    std::vector<int> choice; // from-class -> to-class

    /// Convenience when `to` is the singleton quotient: the chosen point.
    int chosen_point(int from_class) const { return to.classes[choice[from_class]][0]; }
};

inline Section identity_section(const OrbitQuotient& q) {
    Section s;
    s.from = q;
    s.to = q;
    s.choice.resize(q.count());
    std::iota(s.choice.begin(), s.choice.end(), 0);
    return s;
}

/// Exact check of the section identity: each chosen fine class must sit
/// inside its coarse class, and both partitions must be partitions of X.
inline bool verify_section(const PartialAction& pa, const Section& s) {
    if (s.from.space_size != pa.space_size || s.to.space_size != pa.space_size)
        return false;
    auto well_formed = [&](const OrbitQuotient& q) {
        if (static_cast<int>(q.class_of.size()) != q.space_size)
            return false;
        std::vector<int> seen(q.space_size, 0);
        for (int c = 0; c < q.count(); ++c)
            for (int x : q.classes[c]) {
                if (x < 0 || x >= q.space_size || q.class_of[x] != c)
                    return false;
                ++seen[x];
            }
        return std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; });
    };
    if (!well_formed(s.from) || !well_formed(s.to))
        return false;
    if (static_cast<int>(s.choice.size()) != s.from.count())
        return false;
    for (int c = 0; c < s.from.count(); ++c) {
        int t = s.choice[c];
        if (t < 0 || t >= s.to.count())
            return false;
        for (int x : s.to.classes[t])
            if (s.from.class_of[x] != c)
                return false; // connecting map would not send it back to c
    }
    return true;
}

/// The finite-group section algorithm: around each point x build the
/// clopen neighborhood V_x from singleton separating sets, check that
/// the quotient map is injective on it, then disjointify the resulting
/// cover of X/~G in enumeration order and glue the local inverses.
inline Section section_finite(const PartialAction& pa) {
    if (!is_free(pa))
        throw error(errc::not_free, "section algorithm requires a free partial action");
    OrbitQuotient qg = full_orbit_quotient(pa);
    OrbitQuotient q1 = singleton_quotient(pa);
    const int m = pa.space_size;

    std::vector<int> chosen(qg.count(), -1);
    std::vector<bool> covered(qg.count(), false);
    for (int x = 0; x < m; ++x) {
        // V_x = intersection over g in G^x of eta_g^{-1}({eta_g(x)} ∩ X_g)
        std::vector<bool> v(m, true);
        for (int g : pa.defined_at(x)) {
            int ux = *pa.act(g, x); // the singleton clopen choice U_g
            for (int z = 0; z < m; ++z) {
                auto w = pa.act(g, z);
                if (!(w && *w == ux))
                    v[z] = false;
            }
        }
        // pi_G restricted to V_x must be injective (freeness guarantees it)
        std::vector<int> local_inverse(qg.count(), -1);
        for (int z = 0; z < m; ++z) {
            if (!v[z])
                continue;
            int c = qg.class_of[z];
            if (local_inverse[c] >= 0)
                throw error(errc::not_free, "quotient map not injective on V_x");
            local_inverse[c] = z;
        }
        // W refinement: keep only classes not claimed by earlier base points
        for (int c = 0; c < qg.count(); ++c)
            if (local_inverse[c] >= 0 && !covered[c]) {
                covered[c] = true;
                chosen[c] = local_inverse[c];
            }
    }
    for (int c = 0; c < qg.count(); ++c)
        if (chosen[c] < 0)
            throw error(errc::not_free, "refined cover does not cover the quotient");

    Section s;
    s.from = std::move(qg);
    s.choice.resize(s.from.count());
    for (int c = 0; c < s.from.count(); ++c)
        s.choice[c] = q1.class_of[chosen[c]];
    s.to = std::move(q1);
    return s;
}

} // namespace paract
