#pragma once

#include <algorithm>
#include <vector>

#include "paract/globalization.hpp"
#include "paract/orbits.hpp"

namespace paract {

/// A strictly descending chain of normal subgroups from G to {1}; the
/// finite stand-in for a profinite filtration.
struct NormalChain {
    FiniteGroup group;
    std::vector<std::vector<int>> chain; // chain[0] = G, chain.back() = {0}
};

inline void validate_chain(const FiniteGroup& g, const std::vector<std::vector<int>>& chain) {
    if (chain.empty())
        throw error(errc::bad_chain, "chain is empty");
    if (sorted_set(chain.front()) != g.elements())
        throw error(errc::bad_chain, "chain must start at the full group");
    if (sorted_set(chain.back()) != std::vector<int>{0})
        throw error(errc::bad_chain, "chain must end at the trivial subgroup");
    for (size_t i = 0; i < chain.size(); ++i) {
        auto n = sorted_set(chain[i]);
        if (!is_normal(g, n))
            throw error(errc::bad_chain, "chain term " + std::to_string(i) + " is not normal");
        if (i > 0) {
            auto prev = sorted_set(chain[i - 1]);
            if (!is_subset(n, prev) || n.size() >= prev.size())
                throw error(errc::bad_chain, "chain must descend strictly");
        }
    }
}

/// A maximal-length normal chain, built by repeatedly taking the
/// largest proper normal subgroup of G inside the current term
/// (ties broken by lexicographically least element list).
inline NormalChain build_chain(const FiniteGroup& g) {
    std::vector<std::vector<int>> normals = normal_subgroups(g);
    NormalChain nc;
    nc.group = g;
    std::vector<int> current = g.elements();
    nc.chain.push_back(current);
    while (current.size() > 1) {
        std::vector<int> best;
        for (const auto& n : normals)
            if (n.size() < current.size() && is_subset(n, current))
                if (n.size() > best.size() || (n.size() == best.size() && n < best) || best.empty())
                    best = n;
        current = best; // {0} is always a candidate, so descent terminates
        nc.chain.push_back(current);
    }
    return nc;
}

/// Quotient levels along a chain plus the connecting maps between
/// consecutive levels (fine level i+1 -> coarse level i).
struct TowerQuotients {
    PartialAction base;
    NormalChain chain;
    std::vector<OrbitQuotient> levels;
    std::vector<std::vector<int>> bonds; // bonds[i]: levels[i+1] -> levels[i]
};

inline TowerQuotients make_tower(const PartialAction& pa, const NormalChain& chain) {
    validate_chain(pa.group, chain.chain);
    TowerQuotients tq;
    tq.base = pa;
    tq.chain = chain;
    for (const auto& n : chain.chain)
        tq.levels.push_back(orbit_quotient(pa, n));
    for (size_t i = 0; i + 1 < tq.levels.size(); ++i)
        tq.bonds.push_back(connecting_map(tq.levels[i + 1], tq.levels[i]));
    return tq;
}

/// Enumerates the compatible families through the bonds and checks that
/// the induced map from X/~F (F = last chain term) onto the limit is a
/// bijection; the finite-scale version of the limit homeomorphism.
inline bool inverse_limit_check(const TowerQuotients& tq) {
    const int depth = static_cast<int>(tq.levels.size());
    // Compatible families, built level by level along the bonds.
    std::vector<std::vector<int>> families;
    std::vector<int> partial(depth, -1);
    auto extend = [&](auto&& self, int level) -> void {
        if (level == depth) {
            families.push_back(partial);
            return;
        }
        for (int c = 0; c < tq.levels[level].count(); ++c) {
            if (level > 0 && tq.bonds[level - 1][c] != partial[level - 1])
                continue;
            partial[level] = c;
            self(self, level + 1);
        }
    };
    extend(extend, 0);
    std::sort(families.begin(), families.end());

    // Image of e-bar: the family of class labels of each X/~F class.
    const OrbitQuotient& finest = tq.levels.back();
    std::vector<std::vector<int>> image;
    for (int c = 0; c < finest.count(); ++c) {
        int x = finest.classes[c][0];
        std::vector<int> fam(depth);
        for (int i = 0; i < depth; ++i)
            fam[i] = tq.levels[i].class_of[x];
        image.push_back(std::move(fam));
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    return image.size() == static_cast<size_t>(finest.count()) && image == families;
}

/// The descent order on pairs (N, r): (N, r) <= (N', r') iff N' is
/// contained in N and projecting r' back down N' -> N recovers r.
inline bool compatibility_check(const PartialAction& pa, const std::vector<int>& n,
                                const Section& r, const std::vector<int>& n_prime,
                                const Section& r_prime) {
    std::vector<int> big = sorted_set(n), small = sorted_set(n_prime);
    if (!is_subset(small, big))
        return false;
    if (!verify_section(pa, r) || !verify_section(pa, r_prime))
        return false;
    std::vector<int> cm = connecting_map(r_prime.to, r.to);
    if (r.choice.size() != r_prime.choice.size())
        return false;
    for (size_t z = 0; z < r.choice.size(); ++z)
        if (cm[r_prime.choice[z]] != r.choice[z])
            return false;
    return true;
}

/// One descent step per chain level plus the section it produced.
struct TowerStep {
    std::vector<int> subgroup;
    Section section; // section of pi_{subgroup, G}
};

/// Finite descent realizing the profinite section theorem: start from
/// the identity section of pi_{G,G} and lift through each chain step.
inline std::vector<TowerStep> tower_section_trace(const PartialAction& pa,
                                                  const NormalChain& chain) {
    if (!is_free(pa))
        throw error(errc::not_free, "tower descent requires a free partial action");
    validate_chain(pa.group, chain.chain);
    std::vector<TowerStep> steps;
    Section current = identity_section(full_orbit_quotient(pa));
    steps.push_back({sorted_set(chain.chain[0]), current});
    for (size_t i = 0; i + 1 < chain.chain.size(); ++i) {
        current = lift_section_through(pa, chain.chain[i], chain.chain[i + 1], current);
        steps.push_back({sorted_set(chain.chain[i + 1]), current});
    }
    return steps;
}

inline Section tower_section(const PartialAction& pa, const NormalChain& chain) {
    return tower_section_trace(pa, chain).back().section;
}

} // namespace paract
