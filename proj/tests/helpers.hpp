#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "paract/fixtures.hpp"
#include "paract/orbits.hpp"

namespace testing_support {

using namespace paract;

// Independent orbit oracle: multi-step BFS reachability over defined
// action steps, ignoring the one-step-suffices consequence of the axioms.
inline std::vector<std::vector<int>> bfs_orbits(const PartialAction& pa,
                                                const std::vector<int>& subgroup) {
    const int m = pa.space_size;
    std::vector<std::vector<int>> adj(m);
    for (int g : subgroup)
        for (const auto& [x, y] : pa.graphs[g]) {
            adj[x].push_back(y);
            adj[y].push_back(x);
        }
    std::vector<int> comp(m, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < m; ++s) {
        if (comp[s] >= 0)
            continue;
        std::vector<int> stack{s}, members;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

inline bool contains(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

inline std::vector<int> complement(const PartialAction& pa, const std::vector<int>& u) {
    std::vector<int> out;
    for (int x = 0; x < pa.space_size; ++x)
        if (!contains(u, x))
            out.push_back(x);
    return out;
}

} // namespace testing_support
