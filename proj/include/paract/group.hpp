#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <vector>

#include "paract/errors.hpp"

namespace paract {

/// A finite group given by its multiplication table. Element 0 is the
/// identity by convention; inverses are derived from the table.
struct FiniteGroup {
    int order = 0;
    std::vector<std::vector<int>> mul;
    std::vector<int> inverse;

    int op(int a, int b) const { return mul[a][b]; }
    int inv(int a) const { return inverse[a]; }

    std::vector<int> elements() const {
        std::vector<int> v(order);
        std::iota(v.begin(), v.end(), 0);
        return v;
    }

    bool operator==(const FiniteGroup& o) const {
        return order == o.order && mul == o.mul;
    }
};

/// Checks the group axioms on a raw table and returns the group.
/// Throws paract::error naming the first violated axiom.
inline FiniteGroup validate_group(const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    if (n == 0)
        throw error(errc::bad_input, "empty table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw error(errc::bad_input, "table is not square");
        for (int v : row)
            if (v < 0 || v >= n)
                throw error(errc::bad_input, "entry out of range");
    }
    for (int a = 0; a < n; ++a)
        if (table[0][a] != a || table[a][0] != a)
            throw error(errc::no_identity_at_zero, "element 0 is not a two-sided identity");
    for (int a = 0; a < n; ++a) {
        std::vector<bool> row(n, false), col(n, false);
        for (int b = 0; b < n; ++b) {
            if (row[table[a][b]])
                throw error(errc::not_latin_square, "repeated entry in row " + std::to_string(a));
            if (col[table[b][a]])
                throw error(errc::not_latin_square, "repeated entry in column " + std::to_string(a));
            row[table[a][b]] = col[table[b][a]] = true;
        }
    }
    std::vector<int> inverse(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (table[a][b] == 0 && table[b][a] == 0) {
                inverse[a] = b;
                break;
            }
        if (inverse[a] < 0)
            throw error(errc::missing_inverse, "no two-sided inverse for " + std::to_string(a));
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw error(errc::non_associative,
                                "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                                    std::to_string(c) + " != a*(b*c)");
    FiniteGroup g;
    g.order = n;
    g.mul = table;
    g.inverse = std::move(inverse);
    return g;
}

inline bool is_subgroup(const FiniteGroup& g, const std::vector<int>& h) {
    std::set<int> s(h.begin(), h.end());
    if (!s.count(0))
        return false;
    for (int a : s)
        if (a < 0 || a >= g.order)
            return false;
    for (int a : s)
        for (int b : s)
            if (!s.count(g.op(a, b)))
                return false;
    return true; // inverses follow from closure in a finite group
}

inline bool is_normal(const FiniteGroup& g, const std::vector<int>& h) {
    if (!is_subgroup(g, h))
        return false;
    std::set<int> s(h.begin(), h.end());
    for (int a = 0; a < g.order; ++a)
        for (int x : s)
            if (!s.count(g.op(g.op(a, x), g.inv(a))))
                return false;
    return true;
}

inline std::vector<int> sorted_set(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    std::set<int> s(b.begin(), b.end());
    return std::all_of(a.begin(), a.end(), [&](int x) { return s.count(x) > 0; });
}

/// All subgroups of g as sorted element lists, ordered by (size, lex).
/// Intended for small groups (the CLI caps |G| at 8 anyway).
inline std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g) {
    std::vector<std::vector<int>> out;
    const int n = g.order;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (!(mask & 1u))
            continue;
        std::vector<int> h;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                h.push_back(i);
        if (is_subgroup(g, h))
            out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    return out;
}

inline std::vector<std::vector<int>> normal_subgroups(const FiniteGroup& g) {
    std::vector<std::vector<int>> out;
    for (auto& h : all_subgroups(g))
        if (is_normal(g, h))
            out.push_back(h);
    return out;
}

/// A subgroup realized as a group in its own right, with the
/// translation maps between subgroup labels and ambient labels.
struct SubgroupEmbedding {
    FiniteGroup group;            // the subgroup as a FiniteGroup
    std::vector<int> to_ambient;  // subgroup label -> ambient label
    std::vector<int> from_ambient; // ambient label -> subgroup label or -1
};

inline SubgroupEmbedding make_subgroup(const FiniteGroup& g, const std::vector<int>& h_in) {
    if (!is_subgroup(g, h_in))
        throw error(errc::not_a_subgroup, "set is not a subgroup");
    std::vector<int> h = sorted_set(h_in);
    const int k = static_cast<int>(h.size());
    SubgroupEmbedding e;
    e.to_ambient = h;
    e.from_ambient.assign(g.order, -1);
    for (int i = 0; i < k; ++i)
        e.from_ambient[h[i]] = i;
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            table[i][j] = e.from_ambient[g.op(h[i], h[j])];
    e.group = validate_group(table);
    return e;
}

/// The quotient G/H for a normal H. Cosets are labeled by their least
/// element, in increasing order, so the identity coset gets label 0.
struct QuotientGroup {
    FiniteGroup group;        // G/H
    std::vector<int> coset_of; // ambient g -> coset label
    std::vector<int> coset_rep; // coset label -> least ambient representative
};

inline QuotientGroup make_quotient(const FiniteGroup& g, const std::vector<int>& h) {
    if (!is_normal(g, h))
        throw error(errc::not_normal, "subgroup is not normal");
    std::vector<int> coset_of(g.order, -1);
    std::vector<int> reps;
    for (int a = 0; a < g.order; ++a) {
        if (coset_of[a] >= 0)
            continue;
        int label = static_cast<int>(reps.size());
        for (int x : h)
            coset_of[g.op(a, x)] = label;
        reps.push_back(a);
    }
    const int k = static_cast<int>(reps.size());
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            table[i][j] = coset_of[g.op(reps[i], reps[j])];
    QuotientGroup q;
    q.group = validate_group(table);
    q.coset_of = std::move(coset_of);
    q.coset_rep = std::move(reps);
    return q;
}

// ---- built-in groups -------------------------------------------------

inline FiniteGroup cyclic_group(int n) {
    if (n < 1)
        throw error(errc::bad_input, "cyclic group order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[a][b] = (a + b) % n;
    return validate_group(t);
}

/// Symmetric group on 3 letters; elements enumerated as the 6
/// permutations of {0,1,2} in lexicographic order (identity first).
inline FiniteGroup symmetric3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int n = 6;
    auto index_of = [&](const std::array<int, 3>& q) {
        for (int i = 0; i < n; ++i)
            if (perms[i] == q)
                return i;
        return -1;
    };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::array<int, 3> c{};
            for (int i = 0; i < 3; ++i)
                c[i] = perms[a][perms[b][i]];
            t[a][b] = index_of(c);
        }
    return validate_group(t);
}

/// Dihedral group of order 2n: elements 0..n-1 are rotations r^i,
/// n..2n-1 are reflections s r^i.
inline FiniteGroup dihedral_group(int n) {
    if (n < 1)
        throw error(errc::bad_input, "dihedral parameter must be positive");
    const int m = 2 * n;
    auto enc = [&](bool flip, int rot) { return (flip ? n : 0) + rot; };
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            bool fa = a >= n, fb = b >= n;
            int ra = a % n, rb = b % n;
            // (s^fa r^ra)(s^fb r^rb) = s^(fa^fb) r^(rb + ra * (-1)^fb)
            int rot = fb ? ((rb - ra) % n + n) % n : (ra + rb) % n;
            t[a][b] = enc(fa != fb, rot);
        }
    return validate_group(t);
}

inline FiniteGroup klein_four() {
    return validate_group({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

} // namespace paract
