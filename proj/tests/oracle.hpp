// Independent brute-force oracles for small orders. Everything here works
// from labeled edge sets and a backtracking isomorphism test; it deliberately
// shares no code with the canonical-code or rank paths it cross-checks.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "qmain/graph.hpp"

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

inline bool edges_connected(int n, const EdgeList& edges) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    int components = n;
    for (auto [u, v] : edges) {
        const int ru = find(u), rv = find(v);
        if (ru != rv) {
            parent[static_cast<std::size_t>(ru)] = rv;
            --components;
        }
    }
    return components == 1;
}

// Backtracking isomorphism with degree pruning; fine for n <= 8.
inline bool is_isomorphic(const qmain::Graph& g, const qmain::Graph& h) {
    const int n = g.order();
    if (h.order() != n || h.size() != g.size()) return false;
    if (qmain::degree_sequence(g) != qmain::degree_sequence(h)) return false;

    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto extend = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int u = 0; u < n; ++u) {
            if (used[static_cast<std::size_t>(u)] || h.degree(u) != g.degree(v)) continue;
            bool ok = true;
            for (int w = 0; w < v && ok; ++w)
                if (g.adjacent(v, w) != h.adjacent(u, map[static_cast<std::size_t>(w)])) ok = false;
            if (!ok) continue;
            map[static_cast<std::size_t>(v)] = u;
            used[static_cast<std::size_t>(u)] = true;
            if (self(self, v + 1)) return true;
            used[static_cast<std::size_t>(u)] = false;
            map[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    return extend(extend, 0);
}

// Refinement key: sorted degrees plus each vertex's sorted neighbor-degree
// multiset, sorted. Isomorphic graphs share keys, so buckets stay tiny.
inline std::string refine_key(const qmain::Graph& g) {
    std::vector<std::vector<int>> sig;
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> row{g.degree(v)};
        for (int u : g.neighbors(v)) row.push_back(g.degree(u));
        std::sort(row.begin() + 1, row.end());
        sig.push_back(std::move(row));
    }
    std::sort(sig.begin(), sig.end());
    std::string key;
    for (const auto& row : sig) {
        for (int x : row) key += static_cast<char>('0' + x);
        key += '|';
    }
    return key;
}

class IsoClasses {
public:
    // Returns true if the graph started a new isomorphism class.
    bool insert(const qmain::Graph& g) {
        auto& bucket = buckets_[refine_key(g)];
        for (const qmain::Graph& rep : bucket)
            if (is_isomorphic(g, rep)) return false;
        bucket.push_back(g);
        return true;
    }

    std::size_t size() const {
        std::size_t total = 0;
        for (const auto& [key, bucket] : buckets_) total += bucket.size();
        return total;
    }

    std::vector<qmain::Graph> representatives() const {
        std::vector<qmain::Graph> out;
        for (const auto& [key, bucket] : buckets_)
            for (const qmain::Graph& g : bucket) out.push_back(g);
        return out;
    }

private:
    std::map<std::string, std::vector<qmain::Graph>> buckets_;
};

// All labeled trees on n vertices via Pruefer sequences (n^(n-2) of them).
template <typename Fn>
void for_each_labeled_tree(int n, Fn&& fn) {
    if (n == 1) {
        fn(qmain::Graph::from_edges(1, {}));
        return;
    }
    if (n == 2) {
        fn(qmain::Graph::from_edges(2, {{0, 1}}));
        return;
    }
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    while (true) {
        std::vector<int> deg(static_cast<std::size_t>(n), 1);
        for (int a : seq) ++deg[static_cast<std::size_t>(a)];
        std::set<int> leaves;
        for (int v = 0; v < n; ++v)
            if (deg[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
        EdgeList edges;
        for (int a : seq) {
            const int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.emplace_back(leaf, a);
            if (--deg[static_cast<std::size_t>(a)] == 1) leaves.insert(a);
        }
        const int x = *leaves.begin(), y = *std::next(leaves.begin());
        edges.emplace_back(x, y);
        fn(qmain::Graph::from_edges(n, edges));

        int pos = n - 3;
        while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == n - 1) seq[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++seq[static_cast<std::size_t>(pos)];
    }
}

// All labeled connected graphs with exactly n edges on n vertices
// (equivalently: all labeled connected unicyclic graphs).
template <typename Fn>
void for_each_labeled_unicyclic(int n, Fn&& fn) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const int p = static_cast<int>(pairs.size());

    std::vector<int> pick(static_cast<std::size_t>(n));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        EdgeList edges;
        for (int i : pick) edges.push_back(pairs[static_cast<std::size_t>(i)]);
        if (edges_connected(n, edges)) fn(qmain::Graph::from_edges(n, edges));

        int i = n - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == p - n + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

inline std::size_t count_tree_classes(int n) {
    IsoClasses classes;
    for_each_labeled_tree(n, [&](const qmain::Graph& g) { classes.insert(g); });
    return classes.size();
}

inline std::size_t count_unicyclic_classes(int n) {
    IsoClasses classes;
    for_each_labeled_unicyclic(n, [&](const qmain::Graph& g) { classes.insert(g); });
    return classes.size();
}

} // namespace oracle
