#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmain/errors.hpp"

namespace qmain {

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// adjacency is one packed 64-bit row per vertex (orders stay tiny), degrees
/// are cached.
class Graph {
public:
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const { return m_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
    }

    int degree(int v) const {
        check_vertex(v);
        return deg_[static_cast<std::size_t>(v)];
    }

    /// Per-vertex degrees, indexed by vertex.
    const std::vector<int>& degrees() const { return deg_; }

    std::vector<int> neighbors(int v) const;

    /// Edges as (u, v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    /// Raw adjacency row of v (bit u set iff u ~ v).
    std::uint64_t row(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    static constexpr int kMaxOrder = 62; // graph6 short form

private:
    Graph() = default;
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw IndexError("vertex index " + std::to_string(v) + " out of range");
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<int> deg_;
};

/// Small integer symmetric matrix; set() writes both mirror entries, so the
/// symmetry invariant holds by construction. Houses Q = D + A.
class IntSymMatrix {
public:
    explicit IntSymMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, 0) {
        if (n < 1) throw InvalidParameter("matrix order must be >= 1");
    }

    int order() const { return n_; }

    long long operator()(int i, int j) const {
        check(i);
        check(j);
        return e_[static_cast<std::size_t>(i) * n_ + j];
    }

    void set(int i, int j, long long v) {
        check(i);
        check(j);
        e_[static_cast<std::size_t>(i) * n_ + j] = v;
        e_[static_cast<std::size_t>(j) * n_ + i] = v;
    }

private:
    void check(int i) const {
        if (i < 0 || i >= n_) throw IndexError("matrix index out of range");
    }
    int n_;
    std::vector<long long> e_;
};

/// Degrees sorted ascending.
std::vector<int> degree_sequence(const Graph& g);

/// s(v) = sum of neighbor degrees = number of 2-walks starting at v.
std::vector<long long> s_values(const Graph& g);

/// Q = D + A.
IntSymMatrix signless_laplacian(const Graph& g);

bool is_connected(const Graph& g);
bool is_regular(const Graph& g);

/// graph6 short form (n <= 62), no ">>graph6<<" header. Upper-triangle bits
/// in column-major pair order (0,1),(0,2),(1,2),(0,3),... packed 6 per byte,
/// MSB first, each byte offset by 63.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

/// Edge-list text format: first line "n m", then m lines "u v" (0-indexed);
/// lines starting with '#' are comments.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Canonical code for trees (rooted encoding at the tree center; for
/// bicentral trees the center edge is split and the two rooted codes are
/// combined in sorted order). Equal codes iff isomorphic.
std::string tree_canonical_code(const Graph& g);

/// Canonical code for connected unicyclic graphs: the rooted code of the
/// pendant tree at each cycle vertex, minimized over cycle rotations and
/// reflection. Equal codes iff isomorphic.
std::string unicyclic_canonical_code(const Graph& g);

} // namespace qmain
