#include "qmain/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace qmain {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw InvalidParameter("graph order must be >= 1");
    if (n > kMaxOrder) throw Unsupported("graph order " + std::to_string(n) + " exceeds 62");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), 0);
    g.deg_.assign(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw IndexError("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v) throw InvalidEdge("self-loop at vertex " + std::to_string(u));
        if ((g.adj_[static_cast<std::size_t>(u)] >> v) & 1u)
            throw DuplicateEdge("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        g.adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        g.adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
        ++g.deg_[static_cast<std::size_t>(u)];
        ++g.deg_[static_cast<std::size_t>(v)];
        ++g.m_;
    }
    return g;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(deg_[static_cast<std::size_t>(v)]));
    std::uint64_t bits = adj_[static_cast<std::size_t>(v)];
    while (bits) {
        int u = std::countr_zero(bits);
        out.push_back(u);
        bits &= bits - 1;
    }
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        std::uint64_t bits = adj_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1);
        while (bits) {
            int v = std::countr_zero(bits);
            out.emplace_back(u, v);
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d = g.degrees();
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<long long> s_values(const Graph& g) {
    std::vector<long long> s(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v)) s[static_cast<std::size_t>(v)] += g.degree(u);
    return s;
}

IntSymMatrix signless_laplacian(const Graph& g) {
    IntSymMatrix q(g.order());
    for (int v = 0; v < g.order(); ++v) q.set(v, v, g.degree(v));
    for (auto [u, v] : g.edges()) q.set(u, v, 1);
    return q;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    std::uint64_t seen = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        std::uint64_t fresh = g.row(v) & ~seen;
        seen |= fresh;
        while (fresh) {
            stack.push_back(std::countr_zero(fresh));
            fresh &= fresh - 1;
        }
    }
    return std::popcount(seen) == n;
}

bool is_regular(const Graph& g) {
    const auto& d = g.degrees();
    return std::all_of(d.begin(), d.end(), [&](int x) { return x == d[0]; });
}

namespace {

constexpr int kG6Lo = 63;
constexpr int kG6Hi = 126;

} // namespace

Graph parse_graph6(std::string_view line) {
    if (line.empty()) throw ParseError("empty graph6 input", 0);
    unsigned char c0 = static_cast<unsigned char>(line[0]);
    if (c0 == 126) throw Unsupported("long-form graph6 (n > 62) not supported");
    if (c0 < kG6Lo || c0 > kG6Hi) throw ParseError("invalid graph6 size byte", 0);
    const int n = c0 - kG6Lo;
    if (n < 1) throw ParseError("graph6 order must be >= 1", 0);

    const int bits = n * (n - 1) / 2;
    const std::size_t expect = 1 + static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() != expect)
        throw ParseError("graph6 line has wrong length (expected " + std::to_string(expect) + " bytes)",
                         line.size() < expect ? line.size() : expect);

    std::vector<std::pair<int, int>> edges;
    int pos = 0;
    for (std::size_t i = 1; i < line.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(line[i]);
        if (c < kG6Lo || c > kG6Hi) throw ParseError("graph6 byte outside 63..126", i);
        const int val = c - kG6Lo;
        for (int bit = 5; bit >= 0; --bit) {
            const bool set = (val >> bit) & 1;
            if (pos >= bits) {
                if (set) throw ParseError("nonzero padding bits", i);
                continue;
            }
            if (set) {
                // bit index pos enumerates pairs (u,v) for v = 1..n-1, u = 0..v-1
                int k = pos, v = 1;
                while (k >= v) k -= v++;
                edges.emplace_back(k, v);
            }
            ++pos;
        }
    }
    return Graph::from_edges(n, edges);
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > Graph::kMaxOrder) throw Unsupported("graph6 short form requires n <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + kG6Lo));
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kG6Lo));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kG6Lo));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t offset = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        const std::size_t line_start = offset;
        offset += line.size() + 1;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n >> m) || n < 1 || m < 0)
                throw ParseError("expected header line \"n m\"", line_start);
            continue;
        }
        long long u, v;
        if (!(fields >> u >> v)) throw ParseError("expected edge line \"u v\"", line_start);
        if (static_cast<long long>(edges.size()) >= m)
            throw ParseError("more edge lines than declared", line_start);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ParseError("empty edge-list input", 0);
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()),
                         offset);
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

namespace {

// Vertices of the tree center: strip leaf layers until at most two remain.
std::vector<int> tree_centers(const Graph& g) {
    const int n = g.order();
    std::vector<int> deg = g.degrees();
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[static_cast<std::size_t>(v)] = true;
            --remaining;
            for (int u : g.neighbors(v)) {
                if (removed[static_cast<std::size_t>(u)]) continue;
                if (--deg[static_cast<std::size_t>(u)] == 1) next.push_back(u);
            }
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!removed[static_cast<std::size_t>(v)]) centers.push_back(v);
    return centers;
}

// Rooted subtree encoding: "(" + sorted child codes + ")". `blocked` vertices
// are never descended into (used to cut the center edge / the cycle).
std::string rooted_code(const Graph& g, int v, int parent, const std::vector<bool>& blocked) {
    std::vector<std::string> child;
    for (int u : g.neighbors(v)) {
        if (u == parent || blocked[static_cast<std::size_t>(u)]) continue;
        child.push_back(rooted_code(g, u, v, blocked));
    }
    std::sort(child.begin(), child.end());
    std::string out = "(";
    for (const auto& c : child) out += c;
    out += ")";
    return out;
}

} // namespace

std::string tree_canonical_code(const Graph& g) {
    if (g.size() != g.order() - 1 || !is_connected(g))
        throw NotATree("graph is not a tree (need connected with m = n-1)");
    const std::vector<bool> none(static_cast<std::size_t>(g.order()), false);
    const std::vector<int> centers = tree_centers(g);
    if (centers.size() == 1) return "T1" + rooted_code(g, centers[0], -1, none);
    std::string a = rooted_code(g, centers[0], centers[1], none);
    std::string b = rooted_code(g, centers[1], centers[0], none);
    if (b < a) std::swap(a, b);
    return "T2" + a + b;
}

std::string unicyclic_canonical_code(const Graph& g) {
    const int n = g.order();
    if (g.size() != n || !is_connected(g))
        throw NotUnicyclic("graph is not unicyclic (need connected with m = n)");

    // The 2-core of a unicyclic graph is its unique cycle.
    std::vector<int> deg = g.degrees();
    std::vector<bool> on_cycle(static_cast<std::size_t>(n), true);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1) layer.push_back(v);
    while (!layer.empty()) {
        std::vector<int> next;
        for (int v : layer) {
            on_cycle[static_cast<std::size_t>(v)] = false;
            for (int u : g.neighbors(v)) {
                if (!on_cycle[static_cast<std::size_t>(u)]) continue;
                if (--deg[static_cast<std::size_t>(u)] == 1) next.push_back(u);
            }
        }
        layer = std::move(next);
    }

    int start = -1;
    for (int v = 0; v < n && start < 0; ++v)
        if (on_cycle[static_cast<std::size_t>(v)]) start = v;

    // Walk the cycle in adjacency order.
    std::vector<int> cycle{start};
    int prev = -1, cur = start;
    do {
        int next = -1;
        for (int u : g.neighbors(cur)) {
            if (u != prev && on_cycle[static_cast<std::size_t>(u)]) {
                next = u;
                break;
            }
        }
        prev = cur;
        cur = next;
        if (cur != start) cycle.push_back(cur);
    } while (cur != start);

    const int r = static_cast<int>(cycle.size());
    std::vector<std::string> hang(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) hang[static_cast<std::size_t>(i)] = rooted_code(g, cycle[static_cast<std::size_t>(i)], -1, on_cycle);

    // Minimize the code sequence over rotations and reflection.
    std::vector<std::string> best;
    for (int dir : {1, -1}) {
        for (int s = 0; s < r; ++s) {
            std::vector<std::string> cand(static_cast<std::size_t>(r));
            for (int i = 0; i < r; ++i)
                cand[static_cast<std::size_t>(i)] = hang[static_cast<std::size_t>(((s + dir * i) % r + r) % r)];
            if (best.empty() || cand < best) best = std::move(cand);
        }
    }
    std::string out = "U" + std::to_string(r) + "|";
    for (const auto& c : best) out += c;
    return out;
}

} // namespace qmain
