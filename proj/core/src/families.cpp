#include "qmain/families.hpp"

#include <charconv>
#include <type_traits>

namespace qmain::families {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw InvalidParameter(msg);
}

Graph build_star(int n) {
    require(n >= 3, "star requires n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.emplace_back(0, v);
    return Graph::from_edges(n, e);
}

Graph build_double_star(int p, int q) {
    require(p >= 2 && q >= 2, "double star requires p, q >= 2");
    std::vector<std::pair<int, int>> e{{0, 1}};
    int next = 2;
    for (int i = 0; i < p - 1; ++i) e.emplace_back(0, next++);
    for (int i = 0; i < q - 1; ++i) e.emplace_back(1, next++);
    return Graph::from_edges(p + q, e);
}

Graph build_ttree(int a) {
    require(a >= 2, "t-tree requires a >= 2");
    const int mid = a * a - a + 1; // degree of the center = number of middle vertices
    const int n = 1 + mid + mid * (a - 1);
    std::vector<std::pair<int, int>> e;
    int next = 1 + mid;
    for (int i = 1; i <= mid; ++i) {
        e.emplace_back(0, i);
        for (int j = 0; j < a - 1; ++j) e.emplace_back(i, next++);
    }
    return Graph::from_edges(n, e);
}

Graph build_cycle(int n) {
    require(n >= 3, "cycle requires n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, e);
}

Graph build_path(int n) {
    require(n >= 2, "path requires n >= 2");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph::from_edges(n, e);
}

Graph build_g1(int r, int k) {
    require(r >= 3, "g1 requires r >= 3");
    require(k >= 1, "g1 requires k >= 1");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < r; ++v) e.emplace_back(v, (v + 1) % r);
    int next = r;
    for (int v = 0; v < r; ++v)
        for (int j = 0; j < k; ++j) e.emplace_back(v, next++);
    return Graph::from_edges((k + 1) * r, e);
}

Graph build_g2(int t) {
    require(t >= 1, "g2 requires t >= 1");
    const int r = 3 * t;
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < r; ++v) e.emplace_back(v, (v + 1) % r);
    int next = r;
    for (int s = 0; s < t; ++s) e.emplace_back(3 * s, next++);
    return Graph::from_edges(4 * t, e);
}

Graph build_complete(int n) {
    require(n >= 1, "complete requires n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

bool same_tree(const Graph& g, const Graph& h) {
    return tree_canonical_code(g) == tree_canonical_code(h);
}

bool same_unicyclic(const Graph& g, const Graph& h) {
    return unicyclic_canonical_code(g) == unicyclic_canonical_code(h);
}

} // namespace

Graph build(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> Graph {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Star>) return build_star(s.n);
            else if constexpr (std::is_same_v<T, DoubleStar>) return build_double_star(s.p, s.q);
            else if constexpr (std::is_same_v<T, TTree>) return build_ttree(s.a);
            else if constexpr (std::is_same_v<T, Cycle>) return build_cycle(s.n);
            else if constexpr (std::is_same_v<T, Path>) return build_path(s.n);
            else if constexpr (std::is_same_v<T, G1>) return build_g1(s.r, s.k);
            else if constexpr (std::is_same_v<T, G2>) return build_g2(s.t);
            else return build_complete(s.n);
        },
        spec);
}

std::optional<FamilySpec> identify(const Graph& g) {
    if (!is_connected(g)) return std::nullopt;
    const int n = g.order(), m = g.size();

    if (m == n - 1) { // tree
        if (n >= 3 && same_tree(g, build_star(n))) return Star{n};
        for (int p = 2; 2 * p <= n; ++p)
            if (same_tree(g, build_double_star(p, n - p))) return DoubleStar{p, n - p};
        for (int a = 2; 1 + a * (a * a - a + 1) <= n; ++a)
            if (1 + a * (a * a - a + 1) == n && same_tree(g, build_ttree(a))) return TTree{a};
        if (n >= 2 && same_tree(g, build_path(n))) return Path{n};
    } else if (m == n) { // unicyclic
        if (same_unicyclic(g, build_cycle(n))) return Cycle{n};
        for (int r = 3; r <= n; ++r)
            if (n % r == 0 && n / r >= 2 && same_unicyclic(g, build_g1(r, n / r - 1)))
                return G1{r, n / r - 1};
        if (n % 4 == 0 && same_unicyclic(g, build_g2(n / 4))) return G2{n / 4};
    }
    if (2 * m == n * (n - 1)) return Complete{n};
    return std::nullopt;
}

std::string to_string(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Star>) return "star:" + std::to_string(s.n);
            else if constexpr (std::is_same_v<T, DoubleStar>)
                return "dstar:" + std::to_string(s.p) + "," + std::to_string(s.q);
            else if constexpr (std::is_same_v<T, TTree>) return "ttree:" + std::to_string(s.a);
            else if constexpr (std::is_same_v<T, Cycle>) return "cycle:" + std::to_string(s.n);
            else if constexpr (std::is_same_v<T, Path>) return "path:" + std::to_string(s.n);
            else if constexpr (std::is_same_v<T, G1>)
                return "g1:" + std::to_string(s.r) + "," + std::to_string(s.k);
            else if constexpr (std::is_same_v<T, G2>) return "g2:" + std::to_string(s.t);
            else return "complete:" + std::to_string(s.n);
        },
        spec);
}

namespace {

std::optional<std::vector<int>> parse_ints(std::string_view text, std::size_t want) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (out.size() != want) return std::nullopt;
    return out;
}

} // namespace

std::optional<FamilySpec> parse_spec(std::string_view text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) return std::nullopt;
    const std::string_view name = text.substr(0, colon);
    const std::string_view args = text.substr(colon + 1);

    if (name == "star") {
        if (auto v = parse_ints(args, 1)) return FamilySpec{Star{(*v)[0]}};
    } else if (name == "dstar") {
        if (auto v = parse_ints(args, 2)) return FamilySpec{DoubleStar{(*v)[0], (*v)[1]}};
    } else if (name == "ttree") {
        if (auto v = parse_ints(args, 1)) return FamilySpec{TTree{(*v)[0]}};
    } else if (name == "cycle") {
        if (auto v = parse_ints(args, 1)) return FamilySpec{Cycle{(*v)[0]}};
    } else if (name == "path") {
        if (auto v = parse_ints(args, 1)) return FamilySpec{Path{(*v)[0]}};
    } else if (name == "g1") {
        if (auto v = parse_ints(args, 2)) return FamilySpec{G1{(*v)[0], (*v)[1]}};
    } else if (name == "g2") {
        if (auto v = parse_ints(args, 1)) return FamilySpec{G2{(*v)[0]}};
    } else if (name == "complete") {
        if (auto v = parse_ints(args, 1)) return FamilySpec{Complete{(*v)[0]}};
    }
    return std::nullopt;
}

} // namespace qmain::families
