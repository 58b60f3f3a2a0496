#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "qmain/graph.hpp"

namespace qmain::families {

struct Star {
    int n; // center plus n-1 pendants, n >= 3
};

struct DoubleStar {
    int p, q; // adjacent centers with p-1 and q-1 pendants; order p+q, p,q >= 2
};

/// One vertex of degree a^2-a+1 whose neighbors all have degree a; every
/// remaining vertex is pendant. Order 1 + a*(a^2-a+1), a >= 2.
struct TTree {
    int a;
};

struct Cycle {
    int n; // n >= 3
};

struct Path {
    int n; // n >= 2
};

/// Cycle of length r with k pendants attached to every cycle vertex;
/// order (k+1)*r, r >= 3, k >= 1.
struct G1 {
    int r, k;
};

/// Cycle of length 3t with one pendant attached at every third cycle vertex;
/// order 4t, t >= 1.
struct G2 {
    int t;
};

struct Complete {
    int n; // n >= 1
};

using FamilySpec = std::variant<Star, DoubleStar, TTree, Cycle, Path, G1, G2, Complete>;

/// Validates the parameters and builds the graph. Vertex numbering is fixed
/// (cycle/center vertices first, pendants appended in attachment order) so
/// graph6 outputs are stable.
Graph build(const FamilySpec& spec);

/// The family spec whose build() is isomorphic to g, if any. Overlapping
/// families resolve in a fixed precedence: trees check star, double star,
/// t-tree, then path; unicyclic graphs check cycle, g1, then g2; complete
/// graphs last.
std::optional<FamilySpec> identify(const Graph& g);

/// Spec grammar used by the CLI: "star:n", "dstar:p,q", "ttree:a", "cycle:n",
/// "path:n", "g1:r,k", "g2:t", "complete:n".
std::string to_string(const FamilySpec& spec);
std::optional<FamilySpec> parse_spec(std::string_view text);

} // namespace qmain::families
