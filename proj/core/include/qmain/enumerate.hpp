#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qmain/classify.hpp"
#include "qmain/graph.hpp"

namespace qmain {

enum class GraphClass { Trees, Unicyclic };

std::string to_string(GraphClass c);

enum class CountMethod { Exact, Spectral, Combinatorial };

std::string to_string(CountMethod m);

struct TwoMainEntry {
    std::string graph6;
    long long a, b;
    std::string family; // family spec string, or "unknown"
};

/// Per-order classification record. Histogram keys are 1, 2 and 3, where 3
/// counts every graph with three or more main eigenvalues; this makes the
/// histograms of all three counting methods directly comparable.
struct ClassReport {
    int n;
    GraphClass cls;
    long long total;
    std::map<int, long long> histogram;
    std::vector<TwoMainEntry> two_main;
};

/// Enumeration caps keeping the full suites comfortably fast. The env var
/// QMAIN_BUDGET raises both caps.
struct EnumerationBudget {
    int max_trees = 12;
    int max_unicyclic = 11;
    static EnumerationBudget from_env();
};

/// One representative per isomorphism class of trees on n vertices, sorted
/// by canonical code. Grown by leaf attachment from order n-1.
std::vector<Graph> trees_of_order(int n);

/// One representative per isomorphism class of connected unicyclic graphs on
/// n vertices (n >= 3), sorted by canonical code. Built as tree plus one edge.
std::vector<Graph> unicyclic_of_order(int n);

/// Per-graph classification row used by censuses and reports.
struct CensusRow {
    std::string graph6;
    int n;
    int count; // exact count for Exact/Spectral; 1, 2 or 3 (= three or more) for Combinatorial
    std::optional<ParabolicCertificate> certificate;
    std::string family;
};

std::vector<ClassReport> census(GraphClass cls, int max_n, CountMethod method,
                                const EnumerationBudget& budget = EnumerationBudget::from_env());

/// census() plus the per-graph rows, in enumeration order.
std::pair<std::vector<ClassReport>, std::vector<CensusRow>> census_with_rows(
    GraphClass cls, int max_n, CountMethod method,
    const EnumerationBudget& budget = EnumerationBudget::from_env());

/// Checks that for every 3 <= n <= max_n the trees with exactly two main
/// signless Laplacian eigenvalues are precisely the star and, for even n,
/// the balanced double star. Throws ClassificationViolation with graph6
/// witnesses otherwise.
std::vector<ClassReport> verify_trees(int max_n,
                                      const EnumerationBudget& budget = EnumerationBudget::from_env());

/// Checks that for every 3 <= n <= max_n the cycles have exactly one main
/// eigenvalue and the unicyclic graphs with exactly two are precisely the
/// g1:r,k with (k+1)r = n and g2:t with 4t = n.
std::vector<ClassReport> verify_unicyclic(int max_n,
                                          const EnumerationBudget& budget = EnumerationBudget::from_env());

} // namespace qmain
