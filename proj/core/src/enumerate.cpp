#include "qmain/enumerate.hpp"

#include <algorithm>
#include <cstdlib>

#include "qmain/exact.hpp"
#include "qmain/families.hpp"
#include "qmain/spectra.hpp"

namespace qmain {

std::string to_string(GraphClass c) {
    return c == GraphClass::Trees ? "trees" : "unicyclic";
}

std::string to_string(CountMethod m) {
    switch (m) {
        case CountMethod::Exact: return "exact";
        case CountMethod::Spectral: return "spectral";
        case CountMethod::Combinatorial: return "combinatorial";
    }
    return "?";
}

EnumerationBudget EnumerationBudget::from_env() {
    EnumerationBudget b;
    if (const char* raw = std::getenv("QMAIN_BUDGET")) {
        const int v = std::atoi(raw);
        if (v > 0) {
            b.max_trees = std::max(b.max_trees, v);
            b.max_unicyclic = std::max(b.max_unicyclic, v);
        }
    }
    return b;
}

std::vector<Graph> trees_of_order(int n) {
    if (n < 1) throw InvalidParameter("tree order must be >= 1");
    std::vector<Graph> cur{Graph::from_edges(1, {})};
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, Graph> dedup;
        for (const Graph& t : cur) {
            std::vector<std::pair<int, int>> base = t.edges();
            for (int v = 0; v < k - 1; ++v) {
                std::vector<std::pair<int, int>> e = base;
                e.emplace_back(v, k - 1);
                Graph g = Graph::from_edges(k, e);
                dedup.emplace(tree_canonical_code(g), std::move(g));
            }
        }
        cur.clear();
        for (auto& [code, g] : dedup) cur.push_back(std::move(g));
    }
    return cur;
}

std::vector<Graph> unicyclic_of_order(int n) {
    if (n < 3) throw InvalidParameter("unicyclic order must be >= 3");
    std::map<std::string, Graph> dedup;
    for (const Graph& t : trees_of_order(n)) {
        std::vector<std::pair<int, int>> base = t.edges();
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (t.adjacent(u, v)) continue;
                std::vector<std::pair<int, int>> e = base;
                e.emplace_back(u, v);
                Graph g = Graph::from_edges(n, e);
                dedup.emplace(unicyclic_canonical_code(g), std::move(g));
            }
        }
    }
    std::vector<Graph> out;
    out.reserve(dedup.size());
    for (auto& [code, g] : dedup) out.push_back(std::move(g));
    return out;
}

namespace {

void check_budget(GraphClass cls, int max_n, const EnumerationBudget& budget) {
    if (max_n < 3) throw InvalidParameter("max order must be >= 3");
    const int cap = cls == GraphClass::Trees ? budget.max_trees : budget.max_unicyclic;
    if (max_n > cap)
        throw BudgetExceeded("max order " + std::to_string(max_n) + " exceeds the " + to_string(cls) +
                             " budget of " + std::to_string(cap));
}

std::vector<Graph> graphs_of(GraphClass cls, int n) {
    return cls == GraphClass::Trees ? trees_of_order(n) : unicyclic_of_order(n);
}

int bucket_of(const Graph& g, CountMethod method) {
    switch (method) {
        case CountMethod::Exact:
            return main_count_exact(g);
        case CountMethod::Spectral:
            return static_cast<int>(main_eigenvalues(g).size());
        case CountMethod::Combinatorial: {
            const CombinatorialCount c = main_count_combinatorial(g);
            if (c.cls == MainCountClass::One) return 1;
            return c.cls == MainCountClass::Two ? 2 : 3;
        }
    }
    return 0;
}

ParabolicCertificate certified_or_throw(const Graph& g) {
    ParabolicResult r = parabolic_certificate(g);
    if (auto* cert = std::get_if<ParabolicCertificate>(&r)) return *cert;
    throw ClassificationViolation("graph " + write_graph6(g) +
                                  " counted as two-main but has no parabolic certificate (" +
                                  to_string(std::get<ClassifyFailure>(r).reason) + ")");
}

std::string family_name(const Graph& g) {
    const std::optional<families::FamilySpec> spec = families::identify(g);
    return spec ? families::to_string(*spec) : "unknown";
}

} // namespace

std::pair<std::vector<ClassReport>, std::vector<CensusRow>> census_with_rows(
    GraphClass cls, int max_n, CountMethod method, const EnumerationBudget& budget) {
    check_budget(cls, max_n, budget);
    std::vector<ClassReport> reports;
    std::vector<CensusRow> rows;
    for (int n = 3; n <= max_n; ++n) {
        ClassReport rep{n, cls, 0, {}, {}};
        for (const Graph& g : graphs_of(cls, n)) {
            const int count = bucket_of(g, method);
            ++rep.total;
            ++rep.histogram[std::min(count, 3)];
            CensusRow row{write_graph6(g), n, count, std::nullopt, ""};
            if (count == 2) {
                const ParabolicCertificate cert = certified_or_throw(g);
                const std::string fam = family_name(g);
                rep.two_main.push_back(TwoMainEntry{row.graph6, cert.a, cert.b, fam});
                row.certificate = cert;
                row.family = fam;
            }
            rows.push_back(std::move(row));
        }
        reports.push_back(std::move(rep));
    }
    return {std::move(reports), std::move(rows)};
}

std::vector<ClassReport> census(GraphClass cls, int max_n, CountMethod method,
                                const EnumerationBudget& budget) {
    return census_with_rows(cls, max_n, method, budget).first;
}

namespace {

std::map<std::string, std::string> expected_two_main_trees(int n) {
    std::map<std::string, std::string> out; // canonical code -> family string
    const families::FamilySpec star{families::Star{n}};
    out.emplace(tree_canonical_code(families::build(star)), families::to_string(star));
    if (n % 2 == 0 && n >= 4) {
        const families::FamilySpec dstar{families::DoubleStar{n / 2, n / 2}};
        out.emplace(tree_canonical_code(families::build(dstar)), families::to_string(dstar));
    }
    return out;
}

std::map<std::string, std::string> expected_two_main_unicyclic(int n) {
    std::map<std::string, std::string> out;
    for (int r = 3; r <= n; ++r) {
        if (n % r != 0 || n / r < 2) continue;
        const families::FamilySpec g1{families::G1{r, n / r - 1}};
        out.emplace(unicyclic_canonical_code(families::build(g1)), families::to_string(g1));
    }
    if (n % 4 == 0) {
        const families::FamilySpec g2{families::G2{n / 4}};
        out.emplace(unicyclic_canonical_code(families::build(g2)), families::to_string(g2));
    }
    return out;
}

std::vector<ClassReport> verify_class(GraphClass cls, int max_n, const EnumerationBudget& budget) {
    check_budget(cls, max_n, budget);
    std::vector<ClassReport> reports;
    for (int n = 3; n <= max_n; ++n) {
        ClassReport rep{n, cls, 0, {}, {}};
        std::map<std::string, std::string> expected = cls == GraphClass::Trees
                                                          ? expected_two_main_trees(n)
                                                          : expected_two_main_unicyclic(n);
        for (const Graph& g : graphs_of(cls, n)) {
            const int count = main_count_exact(g);
            ++rep.total;
            ++rep.histogram[std::min(count, 3)];
            if (cls == GraphClass::Unicyclic && is_regular(g) && count != 1)
                throw ClassificationViolation("cycle " + write_graph6(g) + " has main count " +
                                              std::to_string(count) + ", expected 1");
            if (count != 2) continue;
            const ParabolicCertificate cert = certified_or_throw(g);
            const std::string code = cls == GraphClass::Trees ? tree_canonical_code(g)
                                                              : unicyclic_canonical_code(g);
            const auto hit = expected.find(code);
            if (hit == expected.end())
                throw ClassificationViolation("unexpected two-main graph " + write_graph6(g) +
                                              " of order " + std::to_string(n));
            rep.two_main.push_back(TwoMainEntry{write_graph6(g), cert.a, cert.b, hit->second});
            expected.erase(hit);
        }
        if (!expected.empty()) {
            std::string missing;
            for (const auto& [code, fam] : expected) missing += " " + fam;
            throw ClassificationViolation("missing expected two-main graphs at order " +
                                          std::to_string(n) + ":" + missing);
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

} // namespace

std::vector<ClassReport> verify_trees(int max_n, const EnumerationBudget& budget) {
    return verify_class(GraphClass::Trees, max_n, budget);
}

std::vector<ClassReport> verify_unicyclic(int max_n, const EnumerationBudget& budget) {
    return verify_class(GraphClass::Unicyclic, max_n, budget);
}

} // namespace qmain
