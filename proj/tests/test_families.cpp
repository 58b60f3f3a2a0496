#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "qmain/classify.hpp"
#include "qmain/exact.hpp"
#include "qmain/families.hpp"

using qmain::Graph;

namespace qf = qmain::families;

namespace {

Graph relabel(const Graph& g, unsigned seed) {
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges())
        e.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return Graph::from_edges(g.order(), e);
}

} // namespace

TEST_CASE("builders produce the documented orders and degrees") {
    CHECK(qmain::degree_sequence(qf::build(qf::Star{4})) == std::vector<int>{1, 1, 1, 3});

    const Graph g1 = qf::build(qf::G1{3, 1});
    CHECK(g1.order() == 6);
    CHECK(g1.size() == 6);
    CHECK(qmain::degree_sequence(g1) == std::vector<int>{1, 1, 1, 3, 3, 3});

    const Graph g2 = qf::build(qf::G2{1});
    CHECK(g2.order() == 4);
    CHECK(qmain::degree_sequence(g2) == std::vector<int>{1, 2, 2, 3});

    const Graph t2 = qf::build(qf::TTree{2});
    CHECK(t2.order() == 7);
    CHECK(qmain::degree_sequence(t2) == std::vector<int>{1, 1, 1, 2, 2, 2, 3});

    // Every cycle vertex of g1:r,k has k pendants, so degree k+2.
    const Graph g1b = qf::build(qf::G1{4, 2});
    CHECK(g1b.order() == 12);
    for (int v = 0; v < 4; ++v) CHECK(g1b.degree(v) == 4);
    for (int v = 4; v < 12; ++v) CHECK(g1b.degree(v) == 1);

    // g2:t repeats the degree pattern 3,2,2 around its cycle.
    const Graph g2b = qf::build(qf::G2{3});
    CHECK(g2b.order() == 12);
    for (int v = 0; v < 9; ++v) CHECK(g2b.degree(v) == (v % 3 == 0 ? 3 : 2));
}

TEST_CASE("builders validate parameters") {
    CHECK_THROWS_AS(qf::build(qf::Star{2}), qmain::InvalidParameter);
    CHECK_THROWS_AS(qf::build(qf::DoubleStar{1, 3}), qmain::InvalidParameter);
    CHECK_THROWS_AS(qf::build(qf::TTree{1}), qmain::InvalidParameter);
    CHECK_THROWS_AS(qf::build(qf::Cycle{2}), qmain::InvalidParameter);
    CHECK_THROWS_AS(qf::build(qf::Path{1}), qmain::InvalidParameter);
    CHECK_THROWS_AS(qf::build(qf::G1{2, 1}), qmain::InvalidParameter);
    CHECK_THROWS_AS(qf::build(qf::G1{3, 0}), qmain::InvalidParameter);
    CHECK_THROWS_AS(qf::build(qf::G2{0}), qmain::InvalidParameter);
    CHECK_THROWS_AS(qf::build(qf::Complete{0}), qmain::InvalidParameter);
}

TEST_CASE("identify names the family of a graph") {
    const auto p4 = qf::identify(qf::build(qf::Path{4}));
    REQUIRE(p4.has_value());
    CHECK(qf::to_string(*p4) == "dstar:2,2"); // the balanced double star of order 4 is the path

    const auto c5 = qf::identify(qf::build(qf::Cycle{5}));
    REQUIRE(c5.has_value());
    CHECK(qf::to_string(*c5) == "cycle:5");

    const auto g1 = qf::identify(relabel(qf::build(qf::G1{3, 1}), 7));
    REQUIRE(g1.has_value());
    CHECK(qf::to_string(*g1) == "g1:3,1");

    const auto g2 = qf::identify(relabel(qf::build(qf::G2{2}), 11));
    REQUIRE(g2.has_value());
    CHECK(qf::to_string(*g2) == "g2:2");

    const auto t2 = qf::identify(relabel(qf::build(qf::TTree{2}), 3));
    REQUIRE(t2.has_value());
    CHECK(qf::to_string(*t2) == "ttree:2");

    const auto k4 = qf::identify(qf::build(qf::Complete{4}));
    REQUIRE(k4.has_value());
    CHECK(qf::to_string(*k4) == "complete:4");

    // A caterpillar that is none of the named families.
    const Graph stray = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {3, 6}});
    CHECK_FALSE(qf::identify(stray).has_value());
}

TEST_CASE("family spec grammar") {
    for (const char* text : {"star:6", "dstar:4,4", "ttree:2", "cycle:5", "path:4", "g1:3,1", "g2:2", "complete:4"}) {
        const auto spec = qf::parse_spec(text);
        REQUIRE(spec.has_value());
        CHECK(qf::to_string(*spec) == text);
    }
    CHECK_FALSE(qf::parse_spec("star").has_value());
    CHECK_FALSE(qf::parse_spec("star:").has_value());
    CHECK_FALSE(qf::parse_spec("star:x").has_value());
    CHECK_FALSE(qf::parse_spec("g1:3").has_value());
    CHECK_FALSE(qf::parse_spec("nope:3").has_value());
}

TEST_CASE("family certificate spot checks") {
    for (int n : {3, 10, 30}) {
        const auto r = qmain::parabolic_certificate(qf::build(qf::Star{n}));
        REQUIRE(std::holds_alternative<qmain::ParabolicCertificate>(r));
        CHECK(std::get<qmain::ParabolicCertificate>(r).a == n);
        CHECK(std::get<qmain::ParabolicCertificate>(r).b == 0);
    }
    for (int m : {2, 8, 15}) {
        const auto r = qmain::parabolic_certificate(qf::build(qf::DoubleStar{m, m}));
        REQUIRE(std::holds_alternative<qmain::ParabolicCertificate>(r));
        CHECK(std::get<qmain::ParabolicCertificate>(r).a == m + 2);
        CHECK(std::get<qmain::ParabolicCertificate>(r).b == 1);
    }
}

TEST_CASE("unbalanced double stars are not parabolic") {
    for (auto [p, q] : {std::pair{2, 3}, std::pair{3, 4}}) {
        const auto r = qmain::parabolic_certificate(qf::build(qf::DoubleStar{p, q}));
        CHECK(std::holds_alternative<qmain::ClassifyFailure>(r));
    }
}

TEST_CASE("regular families have a single main eigenvalue") {
    for (int n : {3, 8, 12}) CHECK(qmain::main_count_exact(qf::build(qf::Cycle{n})) == 1);
    for (int n : {1, 2, 5, 8}) CHECK(qmain::main_count_exact(qf::build(qf::Complete{n})) == 1);
}

TEST_CASE("t-trees separate the adjacency condition from the parabolic one") {
    const Graph t2 = qf::build(qf::TTree{2});
    CHECK(std::holds_alternative<qmain::LinearCertificate>(qmain::linear_certificate(t2)));
    CHECK(qmain::main_count_exact(t2) != 2);
}
