#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmain/enumerate.hpp"
#include "qmain/exact.hpp"
#include "qmain/families.hpp"
#include "qmain/spectra.hpp"

using qmain::ExactMatrix;
using qmain::Graph;

namespace qf = qmain::families;

TEST_CASE("walk matrix columns are exact powers applied to the ones vector") {
    const Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    const ExactMatrix w = qmain::walk_matrix(p3);
    const long long expect[3][3] = {{1, 2, 6}, {1, 4, 12}, {1, 2, 6}};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) CHECK(w.at(i, k) == expect[i][k]);

    const Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    const ExactMatrix wk = qmain::walk_matrix(k3);
    const long long col[3] = {1, 4, 16};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) CHECK(wk.at(i, k) == col[k]);

    const ExactMatrix w1 = qmain::walk_matrix(Graph::from_edges(1, {}));
    CHECK(w1.rows() == 1);
    CHECK(w1.at(0, 0) == 1);
}

TEST_CASE("integer rank via fraction-free elimination") {
    ExactMatrix id(5, 5);
    for (int i = 0; i < 5; ++i) id.at(i, i) = 1;
    CHECK(qmain::integer_rank(id) == 5);

    ExactMatrix ones(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) ones.at(i, j) = 1;
    CHECK(qmain::integer_rank(ones) == 1);

    CHECK(qmain::integer_rank(qmain::walk_matrix(Graph::from_edges(3, {{0, 1}, {1, 2}}))) == 2);

    ExactMatrix zero(3, 3);
    CHECK(qmain::integer_rank(zero) == 0);

    // Rank is insensitive to row scaling by huge values.
    ExactMatrix big(2, 2);
    big.at(0, 0) = qmain::BigInt("123456789123456789123456789");
    big.at(0, 1) = big.at(0, 0) * 3;
    big.at(1, 0) = big.at(0, 0) * 7;
    big.at(1, 1) = big.at(0, 1) * 7;
    CHECK(qmain::integer_rank(big) == 1);
}

TEST_CASE("main eigenvalue counts from the walk matrix rank") {
    CHECK(qmain::main_count_exact(qf::build(qf::Cycle{7})) == 1);
    CHECK(qmain::main_count_exact(Graph::from_edges(3, {{0, 1}, {1, 2}})) == 2);
    CHECK(qmain::main_count_exact(qf::build(qf::Path{5})) == 3);
    CHECK_THROWS_AS(qmain::main_count_exact(Graph::from_edges(4, {{0, 1}, {2, 3}})), qmain::NotConnected);
}

TEST_CASE("entries larger than 64 bits are handled") {
    // 48 vertices: untruncated walk vectors overflow any fixed-width integer.
    const Graph g = qf::build(qf::G1{8, 5});
    const ExactMatrix w = qmain::walk_matrix(g);
    qmain::BigInt bound = 1;
    bound <<= 64;
    CHECK(w.at(0, 47) > bound);
    CHECK(qmain::integer_rank(w) == 2);
    CHECK(qmain::main_count_exact(g) == 2);
}

TEST_CASE("count is at least 1 and at most the number of distinct eigenvalues") {
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : qmain::trees_of_order(n)) {
            const int count = qmain::main_count_exact(g);
            CHECK(count >= 1);
            CHECK(count <= static_cast<int>(qmain::spectrum(g).clusters.size()));
        }
    }
    for (int n = 3; n <= 7; ++n) {
        for (const Graph& g : qmain::unicyclic_of_order(n)) {
            const int count = qmain::main_count_exact(g);
            CHECK(count >= 1);
            CHECK(count <= static_cast<int>(qmain::spectrum(g).clusters.size()));
            if (qmain::is_regular(g)) CHECK(count == 1);
        }
    }
}
