#include "qmain/exact.hpp"

#include <utility>

namespace qmain {

ExactMatrix walk_matrix(const Graph& g) {
    if (!is_connected(g)) throw NotConnected("walk matrix requires a connected graph");
    const int n = g.order();
    ExactMatrix w(n, n);
    std::vector<BigInt> col(static_cast<std::size_t>(n), 1);
    for (int k = 0; k < n; ++k) {
        for (int v = 0; v < n; ++v) w.at(v, k) = col[static_cast<std::size_t>(v)];
        if (k + 1 == n) break;
        std::vector<BigInt> next(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            BigInt acc = col[static_cast<std::size_t>(v)] * g.degree(v);
            for (int u : g.neighbors(v)) acc += col[static_cast<std::size_t>(u)];
            next[static_cast<std::size_t>(v)] = std::move(acc);
        }
        col = std::move(next);
    }
    return w;
}

int integer_rank(const ExactMatrix& input) {
    ExactMatrix m = input;
    const int rows = m.rows(), cols = m.cols();
    BigInt prev = 1;
    int r = 0;
    while (r < rows && r < cols) {
        // Any nonzero pivot keeps Bareiss exact; take the first one found.
        int pi = -1, pj = -1;
        for (int i = r; i < rows && pi < 0; ++i)
            for (int j = r; j < cols; ++j)
                if (m.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        if (pi != r)
            for (int j = 0; j < cols; ++j) std::swap(m.at(pi, j), m.at(r, j));
        if (pj != r)
            for (int i = 0; i < rows; ++i) std::swap(m.at(i, pj), m.at(i, r));

        const BigInt pivot = m.at(r, r);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = r + 1; j < cols; ++j) {
                BigInt num = m.at(i, j) * pivot - m.at(i, r) * m.at(r, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, r) = 0;
        }
        prev = pivot;
        ++r;
    }
    return r;
}

int main_count_exact(const Graph& g) {
    if (!is_connected(g)) throw NotConnected("main eigenvalue count requires a connected graph");
    return integer_rank(walk_matrix(g));
}

} // namespace qmain
