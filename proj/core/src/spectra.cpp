#include "qmain/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qmain {

double DenseMatrix::max_abs_diff(const DenseMatrix& other) const {
    double worst = 0.0;
    for (std::size_t i = 0; i < e_.size(); ++i) worst = std::max(worst, std::abs(e_[i] - other.e_[i]));
    return worst;
}

double DenseMatrix::max_abs() const {
    double worst = 0.0;
    for (double v : e_) worst = std::max(worst, std::abs(v));
    return worst;
}

Tolerances Tolerances::defaults_for(const IntSymMatrix& q) {
    long long max_entry = 0;
    for (int i = 0; i < q.order(); ++i)
        for (int j = 0; j < q.order(); ++j) max_entry = std::max(max_entry, std::abs(q(i, j)));
    const double scale = std::max(1.0, static_cast<double>(max_entry) * q.order());
    return Tolerances{1e-8 * scale, 1e-6, 1e-7 * scale};
}

Tolerances Tolerances::defaults_for(const Graph& g) {
    return defaults_for(signless_laplacian(g));
}

EigenDecomposition jacobi_eigh(const DenseMatrix& m) {
    const int n = m.order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m(i, j) != m(j, i)) throw NotSymmetric("jacobi_eigh requires a symmetric matrix");

    DenseMatrix a = m;
    DenseMatrix v = DenseMatrix::identity(n);
    const double stop = 1e-14 * std::max(1.0, a.max_abs());

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off <= stop) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= stop * 1e-2) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k != p && k != q) {
                        const double akp = a(k, p), akq = a(k, q);
                        a(k, p) = a(p, k) = akp - s * (akq + tau * akp);
                        a(k, q) = a(q, k) = akq + s * (akp - tau * akq);
                    }
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp - s * (vkq + tau * vkp);
                    v(k, q) = vkq + s * (vkp - tau * vkq);
                }
            }
        }
    }

    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return a(i, i) > a(j, j); });

    EigenDecomposition out{std::vector<double>(static_cast<std::size_t>(n)), DenseMatrix(n)};
    for (int k = 0; k < n; ++k) {
        out.values[static_cast<std::size_t>(k)] = a(idx[static_cast<std::size_t>(k)], idx[static_cast<std::size_t>(k)]);
        for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, idx[static_cast<std::size_t>(k)]);
    }
    return out;
}

EigenDecomposition jacobi_eigh(const IntSymMatrix& m) {
    DenseMatrix a(m.order());
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j) a(i, j) = static_cast<double>(m(i, j));
    return jacobi_eigh(a);
}

std::vector<ValueCluster> cluster_values(const std::vector<double>& desc, double tol) {
    std::vector<ValueCluster> out;
    std::size_t i = 0;
    while (i < desc.size()) {
        std::size_t j = i + 1;
        double sum = desc[i];
        while (j < desc.size() && desc[j - 1] - desc[j] <= tol) sum += desc[j++];
        out.push_back(ValueCluster{sum / static_cast<double>(j - i), static_cast<int>(j - i)});
        i = j;
    }
    return out;
}

DenseMatrix projector(const EigenCluster& c) {
    const int n = static_cast<int>(c.basis.front().size());
    DenseMatrix p(n);
    for (const auto& vec : c.basis)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) p(i, j) += vec[static_cast<std::size_t>(i)] * vec[static_cast<std::size_t>(j)];
    return p;
}

Spectrum spectrum(const Graph& g, const Tolerances& tol) {
    if (!is_connected(g)) throw NotConnected("spectrum requires a connected graph");
    const int n = g.order();
    const EigenDecomposition eig = jacobi_eigh(signless_laplacian(g));
    const std::vector<ValueCluster> parts = cluster_values(eig.values, tol.eigen_cluster);

    Spectrum spec{n, {}};
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    int col = 0;
    for (const ValueCluster& part : parts) {
        EigenCluster c;
        c.value = part.value;
        c.multiplicity = part.multiplicity;
        double proj_sq = 0.0;
        for (int k = 0; k < part.multiplicity; ++k, ++col) {
            std::vector<double> vec(static_cast<std::size_t>(n));
            double dot = 0.0;
            for (int i = 0; i < n; ++i) {
                vec[static_cast<std::size_t>(i)] = eig.vectors(i, col);
                dot += vec[static_cast<std::size_t>(i)];
            }
            proj_sq += dot * dot;
            c.basis.push_back(std::move(vec));
        }
        c.main_angle = std::sqrt(proj_sq) / sqrt_n;
        c.main = c.main_angle > tol.main_angle_cut;
        spec.clusters.push_back(std::move(c));
    }
    return spec;
}

Spectrum spectrum(const Graph& g) {
    return spectrum(g, Tolerances::defaults_for(g));
}

std::vector<MainEigenvalue> main_eigenvalues(const Graph& g, const Tolerances& tol) {
    std::vector<MainEigenvalue> out;
    for (const EigenCluster& c : spectrum(g, tol).clusters)
        if (c.main) out.push_back(MainEigenvalue{c.value, c.multiplicity, c.main_angle});
    return out;
}

std::vector<MainEigenvalue> main_eigenvalues(const Graph& g) {
    return main_eigenvalues(g, Tolerances::defaults_for(g));
}

double annihilator_residual(const Graph& g, double mu1, double mu2) {
    const int n = g.order();
    // Qj and Q^2 j are integral; only the mu terms introduce rounding.
    std::vector<double> qj(static_cast<std::size_t>(n)), q2j(static_cast<std::size_t>(n));
    const std::vector<long long> s = s_values(g);
    for (int v = 0; v < n; ++v) {
        const long long d = g.degree(v);
        qj[static_cast<std::size_t>(v)] = static_cast<double>(2 * d);
        q2j[static_cast<std::size_t>(v)] = static_cast<double>(2 * (d * d + s[static_cast<std::size_t>(v)]));
    }
    double worst = 0.0;
    for (int v = 0; v < n; ++v) {
        const double r = q2j[static_cast<std::size_t>(v)] - (mu1 + mu2) * qj[static_cast<std::size_t>(v)] + mu1 * mu2;
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

} // namespace qmain
