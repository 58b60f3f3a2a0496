#pragma once

#include <vector>

#include "qmain/graph.hpp"

namespace qmain {

/// Dense square matrix of doubles, row-major.
class DenseMatrix {
public:
    explicit DenseMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, 0.0) {
        if (n < 1) throw InvalidParameter("matrix order must be >= 1");
    }

    static DenseMatrix identity(int n) {
        DenseMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int order() const { return n_; }
    double& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    /// Largest |entry| difference against another matrix of the same order.
    double max_abs_diff(const DenseMatrix& other) const;
    double max_abs() const;

private:
    int n_;
    std::vector<double> e_;
};

/// All tolerances scale with the matrix: scale = max|Q entry| * n.
struct Tolerances {
    double eigen_cluster;
    double main_angle_cut;
    double residual;

    static Tolerances defaults_for(const IntSymMatrix& q);
    static Tolerances defaults_for(const Graph& g);
};

struct EigenDecomposition {
    std::vector<double> values; // descending
    DenseMatrix vectors;        // column k is the eigenvector of values[k]
};

/// Cyclic Jacobi rotations until the off-diagonal is at noise level. Exact
/// symmetry of the input is required.
EigenDecomposition jacobi_eigh(const DenseMatrix& m);
EigenDecomposition jacobi_eigh(const IntSymMatrix& m);

struct ValueCluster {
    double value; // mean of the merged values
    int multiplicity;
};

/// Greedy merge of descending values whose gap is within `tol`.
std::vector<ValueCluster> cluster_values(const std::vector<double>& desc, double tol);

struct EigenCluster {
    double value;
    int multiplicity;
    std::vector<std::vector<double>> basis; // orthonormal eigenvectors, each length n
    double main_angle;                      // ||P j|| / sqrt(n), in [0,1]
    bool main;
};

/// Orthogonal projector onto the cluster's eigenspace.
DenseMatrix projector(const EigenCluster& c);

struct Spectrum {
    int order;
    std::vector<EigenCluster> clusters; // values strictly decreasing
};

Spectrum spectrum(const Graph& g, const Tolerances& tol);
Spectrum spectrum(const Graph& g);

struct MainEigenvalue {
    double value;
    int multiplicity;
    double main_angle;
};

/// Clusters flagged main; nonempty for connected graphs (the Perron value is
/// always main).
std::vector<MainEigenvalue> main_eigenvalues(const Graph& g, const Tolerances& tol);
std::vector<MainEigenvalue> main_eigenvalues(const Graph& g);

/// max_v |(Q^2 j - (mu1+mu2) Q j + mu1 mu2 j)(v)|. Zero exactly when the
/// quadratic with roots mu1, mu2 annihilates j.
double annihilator_residual(const Graph& g, double mu1, double mu2);

} // namespace qmain
