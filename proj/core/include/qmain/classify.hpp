#pragma once

#include <optional>
#include <string>
#include <variant>

#include "qmain/graph.hpp"
#include "qmain/spectra.hpp"

namespace qmain {

/// Witness that s(v) = -d(v)^2 + a*d(v) - b holds at every vertex, with a
/// positive integer a, non-negative integer b and a^2 - 8b > 0. Exists iff
/// the graph has exactly two main signless Laplacian eigenvalues.
struct ParabolicCertificate {
    long long a;
    long long b;
    long long max_residual; // always 0 for a valid certificate
};

enum class FailureReason {
    Regular,        // all degrees equal; the pair (a,b) would not be unique
    NonIntegerAB,   // fitted a or b non-integral, or a < 1, or b < 0
    DiscriminantFail,
    ResidualFail,   // some vertex violates the fitted identity
};

std::string to_string(FailureReason r);

struct ClassifyFailure {
    FailureReason reason;
    int vertex = -1;         // offending vertex for ResidualFail
    long long residual = 0;  // |s(v) + d(v)^2 - a d(v) + b| at that vertex
};

using ParabolicResult = std::variant<ParabolicCertificate, ClassifyFailure>;

ParabolicResult parabolic_certificate(const Graph& g);

/// The adjacency-matrix analogue: s(v) = a*d(v) + b with integer a, b and
/// x^2 - a x - b having two distinct real roots (a^2 + 4b > 0).
struct LinearCertificate {
    long long a;
    long long b;
};

using LinearResult = std::variant<LinearCertificate, ClassifyFailure>;

LinearResult linear_certificate(const Graph& g);

enum class MainCountClass { One, Two, ThreeOrMore };

struct CombinatorialCount {
    MainCountClass cls;
    std::optional<ParabolicCertificate> certificate; // present iff cls == Two
};

/// One iff regular; Two iff the parabolic certificate exists; else ThreeOrMore.
CombinatorialCount main_count_combinatorial(const Graph& g);

struct ConsistencyReport {
    double mu1, mu2;   // the two detected main eigenvalues, descending
    double sum_diff;   // |mu1 + mu2 - a|
    double prod_diff;  // |mu1 * mu2 - 2b|
    double residual;   // annihilator residual at (mu1, mu2)
};

/// Checks the detected main eigenvalues against the certificate: their sum
/// must be a and their product 2b, and the quadratic must annihilate j.
/// Throws ConsistencyViolation naming the failing quantity.
ConsistencyReport certificate_spectrum_consistency(const Graph& g, const ParabolicCertificate& cert,
                                                   const Spectrum& spec);

struct PendantGapResult {
    bool ok;
    std::string witness; // empty when ok
    explicit operator bool() const { return ok; }
};

/// For certified graphs with a pendant vertex: a - b >= 3; additionally for
/// unicyclic ones: a - b >= 4 and a >= 5.
PendantGapResult pendant_gap_check(const Graph& g, const ParabolicCertificate& cert);

} // namespace qmain
