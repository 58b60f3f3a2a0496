#include "qmain/classify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace qmain {

std::string to_string(FailureReason r) {
    switch (r) {
        case FailureReason::Regular: return "Regular";
        case FailureReason::NonIntegerAB: return "NonIntegerAB";
        case FailureReason::DiscriminantFail: return "DiscriminantFail";
        case FailureReason::ResidualFail: return "ResidualFail";
    }
    return "?";
}

namespace {

// First pair (u,v), u < v in lexicographic order, with d(u) != d(v).
std::pair<int, int> first_degree_distinct_pair(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.degree(u) != g.degree(v)) return {u, v};
    return {-1, -1};
}

// num/den reduced to an integer if den | num; nullopt otherwise.
std::optional<long long> exact_div(long long num, long long den) {
    if (num % den != 0) return std::nullopt;
    return num / den;
}

} // namespace

ParabolicResult parabolic_certificate(const Graph& g) {
    if (!is_connected(g)) throw NotConnected("parabolic certificate requires a connected graph");
    if (g.order() < 2) throw InvalidParameter("parabolic certificate requires n >= 2");
    if (is_regular(g)) return ClassifyFailure{FailureReason::Regular};

    const std::vector<long long> s = s_values(g);
    const auto [u, v] = first_degree_distinct_pair(g);
    const long long du = g.degree(u), dv = g.degree(v);
    const long long ds = s[static_cast<std::size_t>(u)] - s[static_cast<std::size_t>(v)];
    const long long dd = du - dv;

    // a = (s(u)-s(v))/(d(u)-d(v)) + d(u) + d(v)
    // b = (s(u)-s(v))/(d(u)-d(v))*d(v) + d(u)d(v) - s(v)
    const std::optional<long long> a = exact_div(ds + (du + dv) * dd, dd);
    const std::optional<long long> b = exact_div(ds * dv + (du * dv - s[static_cast<std::size_t>(v)]) * dd, dd);
    if (!a || !b || *a < 1 || *b < 0) return ClassifyFailure{FailureReason::NonIntegerAB};
    if (*a * *a - 8 * *b <= 0) return ClassifyFailure{FailureReason::DiscriminantFail};

    for (int w = 0; w < g.order(); ++w) {
        const long long d = g.degree(w);
        const long long r = s[static_cast<std::size_t>(w)] + d * d - *a * d + *b;
        if (r != 0) return ClassifyFailure{FailureReason::ResidualFail, w, std::llabs(r)};
    }
    return ParabolicCertificate{*a, *b, 0};
}

LinearResult linear_certificate(const Graph& g) {
    if (!is_connected(g)) throw NotConnected("linear certificate requires a connected graph");
    if (is_regular(g)) return ClassifyFailure{FailureReason::Regular};

    const std::vector<long long> s = s_values(g);
    const auto [u, v] = first_degree_distinct_pair(g);
    const long long du = g.degree(u), dv = g.degree(v);
    const long long ds = s[static_cast<std::size_t>(u)] - s[static_cast<std::size_t>(v)];
    const long long dd = du - dv;

    const std::optional<long long> a = exact_div(ds, dd);
    if (!a) return ClassifyFailure{FailureReason::NonIntegerAB};
    const long long b = s[static_cast<std::size_t>(v)] - *a * dv;
    // j is annihilated by x^2 - a x - b, so distinct real roots need a^2 + 4b > 0.
    if (*a * *a + 4 * b <= 0) return ClassifyFailure{FailureReason::DiscriminantFail};

    for (int w = 0; w < g.order(); ++w) {
        const long long r = s[static_cast<std::size_t>(w)] - *a * g.degree(w) - b;
        if (r != 0) return ClassifyFailure{FailureReason::ResidualFail, w, std::llabs(r)};
    }
    return LinearCertificate{*a, b};
}

CombinatorialCount main_count_combinatorial(const Graph& g) {
    if (!is_connected(g)) throw NotConnected("combinatorial count requires a connected graph");
    if (is_regular(g)) return CombinatorialCount{MainCountClass::One, std::nullopt};
    ParabolicResult r = parabolic_certificate(g);
    if (auto* cert = std::get_if<ParabolicCertificate>(&r))
        return CombinatorialCount{MainCountClass::Two, *cert};
    return CombinatorialCount{MainCountClass::ThreeOrMore, std::nullopt};
}

ConsistencyReport certificate_spectrum_consistency(const Graph& g, const ParabolicCertificate& cert,
                                                   const Spectrum& spec) {
    std::vector<double> mains;
    for (const EigenCluster& c : spec.clusters)
        if (c.main) mains.push_back(c.value);
    if (mains.size() != 2)
        throw ConsistencyViolation("expected exactly two main eigenvalues, detected " +
                                   std::to_string(mains.size()));

    ConsistencyReport rep;
    rep.mu1 = mains[0];
    rep.mu2 = mains[1];
    rep.sum_diff = std::abs(rep.mu1 + rep.mu2 - static_cast<double>(cert.a));
    rep.prod_diff = std::abs(rep.mu1 * rep.mu2 - 2.0 * static_cast<double>(cert.b));
    rep.residual = annihilator_residual(g, rep.mu1, rep.mu2);

    const Tolerances tol = Tolerances::defaults_for(g);
    if (rep.sum_diff > 1e-6)
        throw ConsistencyViolation("main eigenvalue sum " + std::to_string(rep.mu1 + rep.mu2) +
                                   " differs from a = " + std::to_string(cert.a));
    if (rep.prod_diff > 1e-6)
        throw ConsistencyViolation("main eigenvalue product " + std::to_string(rep.mu1 * rep.mu2) +
                                   " differs from 2b = " + std::to_string(2 * cert.b));
    if (rep.residual > tol.residual)
        throw ConsistencyViolation("annihilator residual " + std::to_string(rep.residual) +
                                   " exceeds tolerance " + std::to_string(tol.residual));
    return rep;
}

PendantGapResult pendant_gap_check(const Graph& g, const ParabolicCertificate& cert) {
    const std::vector<int>& deg = g.degrees();
    const bool has_pendant = std::any_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
    if (!has_pendant) return {true, ""};
    const long long gap = cert.a - cert.b;
    if (gap < 3)
        return {false, "pendant vertex present but a-b = " + std::to_string(gap) + " < 3"};
    if (g.size() == g.order()) {
        if (gap < 4)
            return {false, "unicyclic with pendant but a-b = " + std::to_string(gap) + " < 4"};
        if (cert.a < 5)
            return {false, "unicyclic with pendant but a = " + std::to_string(cert.a) + " < 5"};
    }
    return {true, ""};
}

} // namespace qmain
