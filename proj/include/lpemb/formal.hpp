#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lpemb/rng.hpp"

namespace lpemb {

template <class S>
struct ScalarSampler;

template <>
struct ScalarSampler<double> {
    static double random(RngStream& rng) { return rng.next_symmetric(); }
    static double unit() { return 1.0; }
    static double flip(double s) { return -s; }
};

template <>
struct ScalarSampler<std::complex<double>> {
    // uniform on the closed unit disc
    static std::complex<double> random(RngStream& rng) {
        const double radius = std::sqrt(rng.next_unit_open());
        const double angle = 2.0 * RngStream::pi * rng.next_unit_open();
        return std::polar(radius, angle);
    }
    static std::complex<double> unit() { return {1.0, 0.0}; }
    static std::complex<double> flip(const std::complex<double>& s) {
        return s * std::complex<double>(0.0, 1.0);
    }
};

struct FormalDisjointnessReport {
    bool formally_disjoint = true;
    double worst_residual = 0.0;
    std::size_t tuples_checked = 0;
};

/// Randomized refutation test of the identity
///     ||sum_j a_j v_j||^q == sum_j |a_j|^q ||v_j||^q
/// over `trials` random coefficient tuples plus a deterministic adversarial
/// set (unit tuples, all-ones, alternating signs, and signed pairs, which
/// catch the p = 1 case where uniform positives cannot).  `norm` evaluates
/// the model norm of a linear combination; `exponent` is the q above and
/// need not match the norm's own p (the r-power identities of stable
/// embeddings use q = r against an L^p norm).
template <class V>
FormalDisjointnessReport check_formal_disjointness(
    const std::vector<V>& vectors, double exponent,
    const std::function<double(const V&)>& norm, int trials, double tol,
    std::uint64_t seed = 0x5eedULL) {
    using S = typename V::scalar_type;
    FormalDisjointnessReport report;
    const std::size_t n = vectors.size();
    if (n == 0) return report;

    std::vector<double> node_norm_pows(n);
    for (std::size_t j = 0; j < n; ++j)
        node_norm_pows[j] = std::pow(norm(vectors[j]), exponent);

    const auto check_tuple = [&](const std::vector<S>& coeffs) {
        V combo = coeffs[0] * vectors[0];
        double rhs = std::pow(std::abs(coeffs[0]), exponent) * node_norm_pows[0];
        for (std::size_t j = 1; j < n; ++j) {
            combo = combo + coeffs[j] * vectors[j];
            rhs += std::pow(std::abs(coeffs[j]), exponent) * node_norm_pows[j];
        }
        const double lhs = std::pow(norm(combo), exponent);
        const double residual = std::abs(lhs - rhs);
        report.worst_residual = std::max(report.worst_residual, residual);
        report.tuples_checked += 1;
        if (residual > tol) report.formally_disjoint = false;
    };

    std::vector<std::vector<S>> adversarial;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<S> unit(n, S{});
        unit[j] = ScalarSampler<S>::unit();
        adversarial.push_back(std::move(unit));
    }
    adversarial.emplace_back(n, ScalarSampler<S>::unit());
    std::vector<S> alternating(n);
    for (std::size_t j = 0; j < n; ++j) {
        const S one = ScalarSampler<S>::unit();
        alternating[j] = (j % 2 == 0) ? one : ScalarSampler<S>::flip(one);
    }
    adversarial.push_back(std::move(alternating));
    if (n >= 2) {
        const std::size_t pair_cap = (n <= 8) ? n : 1;
        for (std::size_t i = 0; i < pair_cap; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                std::vector<S> pair(n, S{});
                pair[i] = ScalarSampler<S>::unit();
                pair[j] = ScalarSampler<S>::flip(ScalarSampler<S>::unit());
                adversarial.push_back(std::move(pair));
            }
        }
    }
    for (const auto& tuple : adversarial) check_tuple(tuple);

    RngStream rng(seed, 0);
    for (int t = 0; t < trials; ++t) {
        std::vector<S> coeffs(n);
        for (auto& c : coeffs) c = ScalarSampler<S>::random(rng);
        check_tuple(coeffs);
    }
    return report;
}

}  // namespace lpemb
